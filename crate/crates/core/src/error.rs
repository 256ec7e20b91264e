use thiserror::Error;

use crate::chains::ChainError;
use crate::constructions::ConstructionError;
use crate::extensions::ExtensionError;
use crate::homology::HomologyError;
use crate::identities::WordError;
use crate::perm::GroupError;
use crate::table::ValidationError;

/// Any failure surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
