//! Exact computations with finite racks and quandles: inner identities,
//! chains and the identity subcomplex, integer homology, 2-cocycles and
//! abelian extensions.
//!
//! Tables follow `table[x][y] = x * y`, with right translations
//! `R_y(x) = x * y` bijective and `(x * y) * z = (x * z) * (y * z)`.

pub mod chains;
pub mod constructions;
pub mod error;
pub mod extensions;
pub mod homology;
pub mod identities;
pub mod par;
pub mod perm;
pub mod shell;
pub mod table;

pub use error::{Error, Result};
pub use identities::{satisfies, Assignment, Word, WordFilter};
pub use table::{InvariantReport, Mode, QuandleTable};
