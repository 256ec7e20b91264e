//! Data-parallel helpers over index ranges.
//!
//! With the `parallel` feature these fan out on the rayon pool; without it
//! they run sequentially. Every helper returns the same value either way:
//! searches report the lowest matching index, maps preserve index order.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First index (lowest) in `range` for which `f` yields `Some`.
pub fn find_first<T, F>(range: Range<usize>, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)))
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.into_iter().find_map(|i| f(i).map(|t| (i, t)))
    }
}

pub fn all<F>(range: Range<usize>, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    find_first(range, |i| if f(i) { None } else { Some(()) }).is_none()
}

/// `f` applied to every index, collected in index order.
pub fn map<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(f).collect()
    }
}

/// Ordered map over a slice.
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Whether this build fans work out across threads.
pub const fn enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_is_lowest_index() {
        let hit = find_first(0..10_000, |i| (i % 997 == 3 && i > 0).then_some(i * 2));
        assert_eq!(hit, Some((3, 6)));
        assert_eq!(find_first(0..100, |_| None::<()>), None);
    }

    #[test]
    fn map_preserves_order() {
        let v = map(0..500, |i| i * i);
        assert!(v.iter().enumerate().all(|(i, &x)| x == i * i));
        assert!(all(0..500, |i| v[i] == i * i));
        assert!(!all(0..500, |i| i < 499));
    }
}
