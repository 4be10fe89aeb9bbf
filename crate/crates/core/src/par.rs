//! Data-parallel helpers. With the `parallel` feature these run on the
//! rayon global pool; without it they are plain sequential iterators.
//! Output order always matches input order.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Folds `f` over every index in `range` and combines partial results.
/// `combine` must be associative and `identity` its neutral element.
#[cfg(feature = "parallel")]
pub fn fold_range<A, F, C>(range: Range<u64>, identity: A, f: F, combine: C) -> A
where
    A: Send + Sync + Clone,
    F: Fn(u64) -> A + Sync + Send,
    C: Fn(A, A) -> A + Sync + Send,
{
    range
        .into_par_iter()
        .map(f)
        .reduce(|| identity.clone(), &combine)
}

#[cfg(not(feature = "parallel"))]
pub fn fold_range<A, F, C>(range: Range<u64>, identity: A, f: F, combine: C) -> A
where
    F: Fn(u64) -> A,
    C: Fn(A, A) -> A,
{
    range.map(f).fold(identity, combine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let items: Vec<u32> = (0..1000).collect();
        let out = map(&items, |x| x * 2);
        assert_eq!(out, items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn fold_range_sums() {
        let total = fold_range(0..10_000, 0u64, |i| i, |a, b| a + b);
        assert_eq!(total, 10_000 * 9_999 / 2);
    }
}
