//! Execution strategy for the data-parallel loops.
//!
//! Every hot loop in the crate (per-vertex edge-score sums, subset
//! enumeration, Monte-Carlo batches) is an indexed map followed by an exact
//! integer reduction, so the result never depends on the strategy. With the
//! `parallel` feature the loops run on the rayon global pool; without it
//! [`Exec::Parallel`] silently degrades to the sequential path.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// True when this strategy actually fans out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps every index in `range` and folds the results with `reduce`.
    ///
    /// `reduce` must be associative with `identity()` as its unit.
    pub fn map_reduce<T, M, I, R>(self, range: Range<usize>, identity: I, map: M, reduce: R) -> T
    where
        T: Send,
        M: Fn(usize) -> T + Sync + Send,
        I: Fn() -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return range.into_par_iter().map(map).reduce(identity, reduce);
        }
        range.map(map).fold(identity(), reduce)
    }

    pub fn sum(self, range: Range<usize>, f: impl Fn(usize) -> i128 + Sync + Send) -> i128 {
        self.map_reduce(range, || 0, f, |a, b| a + b)
    }

    /// Ordered map: output position `i` always holds `f(range.start + i)`.
    pub fn map<T: Send>(self, range: Range<usize>, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }
}

/// Sets the size of the global worker pool. Only the first call has any
/// effect; returns false if the pool was already initialised.
#[cfg(feature = "parallel")]
pub fn configure_threads(threads: usize) -> bool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .is_ok()
}

#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_threads: usize) -> bool {
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let f = |i: usize| (i as i128) * (i as i128) - 7;
        assert_eq!(
            Exec::Sequential.sum(0..1000, f),
            Exec::Parallel.sum(0..1000, f)
        );
        assert_eq!(
            Exec::Sequential.map(3..50, |i| i * 2),
            Exec::Parallel.map(3..50, |i| i * 2)
        );
    }

    #[test]
    fn empty_range_yields_identity() {
        assert_eq!(Exec::Parallel.sum(5..5, |_| 1), 0);
        assert!(Exec::Sequential.map(0..0, |i| i).is_empty());
    }
}
