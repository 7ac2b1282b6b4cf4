//! Execution mode for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) `Exec::Parallel` runs on the current
//! rayon pool. Without it, both variants run sequentially. Results never depend
//! on the mode: every parallel reduction here is an order-independent min or
//! an order-preserving collect.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
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
    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Minimum of `f` over `0..len`, `None` for an empty range.
    pub fn min_over<F>(self, len: usize, f: F) -> Option<u64>
    where
        F: Fn(usize) -> u64 + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..len).into_par_iter().map(f).min(),
            _ => (0..len).map(f).min(),
        }
    }

    /// First index (lowest) in `0..len` for which `f` yields `Some`.
    pub fn find_first<R, F>(self, len: usize, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..len).into_par_iter().find_map_first(f),
            _ => (0..len).find_map(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map(&items, |x| x * 2)[999], 1998);
            assert_eq!(exec.min_over(1000, |i| (i as u64 + 7) % 1000), Some(0));
            assert_eq!(
                exec.find_first(1000, |i| (i % 97 == 96).then_some(i)),
                Some(96)
            );
            assert_eq!(exec.min_over(0, |i| i as u64), None);
        }
    }
}
