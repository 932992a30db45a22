//! Execution mode for the data-parallel inner loops.
//!
//! Every parallel loop in the crate goes through [`map_range`] or
//! [`map_slice`], which preserve input order in their output, so results are
//! identical in both modes. Without the `parallel` feature,
//! [`Parallelism::Parallel`] silently runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parallelism {
    Sequential,
    Parallel,
}

impl Default for Parallelism {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Parallel
        } else {
            Parallelism::Sequential
        }
    }
}

impl Parallelism {
    /// True when this mode will actually fan out across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

/// `(0..n).map(f).collect()`, in parallel when requested.
pub fn map_range<T, F>(mode: Parallelism, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..n).map(f).collect()
}

/// `items.iter().map(f).collect()`, in parallel when requested.
pub fn map_slice<I, T, F>(mode: Parallelism, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// First `Some` produced by `f` over `0..n` in index order.
///
/// The parallel path evaluates everything and then picks the lowest index, so
/// the answer never depends on scheduling.
pub fn find_first<T, F>(mode: Parallelism, n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..n).into_par_iter().find_map_first(f);
    }
    let _ = mode;
    (0..n).find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let seq = map_range(Parallelism::Sequential, 100, |i| i * i);
        let par = map_range(Parallelism::Parallel, 100, |i| i * i);
        assert_eq!(seq, par);
        let hit = |i: usize| (i % 7 == 3 && i > 10).then_some(i);
        assert_eq!(find_first(Parallelism::Sequential, 50, hit), Some(17));
        assert_eq!(find_first(Parallelism::Parallel, 50, hit), Some(17));
    }
}
