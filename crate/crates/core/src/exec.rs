//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on the
//! rayon global pool. Without it both variants run sequentially.

/// How to run an embarrassingly parallel loop.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this build can actually run in parallel.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `items.iter().map(f).collect()`, possibly in parallel. Output order matches input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u32> = (0..1000).collect();
        let a = Exec::Sequential.map(&xs, |x| x * 3);
        let b = Exec::Parallel.map(&xs, |x| x * 3);
        assert_eq!(a, b);
        assert_eq!(a[999], 2997);
    }
}
