//! Data-parallel mapping over independent work items.
//!
//! Parameter sweeps, pair certifications and the exhaustive labeled scan all
//! reduce to "map an index range through a pure function and keep the
//! results in order". With the `parallel` feature (the default) the work is
//! spread over a rayon pool; without it the same entry points run
//! sequentially. Output ordering is identical either way, so verdict lists
//! and enumeration results are deterministic regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sequential reference implementation.
pub fn map_indexed_seq<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    (0..n).map(f).collect()
}

/// Rayon-backed implementation, index order preserved.
#[cfg(feature = "parallel")]
pub fn map_indexed_par<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    (0..n).into_par_iter().map(f).collect()
}

/// Map `0..n` through `f`, in parallel when the crate feature allows it.
pub fn map_indexed<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        map_indexed_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indexed_seq(n, f)
    }
}

/// Map a slice through `f`, preserving order.
pub fn map_slice<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    map_indexed(items.len(), |i| f(&items[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let out = map_indexed(100, |i| i * i);
        assert_eq!(out, (0..100).map(|i| i * i).collect::<Vec<_>>());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn par_and_seq_agree() {
        let f = |i: usize| (i as u64).wrapping_mul(0x9e3779b97f4a7c15);
        assert_eq!(map_indexed_par(1000, f), map_indexed_seq(1000, f));
    }
}
