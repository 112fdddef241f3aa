//! Ordered batch mapping, parallel when the `parallel` feature is on.
//!
//! Work items are independent pure computations; results always come back in
//! input order regardless of scheduling, so callers producing streams stay
//! byte-identical across thread counts. With the feature disabled everything
//! runs sequentially through the same entry point.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over the batch, preserving input order in the output.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Map `f` over the batch, preserving input order in the output.
#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Sequential map with the same shape, always available; the benchmark suite
/// compares this against [`map_ordered`].
pub fn map_ordered_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..500).collect();
        let out = map_ordered(items.clone(), |x| x * x);
        let seq = map_ordered_seq(items, |x| x * x);
        assert_eq!(out, seq);
        assert_eq!(out[7], 49);
    }
}
