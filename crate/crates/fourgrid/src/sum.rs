//! Pairwise (tree) summation, keeping accumulation error at O(log N)·eps.

use num_traits::Zero;
use std::ops::Add;

const LEAF: usize = 32;

/// Sums a slice by recursive halving. Below [`LEAF`] elements it falls back
/// to a plain left fold.
pub fn pairwise_sum<A>(xs: &[A]) -> A
where
    A: Copy + Zero + Add<Output = A>,
{
    if xs.len() <= LEAF {
        xs.iter().fold(A::zero(), |acc, &x| acc + x)
    } else {
        let mid = xs.len() / 2;
        pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
    }
}
