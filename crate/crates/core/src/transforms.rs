//! Mechanical path rewrites. None of these check Hamiltonicity or the step
//! class of the result; that is the verifier's job.

use crate::error::{Error, Result};
use crate::hypercube::{check_capacity, prefix_mask};
use crate::path::VertexPath;

/// Replaces every vertex at an odd index by its complement.
pub fn complement_odd_indices(path: &VertexPath) -> VertexPath {
    let mask = path.dim().mask();
    let words = path
        .words()
        .iter()
        .enumerate()
        .map(|(i, &w)| if i % 2 == 1 { w ^ mask } else { w })
        .collect();
    VertexPath::from_words_unchecked(path.dim(), words)
}

/// Adds a new rightmost coordinate holding `bit` to every vertex.
pub fn append_coordinate(path: &VertexPath, bit: bool) -> Result<VertexPath> {
    let dim = path.dim().next()?;
    check_capacity(dim.k())?;
    let high = if bit { 1u64 << path.dim().k() } else { 0 };
    let words = path.words().iter().map(|&w| w | high).collect();
    Ok(VertexPath::from_words_unchecked(dim, words))
}

/// Flips the leftmost `m` coordinates of every vertex.
pub fn flip_prefix_path(path: &VertexPath, m: u32) -> Result<VertexPath> {
    let k = path.dim().k();
    if m > k {
        return Err(Error::FlipRange { m, k });
    }
    let mask = prefix_mask(m);
    let words = path.words().iter().map(|&w| w ^ mask).collect();
    Ok(VertexPath::from_words_unchecked(path.dim(), words))
}

pub fn reverse_path(path: &VertexPath) -> VertexPath {
    let words = path.words().iter().rev().copied().collect();
    VertexPath::from_words_unchecked(path.dim(), words)
}
