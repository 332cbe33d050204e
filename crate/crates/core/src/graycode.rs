//! The change-1 tour of `{0,1}^k` (reflected binary code).

use crate::error::{Error, Result};
use crate::hypercube::{check_capacity, hamming_bits, Dimension};
use crate::path::VertexPath;

/// Change-1 closed tour starting at the origin; index `j` holds `j ^ (j >> 1)`.
pub fn gray_tour(k: Dimension) -> Result<VertexPath> {
    check_capacity(k.k())?;
    let words = (0..k.vertex_count()).map(|j| j ^ (j >> 1)).collect();
    Ok(VertexPath::from_words_unchecked(k, words))
}

/// One reflection round: the tour with a 0 appended to every vertex,
/// followed by the reversed tour with a 1 appended.
pub fn reflect_extend(path: &VertexPath) -> Result<VertexPath> {
    let dim = path.dim();
    if path.len() as u64 != dim.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "expected a tour of {} vertices, got {}",
            dim.vertex_count(),
            path.len()
        )));
    }
    if let Some(i) = path.step_distances().position(|d| d != 1) {
        return Err(Error::InvalidInput(format!(
            "move {i} -> {} is not a change-1 move",
            i + 1
        )));
    }
    if path.closing_distance() != Some(1) {
        return Err(Error::InvalidInput(
            "closing move is not a change-1 move".into(),
        ));
    }
    if !path.has_distinct_vertices() {
        return Err(Error::InvalidInput("tour repeats a vertex".into()));
    }
    let next = dim.next()?;
    check_capacity(next.k())?;

    let high = 1u64 << dim.k();
    let words = path.words();
    let mut out = Vec::with_capacity(words.len() * 2);
    out.extend_from_slice(words);
    out.extend(words.iter().rev().map(|&w| w | high));
    debug_assert!(out.windows(2).all(|p| hamming_bits(p[0], p[1]) == 1));
    Ok(VertexPath::from_words_unchecked(next, out))
}
