use std::fmt;

use crate::error::{Error, Result};
use crate::hypercube::{hamming_bits, Dimension, Vertex};

/// An ordered sequence of vertices of one fixed dimension.
///
/// Stored as raw words; every word is checked to fit the dimension when the
/// path is built. Distinctness is not maintained incrementally, see
/// [`VertexPath::has_distinct_vertices`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPath {
    dim: Dimension,
    words: Vec<u64>,
}

impl VertexPath {
    pub fn new(dim: Dimension, words: Vec<u64>) -> Result<Self> {
        let mask = dim.mask();
        if let Some(&bad) = words.iter().find(|&&w| w & !mask != 0) {
            return Err(Error::BitsOutOfRange {
                bits: bad,
                k: dim.k(),
            });
        }
        Ok(VertexPath { dim, words })
    }

    pub(crate) fn from_words_unchecked(dim: Dimension, words: Vec<u64>) -> Self {
        debug_assert!(words.iter().all(|&w| w & !dim.mask() == 0));
        VertexPath { dim, words }
    }

    pub fn from_vertices<I>(dim: Dimension, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let words = vertices
            .into_iter()
            .map(|v| {
                if v.dim() == dim {
                    Ok(v.bits())
                } else {
                    Err(Error::DimensionMismatch {
                        left: dim.k(),
                        right: v.dim().k(),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexPath { dim, words })
    }

    /// Builds a path from tuples written leftmost-first.
    pub fn from_coords<T: AsRef<[u8]>>(rows: &[T]) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::InvalidInput("empty tuple list".into()))?;
        let dim = Dimension::new(first.as_ref().len() as u32)?;
        let vertices = rows
            .iter()
            .map(|r| Vertex::from_coords(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_vertices(dim, vertices)
    }

    #[inline]
    pub fn dim(&self) -> Dimension {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Vertex> {
        self.words
            .get(i)
            .map(|&w| Vertex::from_bits_unchecked(w, self.dim))
    }

    pub fn first(&self) -> Option<Vertex> {
        self.get(0)
    }

    pub fn last(&self) -> Option<Vertex> {
        self.words
            .last()
            .map(|&w| Vertex::from_bits_unchecked(w, self.dim))
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + DoubleEndedIterator + '_ {
        self.words
            .iter()
            .map(move |&w| Vertex::from_bits_unchecked(w, self.dim))
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn into_words(self) -> Vec<u64> {
        self.words
    }

    /// Squared lengths of the consecutive moves (no closing move).
    pub fn step_distances(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.windows(2).map(|p| hamming_bits(p[0], p[1]))
    }

    /// Squared length of the move from the last vertex back to the first.
    pub fn closing_distance(&self) -> Option<u32> {
        match (self.words.first(), self.words.last()) {
            (Some(&a), Some(&b)) => Some(hamming_bits(a, b)),
            _ => None,
        }
    }

    pub fn has_distinct_vertices(&self) -> bool {
        let mut sorted = self.words.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|p| p[0] != p[1])
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &VertexPath) -> Result<VertexPath> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim.k(),
                right: other.dim.k(),
            });
        }
        let mut words = Vec::with_capacity(self.len() + other.len());
        words.extend_from_slice(&self.words);
        words.extend_from_slice(&other.words);
        Ok(VertexPath {
            dim: self.dim,
            words,
        })
    }

    /// True when `other` is the same cyclic sequence read from some start in
    /// either direction.
    pub fn is_cyclically_equal(&self, other: &VertexPath) -> bool {
        if self.dim != other.dim || self.len() != other.len() {
            return false;
        }
        let n = self.len();
        if n == 0 {
            return true;
        }
        let a = &self.words;
        let b = &other.words;
        (0..n).filter(|&s| b[s] == a[0]).any(|s| {
            (0..n).all(|i| a[i] == b[(s + i) % n]) || (0..n).all(|i| a[i] == b[(s + n - i) % n])
        })
    }
}

impl fmt::Display for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
