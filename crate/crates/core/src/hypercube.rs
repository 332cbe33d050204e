//! Bit-level model of the vertex set `{0,1}^k`.
//!
//! A vertex is a `k`-bit word. Coordinate `x_1` (the leftmost entry of a
//! written tuple) lives in bit 0, `x_2` in bit 1, and so on. Under this
//! convention the change-1 tour of `{0,1}^3` written out as tuples is the
//! classic Gray sequence `0,1,3,2,6,7,5,4`.
//!
//! Distances are kept in squared form: the squared Euclidean distance
//! between two vertices of the unit cube is the number of coordinates in
//! which they differ, so no operation here touches floating point.

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result};

/// Default ceiling on the dimension of anything that materializes a full
/// `2^k`-vertex path.
pub const DEFAULT_K_MAX: u32 = 28;

/// Largest dimension representable at all: `2^k` must fit in a `u64`.
pub const HARD_K_MAX: u32 = u64::BITS - 1;

static MAX_K: AtomicU32 = AtomicU32::new(DEFAULT_K_MAX);

/// Current capacity limit for path-producing operations.
pub fn max_k() -> u32 {
    MAX_K.load(Ordering::Relaxed)
}

/// Overrides the capacity limit. Values above [`HARD_K_MAX`] are rejected.
pub fn set_max_k(k: u32) -> Result<()> {
    if k == 0 || k > HARD_K_MAX {
        return Err(Error::LimitTooLarge(k, HARD_K_MAX));
    }
    MAX_K.store(k, Ordering::Relaxed);
    Ok(())
}

pub(crate) fn check_capacity(k: u32) -> Result<()> {
    let max = max_k();
    if k > max {
        return Err(Error::Capacity {
            k,
            max,
            reason: "path would hold 2^k vertices",
        });
    }
    Ok(())
}

/// Number of coordinates `k` of the cube `{0,1}^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension(u32);

impl Dimension {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 || k > HARD_K_MAX {
            return Err(Error::InvalidDimension(k, HARD_K_MAX));
        }
        Ok(Dimension(k))
    }

    #[inline]
    pub fn k(self) -> u32 {
        self.0
    }

    /// `2^k`.
    #[inline]
    pub fn vertex_count(self) -> u64 {
        1u64 << self.0
    }

    /// Word with the low `k` bits set.
    #[inline]
    pub fn mask(self) -> u64 {
        (1u64 << self.0) - 1
    }

    pub(crate) fn next(self) -> Result<Self> {
        Dimension::new(self.0 + 1)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Number of coordinates flipped by every move of a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepClass(u64);

impl StepClass {
    pub fn new(h: u64) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidStep);
        }
        Ok(StepClass(h))
    }

    #[inline]
    pub fn h(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }
}

impl fmt::Display for StepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A point of `{0,1}^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    bits: u64,
    dim: Dimension,
}

impl Vertex {
    pub fn new(bits: u64, dim: Dimension) -> Result<Self> {
        if bits & !dim.mask() != 0 {
            return Err(Error::BitsOutOfRange { bits, k: dim.k() });
        }
        Ok(Vertex { bits, dim })
    }

    /// Caller guarantees `bits` fits in `dim`.
    #[inline]
    pub(crate) fn from_bits_unchecked(bits: u64, dim: Dimension) -> Self {
        debug_assert_eq!(bits & !dim.mask(), 0);
        Vertex { bits, dim }
    }

    pub fn origin(dim: Dimension) -> Self {
        Vertex { bits: 0, dim }
    }

    /// Builds a vertex from a tuple written leftmost-first, e.g. `[0,1,1,0,1]`.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let dim = Dimension::new(coords.len() as u32)?;
        let mut bits = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => bits |= 1 << i,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "coordinate {} is {other}, expected 0 or 1",
                        i + 1
                    )))
                }
            }
        }
        Ok(Vertex { bits, dim })
    }

    /// The tuple `(x_1, ..., x_k)`, leftmost coordinate first.
    pub fn coords(&self) -> Vec<u8> {
        (0..self.dim.k())
            .map(|i| ((self.bits >> i) & 1) as u8)
            .collect()
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn dim(&self) -> Dimension {
        self.dim
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.dim.k() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        f.write_str(")")
    }
}

/// Squared distance between two raw words.
#[inline]
pub fn hamming_bits(a: u64, b: u64) -> u32 {
    (a ^ b).count_ones()
}

/// Squared Euclidean distance, i.e. the number of differing coordinates.
pub fn hamming(v: Vertex, w: Vertex) -> Result<u32> {
    if v.dim != w.dim {
        return Err(Error::DimensionMismatch {
            left: v.dim.k(),
            right: w.dim.k(),
        });
    }
    Ok(hamming_bits(v.bits, w.bits))
}

pub fn parity(v: Vertex) -> Parity {
    if v.bits.count_ones().is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Flips every coordinate.
pub fn complement(v: Vertex) -> Vertex {
    Vertex {
        bits: v.bits ^ v.dim.mask(),
        dim: v.dim,
    }
}

/// Mask covering coordinates `1..=m`.
#[inline]
pub fn prefix_mask(m: u32) -> u64 {
    if m >= u64::BITS {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Flips the leftmost `m` coordinates.
pub fn flip_prefix(v: Vertex, m: u32) -> Result<Vertex> {
    if m > v.dim.k() {
        return Err(Error::FlipRange { m, k: v.dim.k() });
    }
    Ok(Vertex {
        bits: v.bits ^ prefix_mask(m),
        dim: v.dim,
    })
}
