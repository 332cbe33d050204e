//! Feasibility of `(k, h)` and construction of closed change-`h` tours.
//!
//! A change-`h` Hamiltonian cycle of `{0,1}^k` exists exactly when `h` is
//! odd and `1 <= h <= k - 1`. Even steps preserve the parity of the
//! coordinate sum, so half the cube is unreachable. With `h >= k` there is
//! at most one move out of any vertex. For odd `h < k` the cycle is built
//! constructively:
//!
//! 1. Base case in dimension `h + 1` (even): take the change-1 tour and
//!    complement every vertex at an odd index. Consecutive vertices then
//!    differ in `k - 1 = h` coordinates, and since `k` is even the odd-index
//!    vertices are merely permuted among themselves.
//! 2. Lift from `k'` to `k' + 1`: the cycle with a 0 appended, followed by
//!    the reversed cycle with a 1 appended and its leftmost `h - 1`
//!    coordinates flipped. The two joining moves change `h - 1 + 1 = h`
//!    coordinates.
//!
//! For `h = 1` the change-1 tour is used directly.

use std::fmt;

use crate::error::{Error, Result};
use crate::graycode::gray_tour;
use crate::hypercube::{check_capacity, prefix_mask, Dimension, StepClass};
use crate::path::VertexPath;
use crate::transforms::complement_odd_indices;
use crate::verifier::{verify_cycle, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeasibilityStatus {
    Feasible,
    /// `h` even: every move preserves the parity of the coordinate sum.
    InfeasibleParity,
    /// `h >= k`: at most one move leaves any vertex.
    InfeasibleRange,
    /// `k < 2`: no cycle through more than one edge.
    InfeasibleDimension,
}

impl FeasibilityStatus {
    pub fn label(self) -> &'static str {
        match self {
            FeasibilityStatus::Feasible => "feasible",
            FeasibilityStatus::InfeasibleParity => "parity",
            FeasibilityStatus::InfeasibleRange => "range",
            FeasibilityStatus::InfeasibleDimension => "dimension",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub status: FeasibilityStatus,
    pub detail: String,
}

impl FeasibilityVerdict {
    pub fn is_feasible(&self) -> bool {
        self.status == FeasibilityStatus::Feasible
    }
}

impl fmt::Display for FeasibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_feasible() {
            write!(f, "feasible: {}", self.detail)
        } else {
            write!(f, "infeasible ({}): {}", self.status.label(), self.detail)
        }
    }
}

pub fn feasibility(k: Dimension, h: StepClass) -> FeasibilityVerdict {
    let (kk, hh) = (k.k(), h.h());
    let (status, detail) = if kk < 2 {
        (
            FeasibilityStatus::InfeasibleDimension,
            format!("k={kk}: a Hamiltonian cycle needs k >= 2"),
        )
    } else if hh >= u64::from(kk) {
        (
            FeasibilityStatus::InfeasibleRange,
            format!(
                "h={hh} >= k={kk}: a move can only reach the opposite corner, \
                 so at most two vertices are joined; k must exceed {hh}"
            ),
        )
    } else if !h.is_odd() {
        (
            FeasibilityStatus::InfeasibleParity,
            format!(
                "h={hh} is even: every change-{hh} move preserves the parity of the \
                 coordinate sum, so only half of the {} vertices are reachable",
                k.vertex_count()
            ),
        )
    } else {
        (
            FeasibilityStatus::Feasible,
            format!("h={hh} is odd and 1 <= h <= k-1={}", kk - 1),
        )
    };
    FeasibilityVerdict { status, detail }
}

/// A closed change-`h` tour that has passed [`verify_cycle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCertificate {
    step: StepClass,
    path: VertexPath,
}

impl CycleCertificate {
    /// Runs the verifier; the certificate only exists if it passes.
    pub fn certify(path: VertexPath, step: StepClass) -> std::result::Result<Self, VerifyReport> {
        let report = verify_cycle(&path, step);
        if report.valid() {
            Ok(CycleCertificate { step, path })
        } else {
            Err(report)
        }
    }

    pub fn dim(&self) -> Dimension {
        self.path.dim()
    }

    pub fn step(&self) -> StepClass {
        self.step
    }

    pub fn path(&self) -> &VertexPath {
        &self.path
    }

    pub fn into_path(self) -> VertexPath {
        self.path
    }

    /// Always true: certificates are only handed out after verification.
    pub fn verified(&self) -> bool {
        true
    }
}

fn certify_or_internal(path: VertexPath, step: StepClass, what: &str) -> Result<CycleCertificate> {
    CycleCertificate::certify(path, step).map_err(|report| {
        let first = report
            .violations
            .first()
            .map(ToString::to_string)
            .unwrap_or_default();
        Error::Internal(format!(
            "{what} failed verification with {} violation(s), first: {first}",
            report.violations.len()
        ))
    })
}

/// Smallest-dimension cycle for an odd step: dimension 2 for `h = 1`,
/// otherwise `h + 1`.
pub fn base_cycle(h: StepClass) -> Result<CycleCertificate> {
    if !h.is_odd() {
        return Err(Error::EvenStep(h.h()));
    }
    let path = if h.h() == 1 {
        gray_tour(Dimension::new(2)?)?
    } else {
        let k = u32::try_from(h.h() + 1)
            .map_err(|_| Error::InvalidDimension(u32::MAX, crate::hypercube::HARD_K_MAX))
            .and_then(Dimension::new)?;
        complement_odd_indices(&gray_tour(k)?)
    };
    certify_or_internal(path, h, "base cycle")
}

/// Raises a change-`h` cycle from dimension `k'` to `k' + 1`.
pub fn lift(cycle: &CycleCertificate) -> Result<CycleCertificate> {
    let h = cycle.step();
    let dim = cycle.dim();
    if h.h() + 1 > u64::from(dim.k()) {
        return Err(Error::InvalidInput(format!(
            "lifting a change-{h} cycle needs dimension >= {}, got {dim}",
            h.h() + 1
        )));
    }
    let next = dim.next()?;
    check_capacity(next.k())?;

    // Same result as append(0) ++ reverse(flip_prefix(append(1), h-1)), in
    // one allocation.
    let high = 1u64 << dim.k();
    let flip = prefix_mask((h.h() - 1) as u32);
    let words = cycle.path().words();
    let mut out = Vec::with_capacity(words.len() * 2);
    out.extend_from_slice(words);
    out.extend(words.iter().rev().map(|&w| (w ^ flip) | high));

    certify_or_internal(
        VertexPath::from_words_unchecked(next, out),
        h,
        "lifted cycle",
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Cycle(CycleCertificate),
    Infeasible(FeasibilityVerdict),
}

impl Construction {
    pub fn cycle(&self) -> Option<&CycleCertificate> {
        match self {
            Construction::Cycle(c) => Some(c),
            Construction::Infeasible(_) => None,
        }
    }

    pub fn into_cycle(self) -> Option<CycleCertificate> {
        match self {
            Construction::Cycle(c) => Some(c),
            Construction::Infeasible(_) => None,
        }
    }
}

/// A verified change-`h` cycle of `{0,1}^k`, or the reason none exists.
pub fn construct(k: Dimension, h: StepClass) -> Result<Construction> {
    let verdict = feasibility(k, h);
    if !verdict.is_feasible() {
        return Ok(Construction::Infeasible(verdict));
    }
    check_capacity(k.k())?;
    if h.h() == 1 {
        let cycle = certify_or_internal(gray_tour(k)?, h, "change-1 tour")?;
        return Ok(Construction::Cycle(cycle));
    }
    let mut cycle = base_cycle(h)?;
    while cycle.dim() < k {
        cycle = lift(&cycle)?;
    }
    Ok(Construction::Cycle(cycle))
}
