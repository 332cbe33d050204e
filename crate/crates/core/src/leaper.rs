//! Fairy-chess `(a,b)`-leapers on the hypercube.
//!
//! On `{0,1}^k` a jump of squared length `a^2 + b^2` flips exactly that many
//! coordinates, so a leaper is just a step class. A closed tour exists iff
//! `a + b` is odd and `k > a^2 + b^2`.

use std::fmt;

use crate::constructor::{feasibility, FeasibilityStatus, FeasibilityVerdict};
use crate::error::{Error, Result};
use crate::hypercube::{Dimension, StepClass};

/// Named leapers, `(name, a, b)` with `a <= b`.
pub const CATALOG: &[(&str, u32, u32)] = &[
    ("wazir", 0, 1),
    ("ferz", 1, 1),
    ("dabbaba", 0, 2),
    ("knight", 1, 2),
    ("alfil", 2, 2),
    ("threeleaper", 0, 3),
    ("camel", 1, 3),
    ("zebra", 2, 3),
    ("tripper", 3, 3),
    ("fourleaper", 0, 4),
    ("giraffe", 1, 4),
    ("stag", 2, 4),
    ("antelope", 3, 4),
    ("commuter", 4, 4),
];

/// Keeps `a^2 + b^2` inside a `u64`.
const COMPONENT_MAX: u32 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeaperSpec {
    a: u32,
    b: u32,
    name: Option<&'static str>,
}

impl LeaperSpec {
    /// The components are unordered; they are stored with `a <= b`. A pair
    /// found in [`CATALOG`] picks up its name.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if b == 0 {
            return Err(Error::InvalidLeaper {
                a,
                b,
                reason: "a (0,0) jump does not move",
            });
        }
        if b >= COMPONENT_MAX {
            return Err(Error::InvalidLeaper {
                a,
                b,
                reason: "component too large",
            });
        }
        let name = CATALOG.iter().find(|e| e.1 == a && e.2 == b).map(|e| e.0);
        Ok(LeaperSpec { a, b, name })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn name(&self) -> Option<&'static str> {
        self.name
    }

    fn sum_is_even(&self) -> bool {
        (self.a + self.b).is_multiple_of(2)
    }
}

impl fmt::Display for LeaperSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name {
            Some(n) => write!(f, "{n} ({},{})", self.a, self.b),
            None => write!(f, "({},{})-leaper", self.a, self.b),
        }
    }
}

pub fn catalog_names() -> String {
    CATALOG.iter().map(|e| e.0).collect::<Vec<_>>().join(", ")
}

/// Case-insensitive catalog lookup.
pub fn leaper_by_name(name: &str) -> Result<LeaperSpec> {
    let wanted = name.trim().to_ascii_lowercase();
    CATALOG
        .iter()
        .find(|e| e.0 == wanted)
        .map(|&(n, a, b)| LeaperSpec {
            a,
            b,
            name: Some(n),
        })
        .ok_or_else(|| Error::UnknownLeaper {
            name: name.to_string(),
            catalog: catalog_names(),
        })
}

pub fn leaper_step(spec: &LeaperSpec) -> StepClass {
    let (a, b) = (u64::from(spec.a), u64::from(spec.b));
    StepClass::new(a * a + b * b).expect("b >= 1 so the step is positive")
}

/// For which dimensions a closed tour exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TourRange {
    Never,
    FromDimension(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeaperVerdict {
    pub feasible_for: TourRange,
    pub reason: String,
}

pub fn leaper_verdict(spec: &LeaperSpec) -> LeaperVerdict {
    let h = leaper_step(spec).h();
    if spec.sum_is_even() {
        LeaperVerdict {
            feasible_for: TourRange::Never,
            reason: format!(
                "a+b={} is even: every move keeps the parity of the coordinate sum, \
                 so no closed tour exists in any dimension",
                spec.a + spec.b
            ),
        }
    } else {
        LeaperVerdict {
            feasible_for: TourRange::FromDimension(h + 1),
            reason: format!(
                "a+b={} is odd: closed tours exist exactly for k > {h}",
                spec.a + spec.b
            ),
        }
    }
}

/// Smallest `k` admitting a closed tour, `None` when there is none.
pub fn min_dimension(spec: &LeaperSpec) -> Option<u64> {
    match leaper_verdict(spec).feasible_for {
        TourRange::Never => None,
        TourRange::FromDimension(k) => Some(k),
    }
}

/// Whether `spec` has a closed tour of `{0,1}^k`. An even `a+b` is reported
/// as a parity failure for every `k`.
pub fn leaper_feasible(spec: &LeaperSpec, k: Dimension) -> FeasibilityVerdict {
    if spec.sum_is_even() {
        return FeasibilityVerdict {
            status: FeasibilityStatus::InfeasibleParity,
            detail: leaper_verdict(spec).reason,
        };
    }
    let verdict = feasibility(k, leaper_step(spec));
    if verdict.status == FeasibilityStatus::InfeasibleRange {
        let h = leaper_step(spec).h();
        return FeasibilityVerdict {
            status: verdict.status,
            detail: format!(
                "k={} but k must exceed a^2+b^2={h}: a move can only reach the opposite corner",
                k.k()
            ),
        };
    }
    verdict
}
