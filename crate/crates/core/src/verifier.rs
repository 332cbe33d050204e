//! Independent check that a vertex sequence is a closed change-`h` tour of
//! the whole cube. Uses nothing but the bit primitives from
//! [`crate::hypercube`], so constructor output cannot certify itself.

use std::collections::HashSet;
use std::fmt;

use crate::hypercube::{hamming_bits, Dimension, StepClass};
use crate::path::VertexPath;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongLength {
        expected: u64,
        actual: u64,
    },
    DuplicateVertex {
        index: usize,
    },
    /// Move `from -> from + 1` has the wrong squared length.
    WrongStep {
        from: usize,
        distance: u32,
    },
    /// The closing move from the last vertex back to the first.
    OpenEndpoints {
        distance: u32,
    },
    DimensionOverflow {
        index: usize,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::WrongLength { .. } => "WrongLength",
            Violation::DuplicateVertex { .. } => "DuplicateVertex",
            Violation::WrongStep { .. } => "WrongStep",
            Violation::OpenEndpoints { .. } => "OpenEndpoints",
            Violation::DimensionOverflow { .. } => "DimensionOverflow",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, actual } => {
                write!(f, "WrongLength: {actual} vertices, expected {expected}")
            }
            Violation::DuplicateVertex { index } => {
                write!(f, "DuplicateVertex at index {index}")
            }
            Violation::WrongStep { from, distance } => {
                write!(
                    f,
                    "WrongStep at {from}->{}: changes {distance} coordinates",
                    from + 1
                )
            }
            Violation::OpenEndpoints { distance } => {
                write!(
                    f,
                    "OpenEndpoints: closing move changes {distance} coordinates"
                )
            }
            Violation::DimensionOverflow { index } => {
                write!(f, "DimensionOverflow at index {index}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_cycle(path: &VertexPath, h: StepClass) -> VerifyReport {
    verify_words(path.dim(), path.words(), h)
}

/// Like [`verify_cycle`] but over raw words, which may not fit `dim`.
pub fn verify_words(dim: Dimension, words: &[u64], h: StepClass) -> VerifyReport {
    let mut violations = Vec::new();
    let expected = dim.vertex_count();
    if words.len() as u64 != expected {
        violations.push(Violation::WrongLength {
            expected,
            actual: words.len() as u64,
        });
    }

    let mask = dim.mask();
    let mut seen = Presence::new(dim, words.len());
    for (i, &w) in words.iter().enumerate() {
        if w & !mask != 0 {
            violations.push(Violation::DimensionOverflow { index: i });
        } else if !seen.insert(w) {
            violations.push(Violation::DuplicateVertex { index: i });
        }
    }

    for (i, pair) in words.windows(2).enumerate() {
        let distance = hamming_bits(pair[0], pair[1]);
        if u64::from(distance) != h.h() {
            violations.push(Violation::WrongStep { from: i, distance });
        }
    }
    if let (Some(&first), Some(&last)) = (words.first(), words.last()) {
        let distance = hamming_bits(last, first);
        if u64::from(distance) != h.h() {
            violations.push(Violation::OpenEndpoints { distance });
        }
    }

    VerifyReport { violations }
}

enum Presence {
    Table(Vec<u64>),
    Set(HashSet<u64>),
}

impl Presence {
    fn new(dim: Dimension, len: usize) -> Self {
        // A 2^k-bit table is only worth it when the input is about that long.
        let count = dim.vertex_count();
        if count <= 4 * len as u64 + 64 {
            Presence::Table(vec![0; count.div_ceil(64) as usize])
        } else {
            Presence::Set(HashSet::with_capacity(len))
        }
    }

    fn insert(&mut self, w: u64) -> bool {
        match self {
            Presence::Table(t) => {
                let slot = &mut t[(w / 64) as usize];
                let bit = 1u64 << (w % 64);
                let fresh = *slot & bit == 0;
                *slot |= bit;
                fresh
            }
            Presence::Set(s) => s.insert(w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn d(k: u32) -> Dimension {
        Dimension::new(k).unwrap()
    }

    fn step(h: u64) -> StepClass {
        StepClass::new(h).unwrap()
    }

    fn gray(k: u32) -> Vec<u64> {
        (0..1u64 << k).map(|j| j ^ (j >> 1)).collect()
    }

    #[test]
    fn accepts_the_cube_tour() {
        let p = VertexPath::new(d(3), gray(3)).unwrap();
        assert!(verify_cycle(&p, step(1)).valid());
        assert!(!verify_cycle(&p, step(3)).valid());
    }

    #[test]
    fn corrupted_tour_reports_duplicate_and_steps() {
        let mut w = gray(3);
        w[5] = w[2];
        let report = verify_words(d(3), &w, step(1));
        assert!(!report.valid());
        assert!(report
            .violations
            .contains(&Violation::DuplicateVertex { index: 5 }));
        let kinds: Vec<_> = report.violations.iter().map(Violation::kind).collect();
        assert!(kinds.contains(&"WrongStep"));
        // gray(3) = 0,1,3,2,6,7,5,4 -> 0,1,3,2,6,3,5,4
        assert!(report.violations.contains(&Violation::WrongStep {
            from: 4,
            distance: 2
        }));
        assert!(report.violations.contains(&Violation::WrongStep {
            from: 5,
            distance: 2
        }));
        assert!(!kinds.contains(&"WrongLength"));
    }

    #[test]
    fn reports_length_overflow_and_open_endpoints() {
        let report = verify_words(d(2), &[0, 1, 3], step(1));
        assert!(report.violations.contains(&Violation::WrongLength {
            expected: 4,
            actual: 3
        }));
        assert!(report
            .violations
            .contains(&Violation::OpenEndpoints { distance: 2 }));

        let report = verify_words(d(2), &[0, 1, 5, 4], step(1));
        assert!(report
            .violations
            .contains(&Violation::DimensionOverflow { index: 2 }));

        let empty = verify_words(d(2), &[], step(1));
        assert_eq!(
            empty.violations,
            vec![Violation::WrongLength {
                expected: 4,
                actual: 0
            }]
        );
    }

    #[test]
    fn large_dimension_short_input_uses_sparse_presence() {
        let report = verify_words(d(40), &[0, 1, 1], step(1));
        assert!(report
            .violations
            .contains(&Violation::DuplicateVertex { index: 2 }));
    }

    #[test]
    fn rejects_random_even_step_candidates() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for trial in 0..10_000 {
            let k = rng.gen_range(3..=8u32);
            let evens: Vec<u64> = (2..k as u64).step_by(2).collect();
            let h = evens[rng.gen_range(0..evens.len())];
            let n = 1usize << k;
            // Random walk of change-h moves: the strongest candidates, since
            // every consecutive pair already has the right length.
            let mut words = Vec::with_capacity(n);
            let mut cur = rng.gen_range(0..n as u64);
            for _ in 0..n {
                words.push(cur);
                let mut flip = 0u64;
                while flip.count_ones() as u64 != h {
                    flip |= 1 << rng.gen_range(0..k);
                }
                cur ^= flip;
            }
            if trial % 2 == 1 {
                // a permutation of the whole cube
                words = (0..n as u64).collect();
                for i in (1..n).rev() {
                    words.swap(i, rng.gen_range(0..=i));
                }
            }
            assert!(
                !verify_words(d(k), &words, step(h)).valid(),
                "trial {trial}"
            );
        }
    }

    proptest::proptest! {
        #[test]
        fn never_accepts_a_non_permutation(k in 2u32..=6, raw in proptest::collection::vec(0u64..64, 0..70)) {
            let dim = d(k);
            let words: Vec<u64> = raw.iter().map(|w| w & dim.mask()).collect();
            let mut sorted = words.clone();
            sorted.sort_unstable();
            let is_perm = sorted == (0..dim.vertex_count()).collect::<Vec<_>>();
            if !is_perm {
                for h in 1..=k as u64 {
                    proptest::prop_assert!(!verify_words(dim, &words, step(h)).valid());
                }
            }
        }
    }
}
