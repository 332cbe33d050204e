//! Hamiltonian cycles of the hypercube vertex set `{0,1}^k` in which every
//! move flips exactly `h` coordinates, and closed fairy-chess leaper tours
//! built on them.
//!
//! Coordinates are stored leftmost-first from bit 0: the tuple
//! `(x_1, ..., x_k)` is the word `x_1 + 2 x_2 + ... + 2^(k-1) x_k`.

pub mod cli;
pub mod constructor;
pub mod error;
pub mod graycode;
pub mod hypercube;
pub mod leaper;
pub mod oracle;
pub mod path;
pub mod transforms;
pub mod verifier;

pub use constructor::{
    base_cycle, construct, feasibility, lift, Construction, CycleCertificate, FeasibilityStatus,
    FeasibilityVerdict,
};
pub use error::{Error, Result};
pub use graycode::{gray_tour, reflect_extend};
pub use hypercube::{
    complement, flip_prefix, hamming, parity, Dimension, Parity, StepClass, Vertex,
};
pub use leaper::{
    leaper_by_name, leaper_feasible, leaper_step, leaper_verdict, min_dimension, LeaperSpec,
    LeaperVerdict, TourRange,
};
pub use oracle::{oracle_count, oracle_exists, OracleConfig, OracleResult};
pub use path::VertexPath;
pub use transforms::{append_coordinate, complement_odd_indices, flip_prefix_path, reverse_path};
pub use verifier::{verify_cycle, verify_words, VerifyReport, Violation};
