//! Majorana constellations of symmetric multi-qubit states.
//!
//! A pure symmetric state of `n` qubits is stored by its Dicke coefficients.
//! Its Majorana polynomial has `n` roots (counting the point at infinity), and
//! those roots, mapped to the Bloch sphere, form the state's constellation.
//! The crate builds constellations, detects root multiplicities and rotational
//! symmetry, assigns GHZ / W / separable class labels for 3 and 4 qubits, and
//! computes the decomposition-based entanglement quantity `D_ent`.
//!
//! ```
//! use stellar::{classify, majorana, state::SymmetricState};
//!
//! let ghz = SymmetricState::normalized(3, vec![1.0.into(), 0.0.into(), 0.0.into(), 1.0.into()]).unwrap();
//! let stars = majorana::find_roots(&majorana::to_polynomial(&ghz), majorana::DEFAULT_CLUSTER_TOL).unwrap();
//! assert_eq!(stars.stars().len(), 3);
//!
//! let report = classify::classify_state(&ghz, classify::DEFAULT_TOL).unwrap();
//! assert_eq!(report.class.as_str(), "GHZ");
//! ```
//!
//! Dicke index convention: coefficient `c_l` multiplies the Dicke state with
//! `l` zeros and `n - l` ones, so `c_n` is `|0...0>` and a constellation with
//! every star at the origin is the all-zeros product state.

pub mod classify;
pub mod cli;
mod companion;
pub mod depressed;
pub mod error;
pub mod majorana;
pub mod measure;
pub mod oracle;
pub mod sphere;
pub mod state;

pub use error::{Result, StellarError};
pub use num_complex::Complex64;
