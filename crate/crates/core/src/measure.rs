//! Decomposition of depressed 3- and 4-qubit states onto unnormalized GHZ,
//! W-type and separable kets, and the entanglement quantity `D_ent`.
//!
//! Depression here is taken in the excitation frame: a state is depressed when
//! its Dicke term with exactly one zero vanishes (two excitations for three
//! qubits, three for four). Compression in that frame is the ordinary
//! compression applied to the bit-flipped state.

use num_complex::Complex64;

use crate::classify::{classify_state, DEFAULT_TOL};
use crate::depressed::compress_state;
use crate::error::{Result, StellarError};
use crate::majorana::to_polynomial;
use crate::state::SymmetricState;

/// Largest `sqrt(n) |c_1|` accepted as depressed.
pub const DEPRESSED_TOL: f64 = 1e-9;

/// Coefficients on `|000>+|111>`, `|001>+|010>+|100>` and `|111>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition3 {
    pub a_ghz: Complex64,
    pub a_w: Complex64,
    pub a_sep: Complex64,
    /// Squared norm of the recombined vector.
    pub norm_check: f64,
}

impl Decomposition3 {
    /// `2 (|a_ghz|^2 + |a_w|^2)` over the recombined squared norm.
    pub fn dent(&self) -> f64 {
        2.0 * (self.a_ghz.norm_sqr() + self.a_w.norm_sqr()) / self.norm_check
    }

    /// Dicke coefficients (zeros indexing) of the recombined vector.
    pub fn recombine(&self) -> [Complex64; 4] {
        let zero = Complex64::new(0.0, 0.0);
        [self.a_ghz + self.a_sep, zero, self.a_w * 3f64.sqrt(), self.a_ghz]
    }
}

/// Coefficients on `|0000>+|1111>`, the four one-excitation kets, the six
/// two-excitation kets, and `|1111>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition4 {
    pub a_ghz: Complex64,
    pub a_w4: Complex64,
    pub a_w2x2: Complex64,
    pub a_sep: Complex64,
    pub norm_check: f64,
}

impl Decomposition4 {
    pub fn dent(&self) -> f64 {
        2.0 * (self.a_ghz.norm_sqr() + self.a_w4.norm_sqr() + self.a_w2x2.norm_sqr())
            / self.norm_check
    }

    pub fn recombine(&self) -> [Complex64; 5] {
        let zero = Complex64::new(0.0, 0.0);
        [
            self.a_ghz + self.a_sep,
            zero,
            self.a_w2x2 * 6f64.sqrt(),
            self.a_w4 * 2.0,
            self.a_ghz,
        ]
    }
}

fn check_degree(state: &SymmetricState, op: &'static str, n: usize) -> Result<()> {
    if state.n() != n {
        return Err(StellarError::WrongDegree {
            op,
            expected: n,
            got: state.n(),
        });
    }
    Ok(())
}

/// `sqrt(n) |c_1|`, the size of the term compression removes.
pub fn depression_residual(state: &SymmetricState) -> f64 {
    (state.n() as f64).sqrt() * state.coeffs()[1].norm()
}

pub fn is_depressed(state: &SymmetricState) -> bool {
    depression_residual(state) <= DEPRESSED_TOL
}

fn require_depressed(state: &SymmetricState) -> Result<()> {
    let residual = depression_residual(state);
    if residual > DEPRESSED_TOL {
        return Err(StellarError::NotDepressed(residual));
    }
    Ok(())
}

pub fn decompose3(state: &SymmetricState) -> Result<Decomposition3> {
    check_degree(state, "decompose3", 3)?;
    require_depressed(state)?;
    let c = state.coeffs();
    let a_ghz = c[3];
    let a_w = c[2] / 3f64.sqrt();
    let a_sep = c[0] - c[3];
    Ok(Decomposition3 {
        a_ghz,
        a_w,
        a_sep,
        norm_check: a_ghz.norm_sqr() + (a_ghz + a_sep).norm_sqr() + 3.0 * a_w.norm_sqr(),
    })
}

pub fn decompose4(state: &SymmetricState) -> Result<Decomposition4> {
    check_degree(state, "decompose4", 4)?;
    require_depressed(state)?;
    let c = state.coeffs();
    let a_ghz = c[4];
    let a_w4 = c[3] / 2.0;
    let a_w2x2 = c[2] / 6f64.sqrt();
    let a_sep = c[0] - c[4];
    Ok(Decomposition4 {
        a_ghz,
        a_w4,
        a_w2x2,
        a_sep,
        norm_check: a_ghz.norm_sqr()
            + (a_ghz + a_sep).norm_sqr()
            + 4.0 * a_w4.norm_sqr()
            + 6.0 * a_w2x2.norm_sqr(),
    })
}

/// How the depressed state was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Separable with its compression undefined: `D_ent = 0` by class.
    SeparableByClass,
    /// Input already depressed.
    Direct,
    Compressed { pre_rotated: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Measurement<D> {
    pub dent: f64,
    /// `None` on the separable-by-class route.
    pub decomposition: Option<D>,
    pub route: Route,
}

impl<D> Measurement<D> {
    /// `D_ent` clamped to `[0, 1]` for display.
    pub fn dent_clamped(&self) -> f64 {
        clamp_display(self.dent)
    }
}

pub fn clamp_display(dent: f64) -> f64 {
    dent.clamp(0.0, 1.0)
}

/// The depressed form of `state` in the excitation frame.
fn depressed_state(state: &SymmetricState) -> Result<Option<(SymmetricState, Route)>> {
    let flipped = state.bit_flipped();
    if to_polynomial(&flipped).leading_vanishes()
        && classify_state(state, DEFAULT_TOL)?.class.is_separable()
    {
        return Ok(None);
    }
    if is_depressed(state) {
        return Ok(Some((state.clone(), Route::Direct)));
    }
    let compression = compress_state(&flipped)?;
    Ok(Some((
        compression.state.bit_flipped(),
        Route::Compressed {
            pre_rotated: compression.pre_rotated,
        },
    )))
}

pub fn measure3(state: &SymmetricState) -> Result<Measurement<Decomposition3>> {
    check_degree(state, "dent3", 3)?;
    Ok(match depressed_state(state)? {
        None => Measurement {
            dent: 0.0,
            decomposition: None,
            route: Route::SeparableByClass,
        },
        Some((depressed, route)) => {
            let d = decompose3(&depressed)?;
            Measurement {
                dent: d.dent(),
                decomposition: Some(d),
                route,
            }
        }
    })
}

pub fn measure4(state: &SymmetricState) -> Result<Measurement<Decomposition4>> {
    check_degree(state, "dent4", 4)?;
    Ok(match depressed_state(state)? {
        None => Measurement {
            dent: 0.0,
            decomposition: None,
            route: Route::SeparableByClass,
        },
        Some((depressed, route)) => {
            let d = decompose4(&depressed)?;
            Measurement {
                dent: d.dent(),
                decomposition: Some(d),
                route,
            }
        }
    })
}

/// `D_ent` of a 3-qubit state, compressing first when needed.
pub fn dent3(state: &SymmetricState) -> Result<f64> {
    Ok(measure3(state)?.dent)
}

/// `D_ent` of a 4-qubit state, compressing first when needed.
pub fn dent4(state: &SymmetricState) -> Result<f64> {
    Ok(measure4(state)?.dent)
}
