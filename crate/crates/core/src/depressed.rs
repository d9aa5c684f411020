//! Depressed cubic and quartic forms of the Majorana polynomial, and state
//! compression: translating the constellation so its roots have zero mean.

use num_complex::Complex64;

use crate::companion::monic_roots;
use crate::error::{Result, StellarError};
use crate::majorana::{rotate_polynomial, to_polynomial, MajoranaPolynomial};
use crate::sphere::SphereRotation;
use crate::state::{binomial, SymmetricState};

/// Angle of the fixed pre-rotation used when a star sits at infinity.
pub const PRE_ROTATION_ANGLE: f64 = 0.7;

/// Rotation by [`PRE_ROTATION_ANGLE`] about the y axis.
pub fn pre_rotation() -> SphereRotation {
    SphereRotation::from_axis_angle([0.0, 1.0, 0.0], PRE_ROTATION_ANGLE)
}

/// `y^3 + p y + q`, with original roots `e = y + shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedCubic {
    pub p: Complex64,
    pub q: Complex64,
    pub shift: Complex64,
}

impl DepressedCubic {
    /// Ascending coefficients `[q, p, 0, 1]`.
    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.q, self.p, Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
    }

    /// `-4 p^3 - 27 q^2`.
    pub fn discriminant(&self) -> Complex64 {
        -4.0 * self.p.powu(3) - 27.0 * self.q.powu(2)
    }

    pub fn roots(&self) -> Result<Vec<Complex64>> {
        monic_roots(&self.coefficients()[..3])
    }

    /// The monic polynomial in the original variable, ascending.
    pub fn monic_original(&self) -> Vec<Complex64> {
        taylor_shift(&self.coefficients(), -self.shift)
    }
}

/// `y^4 + p y^2 + q y + r`, with original roots `e = y + shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuartic {
    pub p: Complex64,
    pub q: Complex64,
    pub r: Complex64,
    pub shift: Complex64,
}

impl DepressedQuartic {
    /// Ascending coefficients `[r, q, p, 0, 1]`.
    pub fn coefficients(&self) -> [Complex64; 5] {
        [
            self.r,
            self.q,
            self.p,
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ]
    }

    pub fn discriminant(&self) -> Complex64 {
        quartic_discriminant(self.p, self.q, self.r)
    }

    pub fn roots(&self) -> Result<Vec<Complex64>> {
        monic_roots(&self.coefficients()[..4])
    }

    pub fn monic_original(&self) -> Vec<Complex64> {
        taylor_shift(&self.coefficients(), -self.shift)
    }
}

/// Discriminant of `y^4 + p y^2 + q y + r`.
pub fn quartic_discriminant(p: Complex64, q: Complex64, r: Complex64) -> Complex64 {
    16.0 * p.powu(4) * r - 4.0 * p.powu(3) * q * q - 128.0 * p * p * r * r
        + 144.0 * p * q * q * r
        - 27.0 * q.powu(4)
        + 256.0 * r.powu(3)
}

/// Either depressed form, by degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DepressedForm {
    Cubic(DepressedCubic),
    Quartic(DepressedQuartic),
}

impl DepressedForm {
    pub fn of(poly: &MajoranaPolynomial) -> Result<Self> {
        match poly.n() {
            3 => depress_cubic(poly).map(Self::Cubic),
            4 => depress_quartic(poly).map(Self::Quartic),
            n => Err(StellarError::DepressionDegree(n)),
        }
    }

    pub fn p(&self) -> Complex64 {
        match self {
            Self::Cubic(c) => c.p,
            Self::Quartic(c) => c.p,
        }
    }

    pub fn q(&self) -> Complex64 {
        match self {
            Self::Cubic(c) => c.q,
            Self::Quartic(c) => c.q,
        }
    }

    /// `None` for a cubic.
    pub fn r(&self) -> Option<Complex64> {
        match self {
            Self::Cubic(_) => None,
            Self::Quartic(c) => Some(c.r),
        }
    }

    pub fn shift(&self) -> Complex64 {
        match self {
            Self::Cubic(c) => c.shift,
            Self::Quartic(c) => c.shift,
        }
    }
}

/// `b_k = a_k / a_n` for `k < n`. Fails when the leading coefficient is
/// below the degree-drop threshold.
pub fn monic_coefficients(poly: &MajoranaPolynomial) -> Result<Vec<Complex64>> {
    if poly.leading_vanishes() {
        return Err(StellarError::StarAtInfinity);
    }
    let a = poly.coeffs();
    let lead = a[poly.n()];
    Ok(a[..poly.n()].iter().map(|c| c / lead).collect())
}

pub fn depress_cubic(poly: &MajoranaPolynomial) -> Result<DepressedCubic> {
    if poly.n() != 3 {
        return Err(StellarError::WrongDegree {
            op: "depress_cubic",
            expected: 3,
            got: poly.n(),
        });
    }
    let b = monic_coefficients(poly)?;
    let (b0, b1, b2) = (b[0], b[1], b[2]);
    Ok(DepressedCubic {
        p: b1 - b2 * b2 / 3.0,
        q: 2.0 * b2.powu(3) / 27.0 - b2 * b1 / 3.0 + b0,
        shift: -b2 / 3.0,
    })
}

pub fn depress_quartic(poly: &MajoranaPolynomial) -> Result<DepressedQuartic> {
    if poly.n() != 4 {
        return Err(StellarError::WrongDegree {
            op: "depress_quartic",
            expected: 4,
            got: poly.n(),
        });
    }
    let b = monic_coefficients(poly)?;
    let (b0, b1, b2, b3) = (b[0], b[1], b[2], b[3]);
    Ok(DepressedQuartic {
        p: b2 - 3.0 * b3 * b3 / 8.0,
        q: b3.powu(3) / 8.0 - b3 * b2 / 2.0 + b1,
        r: -3.0 * b3.powu(4) / 256.0 + b3 * b3 * b2 / 16.0 - b3 * b1 / 4.0 + b0,
        shift: -b3 / 4.0,
    })
}

/// Ascending coefficients of `P(y + t)` given those of `P`.
pub fn taylor_shift(coeffs: &[Complex64], t: Complex64) -> Vec<Complex64> {
    let n = coeffs.len();
    (0..n)
        .map(|k| {
            (k..n)
                .map(|j| coeffs[j] * binomial(j, k) * t.powu((j - k) as u32))
                .sum()
        })
        .collect()
}

/// A compressed state and how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct Compression {
    pub state: SymmetricState,
    /// Mean of the roots that was subtracted, in the (possibly pre-rotated) chart.
    pub shift: Complex64,
    /// Whether the fixed pre-rotation was applied first.
    pub pre_rotated: bool,
}

/// Translates every root by minus the root mean, so the `e^(n-1)` coefficient
/// vanishes. A star at infinity triggers one fixed pre-rotation.
///
/// The translation is applied to the coefficients (`P(y + t)`), which moves
/// every root exactly as re-expanding the translated constellation would.
pub fn compress_state(state: &SymmetricState) -> Result<Compression> {
    let n = state.n();
    if n != 3 && n != 4 {
        return Err(StellarError::DepressionDegree(n));
    }
    let mut poly = to_polynomial(state);
    let mut pre_rotated = false;
    if poly.leading_vanishes() {
        poly = rotate_polynomial(&poly, &pre_rotation());
        pre_rotated = true;
    }
    let b = monic_coefficients(&poly)?;
    let shift = -b[n - 1] / n as f64;
    let mut shifted = taylor_shift(poly.coeffs(), shift);
    shifted[n - 1] = Complex64::new(0.0, 0.0);
    let state = MajoranaPolynomial::new(n, shifted)?.to_state()?;
    Ok(Compression {
        state,
        shift,
        pre_rotated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorana::{constellation_of, from_constellation, Constellation, DEFAULT_CLUSTER_TOL};
    use crate::sphere::Root;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn poly(coeffs: &[f64]) -> MajoranaPolynomial {
        MajoranaPolynomial::new(coeffs.len() - 1, coeffs.iter().map(|&x| c(x)).collect()).unwrap()
    }

    #[test]
    fn ghz_cubic() {
        let d = depress_cubic(&poly(&[1.0, 0.0, 0.0, -1.0])).unwrap();
        assert!(d.p.norm() < 1e-15);
        assert!((d.q - c(-1.0)).norm() < 1e-15);
        assert_eq!(d.shift, c(0.0));
    }

    #[test]
    fn triple_root_cubic() {
        let d = depress_cubic(&poly(&[1.0, -3.0, 3.0, -1.0])).unwrap();
        assert!(d.p.norm() < 1e-15 && d.q.norm() < 1e-15);
        assert!((d.shift - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn ghz4_quartic() {
        let d = depress_quartic(&poly(&[FRAC_1_SQRT_2, 0.0, 0.0, 0.0, FRAC_1_SQRT_2])).unwrap();
        assert_eq!((d.p, d.q), (c(0.0), c(0.0)));
        assert!(d.r.norm() > 0.5);
    }

    #[test]
    fn two_double_roots_quartic() {
        // (y^2 + p/2)^2 with p = -2, shifted to roots at 3 +- 1
        let roots = [4.0, 4.0, 2.0, 2.0].map(|x| Root::finite(x, 0.0));
        let s = from_constellation(&Constellation::from_roots(&roots).unwrap()).unwrap();
        let d = depress_quartic(&to_polynomial(&s)).unwrap();
        assert!(d.q.norm() < 1e-12);
        assert!((d.r - d.p * d.p / 4.0).norm() < 1e-12);
        assert!((d.shift - c(3.0)).norm() < 1e-12);
    }

    #[test]
    fn quadruple_root_quartic() {
        let r = Root::finite(0.3, -0.4);
        let s = from_constellation(&Constellation::from_roots(&[r; 4]).unwrap()).unwrap();
        let d = depress_quartic(&to_polynomial(&s)).unwrap();
        assert!(d.p.norm() < 1e-13 && d.q.norm() < 1e-13 && d.r.norm() < 1e-13);
    }

    #[test]
    fn star_at_infinity_needs_pre_rotation() {
        assert_eq!(
            depress_cubic(&poly(&[1.0, 1.0, 1.0, 0.0])),
            Err(StellarError::StarAtInfinity)
        );
        assert!(matches!(
            depress_cubic(&poly(&[1.0, 1.0])),
            Err(StellarError::WrongDegree { .. })
        ));
    }

    #[test]
    fn depressed_form_shifts_back_to_monic_input() {
        let p = MajoranaPolynomial::new(
            4,
            vec![
                Complex64::new(0.3, -1.0),
                Complex64::new(2.0, 0.5),
                Complex64::new(-0.7, 0.1),
                Complex64::new(1.1, 1.9),
                Complex64::new(0.6, -0.2),
            ],
        )
        .unwrap();
        let d = depress_quartic(&p).unwrap();
        let back = d.monic_original();
        let monic = monic_coefficients(&p).unwrap();
        for k in 0..4 {
            assert!((back[k] - monic[k]).norm() < 1e-12);
        }
        assert!((back[4] - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn compress_ghz_is_identity() {
        let ghz = SymmetricState::normalized(3, vec![c(1.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        let out = compress_state(&ghz).unwrap();
        assert_eq!(out.shift, c(0.0));
        assert!(!out.pre_rotated);
        assert!((crate::state::state_fidelity(&out.state, &ghz).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn compress_product_moves_stars_to_origin() {
        let r = Root::finite(-0.8, 1.3);
        let s = from_constellation(&Constellation::from_roots(&[r; 3]).unwrap()).unwrap();
        let out = compress_state(&s).unwrap();
        assert!((out.state.coeffs()[3].norm() - 1.0).abs() < 1e-12);
        assert!((out.shift - r.as_finite().unwrap()).norm() < 1e-12);
    }

    #[test]
    fn compress_with_star_at_infinity_pre_rotates() {
        let roots = [Root::Infinity, Root::finite(0.5, 0.0), Root::finite(-1.0, 2.0)];
        let s = from_constellation(&Constellation::from_roots(&roots).unwrap()).unwrap();
        let out = compress_state(&s).unwrap();
        assert!(out.pre_rotated);
        let stars = constellation_of(&out.state, DEFAULT_CLUSTER_TOL).unwrap();
        assert!(stars.centroid().unwrap().norm() < 1e-9);
        assert_eq!(
            compress_state(&SymmetricState::normalized(2, vec![c(1.0); 3]).unwrap()),
            Err(StellarError::DepressionDegree(2))
        );
    }
}
