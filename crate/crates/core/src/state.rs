//! Symmetric states in the Dicke basis, their full `2^n` amplitude vectors,
//! and single-qubit spinors.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Result, StellarError};

/// Construction tolerance for normalized states.
pub const NORM_TOL: f64 = 1e-12;

/// Largest spinor list accepted by [`symmetrize_spinors`].
pub const MAX_SYMMETRIZE: usize = 10;

/// Binomial coefficient as a float. Exact for the qubit counts used here.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// A pure symmetric state of `n` qubits given by its Dicke coefficients.
///
/// `coeffs[l]` multiplies the Dicke state with `l` zeros and `n - l` ones.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricState {
    n: usize,
    coeffs: Vec<Complex64>,
}

impl SymmetricState {
    /// Wraps coefficients without rescaling. Rejects a wrong length or an
    /// all-zero vector.
    pub fn new(n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(StellarError::NoQubits);
        }
        if coeffs.len() != n + 1 {
            return Err(StellarError::CoefficientCount {
                n,
                expected: n + 1,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().all(|c| c.norm_sqr() == 0.0) {
            return Err(StellarError::ZeroState);
        }
        Ok(Self { n, coeffs })
    }

    pub fn normalized(n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        Ok(Self::new(n, coeffs)?.normalize())
    }

    /// Builds a state from coefficients indexed by excitation count (number of
    /// ones), the reverse of the native zeros-count indexing.
    pub fn from_excitations(n: usize, mut coeffs: Vec<Complex64>) -> Result<Self> {
        coeffs.reverse();
        Self::new(n, coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficients indexed by excitation count.
    pub fn excitation_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Rescales by a positive real so that the coefficients have unit norm.
    pub fn normalize(&self) -> Self {
        let norm = self.norm_sqr().sqrt();
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c / norm).collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORM_TOL
    }

    /// The state with every qubit flipped (`X` on each qubit). Reverses the
    /// Dicke coefficients and inverts every Majorana root.
    pub fn bit_flipped(&self) -> Self {
        Self {
            n: self.n,
            coeffs: self.excitation_coeffs(),
        }
    }

    /// Projects a full amplitude vector onto the Dicke basis. The result is
    /// normalized; components outside the symmetric subspace are dropped.
    pub fn from_full(v: &FullStateVector) -> Result<Self> {
        let n = v.n();
        let mut sums = vec![Complex64::new(0.0, 0.0); n + 1];
        for (index, amp) in v.amps().iter().enumerate() {
            sums[zeros_in(index, n)] += amp;
        }
        let coeffs = sums
            .into_iter()
            .enumerate()
            .map(|(l, s)| s / binomial(n, l).sqrt())
            .collect();
        Self::normalized(n, coeffs)
    }
}

/// Free-function form of [`SymmetricState::normalize`] for raw coefficients.
pub fn normalize(n: usize, coeffs: Vec<Complex64>) -> Result<SymmetricState> {
    SymmetricState::normalized(n, coeffs)
}

fn zeros_in(index: usize, n: usize) -> usize {
    n - index.count_ones() as usize
}

/// Amplitudes over the `2^n` computational basis states. Qubit 0 is the most
/// significant bit of the index.
#[derive(Debug, Clone, PartialEq)]
pub struct FullStateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl FullStateVector {
    pub fn new(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(StellarError::NoQubits);
        }
        if amps.len() != 1 << n {
            return Err(StellarError::CoefficientCount {
                n,
                expected: 1 << n,
                got: amps.len(),
            });
        }
        Ok(Self { n, amps })
    }

    /// Computational basis state, e.g. `basis(3, 0b111)` is `|111>`.
    pub fn basis(n: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[index] = Complex64::new(1.0, 0.0);
        Self { n, amps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalize(mut self) -> Self {
        let norm = self.norm_sqr().sqrt();
        self.amps.iter_mut().for_each(|a| *a /= norm);
        self
    }

    /// Amplitudes with the qubit order permuted: qubit `q` of the result is
    /// qubit `perm[q]` of `self`.
    pub fn permute_qubits(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut amps = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (index, amp) in amps.iter_mut().enumerate() {
            let mut source = 0usize;
            for (q, &p) in perm.iter().enumerate() {
                let bit = (index >> (n - 1 - q)) & 1;
                source |= bit << (n - 1 - p);
            }
            *amp = self.amps[source];
        }
        Self { n, amps }
    }
}

/// The Dicke state with `l` zeros among `n` qubits.
pub fn dicke_vector(n: usize, l: usize) -> Result<FullStateVector> {
    if n == 0 {
        return Err(StellarError::NoQubits);
    }
    if l > n {
        return Err(StellarError::DickeIndex { n, l });
    }
    let amp = Complex64::new(1.0 / binomial(n, l).sqrt(), 0.0);
    let amps = (0..1usize << n)
        .map(|index| {
            if zeros_in(index, n) == l {
                amp
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    FullStateVector::new(n, amps)
}

/// `sum_l c_l |D_l>` written out over all bitstrings.
pub fn expand(state: &SymmetricState) -> FullStateVector {
    let n = state.n();
    let per_string: Vec<Complex64> = state
        .coeffs()
        .iter()
        .enumerate()
        .map(|(l, c)| c / binomial(n, l).sqrt())
        .collect();
    let amps = (0..1usize << n)
        .map(|index| per_string[zeros_in(index, n)])
        .collect();
    FullStateVector { n, amps }
}

/// `|<a|b>|^2`.
pub fn fidelity(a: &FullStateVector, b: &FullStateVector) -> Result<f64> {
    if a.n() != b.n() {
        return Err(StellarError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let overlap: Complex64 = a
        .amps()
        .iter()
        .zip(b.amps())
        .map(|(x, y)| x.conj() * y)
        .sum();
    Ok(overlap.norm_sqr())
}

/// Fidelity between two symmetric states, computed in the Dicke basis.
pub fn state_fidelity(a: &SymmetricState, b: &SymmetricState) -> Result<f64> {
    if a.n() != b.n() {
        return Err(StellarError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let overlap: Complex64 = a
        .coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| x.conj() * y)
        .sum();
    Ok(overlap.norm_sqr() / (a.norm_sqr() * b.norm_sqr()))
}

/// A single-qubit state `cos(beta/2) e^{-i alpha/2}|0> + sin(beta/2) e^{i alpha/2}|1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    pub alpha: f64,
    pub beta: f64,
}

impl Spinor {
    /// Canonicalizes to `alpha` in `[0, 2pi)` and `beta` in `[0, pi]`; at the
    /// poles `alpha` is set to 0.
    pub fn new(alpha: f64, beta: f64) -> Self {
        let mut alpha = alpha;
        let mut beta = beta.rem_euclid(TAU);
        if beta > PI {
            beta = TAU - beta;
            alpha += PI;
        }
        alpha = alpha.rem_euclid(TAU);
        if alpha >= TAU {
            alpha = 0.0;
        }
        if beta == 0.0 || beta == PI {
            alpha = 0.0;
        }
        Self { alpha, beta }
    }

    /// `(amplitude of |0>, amplitude of |1>)`.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        let half = 0.5 * self.beta;
        (
            Complex64::from_polar(half.cos(), -0.5 * self.alpha),
            Complex64::from_polar(half.sin(), 0.5 * self.alpha),
        )
    }

    pub fn bloch_vector(&self) -> [f64; 3] {
        [
            self.beta.sin() * self.alpha.cos(),
            self.beta.sin() * self.alpha.sin(),
            self.beta.cos(),
        ]
    }
}

/// Normalized projection of the permutation-symmetrized product of `spinors`
/// onto the Dicke basis.
///
/// Summing the product over all orderings gives, on the Dicke state with `l`
/// zeros, a coefficient proportional to the `t^l` coefficient of
/// `prod_i (b_i + a_i t)` divided by `sqrt(C(n, l))`.
pub fn symmetrize_spinors(spinors: &[Spinor]) -> Result<SymmetricState> {
    let n = spinors.len();
    if n == 0 || n > MAX_SYMMETRIZE {
        return Err(StellarError::PermutationTooLarge {
            n,
            limit: MAX_SYMMETRIZE,
        });
    }
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for s in spinors {
        let (a, b) = s.amplitudes();
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c * b;
            next[k + 1] += c * a;
        }
        poly = next;
    }
    let coeffs = poly
        .into_iter()
        .enumerate()
        .map(|(l, e)| e / binomial(n, l).sqrt())
        .collect();
    SymmetricState::normalized(n, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn normalize_scales_by_positive_real() {
        let s = normalize(2, vec![c(2.0), c(0.0), c(0.0)]).unwrap();
        assert_eq!(s.coeffs(), &[c(1.0), c(0.0), c(0.0)]);

        let ghz = normalize(3, vec![c(1.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        assert!((ghz.coeffs()[0].re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((ghz.coeffs()[3].re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(ghz.is_normalized());
    }

    #[test]
    fn zero_state_is_rejected() {
        assert_eq!(
            normalize(1, vec![c(0.0), c(0.0)]),
            Err(StellarError::ZeroState)
        );
        assert!(matches!(
            SymmetricState::new(2, vec![c(1.0)]),
            Err(StellarError::CoefficientCount { .. })
        ));
    }

    #[test]
    fn dicke_vectors() {
        let v = dicke_vector(2, 1).unwrap();
        assert!((v.amps()[0b01].re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((v.amps()[0b10].re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(v.amps()[0b00], c(0.0));

        assert_eq!(dicke_vector(3, 3).unwrap(), FullStateVector::basis(3, 0b000));
        assert_eq!(dicke_vector(3, 0).unwrap(), FullStateVector::basis(3, 0b111));
        assert_eq!(
            dicke_vector(3, 4),
            Err(StellarError::DickeIndex { n: 3, l: 4 })
        );
    }

    #[test]
    fn expand_ghz_and_single_qubit() {
        let ghz = normalize(3, vec![c(1.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        let v = expand(&ghz);
        for (i, a) in v.amps().iter().enumerate() {
            let expected = if i == 0 || i == 7 { FRAC_1_SQRT_2 } else { 0.0 };
            assert!((a - c(expected)).norm() < 1e-15, "index {i}");
        }
        let zero = normalize(1, vec![c(0.0), c(1.0)]).unwrap();
        assert_eq!(expand(&zero), FullStateVector::basis(1, 0));
    }

    #[test]
    fn fidelity_examples() {
        let v = expand(&normalize(2, vec![c(0.3), c(-0.2), c(0.9)]).unwrap());
        assert!((fidelity(&v, &v).unwrap() - 1.0).abs() < 1e-12);

        let f = fidelity(&FullStateVector::basis(3, 0), &FullStateVector::basis(3, 7)).unwrap();
        assert_eq!(f, 0.0);

        let ghz = expand(&normalize(3, vec![c(1.0), c(0.0), c(0.0), c(1.0)]).unwrap());
        let w = expand(&normalize(3, vec![c(0.0), c(0.0), c(1.0), c(0.0)]).unwrap());
        assert!(fidelity(&ghz, &w).unwrap().abs() < 1e-15);

        assert!(matches!(
            fidelity(&ghz, &FullStateVector::basis(2, 0)),
            Err(StellarError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn w_state_is_one_excitation() {
        // c_2 multiplies the Dicke state with two zeros: |001>+|010>+|100>.
        let w = expand(&normalize(3, vec![c(0.0), c(0.0), c(1.0), c(0.0)]).unwrap());
        let third = 1.0 / 3f64.sqrt();
        for index in [0b001, 0b010, 0b100] {
            assert!((w.amps()[index].re - third).abs() < 1e-15);
        }
    }

    #[test]
    fn spinor_canonicalization() {
        let s = Spinor::new(-0.5, 0.3);
        assert!((s.alpha - (TAU - 0.5)).abs() < 1e-15);
        let flipped = Spinor::new(0.2, -0.3);
        assert!((flipped.beta - 0.3).abs() < 1e-15);
        assert!((flipped.alpha - (0.2 + PI)).abs() < 1e-15);
        assert_eq!(Spinor::new(1.0, 0.0).alpha, 0.0);
    }

    #[test]
    fn symmetrize_identical_spinors_is_product() {
        let s = Spinor::new(0.4, 1.1);
        let state = symmetrize_spinors(&[s, s, s]).unwrap();
        let (a, b) = s.amplitudes();
        let mut product = vec![Complex64::new(1.0, 0.0)];
        for _ in 0..3 {
            let mut next = Vec::with_capacity(product.len() * 2);
            for p in &product {
                next.push(p * a);
                next.push(p * b);
            }
            product = next;
        }
        let product = FullStateVector::new(3, product).unwrap();
        assert!((fidelity(&expand(&state), &product).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetrize_rejects_large_lists() {
        let spinors = vec![Spinor::new(0.0, 1.0); 11];
        assert!(matches!(
            symmetrize_spinors(&spinors),
            Err(StellarError::PermutationTooLarge { n: 11, .. })
        ));
        assert!(symmetrize_spinors(&[]).is_err());
    }

    #[test]
    fn projection_recovers_dicke_coefficients() {
        let s = normalize(
            4,
            vec![
                Complex64::new(0.1, 0.2),
                c(-0.3),
                Complex64::new(0.0, 0.7),
                c(0.2),
                Complex64::new(-0.4, 0.1),
            ],
        )
        .unwrap();
        let back = SymmetricState::from_full(&expand(&s)).unwrap();
        for (x, y) in s.coeffs().iter().zip(back.coeffs()) {
            assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn bit_flip_reverses_coefficients() {
        let s = SymmetricState::new(2, vec![c(1.0), c(2.0), c(3.0)]).unwrap();
        assert_eq!(s.bit_flipped().coeffs(), &[c(3.0), c(2.0), c(1.0)]);
        let e = SymmetricState::from_excitations(2, vec![c(1.0), c(2.0), c(3.0)]).unwrap();
        assert_eq!(e, s.bit_flipped());
    }
}
