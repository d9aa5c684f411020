//! Brute-force reference implementations, independent of the Dicke and
//! polynomial shortcuts, for cross-checking the main pipeline.
//!
//! These are exponential in the qubit count and meant for small `n`.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Result, StellarError};
use crate::majorana::{majorana_weight, Constellation, MajoranaPolynomial, Star};
use crate::sphere::{Root, Vec3};
use crate::state::{FullStateVector, Spinor, SymmetricState};

/// Largest spinor list [`brute_symmetrize`] accepts (`8! = 40320` terms).
pub const MAX_BRUTE: usize = 8;

/// A single-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedState {
    pub entries: [[Complex64; 2]; 2],
}

impl ReducedState {
    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    /// `tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        let m = &self.entries;
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| (m[i][j] * m[j][i]).re)
            .sum()
    }

    /// Eigenvalues of the Hermitian matrix, ascending.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let a = self.entries[0][0].re;
        let d = self.entries[1][1].re;
        let b = self.entries[0][1].norm();
        let mid = 0.5 * (a + d);
        let half = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        [mid - half, mid + half]
    }
}

/// Normalized sum over all `n!` orderings of the tensor product of the
/// spinors.
pub fn brute_symmetrize(spinors: &[Spinor]) -> Result<FullStateVector> {
    let n = spinors.len();
    if n == 0 || n > MAX_BRUTE {
        return Err(StellarError::PermutationTooLarge { n, limit: MAX_BRUTE });
    }
    let amps: Vec<(Complex64, Complex64)> = spinors.iter().map(Spinor::amplitudes).collect();
    let mut total = vec![Complex64::new(0.0, 0.0); 1 << n];
    let mut order: Vec<usize> = (0..n).collect();
    permutations(&mut order, 0, &mut |perm| {
        let mut product = vec![Complex64::new(1.0, 0.0)];
        for &i in perm {
            let (a, b) = amps[i];
            product = product.iter().flat_map(|x| [x * a, x * b]).collect();
        }
        for (t, p) in total.iter_mut().zip(product) {
            *t += p;
        }
    });
    Ok(FullStateVector::new(n, total)?.normalize())
}

fn permutations(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Partial trace over every qubit except `qubit` (qubit 0 is the most
/// significant bit of the amplitude index).
pub fn reduce_one(v: &FullStateVector, qubit: usize) -> Result<ReducedState> {
    let n = v.n();
    if qubit >= n {
        return Err(StellarError::QubitIndex { n, qubit });
    }
    let amps = v.amps();
    let norm = v.norm_sqr();
    let bit = 1usize << (n - 1 - qubit);
    let mut entries = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (index, amp) in amps.iter().enumerate() {
        if index & bit != 0 {
            continue;
        }
        let partner = amps[index | bit];
        entries[0][0] += amp.norm_sqr();
        entries[1][1] += partner.norm_sqr();
        entries[0][1] += amp * partner.conj();
    }
    entries[1][0] = entries[0][1].conj();
    for row in entries.iter_mut() {
        for e in row.iter_mut() {
            *e /= norm;
        }
    }
    Ok(ReducedState { entries })
}

/// Expands `prod (e - r_i)` over the finite roots; each root at infinity
/// lowers the degree by one instead.
pub fn refit_polynomial(roots: &[Root], n: usize) -> Result<MajoranaPolynomial> {
    if roots.len() != n {
        return Err(StellarError::CoefficientCount {
            n,
            expected: n,
            got: roots.len(),
        });
    }
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for r in roots.iter().filter_map(Root::as_finite) {
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] -= c * r;
            next[k + 1] += c;
        }
        poly = next;
    }
    poly.resize(n + 1, Complex64::new(0.0, 0.0));
    MajoranaPolynomial::new(n, poly)
}

/// Dicke coefficients (zeros indexing) of the refit polynomial, unnormalized.
pub fn refit_dicke(roots: &[Root], n: usize) -> Result<Vec<Complex64>> {
    let poly = refit_polynomial(roots, n)?;
    Ok(poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(l, a)| a / majorana_weight(n, l))
        .collect())
}

/// Uniform point on the unit sphere.
pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let rho = (1.0 - z * z).max(0.0).sqrt();
    [rho * phi.cos(), rho * phi.sin(), z]
}

pub fn random_root<R: Rng + ?Sized>(rng: &mut R) -> Root {
    Root::from_unit_vector(random_unit_vector(rng))
}

/// Bloch angles uniform on the sphere.
pub fn random_spinor<R: Rng + ?Sized>(rng: &mut R) -> Spinor {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    Spinor::new(rng.gen_range(0.0..std::f64::consts::TAU), z.acos())
}

/// Dicke coefficients with independent uniform real and imaginary parts.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SymmetricState {
    loop {
        let coeffs = (0..=n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        if let Ok(s) = SymmetricState::normalized(n, coeffs) {
            return s;
        }
    }
}

/// Random stars with the given multiplicities, pairwise at least
/// `min_separation` apart (chordal).
pub fn random_constellation<R: Rng + ?Sized>(
    rng: &mut R,
    parts: &[usize],
    min_separation: f64,
) -> Result<Constellation> {
    let mut stars: Vec<Star> = Vec::with_capacity(parts.len());
    for &multiplicity in parts {
        let root = loop {
            let candidate = random_root(rng);
            if stars
                .iter()
                .all(|s| s.root.chordal_distance(&candidate) >= min_separation)
            {
                break candidate;
            }
        };
        stars.push(Star { root, multiplicity });
    }
    Constellation::new(stars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorana::{find_roots, matching_distance, DEFAULT_CLUSTER_TOL};
    use crate::state::{expand, fidelity, symmetrize_spinors, SymmetricState};
    use std::f64::consts::{FRAC_PI_2, TAU};

    #[test]
    fn identical_spinors_give_the_product() {
        let s = Spinor::new(0.4, 1.1);
        let v = brute_symmetrize(&[s, s]).unwrap();
        let (a, b) = s.amplitudes();
        let want = [a * a, a * b, b * a, b * b];
        for (x, y) in v.amps().iter().zip(want) {
            assert!((x - y).norm() < 1e-15);
        }
        assert!((reduce_one(&v, 1).unwrap().purity() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn equatorial_triangle_is_ghz() {
        let spinors: Vec<Spinor> = (0..3)
            .map(|k| Spinor::new(TAU * k as f64 / 3.0, FRAC_PI_2))
            .collect();
        let v = brute_symmetrize(&spinors).unwrap();
        let ghz = SymmetricState::normalized(3, vec![1.0.into(), 0.0.into(), 0.0.into(), 1.0.into()])
            .unwrap();
        assert!((fidelity(&v, &expand(&ghz)).unwrap() - 1.0).abs() < 1e-14);
        let rho = reduce_one(&v, 0).unwrap();
        assert!((rho.purity() - 0.5).abs() < 1e-14);
        assert!((rho.trace().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn w3_reduced_purity() {
        let w = SymmetricState::normalized(3, vec![0.0.into(), 0.0.into(), 1.0.into(), 0.0.into()])
            .unwrap();
        let rho = reduce_one(&expand(&w), 2).unwrap();
        assert!((rho.purity() - 5.0 / 9.0).abs() < 1e-14);
        assert!(rho.eigenvalues()[0] >= -1e-12);
    }

    #[test]
    fn brute_force_agrees_with_dicke_path() {
        let spinors = [Spinor::new(0.3, 0.4), Spinor::new(2.0, 2.9), Spinor::new(5.1, 1.3)];
        let brute = brute_symmetrize(&spinors).unwrap();
        let fast = expand(&symmetrize_spinors(&spinors).unwrap());
        assert!((fidelity(&brute, &fast).unwrap() - 1.0).abs() < 1e-12);
        assert!(brute_symmetrize(&[Spinor::new(0.0, 0.0); 9]).is_err());
        assert!(reduce_one(&brute, 3).is_err());
    }

    #[test]
    fn refit_examples() {
        let cube: Vec<Root> = (0..3)
            .map(|k| Root::Finite(Complex64::from_polar(1.0, TAU * k as f64 / 3.0)))
            .collect();
        let p = refit_polynomial(&cube, 3).unwrap();
        let want = [-1.0, 0.0, 0.0, 1.0];
        for (a, w) in p.coeffs().iter().zip(want) {
            assert!((a - Complex64::new(w, 0.0)).norm() < 1e-14);
        }
        let zero = refit_polynomial(&[Root::finite(0.0, 0.0); 3], 3).unwrap();
        assert_eq!(zero.coeffs()[3], Complex64::new(1.0, 0.0));
        assert!(zero.coeffs()[..3].iter().all(|c| c.norm() == 0.0));

        let roots = [Root::finite(0.5, 2.0), Root::Infinity, Root::finite(-0.1, 0.3)];
        let found = find_roots(&refit_polynomial(&roots, 3).unwrap(), DEFAULT_CLUSTER_TOL).unwrap();
        assert!(matching_distance(&found.expanded_roots(), &roots) < 1e-8);
    }
}
