//! Entanglement class labels for 3 and 4 qubits from the multiplicity
//! partition of the constellation, cyclic symmetry of the star configuration,
//! and a consistency check against the depressed-form conditions.

use std::fmt;

use num_complex::Complex64;

use crate::depressed::{pre_rotation, quartic_discriminant, DepressedForm};
use crate::error::{Result, StellarError};
use crate::majorana::{find_roots, rotate_polynomial, to_polynomial, Constellation};
use crate::sphere::{self, Vec3};
use crate::state::SymmetricState;

/// Default tolerance for clustering, symmetry matching and label tests.
pub const DEFAULT_TOL: f64 = 1e-6;

/// Root multiplicities, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityPartition {
    parts: Vec<usize>,
}

impl MultiplicityPartition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for MultiplicityPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn partition(constellation: &Constellation) -> MultiplicityPartition {
    MultiplicityPartition::new(constellation.multiplicities())
}

/// Order of the largest rotation group found about one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicOrder {
    Finite(usize),
    /// Every star on one axis: any rotation about it is a symmetry.
    Infinite,
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicOrder::Finite(k) => write!(f, "{k}"),
            CyclicOrder::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    pub cyclic_order: CyclicOrder,
    /// `None` when the order is 1.
    pub axis: Option<Vec3>,
    /// `e`, `C2`, `C3`, ... or `C∞`.
    pub group_label: String,
}

impl SymmetryReport {
    fn trivial() -> Self {
        Self {
            cyclic_order: CyclicOrder::Finite(1),
            axis: None,
            group_label: "e".to_string(),
        }
    }
}

/// Canonical sign for an axis: first nonzero of `(z, y, x)` positive.
fn canonical_axis(v: Vec3) -> Option<Vec3> {
    let v = sphere::normalize(v)?.map(|c| if c.abs() < 1e-12 { 0.0 } else { c });
    for c in [v[2], v[1], v[0]] {
        if c.abs() > 1e-12 {
            return Some(if c > 0.0 { v } else { sphere::scale(v, -1.0) });
        }
    }
    None
}

fn axis_key_cmp(a: &Vec3, b: &Vec3) -> std::cmp::Ordering {
    a[2].total_cmp(&b[2])
        .then(a[1].total_cmp(&b[1]))
        .then(a[0].total_cmp(&b[0]))
}

/// Largest `k` such that rotating by `2 pi / k` about some axis maps the
/// stars, with multiplicities, onto themselves within chordal `tol`.
///
/// Candidate axes: star directions, pairwise bisectors, pairwise normals,
/// normals of planes through three stars, and the star centroid. When several
/// axes achieve the same order the one with the largest `(z, y, x)` wins.
pub fn detect_cyclic_symmetry(constellation: &Constellation, tol: f64) -> SymmetryReport {
    let stars: Vec<(Vec3, usize)> = constellation
        .stars()
        .iter()
        .map(|s| (s.root.to_unit_vector(), s.multiplicity))
        .collect();

    if let Some(axis) = common_axis(&stars, tol) {
        return SymmetryReport {
            cyclic_order: CyclicOrder::Infinite,
            axis: Some(axis),
            group_label: "C∞".to_string(),
        };
    }

    let candidates = candidate_axes(&stars, tol);
    let n = constellation.n();
    for k in (2..=n).rev() {
        let angle = std::f64::consts::TAU / k as f64;
        let best = candidates
            .iter()
            .filter(|axis| maps_onto_itself(&stars, **axis, angle, tol))
            .max_by(|a, b| axis_key_cmp(a, b));
        if let Some(axis) = best {
            return SymmetryReport {
                cyclic_order: CyclicOrder::Finite(k),
                axis: Some(*axis),
                group_label: format!("C{k}"),
            };
        }
    }
    SymmetryReport::trivial()
}

/// The axis through every star, if the stars are at most one antipodal pair.
fn common_axis(stars: &[(Vec3, usize)], tol: f64) -> Option<Vec3> {
    let first = stars[0].0;
    let on_axis = stars.iter().all(|(v, _)| {
        sphere::distance(*v, first) <= tol || sphere::distance(*v, sphere::scale(first, -1.0)) <= tol
    });
    if on_axis {
        canonical_axis(first)
    } else {
        None
    }
}

fn candidate_axes(stars: &[(Vec3, usize)], tol: f64) -> Vec<Vec3> {
    let mut raw = Vec::new();
    let vs: Vec<Vec3> = stars.iter().map(|s| s.0).collect();
    for (i, a) in vs.iter().enumerate() {
        raw.push(*a);
        for (j, b) in vs.iter().enumerate().skip(i + 1) {
            raw.push(sphere::add(*a, *b));
            raw.push(sphere::cross(*a, *b));
            for c in vs.iter().skip(j + 1) {
                raw.push(sphere::cross(sphere::sub(*b, *a), sphere::sub(*c, *a)));
            }
        }
    }
    let centroid = stars
        .iter()
        .fold([0.0; 3], |acc, (v, m)| sphere::add(acc, sphere::scale(*v, *m as f64)));
    raw.push(centroid);

    let mut axes: Vec<Vec3> = Vec::new();
    for v in raw.into_iter().filter_map(canonical_axis) {
        if !axes.iter().any(|a| sphere::distance(*a, v) <= tol.min(1e-9)) {
            axes.push(v);
        }
    }
    axes
}

fn maps_onto_itself(stars: &[(Vec3, usize)], axis: Vec3, angle: f64, tol: f64) -> bool {
    stars.iter().all(|(v, m)| {
        let image = sphere::rotate_vector(*v, axis, angle);
        stars
            .iter()
            .any(|(w, mw)| mw == m && sphere::distance(image, *w) <= tol)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntanglementClass {
    Separable,
    W,
    Ghz,
    Generic3,
    Separable4,
    W4,
    W2x2,
    Ghz4,
    TwoOneOne,
    Generic4,
}

impl EntanglementClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Separable => "Separable",
            Self::W => "W",
            Self::Ghz => "GHZ",
            Self::Generic3 => "Generic3",
            Self::Separable4 => "Separable4",
            Self::W4 => "W4",
            Self::W2x2 => "W2x2",
            Self::Ghz4 => "GHZ4",
            Self::TwoOneOne => "TwoOneOne",
            Self::Generic4 => "Generic4",
        }
    }

    pub fn is_separable(&self) -> bool {
        matches!(self, Self::Separable | Self::Separable4)
    }
}

impl fmt::Display for EntanglementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassReport {
    pub class: EntanglementClass,
    pub partition: MultiplicityPartition,
    pub symmetry: SymmetryReport,
    /// Group label by partition: `e` for one star, `C2` when two stars
    /// coincide, `C3` for a three-fold triangle, else the geometric label.
    pub group: String,
    pub depressed: DepressedForm,
    /// Whether the depressed form was taken after the fixed pre-rotation.
    pub pre_rotated: bool,
    /// GHZ with `|q| = 1` in the monic depressed cubic.
    pub max_ghz: bool,
    pub constellation: Constellation,
}

/// Relative threshold for the depressed-form cross-check.
const CROSS_CHECK_TOL: f64 = 1e-8;

/// Classifies a 3- or 4-qubit state.
///
/// The label comes from the multiplicity partition; for distinct roots it is
/// refined by the depressed form (`p = 0` at `n = 3`, `p = q = 0` at `n = 4`).
/// The label is then checked against the depressed-form conditions evaluated
/// on the clustered constellation, and against the raw polynomial.
pub fn classify_state(state: &SymmetricState, tol: f64) -> Result<ClassReport> {
    let n = state.n();
    if n != 3 && n != 4 {
        return Err(StellarError::UnsupportedQubits(n));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(StellarError::InvalidTolerance(tol));
    }
    let poly = to_polynomial(state);
    let constellation = find_roots(&poly, tol)?;
    let partition = partition(&constellation);
    let symmetry = detect_cyclic_symmetry(&constellation, tol);

    let (chart_poly, chart_stars, pre_rotated) = if poly.leading_vanishes() {
        let rot = pre_rotation();
        (rotate_polynomial(&poly, &rot), constellation.rotated(&rot), true)
    } else {
        (poly, constellation.clone(), false)
    };
    let depressed = DepressedForm::of(&chart_poly)?;
    let roots: Vec<Complex64> = chart_stars
        .expanded_roots()
        .iter()
        .map(|r| r.as_finite().ok_or(StellarError::StarAtInfinity))
        .collect::<Result<_>>()?;

    let (p, q) = (depressed.p(), depressed.q());
    let class = match (n, partition.parts()) {
        (3, [3]) => EntanglementClass::Separable,
        (3, [2, 1]) => EntanglementClass::W,
        (3, _) if p.norm() <= tol * q.norm().max(1.0) => EntanglementClass::Ghz,
        (3, _) => EntanglementClass::Generic3,
        (_, [4]) => EntanglementClass::Separable4,
        (_, [3, 1]) => EntanglementClass::W4,
        (_, [2, 2]) => EntanglementClass::W2x2,
        (_, [2, 1, 1]) => EntanglementClass::TwoOneOne,
        _ => {
            let r = depressed.r().unwrap_or_default().norm();
            if p.norm() <= tol * r.sqrt().max(1.0) && q.norm() <= tol * r.powf(0.75).max(1.0) {
                EntanglementClass::Ghz4
            } else {
                EntanglementClass::Generic4
            }
        }
    };

    cross_check(class, &chart_poly, &roots, tol)?;

    let geometric_three = symmetry.cyclic_order == CyclicOrder::Finite(3);
    let group = match (n, partition.parts()) {
        (_, [_]) => "e".to_string(),
        (3, [2, 1]) | (4, [3, 1]) | (4, [2, 2]) => "C2".to_string(),
        (3, [1, 1, 1]) if geometric_three => "C3".to_string(),
        _ => symmetry.group_label.clone(),
    };
    let max_ghz = class == EntanglementClass::Ghz && (q.norm() - 1.0).abs() <= tol;

    Ok(ClassReport {
        class,
        partition,
        symmetry,
        group,
        depressed,
        pre_rotated,
        max_ghz,
        constellation,
    })
}

/// Depressed-form conditions recomputed from the clustered roots, in a scale
/// where the largest of `|p|^(1/2)`, `|q|^(1/3)`, `|r|^(1/4)` is one.
fn cross_check(
    class: EntanglementClass,
    poly: &crate::majorana::MajoranaPolynomial,
    roots: &[Complex64],
    tol: f64,
) -> Result<()> {
    let n = roots.len();
    let fail = |what: &str| {
        Err(StellarError::Inconsistent(format!(
            "{} label disagrees with depressed form: {what}",
            class.as_str()
        )))
    };

    // the clustered constellation must reproduce the polynomial
    let scale = 1.0 + roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let refit = expand(roots);
    let monic = crate::depressed::monic_coefficients(poly)?;
    for k in 0..n {
        let allowed = tol * crate::state::binomial(n, k) * scale.powi((n - k) as i32);
        if (refit[k] - monic[k]).norm() > allowed {
            return fail("clustered roots do not reproduce the polynomial");
        }
    }

    let mean = roots.iter().sum::<Complex64>() / n as f64;
    let centered: Vec<Complex64> = roots.iter().map(|r| r - mean).collect();
    let e = expand(&centered);
    let p = e[n - 2];
    let q = e[n - 3];
    let r = if n == 4 { e[0] } else { Complex64::new(0.0, 0.0) };
    let s = p.norm().sqrt().max(q.norm().cbrt()).max(r.norm().sqrt().sqrt());
    let degenerate = s <= 1e-9 * scale;
    if degenerate {
        return if class.is_separable() {
            Ok(())
        } else {
            fail("all roots coincide")
        };
    }
    if class.is_separable() {
        return fail("roots are not all equal");
    }
    let (p, q, r) = (p / s.powi(2), q / s.powi(3), r / s.powi(4));
    let small = |z: Complex64| z.norm() <= CROSS_CHECK_TOL.max(tol);
    let ok = match class {
        EntanglementClass::W => {
            let d = -4.0 * p.powu(3) - 27.0 * q * q;
            d.norm() <= tol.powi(2).max(1e-12) * (4.0 * p.norm().powi(3) + 27.0 * q.norm_sqr())
        }
        EntanglementClass::Ghz => small(p) && !small(q),
        EntanglementClass::W4 => small(q * q + 8.0 * p.powu(3) / 27.0) && small(r + p * p / 12.0),
        EntanglementClass::W2x2 => small(q) && small(r - p * p / 4.0),
        EntanglementClass::TwoOneOne => {
            quartic_discriminant(p, q, r).norm() <= tol.powi(2).max(1e-12) * 256.0
        }
        EntanglementClass::Ghz4 => small(p) && small(q) && !small(r),
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        fail("multiplicity conditions not met")
    }
}

/// Monic polynomial with the given roots, ascending, leading 1 included.
fn expand(roots: &[Complex64]) -> Vec<Complex64> {
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] -= c * r;
            next[k + 1] += c;
        }
        poly = next;
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorana::{from_constellation, Star};
    use crate::sphere::{Root, SphereRotation};
    use std::f64::consts::TAU;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn state(n: usize, coeffs: &[f64]) -> SymmetricState {
        SymmetricState::normalized(n, coeffs.iter().map(|&x| c(x)).collect()).unwrap()
    }

    fn from_stars(stars: &[(Root, usize)]) -> SymmetricState {
        let stars = stars
            .iter()
            .map(|&(root, multiplicity)| Star { root, multiplicity })
            .collect();
        from_constellation(&Constellation::new(stars).unwrap()).unwrap()
    }

    #[test]
    fn ghz3_is_ghz_with_c3() {
        let r = classify_state(&state(3, &[1.0, 0.0, 0.0, 1.0]), DEFAULT_TOL).unwrap();
        assert_eq!(r.class, EntanglementClass::Ghz);
        assert_eq!(r.group, "C3");
        assert_eq!(r.partition.parts(), &[1, 1, 1]);
        assert_eq!(r.symmetry.cyclic_order, CyclicOrder::Finite(3));
        let axis = r.symmetry.axis.unwrap();
        assert!(sphere::distance(axis, [0.0, 0.0, 1.0]) < 1e-12);
        assert!(r.max_ghz);
    }

    #[test]
    fn w3_is_w_with_c2() {
        // (|001> + |010> + |100>) / sqrt 3 has two zeros per term
        let r = classify_state(&state(3, &[0.0, 0.0, 1.0, 0.0]), DEFAULT_TOL).unwrap();
        assert_eq!(r.class, EntanglementClass::W);
        assert_eq!(r.group, "C2");
        assert_eq!(r.partition.to_string(), "[2,1]");
        assert_eq!(r.constellation.stars().len(), 2);
        assert!(r.pre_rotated);
    }

    #[test]
    fn all_zeros_four_qubits_is_separable() {
        let r = classify_state(&state(4, &[0.0, 0.0, 0.0, 0.0, 1.0]), DEFAULT_TOL).unwrap();
        assert_eq!(r.class, EntanglementClass::Separable4);
        assert_eq!(r.symmetry.cyclic_order, CyclicOrder::Infinite);
        assert_eq!(r.symmetry.group_label, "C∞");
        assert_eq!(r.group, "e");
    }

    #[test]
    fn four_qubit_labels() {
        let a = Root::finite(0.4, 0.1);
        let b = Root::finite(-1.2, 0.7);
        let cases = [
            (vec![(a, 3), (b, 1)], EntanglementClass::W4),
            (vec![(a, 2), (b, 2)], EntanglementClass::W2x2),
            (vec![(a, 2), (b, 1), (Root::Infinity, 1)], EntanglementClass::TwoOneOne),
            (
                vec![(a, 1), (b, 1), (Root::Infinity, 1), (Root::finite(2.0, 0.0), 1)],
                EntanglementClass::Generic4,
            ),
        ];
        for (stars, want) in cases {
            let r = classify_state(&from_stars(&stars), DEFAULT_TOL).unwrap();
            assert_eq!(r.class, want);
        }
        let ghz4 = state(4, &[1.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(classify_state(&ghz4, DEFAULT_TOL).unwrap().class, EntanglementClass::Ghz4);
    }

    #[test]
    fn unsupported_qubit_count() {
        let err = classify_state(&state(2, &[1.0, 0.0, 1.0]), DEFAULT_TOL).unwrap_err();
        assert_eq!(err, StellarError::UnsupportedQubits(2));
        assert!(err.to_string().contains("classification table defined for 3 and 4 qubits"));
    }

    #[test]
    fn triangle_symmetry_survives_rotation() {
        let ghz = Constellation::from_roots(
            &(0..3)
                .map(|k| Root::Finite(Complex64::from_polar(1.0, TAU * k as f64 / 3.0)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let rot = SphereRotation::from_euler(1.0, 0.6, 2.0);
        let report = detect_cyclic_symmetry(&ghz.rotated(&rot), DEFAULT_TOL);
        assert_eq!(report.cyclic_order, CyclicOrder::Finite(3));
    }

    #[test]
    fn square_has_order_four_and_pair_has_order_two() {
        let square = Constellation::from_roots(&[
            Root::finite(1.0, 0.0),
            Root::finite(0.0, 1.0),
            Root::finite(-1.0, 0.0),
            Root::finite(0.0, -1.0),
        ])
        .unwrap();
        assert_eq!(
            detect_cyclic_symmetry(&square, DEFAULT_TOL).cyclic_order,
            CyclicOrder::Finite(4)
        );
        let pair =
            Constellation::from_roots(&[Root::finite(1.0, 0.0), Root::finite(0.0, 1.0)]).unwrap();
        let report = detect_cyclic_symmetry(&pair, DEFAULT_TOL);
        assert_eq!(report.cyclic_order, CyclicOrder::Finite(2));
    }

    #[test]
    fn antipodal_w_is_collinear_generic_w_is_trivial() {
        let w = Constellation::new(vec![
            Star { root: Root::finite(0.0, 0.0), multiplicity: 2 },
            Star { root: Root::Infinity, multiplicity: 1 },
        ])
        .unwrap();
        assert_eq!(
            detect_cyclic_symmetry(&w, DEFAULT_TOL).cyclic_order,
            CyclicOrder::Infinite
        );
        let tilted = Constellation::new(vec![
            Star { root: Root::finite(0.0, 0.0), multiplicity: 2 },
            Star { root: Root::finite(1.0, 0.0), multiplicity: 1 },
        ])
        .unwrap();
        assert_eq!(detect_cyclic_symmetry(&tilted, DEFAULT_TOL).group_label, "e");
    }

    #[test]
    fn perturbed_w_keeps_or_loses_its_label() {
        let origin = Root::finite(0.0, 0.0);
        let far = Root::finite(0.7, -0.3);
        // a small plane offset near the origin is half of its chordal size
        let near = |chordal: f64| Root::finite(chordal / 2.0, 0.0);
        let keep = from_stars(&[(origin, 1), (near(0.4 * DEFAULT_TOL), 1), (far, 1)]);
        assert_eq!(classify_state(&keep, DEFAULT_TOL).unwrap().class, EntanglementClass::W);
        let split = from_stars(&[(origin, 1), (near(20.0 * DEFAULT_TOL), 1), (far, 1)]);
        assert_eq!(
            classify_state(&split, DEFAULT_TOL).unwrap().class,
            EntanglementClass::Generic3
        );
    }
}
