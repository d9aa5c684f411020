//! The Majorana polynomial of a symmetric state, its roots, and the
//! constellation of stars they define on the Bloch sphere.
//!
//! For `n` qubits with Dicke coefficients `c_l`, the polynomial is
//! `P(e) = sum_l (-1)^l sqrt(C(n, l)) c_l e^l`. Each root `e` is a star at
//! `beta = 2 atan|e|`, `alpha = arg e`; when the top coefficients vanish the
//! missing roots are stars at infinity (the `|1>` pole).

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::companion::monic_roots;
use crate::error::{Result, StellarError};
use crate::sphere::{self, Root, SphereRotation, Vec3};
use crate::state::{binomial, Spinor, SymmetricState};

/// Default chordal tolerance under which roots are merged into one star.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

/// `|a_l| / max|a|` below this counts as zero for the top coefficients.
pub const DEGREE_DROP_TOL: f64 = 1e-12;

const NEWTON_POLISH_STEPS: usize = 2;

/// Rounding allowance per coefficient, in units of `eps * max|a|`, when
/// testing whether a group of roots is one multiple root.
const NOISE_FACTOR: f64 = 4.0;

/// Coarsest linkage distance used when searching for multiple roots.
const COARSE_LINKAGE: f64 = 1e-2;

/// `(-1)^l sqrt(C(n, l))`.
pub fn majorana_weight(n: usize, l: usize) -> f64 {
    let w = binomial(n, l).sqrt();
    if l % 2 == 0 {
        w
    } else {
        -w
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaPolynomial {
    n: usize,
    coeffs: Vec<Complex64>,
}

impl MajoranaPolynomial {
    /// `coeffs[l]` is the coefficient of `e^l`; there must be `n + 1` of them.
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
            return Err(StellarError::ZeroPolynomial);
        }
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest `l` whose coefficient survives the degree-drop threshold.
    pub fn effective_degree(&self) -> usize {
        let cutoff = DEGREE_DROP_TOL * self.max_abs();
        (0..=self.n)
            .rev()
            .find(|&l| self.coeffs[l].norm() > cutoff)
            .unwrap_or(0)
    }

    pub fn infinity_count(&self) -> usize {
        self.n - self.effective_degree()
    }

    /// True when the `e^n` coefficient is treated as zero.
    pub fn leading_vanishes(&self) -> bool {
        self.effective_degree() < self.n
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// The Dicke coefficients this polynomial encodes, normalized.
    pub fn to_state(&self) -> Result<SymmetricState> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(l, a)| a / majorana_weight(self.n, l))
            .collect();
        SymmetricState::normalized(self.n, coeffs)
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `a_l = (-1)^l sqrt(C(n, l)) c_l`.
pub fn to_polynomial(state: &SymmetricState) -> MajoranaPolynomial {
    let n = state.n();
    let coeffs = state
        .coeffs()
        .iter()
        .enumerate()
        .map(|(l, c)| c * majorana_weight(n, l))
        .collect();
    MajoranaPolynomial { n, coeffs }
}

/// A star of the constellation: a root of the Majorana polynomial and its
/// multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Star {
    pub root: Root,
    pub multiplicity: usize,
}

impl Star {
    pub fn spinor(&self) -> Spinor {
        root_to_spinor(&self.root)
    }
}

/// A multiset of points on the extended complex plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    n: usize,
    stars: Vec<Star>,
}

impl Constellation {
    /// Stars with explicit multiplicities. Distinct stars are expected to be
    /// farther apart than the clustering tolerance; this is not checked.
    pub fn new(stars: Vec<Star>) -> Result<Self> {
        let stars: Vec<Star> = stars.into_iter().filter(|s| s.multiplicity > 0).collect();
        if stars.is_empty() {
            return Err(StellarError::EmptyConstellation);
        }
        let n = stars.iter().map(|s| s.multiplicity).sum();
        Ok(Self { n, stars })
    }

    /// One star per entry, merging entries that are exactly equal.
    pub fn from_roots(roots: &[Root]) -> Result<Self> {
        let mut stars: Vec<Star> = Vec::new();
        for r in roots {
            match stars.iter_mut().find(|s| s.root == *r) {
                Some(s) => s.multiplicity += 1,
                None => stars.push(Star {
                    root: *r,
                    multiplicity: 1,
                }),
            }
        }
        Self::new(stars)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    /// Multiplicities in descending order.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.stars.iter().map(|s| s.multiplicity).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    /// Every root repeated by its multiplicity.
    pub fn expanded_roots(&self) -> Vec<Root> {
        self.stars
            .iter()
            .flat_map(|s| std::iter::repeat(s.root).take(s.multiplicity))
            .collect()
    }

    pub fn has_infinity(&self) -> bool {
        self.stars.iter().any(|s| s.root.is_infinite())
    }

    /// Applies the same sphere rotation to every star.
    pub fn rotated(&self, rotation: &SphereRotation) -> Self {
        Self {
            n: self.n,
            stars: self
                .stars
                .iter()
                .map(|s| Star {
                    root: rotation.apply_root(&s.root),
                    multiplicity: s.multiplicity,
                })
                .collect(),
        }
    }

    /// Translates every root by `-shift`. Undefined with a star at infinity.
    pub fn translated(&self, shift: Complex64) -> Result<Self> {
        let stars = self
            .stars
            .iter()
            .map(|s| match s.root {
                Root::Finite(z) => Ok(Star {
                    root: Root::Finite(z - shift),
                    multiplicity: s.multiplicity,
                }),
                Root::Infinity => Err(StellarError::StarAtInfinity),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n: self.n, stars })
    }

    /// Multiplicity-weighted mean of the roots, `None` with a star at infinity.
    pub fn centroid(&self) -> Option<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for s in &self.stars {
            sum += s.root.as_finite()? * s.multiplicity as f64;
        }
        Some(sum / self.n as f64)
    }

    pub fn spinors(&self) -> Vec<Spinor> {
        self.expanded_roots().iter().map(root_to_spinor).collect()
    }
}

/// Stereographic root to Bloch angles; infinity maps to `(0, pi)`.
pub fn root_to_spinor(root: &Root) -> Spinor {
    match root {
        Root::Infinity => Spinor::new(0.0, std::f64::consts::PI),
        Root::Finite(z) => Spinor::new(z.arg().rem_euclid(TAU), 2.0 * z.norm().atan()),
    }
}

/// `tan(beta/2) e^{i alpha}`, with `beta = pi` mapped to infinity.
pub fn spinor_to_root(spinor: &Spinor) -> Root {
    if spinor.beta >= std::f64::consts::PI {
        Root::Infinity
    } else {
        Root::Finite(Complex64::from_polar((0.5 * spinor.beta).tan(), spinor.alpha))
    }
}

/// Normalized state whose Majorana polynomial has exactly the constellation's
/// roots: the product of one linear factor per root, each scaled so its
/// coefficients stay bounded, then divided by the Majorana weights.
pub fn from_constellation(constellation: &Constellation) -> Result<SymmetricState> {
    let n = constellation.n();
    if n == 0 {
        return Err(StellarError::EmptyConstellation);
    }
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for root in constellation.expanded_roots() {
        // factor u*e - v with root v/u
        let (u, v) = match root {
            Root::Infinity => (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
            Root::Finite(r) if r.norm() <= 1.0 => (Complex64::new(1.0, 0.0), r),
            Root::Finite(r) => (r.inv(), Complex64::new(1.0, 0.0)),
        };
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] -= c * v;
            next[k + 1] += c * u;
        }
        poly = next;
    }
    MajoranaPolynomial::new(n, poly)?.to_state()
}

/// The polynomial whose roots are the images of this one's under `rotation`.
///
/// Exact coefficient arithmetic: with the homogeneous form
/// `F(x, y) = sum_l a_l x^(n-l) y^l`, the rotated form is
/// `F(u11 x - u01 y, u00 y - u10 x)`, up to a global phase.
pub fn rotate_polynomial(poly: &MajoranaPolynomial, rotation: &SphereRotation) -> MajoranaPolynomial {
    let n = poly.n();
    let u = rotation.u;
    let x = [u[1][1], -u[0][1]];
    let y = [-u[1][0], u[0][0]];
    let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
    for (l, a) in poly.coeffs().iter().enumerate() {
        if a.norm_sqr() == 0.0 {
            continue;
        }
        let mut term = vec![*a];
        for _ in 0..n - l {
            term = mul_linear(&term, x);
        }
        for _ in 0..l {
            term = mul_linear(&term, y);
        }
        for (k, t) in term.into_iter().enumerate() {
            out[k] += t;
        }
    }
    MajoranaPolynomial { n, coeffs: out }
}

fn mul_linear(p: &[Complex64], f: [Complex64; 2]) -> Vec<Complex64> {
    let mut next = vec![Complex64::new(0.0, 0.0); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        next[k] += c * f[0];
        next[k + 1] += c * f[1];
    }
    next
}

/// The state with every star moved by `rotation`.
pub fn rotate_state(state: &SymmetricState, rotation: &SphereRotation) -> Result<SymmetricState> {
    rotate_polynomial(&to_polynomial(state), rotation).to_state()
}

/// Stars of `state` at the given clustering tolerance.
pub fn constellation_of(state: &SymmetricState, cluster_tol: f64) -> Result<Constellation> {
    find_roots(&to_polynomial(state), cluster_tol)
}

/// All `n` roots of the polynomial, grouped into stars.
///
/// Finite roots come from the companion matrix, and simple ones are polished
/// by guarded Newton steps; coefficients dropped by the degree threshold become stars at
/// infinity. Grouping links roots within chordal distance `cluster_tol`, and
/// additionally accepts a wider group as one multiple root when the Taylor
/// coefficients of `P` at the group mean show every member within chordal
/// radius `cluster_tol / 2` of the mean, up to rounding noise. An m-fold root
/// under rounding splits by roughly `eps^(1/m)`, which plain linkage misses
/// for `m >= 3`. A star's position is the mean of its group in the
/// stereographic chart of its hemisphere.
pub fn find_roots(poly: &MajoranaPolynomial, cluster_tol: f64) -> Result<Constellation> {
    if !(cluster_tol > 0.0 && cluster_tol.is_finite()) {
        return Err(StellarError::InvalidTolerance(cluster_tol));
    }
    let a = poly.coeffs();
    if a.iter().all(|c| c.norm_sqr() == 0.0) {
        return Err(StellarError::ZeroPolynomial);
    }
    let n = poly.n();
    let degree = poly.effective_degree();
    let zero_roots = a[..degree].iter().take_while(|c| c.norm_sqr() == 0.0).count();

    let core = &a[zero_roots..=degree];
    let lead = core[core.len() - 1];
    let monic: Vec<Complex64> = core[..core.len() - 1].iter().map(|c| c / lead).collect();
    let finite = monic_roots(&monic)?;

    let mut members: Vec<Root> = finite.into_iter().map(Root::Finite).collect();
    members.extend(std::iter::repeat(Root::finite(0.0, 0.0)).take(zero_roots));
    members.extend(std::iter::repeat(Root::Infinity).take(n - degree));

    let mut stars = cluster(&members, a, cluster_tol);
    // Newton only helps simple roots; on a split multiple root it drifts
    for star in stars.iter_mut().filter(|s| s.multiplicity == 1) {
        if let Root::Finite(z) = star.root {
            if z.norm_sqr() != 0.0 {
                star.root = Root::Finite(polish(&a[..=degree], z));
            }
        }
    }
    sort_stars(&mut stars);
    Ok(Constellation { n, stars })
}

fn polish(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..NEWTON_POLISH_STEPS {
        let (p, dp) = horner_with_derivative(coeffs, z);
        if dp.norm_sqr() == 0.0 || p.norm_sqr() == 0.0 {
            break;
        }
        let candidate = z - p / dp;
        if !(candidate.re.is_finite() && candidate.im.is_finite()) {
            break;
        }
        if horner(coeffs, candidate).norm() < p.norm() {
            z = candidate;
        } else {
            break;
        }
    }
    z
}

fn sort_stars(stars: &mut [Star]) {
    let key = |s: &Star| {
        let v = s.root.to_unit_vector();
        (s.multiplicity, v[2], v[1].atan2(v[0]).rem_euclid(TAU))
    };
    stars.sort_by(|x, y| {
        let (mx, zx, ax) = key(x);
        let (my, zy, ay) = key(y);
        my.cmp(&mx)
            .then(zy.total_cmp(&zx))
            .then(ax.total_cmp(&ay))
    });
}

struct Clusterer<'a> {
    members: &'a [Root],
    vectors: Vec<Vec3>,
    coeffs: &'a [Complex64],
    tol: f64,
    levels: Vec<f64>,
    stars: Vec<Star>,
}

fn cluster(members: &[Root], coeffs: &[Complex64], tol: f64) -> Vec<Star> {
    let mut levels = Vec::new();
    let mut level = COARSE_LINKAGE;
    while level > tol {
        levels.push(level);
        level /= 10.0;
    }
    levels.push(tol);
    let mut c = Clusterer {
        members,
        vectors: members.iter().map(Root::to_unit_vector).collect(),
        coeffs,
        tol,
        levels,
        stars: Vec::new(),
    };
    c.resolve((0..members.len()).collect(), 0);
    c.stars
}

impl Clusterer<'_> {
    fn resolve(&mut self, group: Vec<usize>, level: usize) {
        let last = level + 1 == self.levels.len();
        for component in self.link(&group, self.levels[level]) {
            if component.len() == 1 || last || self.is_multiple_root(&component) {
                let star = self.merge(&component);
                self.stars.push(star);
            } else {
                self.resolve(component, level + 1);
            }
        }
    }

    /// Single-linkage components of `group` at chordal distance `threshold`.
    fn link(&self, group: &[usize], threshold: f64) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..group.len()).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while parent[r] != r {
                r = parent[r];
            }
            let mut j = i;
            while parent[j] != r {
                let next = parent[j];
                parent[j] = r;
                j = next;
            }
            r
        }
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                let d = sphere::distance(self.vectors[group[i]], self.vectors[group[j]]);
                if d <= threshold {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut root_slot: Vec<Option<usize>> = vec![None; group.len()];
        for i in 0..group.len() {
            let r = find(&mut parent, i);
            match root_slot[r] {
                Some(slot) => components[slot].push(group[i]),
                None => {
                    root_slot[r] = Some(components.len());
                    components.push(vec![group[i]]);
                }
            }
        }
        components
    }

    /// Chart for a group: the plane itself for the northern hemisphere,
    /// `1/e` for the southern one, so chart coordinates stay near the unit disc.
    fn chart(&self, group: &[usize]) -> Option<(bool, Vec<Complex64>)> {
        let sum = group
            .iter()
            .fold([0.0; 3], |acc, &i| sphere::add(acc, self.vectors[i]));
        let reciprocal = sum[2] < 0.0;
        let coords = group
            .iter()
            .map(|&i| {
                let r = if reciprocal {
                    self.members[i].recip()
                } else {
                    self.members[i]
                };
                r.as_finite()
            })
            .collect::<Option<Vec<_>>>()?;
        Some((reciprocal, coords))
    }

    fn is_multiple_root(&self, group: &[usize]) -> bool {
        let Some((reciprocal, coords)) = self.chart(group) else {
            return false;
        };
        let m = group.len();
        let z = coords.iter().sum::<Complex64>() / m as f64;
        let coeffs: Vec<Complex64> = if reciprocal {
            self.coeffs.iter().rev().copied().collect()
        } else {
            self.coeffs.to_vec()
        };
        let degree = coeffs.len() - 1;
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let noise = NOISE_FACTOR * (degree + 1) as f64 * f64::EPSILON * scale;
        let radius = 0.5 * self.tol * (1.0 + z.norm_sqr()) / 2.0;

        let taylor = |k: usize| -> (Complex64, f64) {
            let mut b = Complex64::new(0.0, 0.0);
            let mut bound = 0.0;
            for j in k..=degree {
                let w = binomial(j, k);
                let p = (j - k) as i32;
                b += coeffs[j] * w * z.powi(p);
                bound += w * z.norm().powi(p);
            }
            (b, bound)
        };
        let (lead, _) = taylor(m);
        (0..m).all(|k| {
            let (b, bound) = taylor(k);
            b.norm() <= noise * bound + lead.norm() * binomial(m, k) * radius.powi((m - k) as i32)
        })
    }

    fn merge(&self, group: &[usize]) -> Star {
        let multiplicity = group.len();
        if multiplicity == 1 {
            return Star {
                root: self.members[group[0]],
                multiplicity,
            };
        }
        let root = match self.chart(group) {
            Some((reciprocal, coords)) => {
                let mean = coords.iter().sum::<Complex64>() / multiplicity as f64;
                if reciprocal {
                    Root::Finite(mean).recip()
                } else {
                    Root::Finite(mean)
                }
            }
            None => {
                let sum = group
                    .iter()
                    .fold([0.0; 3], |acc, &i| sphere::add(acc, self.vectors[i]));
                sphere::normalize(sum)
                    .map(Root::from_unit_vector)
                    .unwrap_or(self.members[group[0]])
            }
        };
        Star { root, multiplicity }
    }
}

/// Smallest, over pairings of the two multisets, of the largest chordal
/// distance between paired roots. Exhaustive up to 8 roots, greedy beyond.
pub fn matching_distance(a: &[Root], b: &[Root]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let n = a.len();
    let d: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| x.chordal_distance(y)).collect())
        .collect();
    if n <= 8 {
        let mut best = f64::INFINITY;
        let mut perm: Vec<usize> = (0..n).collect();
        permute_min(&d, &mut perm, 0, 0.0, &mut best);
        best
    } else {
        let mut used = vec![false; n];
        let mut worst: f64 = 0.0;
        for row in &d {
            let (j, dist) = row
                .iter()
                .enumerate()
                .filter(|(j, _)| !used[*j])
                .min_by(|x, y| x.1.total_cmp(y.1))
                .map(|(j, v)| (j, *v))
                .unwrap();
            used[j] = true;
            worst = worst.max(dist);
        }
        worst
    }
}

fn permute_min(d: &[Vec<f64>], perm: &mut [usize], k: usize, so_far: f64, best: &mut f64) {
    if so_far >= *best {
        return;
    }
    if k == perm.len() {
        *best = so_far;
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        let step = so_far.max(d[k][perm[k]]);
        permute_min(d, perm, k + 1, step, best);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{expand, fidelity, symmetrize_spinors};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn ghz3() -> SymmetricState {
        SymmetricState::normalized(3, vec![c(1.0), c(0.0), c(0.0), c(1.0)]).unwrap()
    }

    fn cube_roots() -> Vec<Root> {
        (0..3)
            .map(|k| Root::Finite(Complex64::from_polar(1.0, TAU * k as f64 / 3.0)))
            .collect()
    }

    #[test]
    fn ghz_polynomial_is_one_minus_cube() {
        let p = to_polynomial(&ghz3());
        let want = [FRAC_1_SQRT_2, 0.0, 0.0, -FRAC_1_SQRT_2];
        for (a, w) in p.coeffs().iter().zip(want) {
            assert!((a - c(w)).norm() < 1e-15);
        }
    }

    #[test]
    fn all_zeros_product_is_triple_root_at_origin() {
        let s = SymmetricState::normalized(3, vec![c(0.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        let stars = constellation_of(&s, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(stars.stars().len(), 1);
        assert_eq!(stars.stars()[0].multiplicity, 3);
        assert_eq!(stars.stars()[0].root, Root::finite(0.0, 0.0));
    }

    #[test]
    fn ghz_roots_are_cube_roots_of_unity() {
        let stars = constellation_of(&ghz3(), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(stars.multiplicities(), vec![1, 1, 1]);
        assert!(matching_distance(&stars.expanded_roots(), &cube_roots()) < 1e-12);
    }

    #[test]
    fn triple_root_at_one() {
        // (1 - e)^3 = 1 - 3e + 3e^2 - e^3
        let p = MajoranaPolynomial::new(3, vec![c(1.0), c(-3.0), c(3.0), c(-1.0)]).unwrap();
        let stars = find_roots(&p, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(stars.multiplicities(), vec![3]);
        assert!(stars.stars()[0].root.chordal_distance(&Root::finite(1.0, 0.0)) < 1e-9);
    }

    #[test]
    fn degree_drop_gives_stars_at_infinity() {
        let p = MajoranaPolynomial::new(3, vec![c(0.5), c(2.0), c(0.0), c(0.0)]).unwrap();
        let stars = find_roots(&p, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(stars.n(), 3);
        assert_eq!(stars.multiplicities(), vec![2, 1]);
        let inf = stars.stars().iter().find(|s| s.root.is_infinite()).unwrap();
        assert_eq!(inf.multiplicity, 2);

        // the same constellation from two spinors at the |1> pole
        let finite = stars.stars().iter().find(|s| !s.root.is_infinite()).unwrap();
        let spinors = [finite.spinor(), Spinor::new(0.0, PI), Spinor::new(0.0, PI)];
        let direct = symmetrize_spinors(&spinors).unwrap();
        let p_state = p.to_state().unwrap();
        assert!((fidelity(&expand(&direct), &expand(&p_state)).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(
            MajoranaPolynomial::new(2, vec![c(0.0); 3]),
            Err(StellarError::ZeroPolynomial)
        );
        let p = MajoranaPolynomial::new(1, vec![c(1.0), c(1.0)]).unwrap();
        assert!(matches!(
            find_roots(&p, 0.0),
            Err(StellarError::InvalidTolerance(_))
        ));
    }

    #[test]
    fn root_to_spinor_examples() {
        let s = root_to_spinor(&Root::finite(0.0, 0.0));
        assert_eq!((s.alpha, s.beta), (0.0, 0.0));
        let s = root_to_spinor(&Root::finite(1.0, 0.0));
        assert!(s.alpha.abs() < 1e-15 && (s.beta - FRAC_PI_2).abs() < 1e-15);
        let s = root_to_spinor(&Root::Finite(Complex64::from_polar(1.0, TAU / 3.0)));
        assert!((s.alpha - TAU / 3.0).abs() < 1e-15 && (s.beta - FRAC_PI_2).abs() < 1e-15);
        let s = root_to_spinor(&Root::Infinity);
        assert_eq!((s.alpha, s.beta), (0.0, PI));
    }

    #[test]
    fn from_constellation_ghz_and_product() {
        let ghz = from_constellation(&Constellation::from_roots(&cube_roots()).unwrap()).unwrap();
        assert!((fidelity(&expand(&ghz), &expand(&ghz3())).unwrap() - 1.0).abs() < 1e-14);

        let zero = Constellation::new(vec![Star {
            root: Root::finite(0.0, 0.0),
            multiplicity: 3,
        }])
        .unwrap();
        let product = from_constellation(&zero).unwrap();
        assert!((product.coeffs()[3].norm() - 1.0).abs() < 1e-15);

        assert_eq!(
            Constellation::new(vec![]),
            Err(StellarError::EmptyConstellation)
        );
    }

    #[test]
    fn w_state_has_double_star_at_origin_and_one_at_infinity() {
        let w = SymmetricState::normalized(3, vec![c(0.0), c(0.0), c(1.0), c(0.0)]).unwrap();
        let stars = constellation_of(&w, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(stars.multiplicities(), vec![2, 1]);
        assert_eq!(stars.stars()[0].root, Root::finite(0.0, 0.0));
        assert_eq!(stars.stars()[1].root, Root::Infinity);
    }

    #[test]
    fn quadruple_root_off_the_axis_is_one_star() {
        let r = Root::finite(0.4, -0.9);
        let s = from_constellation(&Constellation::new(vec![Star { root: r, multiplicity: 4 }]).unwrap())
            .unwrap();
        let stars = constellation_of(&s, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(stars.multiplicities(), vec![4]);
        assert!(stars.stars()[0].root.chordal_distance(&r) < 1e-9);
    }

    #[test]
    fn close_but_distinct_roots_stay_apart() {
        let base = Complex64::new(0.3, 0.2);
        let roots = [
            Root::Finite(base),
            Root::Finite(base + 1e-4),
            Root::finite(-2.0, 1.0),
        ];
        let s = from_constellation(&Constellation::from_roots(&roots).unwrap()).unwrap();
        let stars = constellation_of(&s, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(stars.multiplicities(), vec![1, 1, 1]);
        assert!(matching_distance(&stars.expanded_roots(), &roots) < 1e-9);
    }

    #[test]
    fn rotated_polynomial_moves_roots_by_mobius() {
        let rot = SphereRotation::from_euler(0.3, 2.1, -0.8);
        let roots = [Root::finite(0.2, 0.5), Root::Infinity, Root::finite(-1.5, 0.1)];
        let s = from_constellation(&Constellation::from_roots(&roots).unwrap()).unwrap();
        let moved = constellation_of(&rotate_state(&s, &rot).unwrap(), DEFAULT_CLUSTER_TOL).unwrap();
        let want: Vec<Root> = roots.iter().map(|r| rot.apply_root(r)).collect();
        assert!(matching_distance(&moved.expanded_roots(), &want) < 1e-10);
    }

    #[test]
    fn matching_distance_ignores_order() {
        let a = [Root::finite(1.0, 0.0), Root::Infinity, Root::finite(0.0, 0.0)];
        let b = [Root::finite(0.0, 0.0), Root::finite(1.0, 0.0), Root::Infinity];
        assert_eq!(matching_distance(&a, &b), 0.0);
    }
}
