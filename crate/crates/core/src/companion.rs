//! Eigenvalues of a monic polynomial's companion matrix by shifted complex
//! QR iteration on the (already Hessenberg) balanced companion form.

use num_complex::Complex64;

use crate::error::{Result, StellarError};

const MAX_ITER_PER_EIGENVALUE: usize = 120;

/// Roots of `z^d + b[d-1] z^{d-1} + ... + b[0]`, given `b` of length `d`.
pub(crate) fn monic_roots(b: &[Complex64]) -> Result<Vec<Complex64>> {
    let d = b.len();
    match d {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![-b[0]]),
        _ => {}
    }
    let mut h = vec![vec![Complex64::new(0.0, 0.0); d]; d];
    for i in 1..d {
        h[i][i - 1] = Complex64::new(1.0, 0.0);
    }
    for (i, row) in h.iter_mut().enumerate() {
        row[d - 1] = -b[i];
    }
    balance(&mut h);
    hessenberg_eigenvalues(h).ok_or(StellarError::NoConvergence { degree: d })
}

/// Parlett-Reinsch balancing by powers of two; preserves the Hessenberg shape.
fn balance(h: &mut [Vec<Complex64>]) {
    let d = h.len();
    let radix = 2.0f64;
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..d {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..d {
                if j != i {
                    col += h[j][i].l1_norm();
                    row += h[i][j].l1_norm();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let total = col + row;
            let mut f = 1.0;
            let mut g = row / radix;
            while col < g {
                f *= radix;
                col *= radix * radix;
            }
            g = row * radix;
            while col > g {
                f /= radix;
                col /= radix * radix;
            }
            if (col + row) / f < 0.95 * total {
                converged = false;
                for j in 0..d {
                    h[i][j] /= f;
                }
                for row_j in h.iter_mut() {
                    row_j[i] *= f;
                }
            }
        }
    }
}

fn hessenberg_eigenvalues(mut h: Vec<Vec<Complex64>>) -> Option<Vec<Complex64>> {
    let d = h.len();
    let mut eig = vec![Complex64::new(0.0, 0.0); d];
    let mut hi = d as isize - 1;
    let mut iter = 0usize;
    let mut total_iter = 0usize;
    while hi >= 0 {
        let hi_u = hi as usize;
        // locate the start of the active unreduced block
        let mut lo = hi_u;
        while lo > 0 {
            let off = h[lo][lo - 1].l1_norm();
            let diag = h[lo][lo].l1_norm() + h[lo - 1][lo - 1].l1_norm();
            if off <= f64::EPSILON * diag || off < f64::MIN_POSITIVE {
                h[lo][lo - 1] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi_u {
            eig[hi_u] = h[hi_u][hi_u];
            hi -= 1;
            iter = 0;
            continue;
        }
        if lo + 1 == hi_u {
            let (l1, l2) = eig2(
                h[lo][lo],
                h[lo][hi_u],
                h[hi_u][lo],
                h[hi_u][hi_u],
            );
            eig[lo] = l1;
            eig[hi_u] = l2;
            hi -= 2;
            iter = 0;
            continue;
        }
        iter += 1;
        total_iter += 1;
        if total_iter > MAX_ITER_PER_EIGENVALUE * d {
            return None;
        }
        let shift = if iter % 11 == 0 {
            // exceptional shift to break cycles
            h[hi_u][hi_u] + Complex64::new(0.75 * h[hi_u][hi_u - 1].norm(), 0.0)
        } else {
            let (l1, l2) = eig2(
                h[hi_u - 1][hi_u - 1],
                h[hi_u - 1][hi_u],
                h[hi_u][hi_u - 1],
                h[hi_u][hi_u],
            );
            if (l1 - h[hi_u][hi_u]).norm() <= (l2 - h[hi_u][hi_u]).norm() {
                l1
            } else {
                l2
            }
        };
        qr_step(&mut h, lo, hi_u, shift);
    }
    Some(eig)
}

/// Eigenvalues of `[[a, b], [c, d]]`.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let half_tr = (a + d) * 0.5;
    let diff = (a - d) * 0.5;
    let disc = (diff * diff + b * c).sqrt();
    let l1 = half_tr + disc;
    let l2 = half_tr - disc;
    // recover the smaller one from the determinant when cancellation bites
    let det = a * d - b * c;
    if l1.norm() >= l2.norm() && l1.norm() > 0.0 {
        (l1, det / l1)
    } else if l2.norm() > 0.0 {
        (det / l2, l2)
    } else {
        (l1, l2)
    }
}

/// One shifted QR sweep on the block `lo..=hi` via Givens rotations.
fn qr_step(h: &mut [Vec<Complex64>], lo: usize, hi: usize, shift: Complex64) {
    for k in lo..=hi {
        h[k][k] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let x = h[k][k];
        let y = h[k + 1][k];
        let (c, s) = givens(x, y);
        for j in k..=hi {
            let top = h[k][j];
            let bottom = h[k + 1][j];
            h[k][j] = top * c + s * bottom;
            h[k + 1][j] = -s.conj() * top + bottom * c;
        }
        rotations.push((c, s));
    }
    for (offset, (c, s)) in rotations.into_iter().enumerate() {
        let k = lo + offset;
        let last = (k + 2).min(hi);
        for row in h.iter_mut().take(last + 1).skip(lo) {
            let left = row[k];
            let right = row[k + 1];
            row[k] = left * c + right * s.conj();
            row[k + 1] = -left * s + right * c;
        }
    }
    for k in lo..=hi {
        h[k][k] += shift;
    }
}

/// `(c, s)` with real `c` such that `[[c, s], [-conj(s), c]] [x; y] = [r; 0]`.
fn givens(x: Complex64, y: Complex64) -> (f64, Complex64) {
    let ax = x.norm();
    let ay = y.norm();
    if ay == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    if ax == 0.0 {
        return (0.0, y.conj() / ay);
    }
    let r = ax.hypot(ay);
    (ax / r, (x / ax) * y.conj() / r)
}
