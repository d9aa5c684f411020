//! The extended complex plane as the Riemann sphere: stereographic
//! coordinates, the chordal metric, and sphere rotations acting on roots.

use std::fmt;

use num_complex::Complex64;

pub type Vec3 = [f64; 3];

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Root {
    Finite(Complex64),
    Infinity,
}

impl Root {
    pub fn finite(re: f64, im: f64) -> Self {
        Root::Finite(Complex64::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Root::Infinity)
    }

    pub fn as_finite(&self) -> Option<Complex64> {
        match self {
            Root::Finite(z) => Some(*z),
            Root::Infinity => None,
        }
    }

    /// `1/z`, exchanging 0 and infinity.
    pub fn recip(&self) -> Self {
        match self {
            Root::Infinity => Root::finite(0.0, 0.0),
            Root::Finite(z) if z.norm_sqr() == 0.0 => Root::Infinity,
            Root::Finite(z) => Root::Finite(z.inv()),
        }
    }

    /// Inverse stereographic projection: `z = (x + iy) / (1 + z3)`, with
    /// infinity at the south pole `(0, 0, -1)`.
    pub fn to_unit_vector(&self) -> Vec3 {
        match self {
            Root::Infinity => [0.0, 0.0, -1.0],
            Root::Finite(z) => {
                let r2 = z.norm_sqr();
                if !r2.is_finite() {
                    return [0.0, 0.0, -1.0];
                }
                let d = 1.0 + r2;
                [2.0 * z.re / d, 2.0 * z.im / d, (1.0 - r2) / d]
            }
        }
    }

    pub fn from_unit_vector(v: Vec3) -> Self {
        let denom = 1.0 + v[2];
        if denom <= 1e-300 {
            Root::Infinity
        } else {
            Root::finite(v[0] / denom, v[1] / denom)
        }
    }

    /// Chordal distance `2|a-b| / sqrt((1+|a|^2)(1+|b|^2))`, extended to infinity.
    pub fn chordal_distance(&self, other: &Root) -> f64 {
        match (self, other) {
            (Root::Infinity, Root::Infinity) => 0.0,
            (Root::Finite(a), Root::Infinity) | (Root::Infinity, Root::Finite(a)) => {
                2.0 / (1.0 + a.norm_sqr()).sqrt()
            }
            (Root::Finite(a), Root::Finite(b)) => {
                2.0 * (a - b).norm() / ((1.0 + a.norm_sqr()) * (1.0 + b.norm_sqr())).sqrt()
            }
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Infinity => write!(f, "inf"),
            Root::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub fn distance(a: Vec3, b: Vec3) -> f64 {
    norm(sub(a, b))
}

pub fn normalize(a: Vec3) -> Option<Vec3> {
    let len = norm(a);
    (len > 1e-12).then(|| scale(a, 1.0 / len))
}

/// Rotates `v` by `angle` about the unit vector `axis` (right-handed).
pub fn rotate_vector(v: Vec3, axis: Vec3, angle: f64) -> Vec3 {
    let (s, c) = angle.sin_cos();
    let k_cross_v = cross(axis, v);
    let k_dot_v = dot(axis, v);
    [
        v[0] * c + k_cross_v[0] * s + axis[0] * k_dot_v * (1.0 - c),
        v[1] * c + k_cross_v[1] * s + axis[1] * k_dot_v * (1.0 - c),
        v[2] * c + k_cross_v[2] * s + axis[2] * k_dot_v * (1.0 - c),
    ]
}

/// An SU(2) matrix, acting on spinors `(a, b)` and on roots `b / a` through
/// the associated Möbius map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereRotation {
    pub u: [[Complex64; 2]; 2],
}

impl SphereRotation {
    /// `exp(-i angle (axis . sigma) / 2)`, which rotates Bloch vectors by
    /// `angle` about `axis`.
    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        let axis = normalize(axis).unwrap_or([0.0, 0.0, 1.0]);
        let (s, c) = (0.5 * angle).sin_cos();
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let (nx, ny, nz) = (axis[0], axis[1], axis[2]);
        Self {
            u: [
                [one * c - i * s * nz, (-i * nx - ny) * s],
                [(-i * nx + ny) * s, one * c + i * s * nz],
            ],
        }
    }

    /// ZYZ Euler angles, convenient for drawing random rotations.
    pub fn from_euler(alpha: f64, beta: f64, gamma: f64) -> Self {
        let z = [0.0, 0.0, 1.0];
        Self::from_axis_angle(z, alpha)
            .compose(&Self::from_axis_angle([0.0, 1.0, 0.0], beta))
            .compose(&Self::from_axis_angle(z, gamma))
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let mut u = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (r, row) in u.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = self.u[r][0] * other.u[0][c] + self.u[r][1] * other.u[1][c];
            }
        }
        Self { u }
    }

    pub fn apply_spinor(&self, a: Complex64, b: Complex64) -> (Complex64, Complex64) {
        (
            self.u[0][0] * a + self.u[0][1] * b,
            self.u[1][0] * a + self.u[1][1] * b,
        )
    }

    /// Möbius image `(u10 + u11 z) / (u00 + u01 z)` of a root.
    pub fn apply_root(&self, root: &Root) -> Root {
        let (num, den) = match root {
            Root::Infinity => (self.u[1][1], self.u[0][1]),
            Root::Finite(z) => (self.u[1][0] + self.u[1][1] * z, self.u[0][0] + self.u[0][1] * z),
        };
        if den.norm() <= 1e-300 * num.norm().max(1.0) {
            Root::Infinity
        } else {
            Root::Finite(num / den)
        }
    }

    /// The SO(3) image of a Bloch vector.
    pub fn apply_vector(&self, v: Vec3) -> Vec3 {
        let (axis, angle) = self.axis_angle();
        rotate_vector(v, axis, angle)
    }

    fn axis_angle(&self) -> (Vec3, f64) {
        // u = cos(t/2) I - i sin(t/2) (n . sigma)
        let c = self.u[0][0].re;
        let nz_s = -self.u[0][0].im;
        let nx_s = -self.u[1][0].im;
        let ny_s = self.u[1][0].re;
        let s = (nx_s * nx_s + ny_s * ny_s + nz_s * nz_s).sqrt();
        if s < 1e-15 {
            return ([0.0, 0.0, 1.0], 0.0);
        }
        ([nx_s / s, ny_s / s, nz_s / s], 2.0 * s.atan2(c))
    }
}
