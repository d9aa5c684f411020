//! Fixed 12-significant-digit rounding so repeated runs print identical bytes.

use serde::Serialize;

use crate::sphere::Root;
use crate::Complex64;

pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn complex(z: Complex64) -> [f64; 2] {
    [round12(z.re), round12(z.im)]
}

pub fn vec3(v: [f64; 3]) -> [f64; 3] {
    v.map(round12)
}

/// A root as `[re, im]` or the string `"inf"`.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum RootOut {
    Finite([f64; 2]),
    Infinity(&'static str),
}

impl From<&Root> for RootOut {
    fn from(r: &Root) -> Self {
        match r {
            Root::Finite(z) => RootOut::Finite(complex(*z)),
            Root::Infinity => RootOut::Infinity("inf"),
        }
    }
}

/// Shortest text that reads back as the 12-digit value.
pub fn text(x: f64) -> String {
    format!("{:?}", round12(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(2.0 / 3.0), 0.666666666667);
        assert_eq!(round12(-0.0), 0.0);
        assert_eq!(text(1.0), "1.0");
        assert_eq!(text(1.0 - 1e-15), "1.0");
    }
}
