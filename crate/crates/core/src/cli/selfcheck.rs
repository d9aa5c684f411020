//! Built-in checks against fixed anchors and the brute-force oracle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::format::text;
use crate::classify::classify_state;
use crate::majorana::{constellation_of, from_constellation, matching_distance, spinor_to_root, Constellation};
use crate::measure::{dent3, dent4};
use crate::oracle::{brute_symmetrize, random_spinor, random_state, reduce_one};
use crate::sphere::Root;
use crate::state::{expand, state_fidelity, SymmetricState};
use crate::Complex64;

const SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub value: String,
    pub ok: bool,
}

impl Check {
    /// `name=value ok` or `name=value FAIL`.
    pub fn line(&self) -> String {
        format!("{}={} {}", self.name, self.value, if self.ok { "ok" } else { "FAIL" })
    }
}

fn real_state(n: usize, coeffs: &[f64]) -> SymmetricState {
    SymmetricState::normalized(n, coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
        .expect("fixture is nonzero")
}

fn value_check(name: &'static str, got: Result<f64, String>, want: f64, tol: f64) -> Check {
    match got {
        Ok(v) => Check {
            name,
            value: text(v),
            ok: (v - want).abs() <= tol,
        },
        Err(e) => Check {
            name,
            value: format!("error({e})"),
            ok: false,
        },
    }
}

fn label_check(name: &'static str, state: &SymmetricState, tol: f64, want: &str) -> Check {
    match classify_state(state, tol) {
        Ok(r) => Check {
            name,
            value: r.class.as_str().to_string(),
            ok: r.class.as_str() == want,
        },
        Err(e) => Check {
            name,
            value: format!("error({e})"),
            ok: false,
        },
    }
}

fn cube_roots() -> Vec<Root> {
    (0..3)
        .map(|k| Root::Finite(Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 3.0)))
        .collect()
}

/// Runs every check with clustering tolerance `tol`.
pub fn run_checks(tol: f64) -> Vec<Check> {
    let ghz3 = real_state(3, &[1.0, 0.0, 0.0, 1.0]);
    let w3 = real_state(3, &[0.0, 0.0, 1.0, 0.0]);
    let e = |r: crate::Result<f64>| r.map_err(|e| e.to_string());

    let mut checks = vec![
        value_check("dent3_ghz", e(dent3(&ghz3)), 1.0, 1e-10),
        value_check("dent3_w", e(dent3(&w3)), 2.0 / 3.0, 1e-10),
        value_check("dent4_ghz", e(dent4(&real_state(4, &[1.0, 0.0, 0.0, 0.0, 1.0]))), 1.0, 1e-10),
        value_check("dent4_w4", e(dent4(&real_state(4, &[0.0, 0.0, 0.0, 1.0, 0.0]))), 0.5, 1e-10),
        value_check(
            "dent4_w2x2",
            e(dent4(&real_state(4, &[0.0, 0.0, 1.0, 0.0, 0.0]))),
            1.0 / 3.0,
            1e-10,
        ),
    ];

    let ghz_roots = constellation_of(&ghz3, tol)
        .map(|c| matching_distance(&c.expanded_roots(), &cube_roots()))
        .map_err(|e| e.to_string());
    checks.push(value_check("ghz3_roots", ghz_roots, 0.0, 1e-9));
    checks.push(label_check("classify_ghz3", &ghz3, tol, "GHZ"));
    checks.push(label_check("classify_w3", &w3, tol, "W"));

    // a W constellation with its double star split by chordal 9e-7
    let split = Constellation::from_roots(&[
        Root::finite(0.0, 0.0),
        Root::finite(4.5e-7, 0.0),
        Root::finite(-1.3, 0.4),
    ])
    .and_then(|c| from_constellation(&c));
    checks.push(match split {
        Ok(s) => label_check("perturbed_w_label", &s, tol, "W"),
        Err(e) => value_check("perturbed_w_label", Err(e.to_string()), 0.0, 0.0),
    });

    let purity = reduce_one(&expand(&ghz3), 0).map(|r| r.purity());
    checks.push(value_check("ghz3_purity", purity.map_err(|e| e.to_string()), 0.5, 1e-12));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 1.0f64;
    let mut failure = None;
    for i in 0..60 {
        let state = random_state(&mut rng, 2 + i % 6);
        match constellation_of(&state, tol)
            .and_then(|c| from_constellation(&c))
            .and_then(|back| state_fidelity(&state, &back))
        {
            Ok(f) => worst = worst.min(f),
            Err(e) => failure = Some(e.to_string()),
        }
    }
    checks.push(match failure {
        Some(e) => value_check("roundtrip_a_min_fidelity", Err(e), 1.0, 1e-8),
        None => value_check("roundtrip_a_min_fidelity", Ok(worst), 1.0, 1e-8),
    });

    let mut worst = 0.0f64;
    let mut failure = None;
    for i in 0..40 {
        let spinors: Vec<_> = (0..3 + i % 4).map(|_| random_spinor(&mut rng)).collect();
        let want: Vec<Root> = spinors.iter().map(spinor_to_root).collect();
        match brute_symmetrize(&spinors)
            .and_then(|v| SymmetricState::from_full(&v))
            .and_then(|s| constellation_of(&s, tol))
        {
            Ok(c) => worst = worst.max(matching_distance(&c.expanded_roots(), &want)),
            Err(e) => failure = Some(e.to_string()),
        }
    }
    checks.push(match failure {
        Some(e) => value_check("roundtrip_b_max_chordal", Err(e), 0.0, 1e-7),
        None => value_check("roundtrip_b_max_chordal", Ok(worst), 0.0, 1e-7),
    });
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::DEFAULT_TOL;

    #[test]
    fn passes_at_default_tolerance() {
        let checks = run_checks(DEFAULT_TOL);
        let failed: Vec<String> = checks.iter().filter(|c| !c.ok).map(Check::line).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert_eq!(checks[0].line(), "dent3_ghz=1.0 ok");
    }

    #[test]
    fn absurd_tolerance_names_the_failure() {
        let checks = run_checks(1e-15);
        let perturbed = checks.iter().find(|c| c.name == "perturbed_w_label").unwrap();
        assert!(!perturbed.ok);
    }
}
