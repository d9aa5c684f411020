// Depressed cubic and quartic of a state, and the compressed state whose
// stars have their centroid at the origin of the plane.

use std::fmt::Write;

use stellar::depressed::{compress_state, DepressedForm};
use stellar::majorana::{constellation_of, from_constellation, to_polynomial, Constellation, DEFAULT_CLUSTER_TOL};
use stellar::sphere::Root;

fn run_example() -> String {
    let mut out = String::new();
    let sets = [
        vec![Root::finite(1.0, 0.0), Root::finite(2.0, 0.0), Root::finite(0.0, 3.0)],
        vec![Root::finite(1.0, 1.0), Root::finite(-0.5, 0.0), Root::finite(2.0, -1.0), Root::finite(0.0, 0.5)],
    ];
    for roots in &sets {
        let state = from_constellation(&Constellation::from_roots(roots).unwrap()).unwrap();
        let form = DepressedForm::of(&to_polynomial(&state)).unwrap();
        let _ = writeln!(out, "n={} shift={:.6}", state.n(), form.shift());
        let _ = writeln!(out, "  p={:.6} q={:.6}", form.p(), form.q());
        if let Some(r) = form.r() {
            let _ = writeln!(out, "  r={r:.6}");
        }
        let compressed = compress_state(&state).unwrap();
        let c = constellation_of(&compressed.state, DEFAULT_CLUSTER_TOL).unwrap();
        let centroid = c.centroid().unwrap();
        let _ = writeln!(out, "  compressed centroid |z|={:.1e}", centroid.norm());
    }
    out
}

fn main() {
    print!("{}", run_example());
}
