// Stars of a few familiar states, and the state rebuilt from its stars.

use std::fmt::Write;

use stellar::majorana::{constellation_of, from_constellation, DEFAULT_CLUSTER_TOL};
use stellar::state::{state_fidelity, SymmetricState};
use stellar::Complex64;

fn real(n: usize, c: &[f64]) -> SymmetricState {
    SymmetricState::normalized(n, c.iter().map(|&x| Complex64::new(x, 0.0)).collect()).unwrap()
}

fn run_example() -> String {
    let mut out = String::new();
    let states = [
        ("GHZ3", real(3, &[1.0, 0.0, 0.0, 1.0])),
        ("W3", real(3, &[0.0, 0.0, 1.0, 0.0])),
        ("|0000>", real(4, &[0.0, 0.0, 0.0, 0.0, 1.0])),
        ("GHZ4", real(4, &[1.0, 0.0, 0.0, 0.0, 1.0])),
    ];
    for (name, state) in &states {
        let c = constellation_of(state, DEFAULT_CLUSTER_TOL).unwrap();
        let _ = writeln!(out, "{name}:");
        for star in c.stars() {
            let sp = star.spinor();
            let _ = writeln!(
                out,
                "  x{} at alpha={:7.2} deg beta={:7.2} deg",
                star.multiplicity,
                sp.alpha.to_degrees(),
                sp.beta.to_degrees()
            );
        }
        let back = from_constellation(&c).unwrap();
        let _ = writeln!(out, "  rebuilt fidelity {:.12}", state_fidelity(state, &back).unwrap());
    }
    out
}

fn main() {
    print!("{}", run_example());
}
