// Entanglement class, multiplicity partition and symmetry of 3- and 4-qubit states.

use std::f64::consts::TAU;
use std::fmt::Write;

use stellar::classify::{classify_state, DEFAULT_TOL};
use stellar::majorana::{from_constellation, Constellation};
use stellar::sphere::Root;

fn run_example() -> String {
    let cases: [(&str, Vec<Root>); 7] = [
        ("triple star", vec![Root::finite(0.3, -0.2); 3]),
        ("double + single", vec![Root::finite(0.0, 0.0), Root::finite(0.0, 0.0), Root::finite(1.0, 1.0)]),
        ("equilateral", (0..3).map(|k| Root::finite((TAU * k as f64 / 3.0).cos(), (TAU * k as f64 / 3.0).sin())).collect()),
        ("scalene", vec![Root::finite(0.0, 0.0), Root::finite(1.0, 0.0), Root::finite(0.2, 2.0)]),
        ("square", vec![Root::finite(1.0, 0.0), Root::finite(0.0, 1.0), Root::finite(-1.0, 0.0), Root::finite(0.0, -1.0)]),
        ("two pairs", vec![Root::finite(0.0, 0.0), Root::finite(0.0, 0.0), Root::Infinity, Root::Infinity]),
        ("triple + single", vec![Root::finite(0.5, 0.0), Root::finite(0.5, 0.0), Root::finite(0.5, 0.0), Root::finite(-2.0, 0.0)]),
    ];
    let mut out = String::new();
    for (name, roots) in cases {
        let state = from_constellation(&Constellation::from_roots(&roots).unwrap()).unwrap();
        let r = classify_state(&state, DEFAULT_TOL).unwrap();
        let _ = writeln!(
            out,
            "{name:<16} {:<10} {:<10} C{} group {}",
            r.class.as_str(),
            r.partition.to_string(),
            r.symmetry.cyclic_order,
            r.group
        );
    }
    out
}

fn main() {
    print!("{}", run_example());
}
