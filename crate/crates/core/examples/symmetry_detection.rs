// Cyclic symmetry of rotated constellations.

use std::f64::consts::TAU;
use std::fmt::Write;

use stellar::classify::{detect_cyclic_symmetry, DEFAULT_TOL};
use stellar::majorana::Constellation;
use stellar::sphere::{Root, SphereRotation};

fn polygon(n: usize) -> Constellation {
    let roots: Vec<Root> = (0..n)
        .map(|k| Root::finite((TAU * k as f64 / n as f64).cos(), (TAU * k as f64 / n as f64).sin()))
        .collect();
    Constellation::from_roots(&roots).unwrap()
}

fn run_example() -> String {
    let tilt = SphereRotation::from_euler(0.4, 1.1, -0.3);
    let mut out = String::new();
    for (name, c) in [
        ("triangle", polygon(3)),
        ("square", polygon(4)),
        ("tilted square", polygon(4).rotated(&tilt)),
        ("poles", Constellation::from_roots(&[Root::finite(0.0, 0.0), Root::Infinity]).unwrap()),
        ("lopsided", Constellation::from_roots(&[Root::finite(0.0, 0.0), Root::finite(0.0, 0.0), Root::finite(0.7, 0.2)]).unwrap()),
    ] {
        let r = detect_cyclic_symmetry(&c, DEFAULT_TOL);
        let axis = r
            .axis
            .map(|a| format!("({:.3}, {:.3}, {:.3})", a[0], a[1], a[2]))
            .unwrap_or_else(|| "-".to_string());
        let _ = writeln!(out, "{name:<14} C{:<4} axis {axis}", r.cyclic_order);
    }
    out
}

fn main() {
    print!("{}", run_example());
}
