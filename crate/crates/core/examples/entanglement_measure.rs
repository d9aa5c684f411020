// D_ent and its GHZ / W / separable decomposition.

use std::fmt::Write;

use stellar::measure::{measure3, measure4};
use stellar::state::SymmetricState;
use stellar::Complex64;

fn real(n: usize, c: &[f64]) -> SymmetricState {
    SymmetricState::normalized(n, c.iter().map(|&x| Complex64::new(x, 0.0)).collect()).unwrap()
}

fn run_example() -> String {
    let mut out = String::new();
    for (name, s) in [
        ("GHZ3", real(3, &[1.0, 0.0, 0.0, 1.0])),
        ("W3", real(3, &[0.0, 0.0, 1.0, 0.0])),
        ("|000>", real(3, &[0.0, 0.0, 0.0, 1.0])),
        ("mixed", real(3, &[0.6, 0.0, 0.5, 0.62])),
    ] {
        let m = measure3(&s).unwrap();
        let _ = write!(out, "{name:<6} D={:.6} route={:?}", m.dent_clamped(), m.route);
        if let Some(d) = m.decomposition {
            let _ = write!(out, " |a_ghz|={:.4} |a_w|={:.4}", d.a_ghz.norm(), d.a_w.norm());
        }
        out.push('\n');
    }
    for (name, s) in [
        ("GHZ4", real(4, &[1.0, 0.0, 0.0, 0.0, 1.0])),
        ("W4", real(4, &[0.0, 0.0, 0.0, 1.0, 0.0])),
        ("W2x2", real(4, &[0.0, 0.0, 1.0, 0.0, 0.0])),
    ] {
        let m = measure4(&s).unwrap();
        let _ = writeln!(out, "{name:<6} D={:.6} route={:?}", m.dent_clamped(), m.route);
    }
    out
}

fn main() {
    print!("{}", run_example());
}
