// Slide one GHZ star onto another, then the pair onto the third.

use std::fmt::Write;

use stellar::cli::{parse_sweep, sweep_points, Options};

const SPEC: &str = r#"[
  {"start": [[1,0],[-0.5,0.8660254037844386],[-0.5,-0.8660254037844386]],
   "move_index": 0, "target": [-0.5,0.8660254037844386], "steps": 5},
  {"move_index": [0,1], "target": [-0.5,-0.8660254037844386], "steps": 5}
]"#;

fn run_example() -> String {
    let spec = parse_sweep(SPEC).unwrap();
    let mut out = String::new();
    for p in sweep_points(&spec, &Options::default()).unwrap() {
        let (class, partition, dent) = p.outcome.unwrap();
        let _ = writeln!(
            out,
            "leg {} step {} star at {:+.3}{:+.3}i  {class:<10} {partition:<8} D={dent:.4}",
            p.leg, p.step, p.root.re, p.root.im
        );
    }
    out
}

fn main() {
    print!("{}", run_example());
}
