// Fast paths against brute-force references on random inputs.

use std::fmt::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stellar::majorana::{constellation_of, matching_distance, spinor_to_root, DEFAULT_CLUSTER_TOL};
use stellar::oracle::{brute_symmetrize, random_spinor, reduce_one};
use stellar::sphere::Root;
use stellar::state::{expand, symmetrize_spinors, SymmetricState};

fn run_example() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut out = String::new();
    for n in 2..=6 {
        let spinors: Vec<_> = (0..n).map(|_| random_spinor(&mut rng)).collect();
        let brute = SymmetricState::from_full(&brute_symmetrize(&spinors).unwrap()).unwrap();
        let fast = symmetrize_spinors(&spinors).unwrap();
        let gap = brute
            .coeffs()
            .iter()
            .zip(fast.coeffs())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        let want: Vec<Root> = spinors.iter().map(spinor_to_root).collect();
        let found = constellation_of(&brute, DEFAULT_CLUSTER_TOL).unwrap();
        let err = matching_distance(&found.expanded_roots(), &want);
        let purity = reduce_one(&expand(&brute), 0).unwrap().purity();
        let _ = writeln!(
            out,
            "n={n} coefficient gap {gap:.1e}  star error {err:.1e}  one-qubit purity {purity:.4}"
        );
    }
    out
}

fn main() {
    print!("{}", run_example());
}
