macro_rules! example {
    ($name:ident, $file:literal, $($needle:literal),+) => {
        mod $name {
            #![allow(dead_code)]
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));

            #[test]
            fn runs() {
                let out = run_example();
                $(assert!(out.contains($needle), "{out}");)+
            }
        }
    };
}

example!(majorana_roots, "majorana_roots.rs", "rebuilt fidelity 1.000000000000");
example!(classify_states, "classify_states.rs", "GHZ4", "W2x2", "Separable");
example!(depressed_forms, "depressed_forms.rs", "p=2.000000+3.000000i");
example!(entanglement_measure, "entanglement_measure.rs", "W3     D=0.666667");
example!(symmetry_detection, "symmetry_detection.rs", "tilted square  C4");
example!(ghz_w_sweep, "ghz_w_sweep.rs", "Separable");
example!(oracle_crosscheck, "oracle_crosscheck.rs", "n=6");
