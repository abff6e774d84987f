//! The remainder-comparison theorem: for a (2n−1)-convex f ∈ C^{2n},
//! 0 ≤ ∫f − Gₙ[f] ≤ Lobₙ₊₁[f] − ∫f, so the Gauss rule is never the worse
//! end of the bracket.
//!
//! Run with: cargo run --example compare_remainders

use peanoquad::convexity::corpus_function;
use peanoquad::enclosure::compare_remainders;
use peanoquad::rational::{decimal_string, pow10, RoundDir};

fn main() {
    for (name, n) in [
        ("x^4", 2u32),
        ("x^6", 3),
        ("(x+2)^4", 2),
        ("exp", 2),
        ("exp", 3),
    ] {
        let f = corpus_function(name).unwrap();
        let report = compare_remainders(&f, n, 50).unwrap();
        println!("f = {name}, n = {n}:");
        match (&report.gauss_error_exact, &report.lobatto_error_exact) {
            (Some(g), Some(l)) => {
                println!("  int - G{n}[f]     = {g} (exact)");
                println!("  Lob{}[f] - int   = {l} (exact)", n + 1);
            }
            _ => {
                let places = 25;
                println!(
                    "  int - G{n}[f]     in [{}, {}]",
                    decimal_string(report.gauss_error.lo(), places, RoundDir::Down),
                    decimal_string(report.gauss_error.hi(), places, RoundDir::Up),
                );
                println!(
                    "  Lob{}[f] - int   in [{}, {}]",
                    n + 1,
                    decimal_string(report.lobatto_error.lo(), places, RoundDir::Down),
                    decimal_string(report.lobatto_error.hi(), places, RoundDir::Up),
                );
            }
        }
        let holds = report.theorem_holds_within(&pow10(20).recip());
        println!("  0 <= gauss error <= lobatto error: {holds}\n");
        assert!(holds);
    }
}
