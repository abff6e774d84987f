//! Why no Radau analogue of the Gauss/Lobatto comparison exists.
//!
//! Both f(x) = (x+1)/(x+2) and g(x) = (x+2)⁴ are 2-convex on [−1, 1], yet the
//! averaged residual ½Rad₂ˡ[·] + ½Rad₂ʳ[·] − ∫ is negative for f and positive
//! for g: neither 2-point Radau rule dominates the other on this class.
//!
//! Run with: cargo run --example radau_counterexample

use peanoquad::convexity::{corpus_function, is_n_convex_sampled};
use peanoquad::enclosure::radau_counterexample;
use peanoquad::rational::{decimal_string, rat_int, RoundDir};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() {
    // both functions really are 2-convex (sampled refutation finds nothing)
    let mut rng = StdRng::seed_from_u64(1);
    for name in ["(x+1)/(x+2)", "(x+2)^4"] {
        let f = corpus_function(name).unwrap();
        let verdict =
            is_n_convex_sampled(&f, 2, 500, (&rat_int(-1), &rat_int(1)), &mut rng).unwrap();
        println!("{name}: 2-convexity sampled check: {verdict:?}");
    }

    let report = radau_counterexample(50).unwrap();
    println!();
    println!(
        "residual for g = (x+2)^4:     {} (exactly, positive)",
        report.polynomial_residual
    );
    println!(
        "rule value for f = (x+1)/(x+2): {} (exactly)",
        report.rational_fn_rule_value
    );
    println!(
        "residual for f:               [{}, {}]",
        decimal_string(report.rational_fn_residual.lo(), 25, RoundDir::Down),
        decimal_string(report.rational_fn_residual.hi(), 25, RoundDir::Up),
    );
    println!("                              (= 94/105 - (2 - ln 3), negative)");
    println!("signs differ: {}", report.signs_differ);
}
