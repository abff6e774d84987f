//! Divided differences and the integrand corpus.
//!
//! n-convexity means nonnegative divided differences of order n+1; the corpus
//! carries each member's analytically known convexity orders and smoothness
//! class, and the sampled checker can refute a wrong convexity assertion with
//! a concrete point tuple.
//!
//! Run with: cargo run --example convexity_corpus

use peanoquad::convexity::{
    corpus, divided_difference, is_n_convex_sampled, truncated_power, ConvexityVerdict, Smoothness,
};
use peanoquad::rational::{rat, rat_int};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() {
    // divided differences: slope, leading coefficient, annihilation
    let pts = [rat_int(0), rat_int(1)];
    let vals = [rat_int(0), rat_int(1)];
    println!(
        "[0,1; x]        = {}",
        divided_difference(&pts, &vals).unwrap()
    );
    let pts = [rat(-1, 2), rat(1, 3), rat(5, 4)];
    let vals: Vec<_> = pts.iter().map(|x| x * x).collect();
    println!(
        "[.., x^2] (3 pts) = {}",
        divided_difference(&pts, &vals).unwrap()
    );
    let pts = [rat_int(-1), rat(0, 1), rat(1, 2), rat_int(1), rat_int(2)];
    let vals: Vec<_> = pts.iter().map(|x| x * x * x).collect();
    println!(
        "[.., x^3] (5 pts) = {} (degree 3 < order 4)",
        divided_difference(&pts, &vals).unwrap()
    );

    println!("\ncorpus:");
    for f in corpus() {
        let smooth = match f.smoothness() {
            Smoothness::Infinite => "C^inf".to_string(),
            Smoothness::Finite(r) => format!("C^{r}"),
        };
        let orders: Vec<String> = f
            .known_convexity_orders()
            .iter()
            .map(|n| n.to_string())
            .collect();
        println!(
            "  {:<12} {:<6} convex orders {{{}}}",
            f.name(),
            smooth,
            orders.join(",")
        );
    }

    // the canonical spline x+^5 is 5-convex but only C^4
    let f = truncated_power(5);
    let mut rng = StdRng::seed_from_u64(9);
    let verdict = is_n_convex_sampled(&f, 5, 2000, (&rat_int(-1), &rat_int(1)), &mut rng).unwrap();
    println!("\nxplus5, 5-convex over 2000 tuples: {verdict:?}");

    // a refutation: x^3 is not 1-convex on [-1, 1]
    let f = peanoquad::corpus_function("x^3").unwrap();
    match is_n_convex_sampled(&f, 1, 2000, (&rat_int(-1), &rat_int(1)), &mut rng).unwrap() {
        ConvexityVerdict::CounterexampleTuple(points) => {
            let rendered: Vec<String> = points.iter().map(|p| p.to_string()).collect();
            println!("x^3, 1-convexity refuted at ({})", rendered.join(", "));
        }
        v => println!("x^3: {v:?}"),
    }
}
