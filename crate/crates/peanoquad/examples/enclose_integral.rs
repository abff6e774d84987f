//! Certified integral enclosures from Gauss/Lobatto rule pairs.
//!
//! For a (2n−1)-convex integrand the pair (Gₙ, Lobₙ₊₁) brackets the integral;
//! composite bisection shrinks the bracket to any requested width, with every
//! bound certified by exact rational or interval arithmetic.
//!
//! Run with: cargo run --example enclose_integral

use peanoquad::convexity::corpus_function;
use peanoquad::enclosure::{bracket, composite_enclose};
use peanoquad::rational::{decimal_string, pow10, rat, rat_int, RoundDir};

fn main() {
    // one-shot bracket of ∫_{-1}^{1} x^4: G2 and Lob3 give [2/9, 2/3]
    let f = corpus_function("x^4").unwrap();
    let e = bracket(&f, &rat_int(-1), &rat_int(1), 2, 30).unwrap();
    println!(
        "x^4 on [-1,1], n=2: integral in [{}, {}] (true value 2/5)",
        e.certified_lower(),
        e.certified_upper()
    );

    // exp: the one-shot bracket at n = 3, then composite refinement to 1e-10
    let f = corpus_function("exp").unwrap();
    let e = bracket(&f, &rat_int(-1), &rat_int(1), 3, 50).unwrap();
    println!(
        "\nexp on [-1,1], n=3, single interval: width {}",
        decimal_string(&e.width(), 12, RoundDir::Up)
    );
    let tol = pow10(10).recip();
    let e = composite_enclose(&f, &rat_int(-1), &rat_int(1), 2, &tol, 24, 50).unwrap();
    println!(
        "composite n=2, tol 1e-10: {} subintervals, integral in [{}, {}]",
        e.subdivisions(),
        decimal_string(e.certified_lower(), 14, RoundDir::Down),
        decimal_string(e.certified_upper(), 14, RoundDir::Up),
    );
    println!("(2 sinh 1 = 2.35040238729...)");

    // a rational subinterval, order 1: the midpoint/trapezoid bracket
    let f = corpus_function("(x+2)^4").unwrap();
    let e = bracket(&f, &rat(-1, 2), &rat(3, 4), 1, 30).unwrap();
    println!(
        "\n(x+2)^4 on [-1/2, 3/4], n=1: integral in [{}, {}]",
        e.certified_lower(),
        e.certified_upper()
    );
}
