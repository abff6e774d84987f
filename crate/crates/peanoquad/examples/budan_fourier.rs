//! The Budan–Fourier route to kernel nonnegativity on [0, √5/5].
//!
//! The degree-6 spline piece k(x) = 4320·K(x) of the ½G₃ + ½Lob₄ remainder
//! has derivative sign sequence (+,0,−,0,−,+,−) at 0 and V(0) = 3; at √5/5
//! the seven derivative values are exact surd expressions with V(√5/5) = 3.
//! The variation difference 0 bounds the root count up to an even defect, so
//! k has no roots there; the Sturm count settles the question outright.
//!
//! Run with: cargo run --example budan_fourier

use peanoquad::field::FieldElement;
use peanoquad::peano::RemainderFunctional;
use peanoquad::rational::{rat, rat_int};
use peanoquad::roots::{budan_fourier_bound, budan_fourier_v, derivative_signs, sturm_root_count};
use peanoquad::rules::{builtin_rule, combine};

fn main() {
    let rule = combine(&[
        (rat(1, 2), &builtin_rule("g3").unwrap()),
        (rat(1, 2), &builtin_rule("lob4").unwrap()),
    ])
    .unwrap();
    let e = RemainderFunctional::rule_minus_integral(rule, 6).unwrap();
    let kernel = e.build_kernel().unwrap();

    // the piece of K covering [0, √5/5], scaled by 4320
    let zero = FieldElement::zero();
    let idx = kernel
        .breakpoints()
        .iter()
        .position(|b| *b == zero)
        .unwrap();
    let k = kernel.pieces()[idx].scale_rational(&rat_int(4320));
    println!("k(x) = 4320 K(x) on [0, sqrt5/5]:");
    println!("  {k}\n");

    let s5 = FieldElement::sqrt5().scale(&rat(1, 5));
    let signs0 = derivative_signs(&k, &zero);
    println!(
        "derivative signs at 0:       {signs0}   V(0) = {}",
        budan_fourier_v(&k, &zero)
    );
    let signs1 = derivative_signs(&k, &s5);
    println!(
        "derivative signs at sqrt5/5: {signs1}   V(sqrt5/5) = {}",
        budan_fourier_v(&k, &s5)
    );

    // the seven derivative values at √5/5, exact in the field
    let mut q = k.clone();
    println!("\nderivative values at sqrt5/5:");
    for i in 0..=6 {
        println!("  k^({i}) = {}", q.eval(&s5));
        q = q.derivative();
    }

    let bound = budan_fourier_bound(&k, &zero, &s5).unwrap();
    println!("\nBudan-Fourier bound on (0, sqrt5/5]: {bound} (root count <= bound, same parity)");
    let exact = sturm_root_count(&k, &zero, &s5);
    println!("Sturm count on (0, sqrt5/5]:          {exact}");
    assert_eq!(bound, 0);
    assert_eq!(exact, 0);
    println!("=> k has no roots in (0, sqrt5/5], and k(0) > 0, so k > 0 there");
}
