//! Peano kernels as exact piecewise polynomials.
//!
//! Builds the kernel of ½G₂ + ½Lob₃ − ∫ at order 4 and prints its pieces:
//! on [√3/3, 1] the kernel is (1−x)³(3x−1)/72, and on [0, √3/3) it is
//! −x⁴/24 + x³/18 + (√3−2)x²/12 + (2√3−3)/216. Evenness makes the negative
//! half redundant.
//!
//! Run with: cargo run --example kernel_pieces

use peanoquad::peano::{kernel_is_even, RemainderFunctional};
use peanoquad::rational::rat;
use peanoquad::rules::{builtin_rule, combine};

fn main() {
    for (g, lob, order) in [("g2", "lob3", 4u32), ("g3", "lob4", 6)] {
        let rule = combine(&[
            (rat(1, 2), &builtin_rule(g).unwrap()),
            (rat(1, 2), &builtin_rule(lob).unwrap()),
        ])
        .unwrap();
        let e = RemainderFunctional::rule_minus_integral(rule, order).unwrap();
        let kernel = e.build_kernel().unwrap();
        println!("kernel of 1/2*{g} + 1/2*{lob} - int (order {order}):");
        for (i, piece) in kernel.pieces().iter().enumerate() {
            println!(
                "  on [{}, {}]:",
                kernel.breakpoints()[i],
                kernel.breakpoints()[i + 1]
            );
            println!("    K(x) = {piece}");
        }
        println!("  even: {}", kernel_is_even(&kernel));
        println!("  int K = {}\n", kernel.integrate());
    }

    // an asymmetric functional: the kernel of int - rad2l at order 3
    let e = RemainderFunctional::integral_minus_rule(builtin_rule("rad2l").unwrap(), 3).unwrap();
    let kernel = e.build_kernel().unwrap();
    println!(
        "kernel of int - rad2l (order 3): even: {}",
        kernel_is_even(&kernel)
    );
}
