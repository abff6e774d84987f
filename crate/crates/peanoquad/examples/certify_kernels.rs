//! Sign certification of Peano kernels.
//!
//! A one-signed kernel yields the mean-value error form, and for the
//! ½Gₙ + ½Lobₙ₊₁ remainders (n = 2, 3) the certifier proves nonnegativity by
//! isolating the real roots of each piece. The averaged Radau remainder at
//! order 3 is sign-changing; the certificate carries a rational witness point
//! with an exactly negative kernel value.
//!
//! Run with: cargo run --example certify_kernels

use peanoquad::peano::{certify_sign, RemainderFunctional, SignVerdict};
use peanoquad::rational::{parse_rational, rat};
use peanoquad::rules::{builtin_rule, combine};

fn main() {
    let cases = [
        (
            "1/2*g2 + 1/2*lob3 - int",
            vec![("g2", rat(1, 2)), ("lob3", rat(1, 2))],
            4u32,
            false,
        ),
        (
            "1/2*g3 + 1/2*lob4 - int",
            vec![("g3", rat(1, 2)), ("lob4", rat(1, 2))],
            6,
            false,
        ),
        ("int - g2", vec![("g2", rat(1, 1))], 4, true),
        ("lob3 - int", vec![("lob3", rat(1, 1))], 4, false),
        ("int - g3", vec![("g3", rat(1, 1))], 6, true),
        ("lob4 - int", vec![("lob4", rat(1, 1))], 6, false),
        (
            "1/2*rad2l + 1/2*rad2r - int",
            vec![("rad2l", rat(1, 2)), ("rad2r", rat(1, 2))],
            3,
            false,
        ),
    ];

    for (label, terms, order, flip) in cases {
        let rules: Vec<_> = terms
            .iter()
            .map(|(name, c)| (c.clone(), builtin_rule(name).unwrap()))
            .collect();
        let refs: Vec<_> = rules.iter().map(|(c, r)| (c.clone(), r)).collect();
        let rule = combine(&refs).unwrap();
        let e = if flip {
            RemainderFunctional::integral_minus_rule(rule, order).unwrap()
        } else {
            RemainderFunctional::rule_minus_integral(rule, order).unwrap()
        };
        let kernel = e.build_kernel().unwrap();
        match certify_sign(&kernel) {
            SignVerdict::SignChanging(w) => {
                println!("{label} (order {order}): SignChanging");
                println!(
                    "  negative on [{}, {}], e.g. K({}) = {}",
                    w.negative_interval.0,
                    w.negative_interval.1,
                    w.negative_point,
                    kernel
                        .eval_rational(&parse_rational(&w.negative_point).unwrap())
                        .unwrap()
                );
                println!(
                    "  positive at {}: K = {}",
                    w.positive_point,
                    kernel
                        .eval_rational(&parse_rational(&w.positive_point).unwrap())
                        .unwrap()
                );
            }
            verdict => println!("{label} (order {order}): {}", verdict.label()),
        }
    }
}
