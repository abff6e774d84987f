//! Exact mean-value error constants from Peano kernel integrals.
//!
//! For E = ½G₂ + ½Lob₃ − ∫ (order 4) the constant ∫K is exactly 1/540, so
//! every f ∈ C⁴[−1,1] satisfies E[f] = f⁗(ξ)/540; for ½G₃ + ½Lob₄ − ∫
//! (order 6) it is 1/94500. The classical Gauss and Lobatto constants come
//! out of the same machinery.
//!
//! Run with: cargo run --example error_constants

use peanoquad::peano::{error_constant, RemainderFunctional};
use peanoquad::poly::Polynomial;
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
        let constant = error_constant(&kernel);
        println!("1/2*{g} + 1/2*{lob} - int, order {order}:  int K = {constant}");

        // cross-check through the moment route: E[x^r] = r! * int K
        let moment = e.apply_poly(&Polynomial::monomial(order as usize)).unwrap();
        let via_moment = moment.scale(&peanoquad::rational::factorial(order).recip());
        assert_eq!(constant, via_moment);
        println!("  cross-check E[x^{order}]/{order}! = {via_moment}");
    }

    // classical one-rule constants at order 4
    let e = RemainderFunctional::integral_minus_rule(builtin_rule("g2").unwrap(), 4).unwrap();
    println!(
        "int - G2, order 4:        int K = {}",
        error_constant(&e.build_kernel().unwrap())
    );
    let e = RemainderFunctional::rule_minus_integral(builtin_rule("lob3").unwrap(), 4).unwrap();
    println!(
        "Lob3 - int, order 4:      int K = {}",
        error_constant(&e.build_kernel().unwrap())
    );
}
