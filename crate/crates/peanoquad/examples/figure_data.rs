//! Certified kernel enclosures for the conjectured higher orders.
//!
//! The comparison theorem is open beyond the 3-point Gauss rule; the kernels
//! of ½G₄ + ½Lob₅ (order 8) and ½G₅ + ½Lob₆ (order 10) can only be evaluated
//! numerically since their nodes leave Q(√3, √5). Every sample below is a
//! rigorous interval around the true kernel value; the lower bounds stay
//! far above −10⁻³⁰, consistent with the plots that motivate the conjecture.
//!
//! Run with: cargo run --example figure_data
//! (full-resolution CSV: peanoquad figure --n 4 --grid 400)

use peanoquad::numeric::NodeTable;
use peanoquad::peano::RemainderFunctional;
use peanoquad::rational::{decimal_string, pow10, rat, RoundDir};
use peanoquad::rules::combine;

fn main() {
    let table = NodeTable::embedded();
    for n in [4u32, 5] {
        let rule = combine(&[
            (rat(1, 2), &table.rule(&format!("g{n}")).unwrap()),
            (rat(1, 2), &table.rule(&format!("lob{}", n + 1)).unwrap()),
        ])
        .unwrap();
        let e = RemainderFunctional::rule_minus_integral(rule, 2 * n).unwrap();
        let samples = e.kernel_samples(21, 50, None).unwrap();
        println!(
            "kernel of 1/2*G{n} + 1/2*Lob{} - int (order {}):",
            n + 1,
            2 * n
        );
        println!("  {:>7}  {:>26}  {:>26}", "x", "K lower", "K upper");
        for s in &samples {
            println!(
                "  {:>7}  {:>26}  {:>26}",
                s.x,
                decimal_string(s.value.lo(), 20, RoundDir::Down),
                decimal_string(s.value.hi(), 20, RoundDir::Up),
            );
        }
        let floor = -pow10(30).recip();
        let all_above = samples.iter().all(|s| s.value.lo() > &floor);
        println!("  all lower bounds > -1e-30: {all_above}\n");
    }
}
