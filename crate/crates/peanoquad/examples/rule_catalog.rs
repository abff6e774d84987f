//! Tour of the quadrature rule catalog: exact nodes and weights, exactness
//! degrees, symmetry, combination and rescaling.
//!
//! Run with: cargo run --example rule_catalog

use peanoquad::numeric::NodeTable;
use peanoquad::rational::rat;
use peanoquad::rules::{builtin_rule, combine, BUILTIN_RULES};

fn main() {
    println!("exact rules on [-1, 1]:");
    for name in BUILTIN_RULES {
        let rule = builtin_rule(name).unwrap();
        let degree = rule.exactness_degree().unwrap();
        let symmetric = if rule.is_symmetric() {
            "symmetric"
        } else {
            "asymmetric"
        };
        println!("  {name:<10} exact on degree <= {degree}, {symmetric}");
        for (node, weight) in rule.exact_points().unwrap() {
            println!("    node {node}   weight {weight}");
        }
    }

    // the averaged rule ½G₂ + ½Lob₃ merges coincident nodes exactly
    let avg = combine(&[
        (rat(1, 2), &builtin_rule("g2").unwrap()),
        (rat(1, 2), &builtin_rule("lob3").unwrap()),
    ])
    .unwrap();
    println!(
        "\n1/2*G2 + 1/2*Lob3 flattens to {} nodes:",
        avg.points().len()
    );
    for (node, weight) in avg.exact_points().unwrap() {
        println!("  node {node}   weight {weight}");
    }
    println!(
        "exactness degree {} (both parents have degree 3)",
        avg.exactness_degree().unwrap()
    );

    // rescaling to [0, 1]: nodes map through the affine change of variables
    let scaled = builtin_rule("rad2l")
        .unwrap()
        .rescale(&rat(0, 1), &rat(1, 1))
        .unwrap();
    println!("\nrad2l rescaled to [0, 1]:");
    for (node, weight) in scaled.exact_points().unwrap() {
        println!("  node {node}   weight {weight}");
    }

    // the interval-backend rules for the higher orders
    let table = NodeTable::embedded();
    println!("\nnumeric-backend rules (certified interval coefficients):");
    for name in table.rule_names() {
        let rule = table.rule(name).unwrap();
        println!("  {name:<6} {} points", rule.points().len());
    }
}
