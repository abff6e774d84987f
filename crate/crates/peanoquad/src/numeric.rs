//! Numeric-backend node tables.
//!
//! The four- and five-point Gauss-Legendre and Lobatto rules have nodes
//! outside Q(√3, √5), so they are ingested from a versioned JSON data file as
//! high-precision decimal strings (rational entries are exact `p/q` strings).
//! Each decimal is accurate to within 10^-50 of the true algebraic value; the
//! loader inflates it to a certified interval of that radius.

use crate::interval::RationalInterval;
use crate::rational::{parse_rational, pow10, rat, Rational};
use crate::rules::{Backend, QuadratureRule, RuleError, RuleValue};
use serde::Deserialize;
use std::path::Path;
use thiserror::Error;

/// The table checked in alongside the crate.
pub const EMBEDDED_NODE_TABLE: &str = include_str!("../data/numeric_nodes.json");

#[derive(Debug, Error)]
pub enum NodeTableError {
    #[error("cannot read node table: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse node table: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad value `{0}` in node table")]
    BadValue(String),
    #[error("unsupported node table version {0}")]
    Version(u32),
    #[error(transparent)]
    Rule(#[from] RuleError),
}

#[derive(Debug, Clone, Deserialize)]
pub struct NodeTable {
    pub version: u32,
    pub decimal_places: u32,
    #[serde(default)]
    pub description: String,
    pub rules: Vec<TableRule>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TableRule {
    pub name: String,
    pub exactness_degree: u32,
    pub points: Vec<TablePoint>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TablePoint {
    pub node: String,
    pub weight: String,
}

impl NodeTable {
    pub fn embedded() -> Self {
        serde_json::from_str(EMBEDDED_NODE_TABLE).expect("embedded node table is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self, NodeTableError> {
        let text = std::fs::read_to_string(path)?;
        let table: NodeTable = serde_json::from_str(&text)?;
        if table.version != 1 {
            return Err(NodeTableError::Version(table.version));
        }
        Ok(table)
    }

    pub fn rule_names(&self) -> Vec<&str> {
        self.rules.iter().map(|r| r.name.as_str()).collect()
    }

    /// Builds the named rule with certified interval coefficients.
    pub fn rule(&self, name: &str) -> Result<QuadratureRule, NodeTableError> {
        let entry = self
            .rules
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| RuleError::UnknownRule(name.to_string()))?;
        let mut pairs = Vec::with_capacity(entry.points.len());
        let slack = pow10(self.decimal_places - 1).recip();
        let lo_bound = rat(-1, 1) - &slack;
        let hi_bound = rat(1, 1) + &slack;
        for p in &entry.points {
            let node = self.parse_value(&p.node)?;
            if let RuleValue::Approx(enc) = &node {
                if enc.lo() < &lo_bound || enc.hi() > &hi_bound {
                    return Err(NodeTableError::BadValue(format!(
                        "node {} outside [-1, 1]",
                        p.node
                    )));
                }
            }
            pairs.push((node, self.parse_value(&p.weight)?));
        }
        Ok(QuadratureRule::from_parts(
            name.to_string(),
            pairs,
            Backend::Numeric {
                decimal_places: self.decimal_places,
            },
        )?)
    }

    /// Exact `p/q` strings become point values; decimal strings become
    /// intervals of radius 10^-(decimal_places - 1).
    fn parse_value(&self, text: &str) -> Result<RuleValue, NodeTableError> {
        let v: Rational =
            parse_rational(text).map_err(|_| NodeTableError::BadValue(text.to_string()))?;
        if text.contains('.') {
            let radius = pow10(self.decimal_places - 1).recip();
            Ok(RuleValue::Approx(RationalInterval::new(
                &v - &radius,
                &v + &radius,
            )))
        } else {
            Ok(RuleValue::Approx(RationalInterval::point(v)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn embedded_table_loads_all_four_rules() {
        let table = NodeTable::embedded();
        assert_eq!(table.version, 1);
        for name in ["g4", "g5", "lob5", "lob6"] {
            let rule = table.rule(name).unwrap();
            assert!(!rule.is_exact_backend());
            assert!(rule.is_symmetric(), "{name}");
        }
        assert!(table.rule("g9").is_err());
    }

    #[test]
    fn loaded_intervals_satisfy_the_moment_conditions() {
        // Σw = 2 and Q[x^k] = ∫ x^k within the table's certified radius, up
        // to the declared exactness degree.
        let table = NodeTable::embedded();
        let tol = pow10(45).recip();
        for entry in &table.rules {
            let rule = table.rule(&entry.name).unwrap();
            for k in 0..=entry.exactness_degree {
                let q = rule.apply_enclosure(|x| x.pow(k), 50);
                let exact = if k % 2 == 0 {
                    rat(2, k as i64 + 1)
                } else {
                    rat(0, 1)
                };
                assert!(
                    (q.lo() - &exact).abs() <= tol && (q.hi() - &exact).abs() <= tol,
                    "{} fails moment {k}",
                    entry.name
                );
            }
            // the next even moment must be visibly off
            let k = entry.exactness_degree + 1;
            let q = rule.apply_enclosure(|x| x.pow(k), 50);
            let exact = rat(2, k as i64 + 1);
            assert!((q.midpoint() - exact).abs() > pow10(9).recip());
        }
    }

    #[test]
    fn endpoint_nodes_are_exact_points() {
        let table = NodeTable::embedded();
        let lob5 = table.rule("lob5").unwrap();
        let first = lob5.points().first().unwrap();
        match first.node() {
            RuleValue::Approx(i) => {
                assert!(i.is_point());
                assert_eq!(i.lo(), &rat(-1, 1));
            }
            RuleValue::Exact(_) => panic!("table values load as intervals"),
        }
    }
}
