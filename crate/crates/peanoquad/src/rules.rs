//! Quadrature rules on [−1, 1]: the named exact rules, affine combinations,
//! rescaling, application, exactness degrees and symmetry detection.
//!
//! Every node and weight of the exact backend is a `FieldElement`, so node
//! coincidence in `combine` and all the invariant checks are decidable. Rules
//! whose nodes fall outside Q(√3, √5) (the four- and five-point Gauss and
//! Lobatto rules used for the kernel plots) carry certified interval
//! coefficients instead and reject the exact-only operations.

use crate::field::FieldElement;
use crate::interval::RationalInterval;
use crate::poly::Polynomial;
use crate::rational::{rat, rat_int, Rational};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("unknown rule name `{0}`")]
    UnknownRule(String),
    #[error("operation requires the exact backend, rule `{0}` has numeric coefficients")]
    NotExact(String),
    #[error("cannot order nodes: enclosures overlap without being identical")]
    AmbiguousNodeOrder,
    #[error("a rule combination needs at least one term")]
    EmptyCombination,
    #[error("nodes must be distinct, got a duplicate at {0}")]
    DuplicateNode(String),
    #[error("singular weight system for the requested exactness degree")]
    SingularSystem,
    #[error("rescale needs x < y")]
    BadInterval,
}

/// An exact field coefficient or a certified interval enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleValue {
    Exact(FieldElement),
    Approx(RationalInterval),
}

impl RuleValue {
    pub fn as_exact(&self) -> Option<&FieldElement> {
        match self {
            RuleValue::Exact(x) => Some(x),
            RuleValue::Approx(_) => None,
        }
    }

    /// Certified enclosure of the value at roughly `digits` decimal digits.
    pub fn enclosure(&self, digits: u32) -> RationalInterval {
        match self {
            RuleValue::Exact(x) => x.to_interval_digits(digits),
            RuleValue::Approx(i) => i.clone(),
        }
    }

    fn value_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RuleValue::Exact(x), RuleValue::Exact(y)) => x == y,
            (RuleValue::Approx(x), RuleValue::Approx(y)) => x == y,
            (RuleValue::Exact(x), RuleValue::Approx(i))
            | (RuleValue::Approx(i), RuleValue::Exact(x)) => {
                i.is_point() && x.as_rational() == Some(i.lo())
            }
        }
    }

    fn value_cmp(&self, other: &Self) -> Result<Ordering, RuleError> {
        if self.value_eq(other) {
            return Ok(Ordering::Equal);
        }
        if let (RuleValue::Exact(x), RuleValue::Exact(y)) = (self, other) {
            return Ok(x.cmp(y));
        }
        for bits in [64u32, 128, 256, 512] {
            let a = match self {
                RuleValue::Exact(x) => x.to_interval_bits(bits),
                RuleValue::Approx(i) => i.clone(),
            };
            let b = match other {
                RuleValue::Exact(x) => x.to_interval_bits(bits),
                RuleValue::Approx(i) => i.clone(),
            };
            if a.hi() < b.lo() {
                return Ok(Ordering::Less);
            }
            if b.hi() < a.lo() {
                return Ok(Ordering::Greater);
            }
        }
        Err(RuleError::AmbiguousNodeOrder)
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (RuleValue::Exact(x), RuleValue::Exact(y)) => RuleValue::Exact(x + y),
            _ => RuleValue::Approx(self.enclosure(60).add(&other.enclosure(60))),
        }
    }

    fn scale(&self, s: &Rational) -> Self {
        match self {
            RuleValue::Exact(x) => RuleValue::Exact(x.scale(s)),
            RuleValue::Approx(i) => RuleValue::Approx(i.scale(s)),
        }
    }

    fn affine(&self, alpha: &Rational, beta: &Rational) -> Self {
        match self {
            RuleValue::Exact(x) => {
                RuleValue::Exact(x.scale(alpha) + FieldElement::from_rational(beta.clone()))
            }
            RuleValue::Approx(i) => RuleValue::Approx(i.scale(alpha).shift(beta)),
        }
    }

    fn neg(&self) -> Self {
        match self {
            RuleValue::Exact(x) => RuleValue::Exact(-x),
            RuleValue::Approx(i) => RuleValue::Approx(i.neg()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraturePoint {
    node: RuleValue,
    weight: RuleValue,
}

impl QuadraturePoint {
    pub fn node(&self) -> &RuleValue {
        &self.node
    }

    pub fn weight(&self) -> &RuleValue {
        &self.weight
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Numeric { decimal_places: u32 },
}

/// A weighted point rule approximating ∫_{-1}^{1} (or, after `rescale`, an
/// integral over an arbitrary interval). Nodes are strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadratureRule {
    name: String,
    points: Vec<QuadraturePoint>,
    backend: Backend,
}

impl QuadratureRule {
    pub(crate) fn from_parts(
        name: String,
        mut pairs: Vec<(RuleValue, RuleValue)>,
        backend: Backend,
    ) -> Result<Self, RuleError> {
        let mut err = None;
        pairs.sort_by(|a, b| match a.0.value_cmp(&b.0) {
            Ok(o) => o,
            Err(e) => {
                err = Some(e);
                Ordering::Equal
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        for w in pairs.windows(2) {
            if w[0].0.value_eq(&w[1].0) {
                return Err(RuleError::DuplicateNode(format!("{:?}", w[0].0)));
            }
        }
        let points = pairs
            .into_iter()
            .map(|(node, weight)| QuadraturePoint { node, weight })
            .collect();
        Ok(Self {
            name,
            points,
            backend,
        })
    }

    fn exact(name: &str, pairs: Vec<(FieldElement, FieldElement)>) -> Self {
        let pairs = pairs
            .into_iter()
            .map(|(n, w)| (RuleValue::Exact(n), RuleValue::Exact(w)))
            .collect();
        Self::from_parts(name.to_string(), pairs, Backend::Exact)
            .expect("exact builtin rules are well formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[QuadraturePoint] {
        &self.points
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn is_exact_backend(&self) -> bool {
        matches!(self.backend, Backend::Exact)
    }

    /// Exact nodes and weights; `Err` when any coefficient is only numeric.
    pub fn exact_points(&self) -> Result<Vec<(&FieldElement, &FieldElement)>, RuleError> {
        self.points
            .iter()
            .map(|p| match (p.node.as_exact(), p.weight.as_exact()) {
                (Some(n), Some(w)) => Ok((n, w)),
                _ => Err(RuleError::NotExact(self.name.clone())),
            })
            .collect()
    }

    /// Exact sum of weights (exact backend).
    pub fn weight_sum(&self) -> Result<FieldElement, RuleError> {
        let pts = self.exact_points()?;
        let mut acc = FieldElement::zero();
        for (_, w) in pts {
            acc += w;
        }
        Ok(acc)
    }

    /// Σ wᵢ·p(xᵢ), exact in the field.
    pub fn apply_poly(&self, p: &Polynomial) -> Result<FieldElement, RuleError> {
        let pts = self.exact_points()?;
        let mut acc = FieldElement::zero();
        for (n, w) in pts {
            acc += &(w * &p.eval(n));
        }
        Ok(acc)
    }

    /// Σ wᵢ·f(xᵢ) with f evaluated at interval enclosures of the nodes;
    /// the result is a certified enclosure whenever `f` is.
    pub fn apply_enclosure(
        &self,
        f: impl Fn(&RationalInterval) -> RationalInterval,
        digits: u32,
    ) -> RationalInterval {
        let mut acc = RationalInterval::zero();
        for p in &self.points {
            let fx = f(&p.node.enclosure(digits));
            acc = acc.add(&p.weight.enclosure(digits).mul(&fx));
        }
        acc
    }

    /// Σ wᵢ·f(xᵢ) with plain floating-point evaluation of `f` at node
    /// midpoints (taken at `digits` decimal digits).
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64, digits: u32) -> f64 {
        self.points
            .iter()
            .map(|p| {
                let x = crate::rational::to_f64(&p.node.enclosure(digits).midpoint());
                let w = crate::rational::to_f64(&p.weight.enclosure(digits).midpoint());
                w * f(x)
            })
            .sum()
    }

    /// Largest d with Q[x^k] = ∫_{-1}^{1} x^k dx for all k ≤ d (exact backend).
    pub fn exactness_degree(&self) -> Result<u32, RuleError> {
        let cap = 2 * self.points.len() + 2;
        for k in 0..=cap {
            let q = self.apply_poly(&Polynomial::monomial(k))?;
            let exact = if k % 2 == 0 {
                FieldElement::from_rational(rat(2, (k + 1) as i64))
            } else {
                FieldElement::zero()
            };
            if q != exact {
                return Ok(k as u32 - 1);
            }
        }
        unreachable!("a finite rule cannot integrate all monomials exactly")
    }

    /// True iff the node multiset is symmetric about 0 with matching weights.
    pub fn is_symmetric(&self) -> bool {
        let n = self.points.len();
        for i in 0..n.div_ceil(2) {
            let a = &self.points[i];
            let b = &self.points[n - 1 - i];
            if !a.node.value_eq(&b.node.neg()) || !a.weight.value_eq(&b.weight) {
                return false;
            }
        }
        true
    }

    /// Affine image of the rule: approximates ∫_x^y after mapping
    /// t ↦ ((y−x)t + x + y)/2 with weights scaled by (y−x)/2.
    pub fn rescale(&self, x: &Rational, y: &Rational) -> Result<QuadratureRule, RuleError> {
        if x >= y {
            return Err(RuleError::BadInterval);
        }
        let alpha = (y - x) / rat_int(2);
        let beta = (x + y) / rat_int(2);
        let pairs = self
            .points
            .iter()
            .map(|p| (p.node.affine(&alpha, &beta), p.weight.scale(&alpha)))
            .collect();
        Self::from_parts(format!("{}@[{},{}]", self.name, x, y), pairs, self.backend)
    }

    /// Negated copy (weights flipped), used to build ∫ − Q functionals.
    pub(crate) fn negate_weights(&self) -> QuadratureRule {
        let points = self
            .points
            .iter()
            .map(|p| QuadraturePoint {
                node: p.node.clone(),
                weight: p.weight.neg(),
            })
            .collect();
        QuadratureRule {
            name: format!("-({})", self.name),
            points,
            backend: self.backend,
        }
    }
}

/// Names of the exact built-in rules.
pub const BUILTIN_RULES: [&str; 8] = [
    "midpoint",
    "trapezoid",
    "rad2l",
    "rad2r",
    "g2",
    "g3",
    "lob3",
    "lob4",
];

/// Constructs one of the exact named rules on [−1, 1].
pub fn builtin_rule(name: &str) -> Result<QuadratureRule, RuleError> {
    let fe_rat = |n: i64, d: i64| FieldElement::from_rational(rat(n, d));
    let rule = match name {
        "midpoint" => QuadratureRule::exact(
            name,
            vec![(FieldElement::zero(), FieldElement::from_int(2))],
        ),
        "trapezoid" => QuadratureRule::exact(
            name,
            vec![
                (FieldElement::from_int(-1), FieldElement::one()),
                (FieldElement::one(), FieldElement::one()),
            ],
        ),
        "rad2l" => QuadratureRule::exact(
            name,
            vec![
                (FieldElement::from_int(-1), fe_rat(1, 2)),
                (fe_rat(1, 3), fe_rat(3, 2)),
            ],
        ),
        "rad2r" => QuadratureRule::exact(
            name,
            vec![
                (fe_rat(-1, 3), fe_rat(3, 2)),
                (FieldElement::from_int(1), fe_rat(1, 2)),
            ],
        ),
        "g2" => {
            let n = FieldElement::sqrt3().scale(&rat(1, 3));
            QuadratureRule::exact(
                name,
                vec![(-&n, FieldElement::one()), (n, FieldElement::one())],
            )
        }
        "g3" => {
            let n = FieldElement::sqrt15().scale(&rat(1, 5));
            QuadratureRule::exact(
                name,
                vec![
                    (-&n, fe_rat(5, 9)),
                    (FieldElement::zero(), fe_rat(8, 9)),
                    (n, fe_rat(5, 9)),
                ],
            )
        }
        "lob3" => QuadratureRule::exact(
            name,
            vec![
                (FieldElement::from_int(-1), fe_rat(1, 3)),
                (FieldElement::zero(), fe_rat(4, 3)),
                (FieldElement::from_int(1), fe_rat(1, 3)),
            ],
        ),
        "lob4" => {
            let n = FieldElement::sqrt5().scale(&rat(1, 5));
            QuadratureRule::exact(
                name,
                vec![
                    (FieldElement::from_int(-1), fe_rat(1, 6)),
                    (-&n, fe_rat(5, 6)),
                    (n, fe_rat(5, 6)),
                    (FieldElement::from_int(1), fe_rat(1, 6)),
                ],
            )
        }
        other => return Err(RuleError::UnknownRule(other.to_string())),
    };
    debug_assert_eq!(
        rule.weight_sum().unwrap(),
        FieldElement::from_int(2),
        "builtin weights must sum to 2"
    );
    debug_assert!(rule.points.iter().all(|p| {
        let n = p.node.as_exact().unwrap();
        *n >= FieldElement::from_int(-1) && *n <= FieldElement::one()
    }));
    Ok(rule)
}

/// A formal linear combination of rules.
#[derive(Debug, Clone)]
pub struct RuleCombination {
    terms: Vec<(Rational, QuadratureRule)>,
}

impl RuleCombination {
    pub fn new(terms: Vec<(Rational, QuadratureRule)>) -> Result<Self, RuleError> {
        if terms.is_empty() {
            return Err(RuleError::EmptyCombination);
        }
        Ok(Self { terms })
    }

    pub fn single(rule: QuadratureRule) -> Self {
        Self {
            terms: vec![(Rational::one(), rule)],
        }
    }

    pub fn terms(&self) -> &[(Rational, QuadratureRule)] {
        &self.terms
    }

    /// Flattens to a single rule, merging coincident nodes by exact equality.
    pub fn flatten(&self) -> Result<QuadratureRule, RuleError> {
        combine(&self.term_refs())
    }

    fn term_refs(&self) -> Vec<(Rational, &QuadratureRule)> {
        self.terms.iter().map(|(c, r)| (c.clone(), r)).collect()
    }

    pub fn describe(&self) -> String {
        self.terms
            .iter()
            .map(|(c, r)| format!("{}*{}", c, r.name()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Merges weighted rules into a single rule; coincident nodes (decided by
/// exact equality) have their weights added.
pub fn combine(terms: &[(Rational, &QuadratureRule)]) -> Result<QuadratureRule, RuleError> {
    if terms.is_empty() {
        return Err(RuleError::EmptyCombination);
    }
    let mut merged: Vec<(RuleValue, RuleValue)> = Vec::new();
    for (coef, rule) in terms {
        for p in rule.points() {
            let w = p.weight.scale(coef);
            match merged.iter_mut().find(|(n, _)| n.value_eq(&p.node)) {
                Some((_, acc)) => *acc = acc.add(&w),
                None => merged.push((p.node.clone(), w)),
            }
        }
    }
    // drop nodes whose merged weight is exactly zero
    merged.retain(|(_, w)| match w {
        RuleValue::Exact(x) => !x.is_zero(),
        RuleValue::Approx(_) => true,
    });
    let backend = if merged
        .iter()
        .all(|(n, w)| n.as_exact().is_some() && w.as_exact().is_some())
    {
        Backend::Exact
    } else {
        Backend::Numeric { decimal_places: 50 }
    };
    let name = terms
        .iter()
        .map(|(c, r)| format!("{}*{}", c, r.name()))
        .collect::<Vec<_>>()
        .join("+");
    QuadratureRule::from_parts(name, merged, backend)
}

/// Builds a symmetric rule with node pairs ±xᵢ (xᵢ the given distinct positive
/// rationals) whose weights are solved exactly so the rule integrates every
/// polynomial of degree ≤ r−1; r must be even and equal to twice the number of
/// pairs.
pub fn symmetric_rule_exact_on_degree(
    pair_nodes: &[Rational],
    r: u32,
) -> Result<QuadratureRule, RuleError> {
    assert!(
        r >= 2 && r.is_multiple_of(2),
        "order must be a positive even number"
    );
    let m = (r / 2) as usize;
    assert_eq!(pair_nodes.len(), m, "need exactly r/2 node pairs");
    assert!(
        pair_nodes.iter().all(|x| x.is_positive()),
        "pair nodes must be positive"
    );
    // moment equations: sum_i 2 w_i x_i^(2j) = 2/(2j+1), j = 0..m-1
    let mut matrix = vec![vec![Rational::zero(); m + 1]; m];
    for (j, row) in matrix.iter_mut().enumerate() {
        for (i, x) in pair_nodes.iter().enumerate() {
            let mut p = Rational::one();
            for _ in 0..(2 * j) {
                p *= x;
            }
            row[i] = rat_int(2) * p;
        }
        row[m] = rat(2, 2 * j as i64 + 1);
    }
    let weights = solve_linear(matrix).ok_or(RuleError::SingularSystem)?;
    let mut pairs = Vec::new();
    for (x, w) in pair_nodes.iter().zip(&weights) {
        let n = FieldElement::from_rational(x.clone());
        let w = FieldElement::from_rational(w.clone());
        pairs.push((RuleValue::Exact(-&n), RuleValue::Exact(w.clone())));
        pairs.push((RuleValue::Exact(n), RuleValue::Exact(w)));
    }
    QuadratureRule::from_parts(format!("sym{r}"), pairs, Backend::Exact)
}

/// Gaussian elimination over the rationals on an augmented matrix.
fn solve_linear(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].clone().recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let f = m[row][col].clone();
                let pivot_row = m[col].clone();
                for (k, v) in m[row].iter_mut().enumerate().skip(col) {
                    let sub = &pivot_row[k] * &f;
                    *v -= sub;
                }
            }
        }
    }
    Some(
        m.into_iter()
            .map(|row| row[row.len() - 1].clone())
            .collect(),
    )
}
