//! Divided differences, sampled higher-order convexity checks, and the corpus
//! of test integrands.
//!
//! A function is n-convex when all its divided differences of order n+1 (over
//! n+2 points) are nonnegative; 1-convex is ordinary convexity. Sampling can
//! only ever refute convexity, so the positive verdict is named
//! `ConsistentWithConvex` rather than proved.

use crate::field::FieldElement;
use crate::interval::{
    exp_interval_enclosure, exp_point_enclosure, ln_interval_enclosure, RationalInterval,
};
use crate::rational::{pow10, rat, rat_int, Rational};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConvexityError {
    #[error("divided differences need pairwise distinct points")]
    DuplicatePoints,
    #[error("points and values must have equal, nonzero length")]
    LengthMismatch,
    #[error("function `{0}` cannot be evaluated exactly")]
    NotExactlyEvaluable(String),
    #[error("no closed-form reference integral for `{0}`")]
    UnsupportedIntegral(String),
    #[error("denominator vanishes inside the requested interval")]
    DenominatorVanishes,
}

/// [x₁,…,x_{k};f] for pairwise distinct points, by the standard recurrence.
pub fn divided_difference(
    points: &[Rational],
    values: &[Rational],
) -> Result<Rational, ConvexityError> {
    if points.is_empty() || points.len() != values.len() {
        return Err(ConvexityError::LengthMismatch);
    }
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            if x == y {
                return Err(ConvexityError::DuplicatePoints);
            }
        }
    }
    let mut row: Vec<Rational> = values.to_vec();
    for order in 1..points.len() {
        for i in 0..(points.len() - order) {
            let num = &row[i + 1] - &row[i];
            let den = &points[i + order] - &points[i];
            row[i] = num / den;
        }
        row.truncate(points.len() - order);
    }
    Ok(row.into_iter().next().unwrap())
}

/// The full triangular table of divided differences over strictly increasing
/// points; `entry(k, i)` is [x_i, …, x_{i+k}; f].
#[derive(Debug, Clone)]
pub struct DividedDifferenceTable {
    points: Vec<Rational>,
    table: Vec<Vec<Rational>>,
}

impl DividedDifferenceTable {
    pub fn build(points: Vec<Rational>, values: Vec<Rational>) -> Result<Self, ConvexityError> {
        if points.is_empty() || points.len() != values.len() {
            return Err(ConvexityError::LengthMismatch);
        }
        if !points.windows(2).all(|w| w[0] < w[1]) {
            return Err(ConvexityError::DuplicatePoints);
        }
        let mut table = vec![values];
        for order in 1..points.len() {
            let prev = &table[order - 1];
            let mut row = Vec::with_capacity(points.len() - order);
            for i in 0..(points.len() - order) {
                let num = &prev[i + 1] - &prev[i];
                let den = &points[i + order] - &points[i];
                row.push(num / den);
            }
            table.push(row);
        }
        Ok(Self { points, table })
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn entry(&self, order: usize, i: usize) -> &Rational {
        &self.table[order][i]
    }

    /// The top entry [x₁,…,x_n;f].
    pub fn top(&self) -> &Rational {
        &self.table[self.points.len() - 1][0]
    }
}

/// How a corpus function evaluates.
#[derive(Debug, Clone)]
pub enum FunctionKind {
    /// Ascending rational coefficients.
    Polynomial(Vec<Rational>),
    /// numerator(x) / denominator(x); the denominator must not vanish on the
    /// domain of use. Reference integrals require deg(denominator) ≤ 1.
    RationalFunction {
        numerator: Vec<Rational>,
        denominator: Vec<Rational>,
    },
    Exp,
    /// x ↦ max(x, 0)^n.
    TruncatedPower(u32),
}

/// Highest r with f ∈ C^r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Smoothness {
    Infinite,
    Finite(u32),
}

impl Smoothness {
    pub fn at_least(&self, r: u32) -> bool {
        match self {
            Smoothness::Infinite => true,
            Smoothness::Finite(k) => *k >= r,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusFunction {
    name: String,
    kind: FunctionKind,
    known_convexity_orders: BTreeSet<u32>,
    smoothness: Smoothness,
}

fn eval_poly_rational(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn eval_poly_field(coeffs: &[Rational], x: &FieldElement) -> FieldElement {
    let mut acc = FieldElement::zero();
    for c in coeffs.iter().rev() {
        acc = &acc * x + &FieldElement::from_rational(c.clone());
    }
    acc
}

fn eval_poly_interval(coeffs: &[Rational], x: &RationalInterval) -> RationalInterval {
    let mut acc = RationalInterval::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).shift(c);
    }
    acc
}

fn integrate_poly(coeffs: &[Rational], a: &Rational, b: &Rational) -> Rational {
    let anti: Vec<Rational> = std::iter::once(Rational::zero())
        .chain(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / rat_int(i as i64 + 1)),
        )
        .collect();
    eval_poly_rational(&anti, b) - eval_poly_rational(&anti, a)
}

impl CorpusFunction {
    pub fn new(
        name: impl Into<String>,
        kind: FunctionKind,
        known_convexity_orders: BTreeSet<u32>,
        smoothness: Smoothness,
    ) -> Self {
        Self {
            name: name.into(),
            kind,
            known_convexity_orders,
            smoothness,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    pub fn known_convexity_orders(&self) -> &BTreeSet<u32> {
        &self.known_convexity_orders
    }

    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }

    pub fn is_declared_convex(&self, n: u32) -> bool {
        self.known_convexity_orders.contains(&n)
    }

    /// Exact value at a rational point, when the function is rational-valued.
    pub fn eval_rational(&self, x: &Rational) -> Option<Rational> {
        match &self.kind {
            FunctionKind::Polynomial(c) => Some(eval_poly_rational(c, x)),
            FunctionKind::RationalFunction {
                numerator,
                denominator,
            } => {
                let den = eval_poly_rational(denominator, x);
                if den.is_zero() {
                    return None;
                }
                Some(eval_poly_rational(numerator, x) / den)
            }
            FunctionKind::Exp => None,
            FunctionKind::TruncatedPower(n) => {
                if x.is_negative() {
                    Some(Rational::zero())
                } else {
                    let mut acc = Rational::one();
                    for _ in 0..*n {
                        acc *= x;
                    }
                    Some(acc)
                }
            }
        }
    }

    /// Exact value at a field element (rules with surd nodes), when possible.
    pub fn eval_field(&self, x: &FieldElement) -> Option<FieldElement> {
        match &self.kind {
            FunctionKind::Polynomial(c) => Some(eval_poly_field(c, x)),
            FunctionKind::RationalFunction {
                numerator,
                denominator,
            } => {
                let den = eval_poly_field(denominator, x);
                den.inverse()
                    .ok()
                    .map(|inv| eval_poly_field(numerator, x) * inv)
            }
            FunctionKind::Exp => None,
            FunctionKind::TruncatedPower(n) => {
                if x.is_negative() {
                    Some(FieldElement::zero())
                } else {
                    Some(x.pow(*n))
                }
            }
        }
    }

    /// Certified enclosure of f over a rational interval.
    pub fn eval_interval(&self, x: &RationalInterval, digits: u32) -> RationalInterval {
        match &self.kind {
            FunctionKind::Polynomial(c) => eval_poly_interval(c, x),
            FunctionKind::RationalFunction {
                numerator,
                denominator,
            } => {
                let den = eval_poly_interval(denominator, x);
                eval_poly_interval(numerator, x).div(&den)
            }
            FunctionKind::Exp => exp_interval_enclosure(x, digits),
            FunctionKind::TruncatedPower(n) => x.truncated_pow(*n),
        }
    }

    /// Certified enclosure of ∫_a^b f, computed from closed-form
    /// antiderivatives (exact for the rational-valued members, series
    /// enclosures of exp/ln otherwise) — independent of any quadrature rule.
    pub fn reference_integral(
        &self,
        a: &Rational,
        b: &Rational,
        digits: u32,
    ) -> Result<RationalInterval, ConvexityError> {
        match &self.kind {
            FunctionKind::Polynomial(c) => Ok(RationalInterval::point(integrate_poly(c, a, b))),
            FunctionKind::Exp => {
                let ea = exp_point_enclosure(a, digits);
                let eb = exp_point_enclosure(b, digits);
                Ok(eb.sub(&ea))
            }
            FunctionKind::TruncatedPower(n) => {
                let clamp = |v: &Rational| {
                    if v.is_negative() {
                        Rational::zero()
                    } else {
                        v.clone()
                    }
                };
                let k = *n as i64 + 1;
                let pw = |v: Rational| {
                    let mut acc = Rational::one();
                    for _ in 0..k {
                        acc *= &v;
                    }
                    acc
                };
                Ok(RationalInterval::point(
                    (pw(clamp(b)) - pw(clamp(a))) / rat_int(k),
                ))
            }
            FunctionKind::RationalFunction {
                numerator,
                denominator,
            } => self.integrate_rational_function(numerator, denominator, a, b, digits),
        }
    }

    // ∫ p/(αx+β) = ∫ q + (ρ/α)·ln((αb+β)/(αa+β)) after division p = q·(αx+β) + ρ.
    fn integrate_rational_function(
        &self,
        numerator: &[Rational],
        denominator: &[Rational],
        a: &Rational,
        b: &Rational,
        digits: u32,
    ) -> Result<RationalInterval, ConvexityError> {
        let den: Vec<Rational> = {
            let mut d = denominator.to_vec();
            while d.last().is_some_and(Rational::is_zero) {
                d.pop();
            }
            d
        };
        match den.len() {
            0 => Err(ConvexityError::DenominatorVanishes),
            1 => {
                let scaled: Vec<Rational> = numerator.iter().map(|c| c / &den[0]).collect();
                Ok(RationalInterval::point(integrate_poly(&scaled, a, b)))
            }
            2 => {
                let (beta, alpha) = (&den[0], &den[1]);
                let da = alpha * a + beta;
                let db = alpha * b + beta;
                if da.is_zero() || db.is_zero() || (da.is_positive() != db.is_positive()) {
                    return Err(ConvexityError::DenominatorVanishes);
                }
                // synthetic division of the numerator by (αx + β)
                let root = -(beta / alpha);
                let mut quotient = vec![Rational::zero(); numerator.len().saturating_sub(1)];
                let mut carry = Rational::zero();
                for (i, c) in numerator.iter().enumerate().rev() {
                    let v = c + &carry * &root;
                    if i == 0 {
                        carry = v;
                        break;
                    }
                    quotient[i - 1] = v.clone() / alpha;
                    carry = v;
                }
                let remainder = carry;
                let poly_part = integrate_poly(&quotient, a, b);
                let ratio = db / &da;
                let log = ln_interval_enclosure(&RationalInterval::point(ratio), digits);
                let coef = remainder / alpha;
                Ok(log.scale(&coef).shift(&poly_part))
            }
            _ => Err(ConvexityError::UnsupportedIntegral(self.name.clone())),
        }
    }
}

/// Sampled-convexity outcome: sampling can refute, never prove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvexityVerdict {
    ConsistentWithConvex,
    CounterexampleTuple(Vec<Rational>),
}

/// Tests [x₁,…,x_{n+2};f] ≥ 0 on random sorted tuples. Exactly for
/// rational-valued members; for exp the values are midpoints of certified
/// enclosures at 30 digits and the test tolerance is −10⁻⁹.
pub fn is_n_convex_sampled(
    f: &CorpusFunction,
    n: u32,
    trials: u32,
    domain: (&Rational, &Rational),
    rng: &mut impl Rng,
) -> Result<ConvexityVerdict, ConvexityError> {
    assert!(trials >= 1, "need at least one trial");
    let (a, b) = domain;
    assert!(a < b, "empty domain");
    let width = b - a;
    let exact = !matches!(f.kind, FunctionKind::Exp);
    let tolerance = if exact {
        Rational::zero()
    } else {
        -pow10(9).recip()
    };
    // grid resolution 2^13 with a minimum pairwise separation of width/1000
    const GRID: i64 = 8192;
    const MIN_SEP: i64 = 9;
    let count = (n + 2) as usize;
    for _ in 0..trials {
        let mut ticks: Vec<i64>;
        loop {
            ticks = (0..count).map(|_| rng.random_range(0..=GRID)).collect();
            ticks.sort_unstable();
            if ticks.windows(2).all(|w| w[1] - w[0] >= MIN_SEP) {
                break;
            }
        }
        let points: Vec<Rational> = ticks.iter().map(|t| a + &width * rat(*t, GRID)).collect();
        let values: Vec<Rational> = points
            .iter()
            .map(|x| match f.eval_rational(x) {
                Some(v) => Ok(v),
                None => match f.kind {
                    FunctionKind::Exp => Ok(exp_point_enclosure(x, 30).midpoint()),
                    _ => Err(ConvexityError::NotExactlyEvaluable(f.name.clone())),
                },
            })
            .collect::<Result<_, _>>()?;
        let dd = divided_difference(&points, &values)?;
        if dd < tolerance {
            return Ok(ConvexityVerdict::CounterexampleTuple(points));
        }
    }
    Ok(ConvexityVerdict::ConsistentWithConvex)
}

/// The canonical n-convex spline x ↦ x₊ⁿ = max(x,0)ⁿ, which is C^{n-1} but
/// not C^n at the origin.
pub fn truncated_power(n: u32) -> CorpusFunction {
    assert!(n >= 1);
    CorpusFunction::new(
        format!("xplus{n}"),
        FunctionKind::TruncatedPower(n),
        (0..=n).collect(),
        Smoothness::Finite(n - 1),
    )
}

const MAX_DECLARED_ORDER: u32 = 8;

/// The named integrand corpus: monomials x⁰..x⁸, exp, (x+1)/(x+2), (x+2)⁴ and
/// the truncated powers x₊¹..x₊⁶, each with its analytically known convexity
/// orders and smoothness class.
pub fn corpus() -> Vec<CorpusFunction> {
    let mut out = Vec::new();
    for k in 0u32..=8 {
        let mut coeffs = vec![Rational::zero(); k as usize + 1];
        coeffs[k as usize] = Rational::one();
        // x^k is n-convex on [-1,1] iff the (n+1)-th derivative is >= 0 there:
        // always for n >= k (it vanishes), otherwise iff k-n-1 is even
        let orders = (0..=MAX_DECLARED_ORDER)
            .filter(|&n| n >= k || (k - n - 1) % 2 == 0)
            .collect();
        out.push(CorpusFunction::new(
            format!("x^{k}"),
            FunctionKind::Polynomial(coeffs),
            orders,
            Smoothness::Infinite,
        ));
    }
    out.push(CorpusFunction::new(
        "exp",
        FunctionKind::Exp,
        (0..=MAX_DECLARED_ORDER).collect(),
        Smoothness::Infinite,
    ));
    // (x+1)/(x+2): derivatives alternate in sign from f'' on, so exactly the
    // even orders are convex
    out.push(CorpusFunction::new(
        "(x+1)/(x+2)",
        FunctionKind::RationalFunction {
            numerator: vec![Rational::one(), Rational::one()],
            denominator: vec![rat_int(2), Rational::one()],
        },
        (0..=MAX_DECLARED_ORDER).filter(|n| n % 2 == 0).collect(),
        Smoothness::Infinite,
    ));
    // (x+2)^4 = 16 + 32x + 24x^2 + 8x^3 + x^4: all derivatives nonnegative on [-1,1]
    out.push(CorpusFunction::new(
        "(x+2)^4",
        FunctionKind::Polynomial(vec![
            rat_int(16),
            rat_int(32),
            rat_int(24),
            rat_int(8),
            Rational::one(),
        ]),
        (0..=MAX_DECLARED_ORDER).collect(),
        Smoothness::Infinite,
    ));
    for n in 1..=6 {
        out.push(truncated_power(n));
    }
    out
}

/// Looks a corpus member up by name.
pub fn corpus_function(name: &str) -> Option<CorpusFunction> {
    corpus().into_iter().find(|f| f.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn divided_difference_basics() {
        // slope of the identity
        let dd = divided_difference(&[rat_int(0), rat_int(1)], &[rat_int(0), rat_int(1)]).unwrap();
        assert_eq!(dd, Rational::one());
        // second difference of x^2 is its leading coefficient
        let pts = [rat(-1, 2), rat(1, 3), rat(7, 4)];
        let vals: Vec<Rational> = pts.iter().map(|x| x * x).collect();
        assert_eq!(divided_difference(&pts, &vals).unwrap(), Rational::one());
        // order-(k+2) differences of degree-k polynomials vanish
        let pts = [rat_int(-2), rat(-1, 3), rat(1, 5), rat(2, 3), rat_int(2)];
        let vals: Vec<Rational> = pts.iter().map(|x| x * x * x + x).collect();
        assert!(divided_difference(&pts, &vals).unwrap().is_zero());
        // duplicates rejected
        assert_eq!(
            divided_difference(&[rat_int(1), rat_int(1)], &[rat_int(0), rat_int(0)]),
            Err(ConvexityError::DuplicatePoints)
        );
    }

    #[test]
    fn divided_differences_are_symmetric_under_permutation() {
        let pts = [rat_int(-1), rat(1, 4), rat(5, 6), rat_int(2)];
        let f = |x: &Rational| x * x * x - rat(3, 2) * x;
        let vals: Vec<Rational> = pts.iter().map(f).collect();
        let base = divided_difference(&pts, &vals).unwrap();
        let perms: [[usize; 4]; 5] = [
            [1, 0, 2, 3],
            [3, 2, 1, 0],
            [2, 0, 3, 1],
            [0, 3, 1, 2],
            [3, 0, 2, 1],
        ];
        for perm in perms {
            let p: Vec<Rational> = perm.iter().map(|&i| pts[i].clone()).collect();
            let v: Vec<Rational> = perm.iter().map(|&i| vals[i].clone()).collect();
            assert_eq!(divided_difference(&p, &v).unwrap(), base);
        }
    }

    #[test]
    fn table_recurrence_holds() {
        let pts = vec![rat_int(-1), rat(0, 1), rat(1, 2), rat_int(1)];
        let vals: Vec<Rational> = pts.iter().map(|x| x * x * x).collect();
        let t = DividedDifferenceTable::build(pts.clone(), vals).unwrap();
        for order in 1..pts.len() {
            for i in 0..(pts.len() - order) {
                let expect = (t.entry(order - 1, i + 1) - t.entry(order - 1, i))
                    / (&pts[i + order] - &pts[i]);
                assert_eq!(t.entry(order, i), &expect);
            }
        }
        assert_eq!(t.top(), &Rational::one());
    }

    #[test]
    fn sampled_convexity_accepts_the_paper_example() {
        let mut rng = StdRng::seed_from_u64(7);
        let f = corpus_function("(x+1)/(x+2)").unwrap();
        let v = is_n_convex_sampled(&f, 2, 300, (&rat_int(-1), &rat_int(1)), &mut rng).unwrap();
        assert_eq!(v, ConvexityVerdict::ConsistentWithConvex);
        let g = corpus_function("exp").unwrap();
        let v = is_n_convex_sampled(&g, 3, 40, (&rat_int(-1), &rat_int(1)), &mut rng).unwrap();
        assert_eq!(v, ConvexityVerdict::ConsistentWithConvex);
    }

    #[test]
    fn sampled_convexity_refutes_concavity() {
        let mut rng = StdRng::seed_from_u64(11);
        let f = CorpusFunction::new(
            "-x^2",
            FunctionKind::Polynomial(vec![Rational::zero(), Rational::zero(), rat_int(-1)]),
            BTreeSet::new(),
            Smoothness::Infinite,
        );
        match is_n_convex_sampled(&f, 1, 100, (&rat_int(-1), &rat_int(1)), &mut rng).unwrap() {
            ConvexityVerdict::CounterexampleTuple(pts) => assert_eq!(pts.len(), 3),
            v => panic!("expected a counterexample, got {v:?}"),
        }
    }

    #[test]
    fn truncated_power_values_and_convexity() {
        let f = truncated_power(3);
        assert_eq!(f.eval_rational(&rat_int(-1)).unwrap(), Rational::zero());
        assert_eq!(f.eval_rational(&rat(1, 2)).unwrap(), rat(1, 8));
        assert_eq!(f.smoothness(), Smoothness::Finite(2));
        let g = truncated_power(5);
        assert!(g.is_declared_convex(5));
        let mut rng = StdRng::seed_from_u64(3);
        let v = is_n_convex_sampled(&g, 5, 200, (&rat_int(-1), &rat_int(1)), &mut rng).unwrap();
        assert_eq!(v, ConvexityVerdict::ConsistentWithConvex);
    }

    #[test]
    fn declared_orders_survive_bulk_sampling() {
        // every rational-valued member with a declared order passes the exact
        // sampled check; exp gets a smaller certified-midpoint run
        let mut rng = StdRng::seed_from_u64(99);
        let domain = (rat_int(-1), rat_int(1));
        let mut tuples = 0u32;
        for f in corpus() {
            let exact = !matches!(f.kind(), FunctionKind::Exp);
            for &n in f.known_convexity_orders() {
                let trials = if exact { 160 } else { 8 };
                let v =
                    is_n_convex_sampled(&f, n, trials, (&domain.0, &domain.1), &mut rng).unwrap();
                assert_eq!(
                    v,
                    ConvexityVerdict::ConsistentWithConvex,
                    "{} at order {n}",
                    f.name()
                );
                tuples += trials;
            }
        }
        assert!(tuples >= 10_000, "sampled {tuples} tuples");
    }

    #[test]
    fn corpus_declarations() {
        let names: Vec<String> = corpus().iter().map(|f| f.name().to_string()).collect();
        assert!(names.contains(&"x^0".to_string()) && names.contains(&"x^8".to_string()));
        let g = corpus_function("(x+2)^4").unwrap();
        assert!(g.is_declared_convex(2));
        let e = corpus_function("exp").unwrap();
        for n in 1..=5 {
            assert!(e.is_declared_convex(n));
        }
        let t4 = corpus_function("xplus4").unwrap();
        assert_eq!(t4.smoothness(), Smoothness::Finite(3));
        // the Radau example pair is 2-convex; (x+1)/(x+2) is not 3-convex
        let f = corpus_function("(x+1)/(x+2)").unwrap();
        assert!(f.is_declared_convex(2));
        assert!(!f.is_declared_convex(3));
    }

    #[test]
    fn reference_integrals_match_closed_forms() {
        // polynomial: exact
        let f = corpus_function("x^2").unwrap();
        let i = f.reference_integral(&rat_int(-1), &rat_int(1), 30).unwrap();
        assert!(i.is_point());
        assert_eq!(i.lo(), &rat(2, 3));
        // truncated power: ∫_{-1}^{1} x₊³ = 1/4
        let f = truncated_power(3);
        let i = f.reference_integral(&rat_int(-1), &rat_int(1), 30).unwrap();
        assert_eq!(i.lo(), &rat(1, 4));
        // exp: 2 sinh(1)
        let f = corpus_function("exp").unwrap();
        let i = f.reference_integral(&rat_int(-1), &rat_int(1), 40).unwrap();
        let two_sinh_1 = 2.0 * 1f64.sinh();
        let mid = crate::rational::to_f64(&i.midpoint());
        assert!((mid - two_sinh_1).abs() < 1e-12);
        assert!(i.width() <= pow10(38).recip());
        // (x+1)/(x+2): ∫_{-1}^{1} = 2 - ln 3
        let f = corpus_function("(x+1)/(x+2)").unwrap();
        let i = f.reference_integral(&rat_int(-1), &rat_int(1), 40).unwrap();
        let expect = 2.0 - 3f64.ln();
        let mid = crate::rational::to_f64(&i.midpoint());
        assert!((mid - expect).abs() < 1e-12);
    }

    #[test]
    fn field_evaluation_of_the_rational_member() {
        // (x+1)/(x+2) at √3/3 stays in the field and matches the interval path
        let f = corpus_function("(x+1)/(x+2)").unwrap();
        let x = FieldElement::sqrt3().scale(&rat(1, 3));
        let v = f.eval_field(&x).unwrap();
        let enc = v.to_interval_digits(25);
        let ix = x.to_interval_digits(30);
        let iv = f.eval_interval(&ix, 30);
        assert!(iv.lo() <= enc.hi() && enc.lo() <= iv.hi());
    }
}
