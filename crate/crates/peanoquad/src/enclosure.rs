//! Guaranteed integral brackets for convex integrands of odd order.
//!
//! For a (2n−1)-convex f the Gauss value is a lower bound and the Lobatto
//! value an upper bound of the integral (midpoint/trapezoid when n = 1), so a
//! rule pair yields a certified enclosure. The remainder-comparison theorem
//! additionally bounds the Gauss error by the Lobatto error. Convexity itself
//! is caller-asserted: it is not decidable from point queries, though a
//! sampled pre-check can refute it.

use crate::convexity::{is_n_convex_sampled, ConvexityError, ConvexityVerdict, CorpusFunction};
use crate::field::FieldElement;
use crate::interval::RationalInterval;
use crate::rational::{rat, rat_int, Rational};
use crate::rules::{builtin_rule, combine, QuadratureRule, RuleError};
use num_traits::Signed;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EncloseError {
    #[error("enclosures support n = 1, 2, 3 (got {0})")]
    UnsupportedOrder(u32),
    #[error("max depth {depth} exceeded, achieved width {achieved_width}")]
    MaxDepthExceeded { depth: u32, achieved_width: String },
    #[error("sampled convexity pre-check failed at points {0:?}")]
    NotConvexConsistent(Vec<String>),
    #[error(transparent)]
    Corpus(#[from] ConvexityError),
    #[error(transparent)]
    Rule(#[from] RuleError),
}

/// The (lower, upper) rule names for an order-n bracket.
pub fn bracket_rule_pair(n: u32) -> Result<(&'static str, &'static str), EncloseError> {
    match n {
        1 => Ok(("midpoint", "trapezoid")),
        2 => Ok(("g2", "lob3")),
        3 => Ok(("g3", "lob4")),
        other => Err(EncloseError::UnsupportedOrder(other)),
    }
}

/// A certified bracket of ∫ f over an interval.
#[derive(Debug, Clone)]
pub struct EnclosureResult {
    lower: RationalInterval,
    upper: RationalInterval,
    lower_exact: Option<FieldElement>,
    upper_exact: Option<FieldElement>,
    rule_pair: (String, String),
    subdivisions: u32,
}

impl EnclosureResult {
    /// Certified lower bound of the integral.
    pub fn certified_lower(&self) -> &Rational {
        self.lower.lo()
    }

    /// Certified upper bound of the integral.
    pub fn certified_upper(&self) -> &Rational {
        self.upper.hi()
    }

    /// Midpoint of the rule pair.
    pub fn best_estimate(&self) -> Rational {
        (self.lower.midpoint() + self.upper.midpoint()) / rat_int(2)
    }

    pub fn width(&self) -> Rational {
        self.certified_upper() - self.certified_lower()
    }

    pub fn rule_pair(&self) -> (&str, &str) {
        (&self.rule_pair.0, &self.rule_pair.1)
    }

    pub fn subdivisions(&self) -> u32 {
        self.subdivisions
    }

    pub fn lower_value(&self) -> &RationalInterval {
        &self.lower
    }

    pub fn upper_value(&self) -> &RationalInterval {
        &self.upper
    }

    /// Exact rule values, present when f is exactly evaluable in the field.
    pub fn exact_values(&self) -> Option<(&FieldElement, &FieldElement)> {
        Some((self.lower_exact.as_ref()?, self.upper_exact.as_ref()?))
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.certified_lower() <= v && v <= self.certified_upper()
    }
}

/// Value of a rescaled rule applied to a corpus function: exact in the field
/// when possible, an interval enclosure otherwise.
fn rule_value(
    rule: &QuadratureRule,
    f: &CorpusFunction,
    digits: u32,
) -> Result<(RationalInterval, Option<FieldElement>), EncloseError> {
    if rule.is_exact_backend() {
        let mut acc = FieldElement::zero();
        let mut exact_ok = true;
        for (node, weight) in rule.exact_points()? {
            match f.eval_field(node) {
                Some(v) => acc += &(weight * &v),
                None => {
                    exact_ok = false;
                    break;
                }
            }
        }
        if exact_ok {
            let enc = match acc.as_rational() {
                Some(r) => RationalInterval::point(r.clone()),
                None => acc.to_interval_digits(digits),
            };
            return Ok((enc, Some(acc)));
        }
    }
    Ok((
        rule.apply_enclosure(|x| f.eval_interval(x, digits), digits),
        None,
    ))
}

/// The order-n bracket of ∫_a^b f from the rescaled rule pair; the caller
/// asserts that f is (2n−1)-convex on [a, b].
pub fn bracket(
    f: &CorpusFunction,
    a: &Rational,
    b: &Rational,
    n: u32,
    digits: u32,
) -> Result<EnclosureResult, EncloseError> {
    let (lo_name, hi_name) = bracket_rule_pair(n)?;
    let lo_rule = builtin_rule(lo_name)?.rescale(a, b)?;
    let hi_rule = builtin_rule(hi_name)?.rescale(a, b)?;
    let (lower, lower_exact) = rule_value(&lo_rule, f, digits)?;
    let (upper, upper_exact) = rule_value(&hi_rule, f, digits)?;
    debug_assert!(
        lower.lo() <= upper.hi(),
        "bracket inverted: the convexity assertion for {} appears to be false",
        f.name()
    );
    Ok(EnclosureResult {
        lower,
        upper,
        lower_exact,
        upper_exact,
        rule_pair: (lo_name.to_string(), hi_name.to_string()),
        subdivisions: 1,
    })
}

/// Both remainders of the comparison theorem on [−1, 1]:
/// gauss_error = ∫ − `G_n[f]` and lobatto_error = `Lob_{n+1}[f]` − ∫.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub gauss_error: RationalInterval,
    pub lobatto_error: RationalInterval,
    pub reference_integral: RationalInterval,
    pub gauss_error_exact: Option<FieldElement>,
    pub lobatto_error_exact: Option<FieldElement>,
}

impl ComparisonReport {
    /// 0 ≤ gauss_error ≤ lobatto_error — exactly when the exact values are
    /// available, otherwise within `margin`.
    pub fn theorem_holds_within(&self, margin: &Rational) -> bool {
        if let (Some(g), Some(l)) = (&self.gauss_error_exact, &self.lobatto_error_exact) {
            return !g.is_negative() && !(l - g).is_negative();
        }
        let neg_margin = -margin.clone();
        self.gauss_error.lo() >= &neg_margin
            && self.lobatto_error.sub(&self.gauss_error).lo() >= &neg_margin
    }
}

/// Compares the Gauss and Lobatto remainders for n ∈ {2, 3}; the caller
/// asserts that f ∈ C^{2n} is (2n−1)-convex on [−1, 1].
pub fn compare_remainders(
    f: &CorpusFunction,
    n: u32,
    digits: u32,
) -> Result<ComparisonReport, EncloseError> {
    if !(n == 2 || n == 3) {
        return Err(EncloseError::UnsupportedOrder(n));
    }
    let (g_name, lob_name) = bracket_rule_pair(n)?;
    let reference = f.reference_integral(&rat_int(-1), &rat_int(1), digits)?;
    let (g_val, g_exact) = rule_value(&builtin_rule(g_name)?, f, digits)?;
    let (lob_val, lob_exact) = rule_value(&builtin_rule(lob_name)?, f, digits)?;
    let exact_reference = if reference.is_point() {
        Some(FieldElement::from_rational(reference.lo().clone()))
    } else {
        None
    };
    let gauss_error_exact = match (&exact_reference, &g_exact) {
        (Some(i), Some(g)) => Some(i - g),
        _ => None,
    };
    let lobatto_error_exact = match (&exact_reference, &lob_exact) {
        (Some(i), Some(l)) => Some(l - i),
        _ => None,
    };
    Ok(ComparisonReport {
        gauss_error: reference.sub(&g_val),
        lobatto_error: lob_val.sub(&reference),
        reference_integral: reference,
        gauss_error_exact,
        lobatto_error_exact,
    })
}

/// Composite bracket by synchronous bisection: depth d splits [a, b] into 2^d
/// equal parts and sums the per-part brackets; stops once the total width is
/// at most `tol`.
pub fn composite_enclose(
    f: &CorpusFunction,
    a: &Rational,
    b: &Rational,
    n: u32,
    tol: &Rational,
    max_depth: u32,
    digits: u32,
) -> Result<EnclosureResult, EncloseError> {
    let (lo_name, hi_name) = bracket_rule_pair(n)?;
    let mut achieved = None;
    for depth in 0..=max_depth {
        let parts = 1u32 << depth;
        let mut lower = RationalInterval::zero();
        let mut upper = RationalInterval::zero();
        let mut lower_exact = Some(FieldElement::zero());
        let mut upper_exact = Some(FieldElement::zero());
        for i in 0..parts {
            let x = a + (b - a) * rat(i as i64, parts as i64);
            let y = a + (b - a) * rat(i as i64 + 1, parts as i64);
            let piece = bracket(f, &x, &y, n, digits)?;
            lower = lower.add(&piece.lower);
            upper = upper.add(&piece.upper);
            lower_exact = match (lower_exact, &piece.lower_exact) {
                (Some(acc), Some(v)) => Some(acc + v),
                _ => None,
            };
            upper_exact = match (upper_exact, &piece.upper_exact) {
                (Some(acc), Some(v)) => Some(acc + v),
                _ => None,
            };
        }
        let result = EnclosureResult {
            lower,
            upper,
            lower_exact,
            upper_exact,
            rule_pair: (lo_name.to_string(), hi_name.to_string()),
            subdivisions: parts,
        };
        let width = result.width();
        if &width <= tol {
            return Ok(result);
        }
        achieved = Some(width);
    }
    Err(EncloseError::MaxDepthExceeded {
        depth: max_depth,
        achieved_width: achieved.expect("at least depth 0 ran").to_string(),
    })
}

/// Optional sampled pre-check of the convexity assertion; refutation aborts
/// with the counterexample tuple.
pub fn sampled_precheck(
    f: &CorpusFunction,
    n: u32,
    trials: u32,
    domain: (&Rational, &Rational),
    rng: &mut impl Rng,
) -> Result<(), EncloseError> {
    match is_n_convex_sampled(f, n, trials, domain, rng)? {
        ConvexityVerdict::ConsistentWithConvex => Ok(()),
        ConvexityVerdict::CounterexampleTuple(points) => Err(EncloseError::NotConvexConsistent(
            points.iter().map(|p| p.to_string()).collect(),
        )),
    }
}

/// The averaged-Radau residuals of the two 2-convex example functions.
#[derive(Debug, Clone)]
pub struct RadauReport {
    /// `½Rad₂ˡ[g] + ½Rad₂ʳ[g] − ∫g` for g = (x+2)⁴, exact.
    pub polynomial_residual: Rational,
    /// The same residual for f = (x+1)/(x+2), a certified enclosure around
    /// ln 3 − 116/105.
    pub rational_fn_residual: RationalInterval,
    /// `½Rad₂ˡ[f] + ½Rad₂ʳ[f]`, exact (= 94/105).
    pub rational_fn_rule_value: Rational,
    /// True: the residuals have opposite signs, so neither Radau rule
    /// dominates for 2-convex integrands.
    pub signs_differ: bool,
}

/// Reproduces the averaged-Radau counterexample: the residual is positive for
/// (x+2)⁴ and negative for (x+1)/(x+2), so no one-sided comparison like the
/// Gauss–Lobatto one can hold for 2-convex functions.
pub fn radau_counterexample(digits: u32) -> Result<RadauReport, EncloseError> {
    let avg = combine(&[
        (rat(1, 2), &builtin_rule("rad2l")?),
        (rat(1, 2), &builtin_rule("rad2r")?),
    ])?;

    let g = crate::convexity::corpus_function("(x+2)^4").expect("corpus member");
    let (_, g_exact) = rule_value(&avg, &g, digits)?;
    let g_rule = g_exact
        .and_then(|v| v.as_rational().cloned())
        .expect("rational rule value for a polynomial at rational nodes");
    let g_int = g
        .reference_integral(&rat_int(-1), &rat_int(1), digits)?
        .lo()
        .clone();
    let polynomial_residual = &g_rule - &g_int;

    let f = crate::convexity::corpus_function("(x+1)/(x+2)").expect("corpus member");
    let (_, f_exact) = rule_value(&avg, &f, digits)?;
    let f_rule = f_exact
        .and_then(|v| v.as_rational().cloned())
        .expect("rational rule value at rational nodes");
    let f_int = f.reference_integral(&rat_int(-1), &rat_int(1), digits)?;
    let rational_fn_residual = RationalInterval::point(f_rule.clone()).sub(&f_int);

    let signs_differ = match rational_fn_residual.decided_sign() {
        Some(s) => s != 0 && i8::from(polynomial_residual.is_positive()) * 2 - 1 != s,
        None => false,
    };
    Ok(RadauReport {
        polynomial_residual,
        rational_fn_residual,
        rational_fn_rule_value: f_rule,
        signs_differ,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::corpus_function;
    use crate::rational::pow10;
    use num_traits::Zero;

    #[test]
    fn bracket_of_x2_at_order_one() {
        let f = corpus_function("x^2").unwrap();
        let e = bracket(&f, &rat_int(-1), &rat_int(1), 1, 30).unwrap();
        assert_eq!(e.certified_lower(), &Rational::zero());
        assert_eq!(e.certified_upper(), &rat_int(2));
        assert!(e.contains(&rat(2, 3)));
        assert_eq!(e.rule_pair(), ("midpoint", "trapezoid"));
    }

    #[test]
    fn bracket_of_x4_at_order_two() {
        let f = corpus_function("x^4").unwrap();
        let e = bracket(&f, &rat_int(-1), &rat_int(1), 2, 30).unwrap();
        assert_eq!(e.certified_lower(), &rat(2, 9));
        assert_eq!(e.certified_upper(), &rat(2, 3));
        assert!(e.contains(&rat(2, 5)));
        let (lo, hi) = e.exact_values().unwrap();
        assert_eq!(lo.as_rational(), Some(&rat(2, 9)));
        assert_eq!(hi.as_rational(), Some(&rat(2, 3)));
    }

    #[test]
    fn bracket_of_exp_at_order_three() {
        let f = corpus_function("exp").unwrap();
        let e = bracket(&f, &rat_int(-1), &rat_int(1), 3, 40).unwrap();
        let reference = f.reference_integral(&rat_int(-1), &rat_int(1), 40).unwrap();
        assert!(e.certified_lower() <= reference.lo());
        assert!(reference.hi() <= e.certified_upper());
        // Lob₄[exp] − G₃[exp] ≈ 1.530e-4
        assert!(e.width() < rat(2, 10_000));
        assert!(e.width() > rat(1, 10_000));
        assert!(bracket(&f, &rat_int(-1), &rat_int(1), 4, 40).is_err());
    }

    #[test]
    fn compare_remainders_for_even_monomials() {
        // n = 2, f = x^4: gauss_error = 8/45, lobatto_error = 4/15, exact
        let f = corpus_function("x^4").unwrap();
        let r = compare_remainders(&f, 2, 30).unwrap();
        assert_eq!(
            r.gauss_error_exact.as_ref().unwrap().as_rational(),
            Some(&rat(8, 45))
        );
        assert_eq!(
            r.lobatto_error_exact.as_ref().unwrap().as_rational(),
            Some(&rat(4, 15))
        );
        assert!(r.theorem_holds_within(&Rational::zero()));
        // degree ≤ 2n−1 is annihilated by both rules
        let f = corpus_function("x^3").unwrap();
        let r = compare_remainders(&f, 2, 30).unwrap();
        assert!(r.gauss_error_exact.as_ref().unwrap().is_zero());
        assert!(r.lobatto_error_exact.as_ref().unwrap().is_zero());
    }

    #[test]
    fn compare_remainders_for_exp() {
        let f = corpus_function("exp").unwrap();
        for n in [2, 3] {
            let r = compare_remainders(&f, n, 50).unwrap();
            assert!(r.reference_integral.width() <= pow10(20).recip());
            assert!(r.theorem_holds_within(&pow10(20).recip()), "n = {n}");
            assert!(r.gauss_error.hi().is_positive());
        }
    }

    #[test]
    fn bracket_width_decomposes_into_the_two_remainders() {
        let f = corpus_function("x^6").unwrap();
        let n = 3;
        let e = bracket(&f, &rat_int(-1), &rat_int(1), n, 30).unwrap();
        let r = compare_remainders(&f, n, 30).unwrap();
        let width = e.width();
        let sum = r.gauss_error_exact.unwrap() + r.lobatto_error_exact.unwrap();
        assert_eq!(sum.as_rational(), Some(&width));
    }

    #[test]
    fn composite_enclosure_of_exp_converges() {
        let f = corpus_function("exp").unwrap();
        let tol = pow10(6).recip();
        let e = composite_enclose(&f, &rat_int(-1), &rat_int(1), 2, &tol, 12, 40).unwrap();
        assert!(e.width() <= tol);
        let reference = f.reference_integral(&rat_int(-1), &rat_int(1), 40).unwrap();
        assert!(e.certified_lower() <= reference.lo() && reference.hi() <= e.certified_upper());
        assert!(e.subdivisions() > 1);
        // an impossible depth cap reports the achieved width
        let err = composite_enclose(&f, &rat_int(-1), &rat_int(1), 2, &pow10(30).recip(), 2, 40);
        assert!(matches!(err, Err(EncloseError::MaxDepthExceeded { .. })));
    }

    #[test]
    fn composite_enclosure_is_immediate_for_low_degree() {
        // degree ≤ 2n−1 converges at depth 0 with width 0
        let f = corpus_function("x^3").unwrap();
        let e =
            composite_enclose(&f, &rat_int(-1), &rat_int(1), 2, &Rational::zero(), 5, 30).unwrap();
        assert_eq!(e.subdivisions(), 1);
        assert!(e.width().is_zero());
    }

    #[test]
    fn halving_strictly_shrinks_the_bracket_for_x2n() {
        for n in [2u32, 3] {
            let f = corpus_function(&format!("x^{}", 2 * n)).unwrap();
            let d0 = composite_enclose(&f, &rat_int(-1), &rat_int(1), n, &Rational::zero(), 0, 30);
            let w0 = match d0 {
                Err(EncloseError::MaxDepthExceeded { achieved_width, .. }) => {
                    crate::rational::parse_rational(&achieved_width).unwrap()
                }
                other => panic!("expected width report, got {other:?}"),
            };
            let d1 = composite_enclose(&f, &rat_int(-1), &rat_int(1), n, &Rational::zero(), 1, 30);
            let w1 = match d1 {
                Err(EncloseError::MaxDepthExceeded { achieved_width, .. }) => {
                    crate::rational::parse_rational(&achieved_width).unwrap()
                }
                other => panic!("expected width report, got {other:?}"),
            };
            assert!(w1 < w0, "depth 1 must shrink the bracket for x^{}", 2 * n);
        }
    }

    #[test]
    fn radau_counterexample_signs() {
        let r = radau_counterexample(50).unwrap();
        assert_eq!(r.polynomial_residual, rat(16, 135));
        assert_eq!(r.rational_fn_rule_value, rat(94, 105));
        assert!(r.rational_fn_residual.hi().is_negative());
        assert!(r.rational_fn_residual.width() <= pow10(20).recip());
        // ln 3 − 116/105 ≈ −6.1496e-3
        let mid = crate::rational::to_f64(&r.rational_fn_residual.midpoint());
        assert!((mid + 0.006149616093794941).abs() < 1e-12);
        assert!(r.signs_differ);
    }

    #[test]
    fn precheck_rejects_a_wrong_assertion() {
        use rand::rngs::StdRng;
        use rand::SeedableRng;
        let mut rng = StdRng::seed_from_u64(5);
        // (x+1)/(x+2) is 2-convex but not 1-convex (it is concave)
        let f = corpus_function("(x+1)/(x+2)").unwrap();
        let r = sampled_precheck(&f, 1, 200, (&rat_int(-1), &rat_int(1)), &mut rng);
        assert!(matches!(r, Err(EncloseError::NotConvexConsistent(_))));
        let r = sampled_precheck(&f, 2, 200, (&rat_int(-1), &rat_int(1)), &mut rng);
        assert!(r.is_ok());
    }
}
