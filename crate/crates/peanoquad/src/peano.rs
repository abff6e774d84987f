//! Remainder functionals E = Q − c·∫ and their Peano kernels.
//!
//! For a functional that annihilates all polynomials of degree ≤ r−1, the
//! kernel `K(x) = E[(·−x)₊^{r−1}/(r−1)!]` satisfies `E[f] = ∫ f^{(r)} K` for
//! f ∈ C^r[−1,1], and when K keeps one sign the mean-value form
//! `E[f] = f^{(r)}(ξ)·∫K` follows. This module builds K as an exact piecewise
//! polynomial, decides its sign by Sturm-based root isolation per piece,
//! integrates it exactly, and evaluates certified kernel enclosures for the
//! interval-backend rules.

use crate::convexity::{ConvexityError, CorpusFunction};
use crate::field::FieldElement;
use crate::interval::RationalInterval;
use crate::piecewise::PiecewisePolynomial;
use crate::poly::Polynomial;
use crate::rational::{factorial, rat, rat_int, Rational};
use crate::roots::interior_sign_regions;
use crate::rules::{QuadratureRule, RuleError};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PeanoError {
    #[error("Peano order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("functional does not annihilate x^{degree}: E[x^{degree}] = {value}")]
    AnnihilationFailed { degree: usize, value: String },
    #[error("node {0} lies outside [-1, 1]")]
    NodeOutOfRange(String),
    #[error("kernel enclosure of width {width} exceeds the allowed {allowed}")]
    InsufficientPrecision { width: String, allowed: String },
    #[error("grid needs at least 2 points")]
    GridTooSmall,
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Corpus(#[from] ConvexityError),
}

/// `E[f] = Σ wᵢ f(xᵢ) − integral_coefficient · ∫_{-1}^{1} f`, of Peano order r.
#[derive(Debug, Clone)]
pub struct RemainderFunctional {
    rule: QuadratureRule,
    integral_coefficient: Rational,
    order: u32,
}

impl RemainderFunctional {
    /// Builds the functional and, on the exact backend, verifies the
    /// Peano precondition E[x^k] = 0 for k = 0..r−1.
    pub fn new(
        rule: QuadratureRule,
        integral_coefficient: Rational,
        order: u32,
    ) -> Result<Self, PeanoError> {
        if order < 2 {
            return Err(PeanoError::OrderTooSmall(order));
        }
        let e = Self {
            rule,
            integral_coefficient,
            order,
        };
        if e.rule.is_exact_backend() {
            for k in 0..order as usize {
                let v = e.apply_poly(&Polynomial::monomial(k))?;
                if !v.is_zero() {
                    return Err(PeanoError::AnnihilationFailed {
                        degree: k,
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(e)
    }

    /// E = Q − ∫.
    pub fn rule_minus_integral(rule: QuadratureRule, order: u32) -> Result<Self, PeanoError> {
        Self::new(rule, Rational::one(), order)
    }

    /// E = ∫ − Q (weights negated, integral coefficient −1).
    pub fn integral_minus_rule(rule: QuadratureRule, order: u32) -> Result<Self, PeanoError> {
        Self::new(rule.negate_weights(), -Rational::one(), order)
    }

    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    pub fn integral_coefficient(&self) -> &Rational {
        &self.integral_coefficient
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Exact `E[p]` for a polynomial.
    pub fn apply_poly(&self, p: &Polynomial) -> Result<FieldElement, PeanoError> {
        let q = self.rule.apply_poly(p)?;
        let integral = p.integrate(&FieldElement::from_int(-1), &FieldElement::one());
        Ok(q - integral.scale(&self.integral_coefficient))
    }

    /// Certified enclosure of `E[f]` for a corpus function; the integral part
    /// comes from the closed-form reference integrator.
    pub fn apply_corpus(
        &self,
        f: &CorpusFunction,
        digits: u32,
    ) -> Result<RationalInterval, PeanoError> {
        let q = self
            .rule
            .apply_enclosure(|x| f.eval_interval(x, digits), digits);
        let integral = f.reference_integral(&rat_int(-1), &rat_int(1), digits)?;
        Ok(q.sub(&integral.scale(&self.integral_coefficient)))
    }

    /// Floating-point `E[f]` for an arbitrary function handle (nodes taken at
    /// `digits`-digit midpoints, the integral by adaptive float Simpson). For
    /// certified output use `apply_corpus`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64 + Copy, digits: u32) -> f64 {
        let q = self.rule.apply_fn(f, digits);
        let integral = float_simpson(f, -1.0, 1.0, 24);
        q - crate::rational::to_f64(&self.integral_coefficient) * integral
    }

    /// The Peano kernel as an exact piecewise polynomial over the breakpoints
    /// {−1} ∪ nodes ∪ {1}: on [βⱼ, βⱼ₊₁],
    /// K(x) = [Σ_{xᵢ ≥ βⱼ₊₁} wᵢ(xᵢ−x)^{r−1} − c·(1−x)^r/r] / (r−1)!.
    pub fn build_kernel(&self) -> Result<PiecewisePolynomial, PeanoError> {
        let points = self.rule.exact_points()?;
        let minus_one = FieldElement::from_int(-1);
        let one = FieldElement::one();
        for (n, _) in &points {
            if **n < minus_one || **n > one {
                return Err(PeanoError::NodeOutOfRange(n.to_string()));
            }
        }
        let mut breakpoints = vec![minus_one.clone()];
        for (n, _) in &points {
            if **n > minus_one && **n < one {
                breakpoints.push((*n).clone());
            }
        }
        breakpoints.push(one.clone());
        breakpoints.dedup();

        let r = self.order;
        let inv_fact = factorial(r - 1).recip();
        let mut pieces = Vec::with_capacity(breakpoints.len() - 1);
        for j in 0..breakpoints.len() - 1 {
            let hi = &breakpoints[j + 1];
            let mut acc = Polynomial::zero();
            for (n, w) in &points {
                if *n >= hi {
                    let lin = Polynomial::linear((*n).clone(), FieldElement::from_int(-1));
                    acc = &acc + &poly_pow(&lin, r - 1).scale(w);
                }
            }
            let one_minus_x = Polynomial::linear(one.clone(), FieldElement::from_int(-1));
            let tail = poly_pow(&one_minus_x, r)
                .scale_rational(&(&self.integral_coefficient / rat_int(r as i64)));
            acc = &acc - &tail;
            pieces.push(acc.scale_rational(&inv_fact));
        }
        Ok(PiecewisePolynomial::new(breakpoints, pieces))
    }

    /// Certified kernel enclosures at `grid` uniform rational points of
    /// [−1, 1], straight from the truncated-power definition, so it works for
    /// the interval-backend rules as well.
    pub fn kernel_samples(
        &self,
        grid: u32,
        digits: u32,
        max_width: Option<&Rational>,
    ) -> Result<Vec<KernelSample>, PeanoError> {
        if grid < 2 {
            return Err(PeanoError::GridTooSmall);
        }
        let r = self.order;
        let inv_fact = factorial(r - 1).recip();
        let mut out = Vec::with_capacity(grid as usize);
        for j in 0..grid {
            let x = rat(-1, 1) + rat(2, 1) * rat(j as i64, (grid - 1) as i64);
            let value = self.kernel_enclosure_at(&x, digits, &inv_fact);
            if let Some(allowed) = max_width {
                let w = value.width();
                if &w > allowed {
                    return Err(PeanoError::InsufficientPrecision {
                        width: w.to_string(),
                        allowed: allowed.to_string(),
                    });
                }
            }
            out.push(KernelSample { x, value });
        }
        Ok(out)
    }

    fn kernel_enclosure_at(
        &self,
        x: &Rational,
        digits: u32,
        inv_fact: &Rational,
    ) -> RationalInterval {
        let r = self.order;
        // exact backend: evaluate in the field and enclose only at the end
        if self.rule.is_exact_backend() {
            let points = self.rule.exact_points().expect("exact backend");
            let fx = FieldElement::from_rational(x.clone());
            let mut acc = FieldElement::zero();
            for (n, w) in points {
                let diff = n - &fx;
                if !diff.is_negative() {
                    acc += &(w * &diff.pow(r - 1));
                }
            }
            let tail = truncated_one_minus(x, r) * (&self.integral_coefficient / rat_int(r as i64));
            acc = acc - FieldElement::from_rational(tail);
            let value = acc.scale(inv_fact);
            return match value.as_rational() {
                Some(v) => RationalInterval::point(v.clone()),
                None => value.to_interval_digits(digits),
            };
        }
        let xi = RationalInterval::point(x.clone());
        let mut acc = RationalInterval::zero();
        for p in self.rule.points() {
            let diff = p.node().enclosure(digits).sub(&xi);
            acc = acc.add(&p.weight().enclosure(digits).mul(&diff.truncated_pow(r - 1)));
        }
        let tail = truncated_one_minus(x, r) * (&self.integral_coefficient / rat_int(r as i64));
        acc.shift(&-tail).scale(inv_fact).round_out(8 * digits + 64)
    }
}

// ∫_{-1}^{1} (t-x)_+^{r-1} dt = (1-x)^r / r for x in [-1,1]; the numerator here.
fn truncated_one_minus(x: &Rational, r: u32) -> Rational {
    let base = rat_int(1) - x;
    if base.is_negative() {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for _ in 0..r {
        acc *= &base;
    }
    acc
}

fn poly_pow(p: &Polynomial, k: u32) -> Polynomial {
    let mut acc = Polynomial::one();
    for _ in 0..k {
        acc = &acc * p;
    }
    acc
}

fn float_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, halves: u32) -> f64 {
    let n = 2 * halves as usize;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// One certified kernel sample.
#[derive(Debug, Clone)]
pub struct KernelSample {
    pub x: Rational,
    pub value: RationalInterval,
}

/// Exact ∫_{-1}^{1} K for a kernel; paired with a one-signed certification
/// this is the constant of the mean-value error form `E[f] = f^{(r)}(ξ)·∫K`.
pub fn error_constant(kernel: &PiecewisePolynomial) -> FieldElement {
    kernel.integrate()
}

/// Exact evenness check K(−x) = K(x).
pub fn kernel_is_even(kernel: &PiecewisePolynomial) -> bool {
    kernel.is_even()
}

/// Where a sign-changing kernel provably changes sign.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignChangeWitness {
    /// Rational interval on which the kernel is provably negative.
    pub negative_interval: (String, String),
    /// A rational point with exactly negative kernel value.
    pub negative_point: String,
    /// A rational point with exactly positive kernel value.
    pub positive_point: String,
}

#[derive(Debug, Clone)]
pub enum SignVerdict {
    Nonnegative,
    Nonpositive,
    SignChanging(Box<SignChangeWitness>),
}

impl SignVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SignVerdict::Nonnegative => "Nonnegative",
            SignVerdict::Nonpositive => "Nonpositive",
            SignVerdict::SignChanging(_) => "SignChanging",
        }
    }
}

/// Certifies the sign of a kernel over its support. Per piece, the distinct
/// roots of the square-free part are isolated with Sturm counts and the sign
/// is sampled at exact rational points of every root-free stretch, so the
/// verdict is a proof. Roots of even multiplicity and zeros at breakpoints do
/// not defeat one-signedness.
pub fn certify_sign(kernel: &PiecewisePolynomial) -> SignVerdict {
    let mut negative: Option<(Rational, Rational, Rational)> = None;
    let mut positive: Option<Rational> = None;
    for (j, piece) in kernel.pieces().iter().enumerate() {
        if piece.is_zero() {
            continue;
        }
        let u = &kernel.breakpoints()[j];
        let v = &kernel.breakpoints()[j + 1];
        for region in interior_sign_regions(piece, u, v) {
            if region.sign < 0 && negative.is_none() {
                negative = Some((region.lo, region.hi, region.point));
            } else if region.sign > 0 && positive.is_none() {
                positive = Some(region.point);
            }
            if let (Some((lo, hi, point)), Some(pos)) = (&negative, &positive) {
                return SignVerdict::SignChanging(Box::new(SignChangeWitness {
                    negative_interval: (lo.to_string(), hi.to_string()),
                    negative_point: point.to_string(),
                    positive_point: pos.to_string(),
                }));
            }
        }
    }
    if negative.is_some() {
        SignVerdict::Nonpositive
    } else {
        SignVerdict::Nonnegative
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::{builtin_rule, combine};

    fn half_gauss_half_lobatto(n: u32) -> RemainderFunctional {
        let (g, lob) = match n {
            2 => ("g2", "lob3"),
            3 => ("g3", "lob4"),
            _ => panic!("only n = 2, 3 are exact"),
        };
        let rule = combine(&[
            (rat(1, 2), &builtin_rule(g).unwrap()),
            (rat(1, 2), &builtin_rule(lob).unwrap()),
        ])
        .unwrap();
        RemainderFunctional::rule_minus_integral(rule, 2 * n).unwrap()
    }

    #[test]
    fn annihilation_is_verified_on_construction() {
        let e = half_gauss_half_lobatto(2);
        for k in 0..4 {
            assert!(e.apply_poly(&Polynomial::monomial(k)).unwrap().is_zero());
        }
        // order 5 must fail: E[x^4] = 2/45 != 0
        let rule = e.rule().clone();
        match RemainderFunctional::rule_minus_integral(rule, 5) {
            Err(PeanoError::AnnihilationFailed { degree: 4, .. }) => {}
            other => panic!("expected annihilation failure, got {other:?}"),
        }
    }

    #[test]
    fn functional_values_on_monomials() {
        let e2 = half_gauss_half_lobatto(2);
        assert_eq!(
            e2.apply_poly(&Polynomial::monomial(4)).unwrap(),
            FieldElement::from_rational(rat(2, 45))
        );
        let e3 = half_gauss_half_lobatto(3);
        assert_eq!(
            e3.apply_poly(&Polynomial::monomial(6)).unwrap(),
            FieldElement::from_rational(rat(4, 525))
        );
    }

    #[test]
    fn functional_on_corpus_members() {
        // E[exp] in sign and size: ∫K = 1/540 and exp⁗ ∈ [1/e, e], so
        // E[exp] ∈ [1/(540 e), e/540] ⊂ (0, 0.006)
        let e = half_gauss_half_lobatto(2);
        let f = crate::convexity::corpus_function("exp").unwrap();
        let exp_enc = e.apply_corpus(&f, 40).unwrap();
        assert!(exp_enc.lo().is_positive());
        assert!(exp_enc.hi() < &rat(6, 1000));
        // float convenience path lands near the certified value
        let approx = e.apply_fn(|x| x.exp(), 30);
        assert!((approx - crate::rational::to_f64(&exp_enc.midpoint())).abs() < 1e-6);
        // the exact member route agrees with apply_poly
        let g = crate::convexity::corpus_function("x^4").unwrap();
        let enc = e.apply_corpus(&g, 40).unwrap();
        assert!(enc.contains(&rat(2, 45)));
    }

    #[test]
    fn kernel_pieces_match_the_closed_forms() {
        // n = 2, r = 4: piece on [√3/3, 1] is (1-x)^3 (3x-1)/72
        let e = half_gauss_half_lobatto(2);
        let k = e.build_kernel().unwrap();
        // breakpoints: -1, -√3/3, 0, √3/3, 1
        assert_eq!(k.breakpoints().len(), 5);
        let one_minus_x = Polynomial::linear(FieldElement::one(), FieldElement::from_int(-1));
        let expected = (&poly_pow(&one_minus_x, 3)
            * &Polynomial::linear(FieldElement::from_int(-1), FieldElement::from_int(3)))
            .scale_rational(&rat(1, 72));
        assert_eq!(k.pieces().last().unwrap(), &expected);

        // piece on [0, √3/3): -(1/24)x^4 + (1/18)x^3 + ((√3-2)/12)x^2 + (2√3-3)/216
        let expected_mid = Polynomial::new(vec![
            FieldElement::new(rat(-1, 72), rat(1, 108), rat(0, 1), rat(0, 1)),
            FieldElement::zero(),
            FieldElement::new(rat(-1, 6), rat(1, 12), rat(0, 1), rat(0, 1)),
            FieldElement::from_rational(rat(1, 18)),
            FieldElement::from_rational(rat(-1, 24)),
        ]);
        assert_eq!(&k.pieces()[2], &expected_mid);
    }

    #[test]
    fn n3_kernel_top_piece() {
        // r = 6: 4320·K on [√15/5, 1] equals 3(1-x)^5 (2x-1)
        let e = half_gauss_half_lobatto(3);
        let k = e.build_kernel().unwrap();
        let one_minus_x = Polynomial::linear(FieldElement::one(), FieldElement::from_int(-1));
        let expected = (&poly_pow(&one_minus_x, 5)
            * &Polynomial::linear(FieldElement::from_int(-1), FieldElement::from_int(2)))
            .scale_rational(&rat(3, 4320));
        assert_eq!(k.pieces().last().unwrap(), &expected);
    }

    #[test]
    fn error_constants_of_the_averaged_rules() {
        let k2 = half_gauss_half_lobatto(2).build_kernel().unwrap();
        assert_eq!(
            error_constant(&k2),
            FieldElement::from_rational(rat(1, 540))
        );
        let k3 = half_gauss_half_lobatto(3).build_kernel().unwrap();
        assert_eq!(
            error_constant(&k3),
            FieldElement::from_rational(rat(1, 94500))
        );
    }

    #[test]
    fn classical_cross_check_constants() {
        // ∫ − G₂ at r = 4: constant 1/135; Lob₃ − ∫: 1/90. Both also equal
        // E[x^4]/4! by annihilation, an independent route.
        let e = RemainderFunctional::integral_minus_rule(builtin_rule("g2").unwrap(), 4).unwrap();
        let k = e.build_kernel().unwrap();
        assert_eq!(error_constant(&k), FieldElement::from_rational(rat(1, 135)));
        let via_moment = e
            .apply_poly(&Polynomial::monomial(4))
            .unwrap()
            .scale(&rat(1, 24));
        assert_eq!(error_constant(&k), via_moment);

        let e = RemainderFunctional::rule_minus_integral(builtin_rule("lob3").unwrap(), 4).unwrap();
        let k = e.build_kernel().unwrap();
        assert_eq!(error_constant(&k), FieldElement::from_rational(rat(1, 90)));
        let via_moment = e
            .apply_poly(&Polynomial::monomial(4))
            .unwrap()
            .scale(&rat(1, 24));
        assert_eq!(error_constant(&k), via_moment);
    }

    #[test]
    fn kernels_of_symmetric_even_order_functionals_are_even() {
        assert!(kernel_is_even(
            &half_gauss_half_lobatto(2).build_kernel().unwrap()
        ));
        assert!(kernel_is_even(
            &half_gauss_half_lobatto(3).build_kernel().unwrap()
        ));
        let e = RemainderFunctional::integral_minus_rule(builtin_rule("g3").unwrap(), 6).unwrap();
        assert!(kernel_is_even(&e.build_kernel().unwrap()));
        // the asymmetric Radau remainder kernel is not even
        let e =
            RemainderFunctional::integral_minus_rule(builtin_rule("rad2l").unwrap(), 3).unwrap();
        assert!(!kernel_is_even(&e.build_kernel().unwrap()));
    }

    #[test]
    fn certification_of_the_paper_kernels() {
        for n in [2, 3] {
            let k = half_gauss_half_lobatto(n).build_kernel().unwrap();
            assert!(
                matches!(certify_sign(&k), SignVerdict::Nonnegative),
                "n = {n}"
            );
        }
    }

    #[test]
    fn averaged_radau_kernel_changes_sign() {
        let rule = combine(&[
            (rat(1, 2), &builtin_rule("rad2l").unwrap()),
            (rat(1, 2), &builtin_rule("rad2r").unwrap()),
        ])
        .unwrap();
        let e = RemainderFunctional::rule_minus_integral(rule, 3).unwrap();
        let k = e.build_kernel().unwrap();
        match certify_sign(&k) {
            SignVerdict::SignChanging(w) => {
                let p = crate::rational::parse_rational(&w.negative_point).unwrap();
                let v = k.eval_rational(&p).unwrap();
                assert!(v.is_negative(), "witness value must be exactly negative");
                let q = crate::rational::parse_rational(&w.positive_point).unwrap();
                assert!(k.eval_rational(&q).unwrap().is_positive());
                // provably negative across the whole witness interval: check ends
                let lo = crate::rational::parse_rational(&w.negative_interval.0).unwrap();
                let hi = crate::rational::parse_rational(&w.negative_interval.1).unwrap();
                assert!(lo <= p && p <= hi);
            }
            v => panic!("expected SignChanging, got {}", v.label()),
        }
    }

    #[test]
    fn peano_identity_for_polynomials() {
        // E[p] = ∫ p^{(r)} K for polynomials, exact
        let e = half_gauss_half_lobatto(2);
        let k = e.build_kernel().unwrap();
        let p = Polynomial::new(vec![
            FieldElement::from_rational(rat(1, 3)),
            FieldElement::sqrt3(),
            FieldElement::from_int(2),
            FieldElement::from_rational(rat(-7, 5)),
            FieldElement::one(),
            FieldElement::from_rational(rat(2, 9)),
            FieldElement::sqrt5().scale(&rat(1, 4)),
        ]);
        let mut dr = p.clone();
        for _ in 0..e.order() {
            dr = dr.derivative();
        }
        assert_eq!(e.apply_poly(&p).unwrap(), k.integrate_against(&dr));
    }

    #[test]
    fn mean_value_consistency() {
        // E[x^r] = r! · ∫K
        for n in [2u32, 3] {
            let e = half_gauss_half_lobatto(n);
            let k = e.build_kernel().unwrap();
            let r = e.order();
            let lhs = e.apply_poly(&Polynomial::monomial(r as usize)).unwrap();
            let rhs = error_constant(&k).scale(&factorial(r));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_kernel_samples_are_nonnegative_on_a_grid() {
        let e = half_gauss_half_lobatto(2);
        let samples = e.kernel_samples(101, 40, None).unwrap();
        assert_eq!(samples.len(), 101);
        for s in &samples {
            assert!(!s.value.hi().is_negative(), "upper bound at {}", s.x);
            assert!(
                s.value.lo() >= &-crate::rational::pow10(35).recip(),
                "lower bound at {}",
                s.x
            );
        }
        // endpoints vanish exactly
        assert!(samples.first().unwrap().value.is_point());
        assert!(samples.first().unwrap().value.lo().is_zero());
        assert!(samples.last().unwrap().value.lo().is_zero());
        // cross-check the enclosures against the exact pieces
        let k = e.build_kernel().unwrap();
        for s in samples.iter().step_by(10) {
            let exact = k.eval_rational(&s.x).unwrap();
            let enc = exact.to_interval_digits(45);
            assert!(s.value.lo() <= enc.hi() && enc.lo() <= s.value.hi());
        }
    }

    #[test]
    fn numeric_kernel_samples_for_the_conjectured_orders() {
        let table = crate::numeric::NodeTable::embedded();
        let rule = combine(&[
            (rat(1, 2), &table.rule("g4").unwrap()),
            (rat(1, 2), &table.rule("lob5").unwrap()),
        ])
        .unwrap();
        let e = RemainderFunctional::rule_minus_integral(rule, 8).unwrap();
        let samples = e.kernel_samples(51, 50, None).unwrap();
        let floor = -crate::rational::pow10(30).recip();
        for s in &samples {
            assert!(s.value.lo() > &floor, "lower bound at {}", s.x);
        }
        // width gate triggers when asked for the impossible
        let err = e.kernel_samples(11, 50, Some(&crate::rational::pow10(80).recip()));
        assert!(matches!(err, Err(PeanoError::InsufficientPrecision { .. })));
    }
}
