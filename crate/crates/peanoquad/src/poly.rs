//! Dense univariate polynomials over Q(√3, √5).
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! stripped (the zero polynomial has an empty coefficient vector). All
//! arithmetic, evaluation, calculus and division is exact in the field.

use crate::field::FieldElement;
use crate::rational::Rational;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-degree coefficients, normalizing to
    /// canonical form.
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElement::one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(vec![c])
    }

    /// x^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![FieldElement::zero(); k + 1];
        coeffs[k] = FieldElement::one();
        Self { coeffs }
    }

    /// c0 + c1·x from field constants.
    pub fn linear(c0: FieldElement, c1: FieldElement) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn from_rational_coeffs(coeffs: &[Rational]) -> Self {
        Self::new(
            coeffs
                .iter()
                .cloned()
                .map(FieldElement::from_rational)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(FieldElement::zero)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> FieldElement {
        self.eval(&FieldElement::from_rational(x.clone()))
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&crate::rational::rat_int(i as i64)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![FieldElement::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&crate::rational::rat(1, (i + 1) as i64))),
        );
        Self::new(coeffs)
    }

    /// Exact definite integral over [a, b].
    pub fn integrate(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// p(-x).
    pub fn compose_neg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// p(α·x + β), exact binomial expansion.
    pub fn compose_affine(&self, alpha: &FieldElement, beta: &FieldElement) -> Self {
        let inner = Self::linear(beta.clone(), alpha.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Division with remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor
            .leading_coeff()
            .unwrap()
            .inverse()
            .expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = vec![FieldElement::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap() * &lead_inv;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut coeffs = rem.coeffs;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                coeffs[shift + i] = &coeffs[shift + i] - &(dc * &factor);
            }
            rem = Self::new(coeffs);
        }
        (Self::new(quot), rem)
    }

    /// Monic normalization (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The square-free part p / gcd(p, p'); keeps exactly the distinct roots.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "square-free part of the zero polynomial");
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide p exactly");
        q
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![FieldElement::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter())
    }
}
