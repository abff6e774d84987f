//! Exact arithmetic in the real quadratic field Q(√3, √5).
//!
//! Every node, weight and kernel coefficient of the exact-backend rules lives
//! in this field, represented on the basis {1, √3, √5, √15}. Multiplication
//! follows the 16-entry product table generated by √3·√5 = √15, (√3)² = 3,
//! (√5)² = 5, (√15)² = 15; inversion goes through the four Galois conjugates
//! (the norm is a nonzero rational for any nonzero element). The comparison
//! operators implement the real total order, decided by refining interval
//! enclosures of the surds until the sign of the difference is certain —
//! exact zero is decided structurally first, so refinement always terminates.

use crate::interval::{sqrt_int_enclosure, RationalInterval};
use crate::rational::Rational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero in Q(sqrt3, sqrt5)")]
    DivisionByZero,
}

/// An element a + b√3 + c√5 + d√15 with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl FieldElement {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(crate::rational::rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn sqrt3() -> Self {
        Self::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn sqrt5() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    pub fn sqrt15() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    /// Coordinates on the basis {1, √3, √5, √15}.
    pub fn coordinates(&self) -> (&Rational, &Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The rational part when the element is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Galois conjugates: sign flips of √3 and/or √5.
    fn conjugate(&self, flip3: bool, flip5: bool) -> Self {
        let s3 = if flip3 {
            -Rational::one()
        } else {
            Rational::one()
        };
        let s5 = if flip5 {
            -Rational::one()
        } else {
            Rational::one()
        };
        Self::new(
            self.a.clone(),
            &self.b * &s3,
            &self.c * &s5,
            &self.d * &s3 * &s5,
        )
    }

    /// Exact inverse via the product of the three nontrivial conjugates over
    /// the (rational, nonzero) field norm.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let c1 = self.conjugate(true, false);
        let c2 = self.conjugate(false, true);
        let c3 = self.conjugate(true, true);
        let adj = &(&c1 * &c2) * &c3;
        let norm = self * &adj;
        debug_assert!(norm.is_rational(), "field norm must be rational");
        let n = norm.a;
        debug_assert!(!n.is_zero(), "nonzero element has nonzero norm");
        Ok(adj.scale(&n.recip()))
    }

    /// Exact sign as a real number: 0 iff all coordinates vanish, otherwise
    /// decided by refining enclosures of the surds, doubling precision until
    /// the enclosure excludes zero.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.is_rational() {
            return if self.a.is_positive() { 1 } else { -1 };
        }
        let mut bits = 8u32;
        loop {
            let enc = self.to_interval_bits(bits);
            if let Some(s) = enc.decided_sign() {
                if s != 0 {
                    return s;
                }
            }
            bits *= 2;
            assert!(bits <= 1 << 20, "sign refinement failed to terminate");
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Enclosure of the real value with width ≤ 2^-bits.
    pub fn to_interval_bits(&self, bits: u32) -> RationalInterval {
        let mut acc = RationalInterval::point(self.a.clone());
        // refine each surd far enough that the scaled widths stay below target
        let coeffs: [(&Rational, u64); 3] = [(&self.b, 3), (&self.c, 5), (&self.d, 15)];
        for (coef, n) in coeffs {
            if coef.is_zero() {
                continue;
            }
            let mut sbits = bits + 4;
            loop {
                let enc = sqrt_int_enclosure(n, sbits);
                let scaled = enc.scale(coef);
                if scaled.width() <= crate::rational::rat(1, 8) * width_target(bits) {
                    acc = acc.add(&scaled);
                    break;
                }
                sbits += 16;
            }
        }
        acc
    }

    /// Enclosure with width ≤ 10^-digits.
    pub fn to_interval_digits(&self, digits: u32) -> RationalInterval {
        // 10^-d >= 2^-(4d) always, so 4 bits per digit suffices
        let mut bits = 4 * digits + 4;
        loop {
            let enc = self.to_interval_bits(bits);
            if enc.width() <= crate::rational::pow10(digits).recip() {
                return enc;
            }
            bits *= 2;
        }
    }

    /// Approximate value for display and float-based callers.
    pub fn to_f64(&self) -> f64 {
        crate::rational::to_f64(&self.to_interval_bits(80).midpoint())
    }
}

fn width_target(bits: u32) -> Rational {
    Rational::new(num_bigint::BigInt::one(), num_bigint::BigInt::one() << bits)
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl<'a, 'b> $trait<&'b FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'b FieldElement) -> FieldElement {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                $impl_fn(&self, &rhs)
            }
        }
        impl<'b> $trait<&'b FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'b FieldElement) -> FieldElement {
                $impl_fn(&self, rhs)
            }
        }
        impl<'a> $trait<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                $impl_fn(self, &rhs)
            }
        }
    };
}

fn add_impl(x: &FieldElement, y: &FieldElement) -> FieldElement {
    FieldElement::new(&x.a + &y.a, &x.b + &y.b, &x.c + &y.c, &x.d + &y.d)
}

fn sub_impl(x: &FieldElement, y: &FieldElement) -> FieldElement {
    FieldElement::new(&x.a - &y.a, &x.b - &y.b, &x.c - &y.c, &x.d - &y.d)
}

// (a1 + b1√3 + c1√5 + d1√15)(a2 + b2√3 + c2√5 + d2√15)
fn mul_impl(x: &FieldElement, y: &FieldElement) -> FieldElement {
    let three = crate::rational::rat_int(3);
    let five = crate::rational::rat_int(5);
    let fifteen = crate::rational::rat_int(15);
    let a = &x.a * &y.a + &three * (&x.b * &y.b) + &five * (&x.c * &y.c) + &fifteen * (&x.d * &y.d);
    let b = &x.a * &y.b + &x.b * &y.a + &five * (&x.c * &y.d + &x.d * &y.c);
    let c = &x.a * &y.c + &x.c * &y.a + &three * (&x.b * &y.d + &x.d * &y.b);
    let d = &x.a * &y.d + &x.d * &y.a + &x.b * &y.c + &x.c * &y.b;
    FieldElement::new(a, b, c, d)
}

fn div_impl(x: &FieldElement, y: &FieldElement) -> FieldElement {
    mul_impl(x, &y.inverse().expect("division by zero field element"))
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(
            -self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        *self = sub_impl(self, rhs);
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = mul_impl(self, rhs);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            0 => Ordering::Equal,
            s if s > 0 => Ordering::Greater,
            _ => Ordering::Less,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coef, name) in [
            (&self.a, ""),
            (&self.b, "*sqrt3"),
            (&self.c, "*sqrt5"),
            (&self.d, "*sqrt15"),
        ] {
            if coef.is_zero() {
                continue;
            }
            if first {
                write!(f, "{coef}{name}")?;
                first = false;
            } else if coef.is_negative() {
                write!(f, " - {}{}", -coef.clone(), name)?;
            } else {
                write!(f, " + {coef}{name}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FieldElement", 4)?;
        s.serialize_field("a", &self.a.to_string())?;
        s.serialize_field("b", &self.b.to_string())?;
        s.serialize_field("c", &self.c.to_string())?;
        s.serialize_field("d", &self.d.to_string())?;
        s.end()
    }
}
