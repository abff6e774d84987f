//! Rational interval arithmetic.
//!
//! Endpoints are exact rationals, so the ring operations incur no rounding at
//! all; `round_out` exists purely to keep denominators from growing without
//! bound in long evaluation chains. Enclosures of √n, exp and ln carry
//! explicit tail bounds, which is what makes the numeric backend's kernel
//! samples and the reference integrals certified rather than approximate.

use crate::rational::{pow10, rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Self {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Sign decided by the enclosure: `Some(+1)` if lo > 0, `Some(-1)` if hi < 0,
    /// `Some(0)` for the exact point zero, `None` when the interval straddles zero.
    pub fn decided_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_negative() {
            Self {
                lo: &self.hi * s,
                hi: &self.lo * s,
            }
        } else {
            Self {
                lo: &self.lo * s,
                hi: &self.hi * s,
            }
        }
    }

    pub fn shift(&self, s: &Rational) -> Self {
        Self {
            lo: &self.lo + s,
            hi: &self.hi + s,
        }
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Self {
        assert!(
            !self.contains_zero(),
            "reciprocal of an interval containing zero"
        );
        Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    /// k-th power, exact image (monotonicity handled per parity).
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::point(Rational::one());
        }
        let pl = pow_rat(&self.lo, k);
        let ph = pow_rat(&self.hi, k);
        if k % 2 == 1 || !self.lo.is_negative() {
            Self { lo: pl, hi: ph }
        } else if !self.hi.is_positive() {
            Self { lo: ph, hi: pl }
        } else {
            Self {
                lo: Rational::zero(),
                hi: pl.max(ph),
            }
        }
    }

    /// Truncated power max(x,0)^k over the interval (k >= 1); monotone, so the
    /// image is computed from the clamped endpoints.
    pub fn truncated_pow(&self, k: u32) -> Self {
        assert!(k >= 1, "truncated power needs k >= 1");
        let clamp = |v: &Rational| {
            if v.is_negative() {
                Rational::zero()
            } else {
                v.clone()
            }
        };
        Self {
            lo: pow_rat(&clamp(&self.lo), k),
            hi: pow_rat(&clamp(&self.hi), k),
        }
    }

    /// Hull of two intervals.
    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Outward rounding to denominators dividing 2^bits. Containment is
    /// preserved; width grows by at most 2^(1-bits).
    pub fn round_out(&self, bits: u32) -> Self {
        let scale = Rational::from_integer(BigInt::one() << bits);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Self { lo, hi }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn pow_rat(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut base = r.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    acc
}

/// Enclosure of √n (n a nonnegative integer) with width ≤ 2^-bits, from the
/// floor square root of n·4^bits.
pub fn sqrt_int_enclosure(n: u64, bits: u32) -> RationalInterval {
    let scaled: BigInt = BigInt::from(n) << (2 * bits);
    let s = scaled.sqrt();
    let den = BigInt::one() << bits;
    let lo = Rational::new(s.clone(), den.clone());
    let hi = Rational::new(s + BigInt::one(), den);
    RationalInterval::new(lo, hi)
}

/// Enclosure of √r for a nonnegative rational, width ≤ 2^(1-bits).
pub fn sqrt_rational_enclosure(r: &Rational, bits: u32) -> RationalInterval {
    assert!(!r.is_negative(), "square root of a negative rational");
    if r.is_zero() {
        return RationalInterval::zero();
    }
    // floor(sqrt(p/q * 4^bits)) = floor(sqrt(p * q * 4^bits) / q)
    let p = r.numer().clone();
    let q = r.denom().clone();
    let scaled: BigInt = (p * &q) << (2 * bits);
    let s = scaled.sqrt();
    let den = Rational::from_integer(&q * (BigInt::one() << bits));
    let lo = Rational::from_integer(s.clone()) / &den;
    let hi = Rational::from_integer(s + BigInt::one()) / &den;
    RationalInterval::new(lo, hi)
}

/// Enclosure of √ over an interval of nonnegative rationals.
pub fn sqrt_interval_enclosure(x: &RationalInterval, bits: u32) -> RationalInterval {
    let lo = sqrt_rational_enclosure(x.lo(), bits);
    let hi = sqrt_rational_enclosure(x.hi(), bits);
    RationalInterval::new(lo.lo().clone(), hi.hi().clone())
}

/// Enclosure of exp(x) for rational |x| ≤ 4, with |error| ≤ 10^-(digits+2).
/// Taylor partial sums with the geometric tail bound 2·|x|^(N+1)/(N+1)!; the
/// accumulation runs in outward-rounded intervals so denominators stay
/// bounded even for arguments with very long denominators.
pub fn exp_point_enclosure(x: &Rational, digits: u32) -> RationalInterval {
    assert!(x.abs() <= rat(4, 1), "exp enclosure restricted to |x| <= 4");
    let bits = 7 * (digits + 8);
    let target = pow10(digits + 3).recip();
    let xi = RationalInterval::point(x.clone()).round_out(bits);
    let mut sum = RationalInterval::point(Rational::one());
    let mut term = RationalInterval::point(Rational::one());
    let mut n = 0u32;
    loop {
        n += 1;
        term = term
            .mul(&xi)
            .scale(&Rational::from_integer(BigInt::from(n)).recip())
            .round_out(bits);
        sum = sum.add(&term).round_out(bits);
        // once n+1 >= 2|x| the tail is bounded by twice the next term
        let next = term.hi().abs().max(term.lo().abs()) * x.abs()
            / Rational::from_integer(BigInt::from(n + 1));
        if Rational::from_integer(BigInt::from(n + 1)) >= rat(2, 1) * x.abs()
            && rat(2, 1) * &next <= target
        {
            let bound = rat(2, 1) * next;
            let enc = RationalInterval::new(sum.lo() - &bound, sum.hi() + &bound);
            return enc.round_out(bits);
        }
        assert!(n < 10_000, "exp series failed to converge");
    }
}

/// Enclosure of exp over a rational interval (monotone).
pub fn exp_interval_enclosure(x: &RationalInterval, digits: u32) -> RationalInterval {
    let lo = exp_point_enclosure(x.lo(), digits);
    let hi = exp_point_enclosure(x.hi(), digits);
    RationalInterval::new(lo.lo().clone(), hi.hi().clone())
}

/// Enclosure of ln(z) for rational z in [1/10, 10], |error| ≤ 10^-(digits+2).
/// Uses ln z = 2·atanh(u), u = (z−1)/(z+1), with the series tail bounded by a
/// geometric series in u².
pub fn ln_point_enclosure(z: &Rational, digits: u32) -> RationalInterval {
    assert!(z.is_positive(), "ln of a nonpositive rational");
    assert!(
        z >= &rat(1, 10) && z <= &rat(10, 1),
        "ln enclosure restricted to [1/10, 10]"
    );
    let u = (z - Rational::one()) / (z + Rational::one());
    if u.is_zero() {
        return RationalInterval::zero();
    }
    let bits = 7 * (digits + 8);
    let ui = RationalInterval::point(u.clone()).round_out(bits);
    let u2 = ui.mul(&ui).round_out(bits);
    // 1/(1-u^2) <= 1/(1-(9/11)^2) = 121/40 on the allowed domain
    let tail_factor = rat(121, 40);
    let target = pow10(digits + 3).recip();
    let mut sum = RationalInterval::zero();
    let mut upow = ui.clone(); // u^(2j+1)
    let mut j = 0u32;
    loop {
        sum = sum
            .add(&upow.scale(&Rational::from_integer(BigInt::from(2 * j + 1)).recip()))
            .round_out(bits);
        let next_pow = upow.mul(&u2).round_out(bits);
        let next_mag = next_pow.hi().abs().max(next_pow.lo().abs());
        let bound =
            rat(2, 1) * next_mag / Rational::from_integer(BigInt::from(2 * j + 3)) * &tail_factor;
        if bound <= target {
            let enc =
                RationalInterval::new(rat(2, 1) * sum.lo() - &bound, rat(2, 1) * sum.hi() + &bound);
            return enc.round_out(bits);
        }
        upow = next_pow;
        j += 1;
        assert!(j < 100_000, "ln series failed to converge");
    }
}

/// Enclosure of ln over a positive rational interval (monotone).
pub fn ln_interval_enclosure(z: &RationalInterval, digits: u32) -> RationalInterval {
    let lo = ln_point_enclosure(z.lo(), digits);
    let hi = ln_point_enclosure(z.hi(), digits);
    RationalInterval::new(lo.lo().clone(), hi.hi().clone())
}
