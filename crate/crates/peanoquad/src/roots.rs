//! Exact real-root machinery: Sturm sequences, Budan–Fourier sign counts and
//! root isolation with rational endpoints.
//!
//! Sturm counts are the certification authority (they give the exact number
//! of distinct roots in a half-open interval); Budan–Fourier is carried
//! alongside because it only bounds the count up to an even defect, which is
//! exactly how the original nonnegativity argument for the degree-6 kernel
//! spline runs.

use crate::field::FieldElement;
use crate::poly::Polynomial;
use crate::rational::{rat, Rational};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("Budan-Fourier variation decreased: V(a) - V(b) = {0} < 0")]
    NegativeVariation(i64),
}

/// Signs of (p(x), p'(x), ..., p^(n)(x)) at a point, n = deg p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSequence(Vec<i8>);

impl SignSequence {
    pub fn values(&self) -> &[i8] {
        &self.0
    }

    /// Sign changes with zeros skipped.
    pub fn variations(&self) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for &s in &self.0 {
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms: Vec<&str> = self
            .0
            .iter()
            .map(|s| match s.cmp(&0) {
                std::cmp::Ordering::Greater => "+",
                std::cmp::Ordering::Less => "-",
                std::cmp::Ordering::Equal => "0",
            })
            .collect();
        write!(f, "({})", syms.join(","))
    }
}

/// The derivative sign sequence of `p` at `x`.
pub fn derivative_signs(p: &Polynomial, x: &FieldElement) -> SignSequence {
    assert!(!p.is_zero(), "sign sequence of the zero polynomial");
    let mut signs = Vec::with_capacity(p.degree().unwrap() + 1);
    let mut q = p.clone();
    loop {
        signs.push(q.eval(x).sign());
        if q.degree() == Some(0) {
            break;
        }
        q = q.derivative();
    }
    SignSequence(signs)
}

/// Budan–Fourier V(x): the number of sign changes in the derivative sequence,
/// zeros not counted.
pub fn budan_fourier_v(p: &Polynomial, x: &FieldElement) -> usize {
    derivative_signs(p, x).variations()
}

/// V(a) − V(b). The number of roots of `p` in (a, b], counted with
/// multiplicity, equals this minus an even nonnegative integer.
pub fn budan_fourier_bound(
    p: &Polynomial,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<usize, RootError> {
    assert!(a < b, "budan_fourier_bound needs a < b");
    let va = budan_fourier_v(p, a) as i64;
    let vb = budan_fourier_v(p, b) as i64;
    if va < vb {
        return Err(RootError::NegativeVariation(va - vb));
    }
    Ok((va - vb) as usize)
}

/// Sturm chain of a (square-free) polynomial.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(-&r);
    }
    chain.pop();
    chain
}

fn chain_variations(chain: &[Polynomial], x: &FieldElement) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for q in chain {
        let s = q.eval(x).sign();
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Exact number of distinct real roots of `p` in (a, b]. The polynomial is
/// made square-free internally.
pub fn sturm_root_count(p: &Polynomial, a: &FieldElement, b: &FieldElement) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    assert!(a < b, "sturm_root_count needs a < b");
    let s = p.squarefree_part();
    if s.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(&s);
    let va = chain_variations(&chain, a);
    let vb = chain_variations(&chain, b);
    va - vb
}

fn count_on_chain(chain: &[Polynomial], a: &FieldElement, b: &FieldElement) -> usize {
    chain_variations(chain, a) - chain_variations(chain, b)
}

/// A rational strictly between two field elements (x < y required), found by
/// refining the surd enclosures until they separate.
pub fn rational_between(x: &FieldElement, y: &FieldElement) -> Rational {
    assert!(x < y, "rational_between needs x < y");
    if let (Some(rx), Some(ry)) = (x.as_rational(), y.as_rational()) {
        return (rx + ry) / rat(2, 1);
    }
    let mut bits = 16u32;
    loop {
        let ex = x.to_interval_bits(bits);
        let ey = y.to_interval_bits(bits);
        if ex.hi() < ey.lo() {
            return (ex.hi() + ey.lo()) / rat(2, 1);
        }
        bits *= 2;
        assert!(bits <= 1 << 20, "enclosure separation failed");
    }
}

/// One isolated distinct root: lo < root <= hi with rational endpoints.
pub type Isolation = (Rational, Rational);

/// Isolates the distinct real roots of `p` in (a, b] into disjoint, ordered
/// intervals with rational endpoints, each containing exactly one root.
pub fn isolate_roots(p: &Polynomial, a: &FieldElement, b: &FieldElement) -> Vec<Isolation> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    assert!(a < b, "isolate_roots needs a < b");
    let s = p.squarefree_part();
    if s.degree() == Some(0) {
        return Vec::new();
    }
    let chain = sturm_chain(&s);
    let total = count_on_chain(&chain, a, b);
    if total == 0 {
        return Vec::new();
    }

    // rational lower frame: no roots in (a, A]
    let fa = lower_frame(&chain, a, b);
    let root_at_b = s.eval(b).is_zero();
    let interior = total - usize::from(root_at_b);

    let mut out = Vec::new();
    if let Some(rb) = b.as_rational() {
        // rational upper endpoint: isolate on (A, b] directly
        bisect_isolate(&chain, &fa, rb, total, &mut out);
        return out;
    }

    if interior > 0 {
        // rational B below b with no roots in (B, b)
        let fb = upper_frame(&chain, &s, &FieldElement::from_rational(fa.clone()), b);
        bisect_isolate(&chain, &fa, &fb, interior, &mut out);
        if root_at_b {
            out.push(cover_root_at(&chain, b, &fb));
        }
    } else if root_at_b {
        out.push(cover_root_at(&chain, b, &fa));
    }
    out
}

/// Rational A in (a, b) with no roots of the chain's polynomial in (a, A].
fn lower_frame(chain: &[Polynomial], a: &FieldElement, b: &FieldElement) -> Rational {
    let mut m = rational_between(a, b);
    loop {
        let fm = FieldElement::from_rational(m.clone());
        if count_on_chain(chain, a, &fm) == 0 {
            return m;
        }
        m = rational_between(a, &fm);
    }
}

/// Rational B in (lo, v) with no roots in (B, v) and s(B) != 0.
fn upper_frame(
    chain: &[Polynomial],
    s: &Polynomial,
    lo: &FieldElement,
    v: &FieldElement,
) -> Rational {
    let root_at_v = usize::from(s.eval(v).is_zero());
    let mut m = rational_between(lo, v);
    loop {
        let fm = FieldElement::from_rational(m.clone());
        if !s.eval(&fm).is_zero() && count_on_chain(chain, &fm, v) == root_at_v {
            return m;
        }
        m = rational_between(&fm, v);
    }
}

/// A rational-endpoint interval covering exactly the root at irrational `b`.
fn cover_root_at(chain: &[Polynomial], b: &FieldElement, lo: &Rational) -> Isolation {
    let mut bits = 16u32;
    loop {
        let enc = b.to_interval_bits(bits);
        let h = enc.hi().clone();
        if &h > lo {
            let fl = FieldElement::from_rational(lo.clone());
            let fh = FieldElement::from_rational(h.clone());
            if fh > fl && count_on_chain(chain, &fl, &fh) == 1 {
                return (lo.clone(), h);
            }
        }
        bits *= 2;
        assert!(bits <= 1 << 20, "root cover refinement failed");
    }
}

/// Count-guided bisection on a rational interval known to hold `want` roots.
fn bisect_isolate(
    chain: &[Polynomial],
    lo: &Rational,
    hi: &Rational,
    want: usize,
    out: &mut Vec<Isolation>,
) {
    if want == 0 {
        return;
    }
    if want == 1 {
        out.push((lo.clone(), hi.clone()));
        return;
    }
    let mid = (lo + hi) / rat(2, 1);
    let left = count_on_chain(
        chain,
        &FieldElement::from_rational(lo.clone()),
        &FieldElement::from_rational(mid.clone()),
    );
    bisect_isolate(chain, lo, &mid, left, out);
    bisect_isolate(chain, &mid, hi, want - left, out);
}

/// Shrinks an isolating interval of the square-free polynomial `s` until its
/// width is at most `max_width`; the root stays inside (lo, hi].
pub fn refine_isolation(s: &Polynomial, iso: &Isolation, max_width: &Rational) -> Isolation {
    let chain = sturm_chain(s);
    let (mut lo, mut hi) = iso.clone();
    while &(&hi - &lo) > max_width {
        let mid = (&lo + &hi) / rat(2, 1);
        if s.eval_rational(&mid).is_zero() {
            // rational root found exactly; pin the interval just below it
            lo = (&lo + &mid) / rat(2, 1);
            hi = mid;
            continue;
        }
        let left = count_on_chain(
            &chain,
            &FieldElement::from_rational(lo.clone()),
            &FieldElement::from_rational(mid.clone()),
        );
        if left == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// A maximal root-free stretch of an open interval, with a rational
/// sub-interval `[lo, hi]` on which the polynomial provably keeps the
/// constant sign `sign` (attained at `point`).
#[derive(Debug, Clone)]
pub struct SignRegion {
    pub lo: Rational,
    pub hi: Rational,
    pub point: Rational,
    pub sign: i8,
}

/// The sign profile of nonzero `p` on the open interval (u, v): one region
/// per maximal root-free stretch, in order. Together with the roots between
/// them this determines the sign of `p` everywhere on (u, v).
pub fn interior_sign_regions(
    p: &Polynomial,
    u: &FieldElement,
    v: &FieldElement,
) -> Vec<SignRegion> {
    assert!(!p.is_zero(), "sign profile of the zero polynomial");
    assert!(u < v, "interior_sign_regions needs u < v");
    if p.degree() == Some(0) {
        let m = rational_between(u, v);
        return vec![region_at(p, m.clone(), m)];
    }
    let s = p.squarefree_part();
    let chain = sturm_chain(&s);

    let fa = lower_frame(&chain, u, v);
    let fb = upper_frame(&chain, &s, &FieldElement::from_rational(fa.clone()), v);
    let fa_el = FieldElement::from_rational(fa.clone());
    let fb_el = FieldElement::from_rational(fb.clone());
    let interior = if fb_el > fa_el {
        count_on_chain(&chain, &fa_el, &fb_el)
    } else {
        0
    };

    if interior == 0 {
        let hi = if fb > fa { fb } else { fa.clone() };
        return vec![region_at(p, fa, hi)];
    }

    let mut isolations = Vec::new();
    bisect_isolate(&chain, &fa, &fb, interior, &mut isolations);
    // shrink until consecutive isolations leave a gap
    let isolations = separate(&s, isolations);

    let mut regions = Vec::new();
    // left of the first root
    regions.push(region_at(p, fa, isolations[0].0.clone()));
    // between consecutive roots
    for w in isolations.windows(2) {
        let (.., ref h_prev) = w[0];
        let (ref l_next, ..) = w[1];
        regions.push(gap_region(p, &s, h_prev, l_next));
    }
    // right of the last root
    let (_, ref h_last) = isolations[isolations.len() - 1];
    regions.push(gap_region(p, &s, h_last, &fb));
    regions
}

fn separate(s: &Polynomial, isolations: Vec<Isolation>) -> Vec<Isolation> {
    let mut out = isolations;
    loop {
        let overlapping = out.windows(2).any(|w| w[0].1 >= w[1].0);
        if !overlapping {
            return out;
        }
        out = out
            .iter()
            .map(|iso| {
                let w = (&iso.1 - &iso.0) / rat(4, 1);
                refine_isolation(s, iso, &w)
            })
            .collect();
    }
}

/// Root-free region between a root's right bound and the next left bound.
fn gap_region(p: &Polynomial, s: &Polynomial, lo: &Rational, hi: &Rational) -> SignRegion {
    debug_assert!(lo <= hi);
    if !s.eval_rational(lo).is_zero() {
        return region_at(p, lo.clone(), hi.clone());
    }
    // the previous root sits exactly at `lo`; step inside the gap
    let inner = (lo + hi) / rat(2, 1);
    region_at(p, inner, hi.clone())
}

fn region_at(p: &Polynomial, lo: Rational, hi: Rational) -> SignRegion {
    let point = lo.clone();
    let sign = p.eval_rational(&point).sign();
    debug_assert!(sign != 0, "sample point must avoid the roots");
    SignRegion {
        lo,
        hi,
        point,
        sign,
    }
}
