//! Piecewise polynomials over Q(√3, √5) with field-element breakpoints.
//!
//! Peano kernels are stored in this form: one exact polynomial per interval
//! between consecutive sorted nodes. Evenness and equality are decided on the
//! merged breakpoint partition, which makes both checks exact identities.

use crate::field::FieldElement;
use crate::poly::Polynomial;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    breakpoints: Vec<FieldElement>,
    pieces: Vec<Polynomial>,
}

impl PiecewisePolynomial {
    pub fn new(breakpoints: Vec<FieldElement>, pieces: Vec<Polynomial>) -> Self {
        assert!(breakpoints.len() >= 2, "need at least one piece");
        assert_eq!(pieces.len(), breakpoints.len() - 1, "piece count mismatch");
        assert!(
            breakpoints.windows(2).all(|w| w[0] < w[1]),
            "breakpoints must be strictly increasing"
        );
        Self {
            breakpoints,
            pieces,
        }
    }

    pub fn breakpoints(&self) -> &[FieldElement] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    pub fn lower(&self) -> &FieldElement {
        &self.breakpoints[0]
    }

    pub fn upper(&self) -> &FieldElement {
        self.breakpoints.last().unwrap()
    }

    /// The polynomial governing [bp_i, bp_{i+1}); the last piece is closed.
    pub fn piece_at(&self, x: &FieldElement) -> Option<&Polynomial> {
        if x < self.lower() || x > self.upper() {
            return None;
        }
        let idx = match self.breakpoints.binary_search(x) {
            Ok(i) => i.min(self.pieces.len() - 1),
            Err(i) => i - 1,
        };
        Some(&self.pieces[idx])
    }

    pub fn eval(&self, x: &FieldElement) -> Option<FieldElement> {
        self.piece_at(x).map(|p| p.eval(x))
    }

    pub fn eval_rational(&self, x: &crate::rational::Rational) -> Option<FieldElement> {
        self.eval(&FieldElement::from_rational(x.clone()))
    }

    /// Exact integral over the full support.
    pub fn integrate(&self) -> FieldElement {
        let mut acc = FieldElement::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            acc += &p.integrate(&self.breakpoints[i], &self.breakpoints[i + 1]);
        }
        acc
    }

    /// ∫ q(x)·K(x) dx over the support, exact.
    pub fn integrate_against(&self, q: &Polynomial) -> FieldElement {
        let mut acc = FieldElement::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            let prod = p * q;
            acc += &prod.integrate(&self.breakpoints[i], &self.breakpoints[i + 1]);
        }
        acc
    }

    pub fn scale_rational(&self, s: &crate::rational::Rational) -> Self {
        Self {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(|p| p.scale_rational(s)).collect(),
        }
    }

    /// The mirror image x ↦ f(−x).
    pub fn reflect(&self) -> Self {
        let breakpoints = self.breakpoints.iter().rev().map(|b| -b).collect();
        let pieces = self
            .pieces
            .iter()
            .rev()
            .map(Polynomial::compose_neg)
            .collect();
        Self::new(breakpoints, pieces)
    }

    /// Exact equality as functions, compared piece by piece on the merged
    /// breakpoint partition.
    pub fn function_eq(&self, other: &Self) -> bool {
        if self.lower() != other.lower() || self.upper() != other.upper() {
            return false;
        }
        let mut merged: Vec<FieldElement> = self
            .breakpoints
            .iter()
            .chain(other.breakpoints.iter())
            .cloned()
            .collect();
        merged.sort();
        merged.dedup();
        for w in merged.windows(2) {
            let mid_is_fine = w[0] < w[1];
            debug_assert!(mid_is_fine);
            // any interior point of the subinterval selects the governing piece
            let probe = crate::roots::rational_between(&w[0], &w[1]);
            let probe = FieldElement::from_rational(probe);
            let a = self.piece_at(&probe).expect("probe inside support");
            let b = other.piece_at(&probe).expect("probe inside support");
            if a != b {
                return false;
            }
        }
        true
    }

    /// True iff K(−x) = K(x) as an exact piecewise-polynomial identity.
    pub fn is_even(&self) -> bool {
        self.function_eq(&self.reflect())
    }
}

impl Serialize for PiecewisePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PiecewisePolynomial", 2)?;
        s.serialize_field("breakpoints", &self.breakpoints)?;
        s.serialize_field("pieces", &self.pieces)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn fe_int(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    fn abs_spline() -> PiecewisePolynomial {
        // |x| on [-1, 1]
        PiecewisePolynomial::new(
            vec![fe_int(-1), fe_int(0), fe_int(1)],
            vec![
                Polynomial::linear(FieldElement::zero(), fe_int(-1)),
                Polynomial::linear(FieldElement::zero(), fe_int(1)),
            ],
        )
    }

    #[test]
    fn evaluation_picks_the_right_piece() {
        let f = abs_spline();
        assert_eq!(
            f.eval_rational(&rat(-1, 2)).unwrap(),
            FieldElement::from_rational(rat(1, 2))
        );
        assert_eq!(
            f.eval_rational(&rat(3, 4)).unwrap(),
            FieldElement::from_rational(rat(3, 4))
        );
        assert_eq!(f.eval(&fe_int(1)).unwrap(), fe_int(1));
        assert!(f.eval(&fe_int(2)).is_none());
    }

    #[test]
    fn integrates_piecewise() {
        assert_eq!(abs_spline().integrate(), fe_int(1));
        // against x^2: ∫ |x| x^2 = 2 ∫_0^1 x^3 = 1/2
        assert_eq!(
            abs_spline().integrate_against(&Polynomial::monomial(2)),
            FieldElement::from_rational(rat(1, 2))
        );
    }

    #[test]
    fn evenness_by_reflection() {
        assert!(abs_spline().is_even());
        // x on [-1,1] split at an asymmetric breakpoint is odd, not even
        let id = PiecewisePolynomial::new(
            vec![
                fe_int(-1),
                FieldElement::from_rational(rat(1, 3)),
                fe_int(1),
            ],
            vec![Polynomial::monomial(1), Polynomial::monomial(1)],
        );
        assert!(!id.is_even());
        // ... but it equals itself across mismatched partitions
        let same = PiecewisePolynomial::new(
            vec![
                fe_int(-1),
                FieldElement::sqrt3().scale(&rat(-1, 3)),
                fe_int(1),
            ],
            vec![Polynomial::monomial(1), Polynomial::monomial(1)],
        );
        assert!(id.function_eq(&same));
    }

    #[test]
    fn evenness_with_irrational_breakpoints() {
        // x^2 split at ±√3/3 is even
        let s = FieldElement::sqrt3().scale(&rat(1, 3));
        let f = PiecewisePolynomial::new(
            vec![fe_int(-1), -&s, s, fe_int(1)],
            vec![
                Polynomial::monomial(2),
                Polynomial::monomial(2),
                Polynomial::monomial(2),
            ],
        );
        assert!(f.is_even());
    }
}
