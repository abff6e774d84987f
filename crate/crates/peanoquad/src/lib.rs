//! # peanoquad
//!
//! Exact quadrature error analysis over the real field Q(√3, √5), built
//! around three capabilities:
//!
//! * **Rules.** The classical low-order rules on [−1, 1] — midpoint,
//!   trapezoid, the two 2-point Radau rules, 2- and 3-point Gauss-Legendre,
//!   3- and 4-point Lobatto — with their nodes and weights represented
//!   exactly, plus affine combinations and rescaling to arbitrary intervals.
//!   The 4- and 5-point Gauss and Lobatto rules (whose nodes leave the field)
//!   are available through a certified interval backend.
//! * **Peano kernels.** For a remainder functional E = Q − c·∫ that
//!   annihilates polynomials of degree ≤ r−1, the kernel
//!   K(x) = E[(·−x)₊^{r−1}/(r−1)!] is built as an exact piecewise polynomial.
//!   Its sign is certified by Sturm-sequence root isolation (with a
//!   Budan–Fourier cross-check), its integral gives exact mean-value error
//!   constants such as 1/540 for ½G₂+½Lob₃ and 1/94500 for ½G₃+½Lob₄, and
//!   grid enclosures reproduce the kernel plots for the conjectured orders.
//! * **Enclosures.** For a (2n−1)-convex integrand the Gauss value bounds the
//!   integral from below and the Lobatto value from above, and the Gauss
//!   error never exceeds the Lobatto error; `enclosure` turns the rule pairs
//!   into certified integral brackets with composite bisection, and
//!   reproduces the averaged-Radau counterexample showing that no such
//!   comparison exists for 2-convex functions.
//!
//! Start with the runnable examples (`cargo run --example error_constants`,
//! `certify_kernels`, `enclose_integral`, …) or the `peanoquad` binary
//! (`rules list`, `certify`, `constant`, `compare`, `enclose`, `kernel`,
//! `figure`, `corpus list`, `counterexample radau`).

pub mod cli;
pub mod combo;
pub mod convexity;
pub mod enclosure;
pub mod field;
pub mod interval;
pub mod numeric;
pub mod peano;
pub mod piecewise;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod rules;

pub use convexity::{corpus, corpus_function, CorpusFunction};
pub use enclosure::{bracket, compare_remainders, composite_enclose, radau_counterexample};
pub use field::FieldElement;
pub use interval::RationalInterval;
pub use peano::{certify_sign, error_constant, kernel_is_even, RemainderFunctional, SignVerdict};
pub use piecewise::PiecewisePolynomial;
pub use poly::Polynomial;
pub use rational::Rational;
pub use rules::{builtin_rule, combine, QuadratureRule, RuleCombination};
