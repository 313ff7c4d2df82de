//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are indexed either by a vertex (the ring `K[x_i | i in U]`) or
//! by an edge of a complete graph (the ring `K[x_e | e in C(U,2)]`). The two
//! families are never mixed inside one polynomial; arithmetic panics on an
//! attempt, since such a value cannot mean anything downstream.
//!
//! Terms live in a `BTreeMap` under a graded order (degree first, then the
//! lexicographic order of the expanded variable sequence), so iteration is
//! canonical and two polynomials are equal exactly when their term maps are.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{Edge, Matching, Vertex};
use crate::rational;
use crate::{Error, Result};

/// The two disjoint variable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarFamily {
    Vertex,
    Edge,
}

/// A polynomial-ring variable: `x[i]` for a vertex `i`, `x[a,b]` for an
/// edge `{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VariableId {
    Vertex(Vertex),
    Edge(Edge),
}

impl VariableId {
    pub fn family(&self) -> VarFamily {
        match self {
            VariableId::Vertex(_) => VarFamily::Vertex,
            VariableId::Edge(_) => VarFamily::Edge,
        }
    }

    fn json_value(&self) -> Value {
        match self {
            VariableId::Vertex(v) => json!([v.0]),
            VariableId::Edge(e) => json!([e.lo().0, e.hi().0]),
        }
    }
}

impl From<Vertex> for VariableId {
    fn from(v: Vertex) -> Self {
        VariableId::Vertex(v)
    }
}

impl From<Edge> for VariableId {
    fn from(e: Edge) -> Self {
        VariableId::Edge(e)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableId::Vertex(v) => write!(f, "x[{v}]"),
            VariableId::Edge(e) => write!(f, "x[{},{}]", e.lo(), e.hi()),
        }
    }
}

/// A monomial: a map from variables to positive exponents. Zero exponents
/// are never stored, so the empty map is the constant monomial `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<VariableId, u32>,
}

impl Monomial {
    /// The constant monomial.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(v: impl Into<VariableId>) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(v.into(), 1);
        Monomial { exps }
    }

    /// Builds a monomial from `(variable, exponent)` pairs; exponents of
    /// equal variables accumulate and zeros are dropped. Panics if the pairs
    /// mix variable families.
    pub fn from_pairs<I: IntoIterator<Item = (VariableId, u32)>>(pairs: I) -> Self {
        let mut exps: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            *exps.entry(v).or_insert(0) += e;
        }
        let m = Monomial { exps };
        m.assert_single_family();
        m
    }

    /// The square-free monomial `x^M` of a matching.
    pub fn from_matching(m: &Matching) -> Self {
        Monomial::from_pairs(m.edges().iter().map(|e| (VariableId::Edge(*e), 1)))
    }

    fn assert_single_family(&self) {
        let mut fams = self.exps.keys().map(|v| v.family());
        if let Some(first) = fams.next() {
            assert!(
                fams.all(|f| f == first),
                "monomial mixes vertex and edge variables"
            );
        }
    }

    pub fn degree(&self) -> usize {
        self.exps.values().map(|&e| e as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: &VariableId) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.exps.keys().copied()
    }

    pub fn family(&self) -> Option<VarFamily> {
        self.exps.keys().next().map(|v| v.family())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(
            self.exps
                .iter()
                .chain(other.exps.iter())
                .map(|(v, e)| (*v, *e)),
        )
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, &e)| other.exponent(v) >= e)
    }

    /// `other / self`; caller must ensure divisibility.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .filter_map(|(v, &e)| {
                let q = e - self.exponent(v);
                (q > 0).then_some((*v, q))
            })
            .collect();
        Monomial { exps }
    }

    /// The scaling picked up when the operator monomial `self` differentiates
    /// the target monomial `other`: the product of falling factorials
    /// `b (b-1) ... (b-a+1)` over all variables.
    fn falling_factorial_scale(&self, other: &Monomial) -> BigInt {
        let mut scale = BigInt::one();
        for (v, &a) in &self.exps {
            let b = other.exponent(v);
            for step in 0..a {
                scale *= BigInt::from(b - step);
            }
        }
        scale
    }

    /// The variable sequence with multiplicity, e.g. `x*y^2 -> [x, y, y]`.
    fn expanded(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.exps
            .iter()
            .flat_map(|(v, &e)| std::iter::repeat_n(*v, e as usize))
    }

    fn json_value(&self) -> Value {
        Value::Array(
            self.exps
                .iter()
                .map(|(v, &e)| json!({"var": v.json_value(), "exp": e}))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.expanded().cmp(other.expanded()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        for (i, (v, &e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An exact assignment of rational values to variables.
pub type Assignment = BTreeMap<VariableId, BigRational>;

/// A sparse polynomial with exact rational coefficients. Zero coefficients
/// are never stored, so the zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn constant_int(c: i64) -> Self {
        Polynomial::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn variable(v: impl Into<VariableId>) -> Self {
        Polynomial::from_monomial(Monomial::variable(v))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, BigRational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p.assert_single_family();
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn assert_single_family(&self) {
        let mut fams = self.terms.keys().filter_map(|m| m.family());
        if let Some(first) = fams.next() {
            assert!(
                fams.all(|f| f == first),
                "polynomial mixes vertex and edge variables"
            );
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The common degree of all terms; errors when terms of different
    /// degrees coexist, or on the zero polynomial (its degree is undefined).
    pub fn homogeneous_degree(&self) -> Result<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let Some(first) = degrees.next() else {
            return Err(Error::ZeroPolynomial);
        };
        if degrees.all(|d| d == first) {
            Ok(first)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// The variable family of the terms, `None` for constants and zero.
    pub fn family(&self) -> Option<VarFamily> {
        self.terms.keys().find_map(|m| m.family())
    }

    /// All variables appearing with a positive exponent.
    pub fn support_variables(&self) -> BTreeSet<VariableId> {
        self.terms
            .keys()
            .flat_map(|m| m.variables())
            .collect()
    }

    fn assert_compatible(&self, other: &Polynomial) {
        if let (Some(a), Some(b)) = (self.family(), other.family()) {
            assert!(
                a == b,
                "cannot combine polynomials over different variable families"
            );
        }
    }

    /// `self^n` by repeated multiplication, with `p^0 = 1` for every `p`.
    pub fn power(&self, n: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `self` as a partial-derivative operator to `target`:
    /// every variable of `self` is read as differentiation by it. On
    /// monomials this is `d^a x^b = (prod_v b_v!/(b_v - a_v)!) x^(b-a)` when
    /// `a <= b` componentwise and zero otherwise; the map extends
    /// bilinearly. Differentiation by a variable absent from the target
    /// (including the other family's variables) annihilates the term.
    pub fn apply_diff(&self, target: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &target.terms {
                if !a.divides(b) {
                    continue;
                }
                let scale = BigRational::from_integer(a.falling_factorial_scale(b));
                out.add_term(a.quotient_of(b), ca * cb * scale);
            }
        }
        out
    }

    /// Exact evaluation at a point; every support variable needs a value.
    pub fn evaluate(&self, point: &Assignment) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in &m.exps {
                let val = point.get(v).ok_or(Error::UnassignedVariable(*v))?;
                for _ in 0..e {
                    term *= val;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluation at the all-ones point: the sum of the coefficients.
    pub fn eval_all_ones(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// Term-list JSON form: coefficients as decimal strings, variables as
    /// `[vertex]` or `[lo,hi]` arrays.
    pub fn json_value(&self) -> Value {
        json!({
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| json!({"coeff": rational::render(c), "monomial": m.json_value()}))
                .collect::<Vec<_>>(),
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_constant() {
                write!(f, "{}", rational::render(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::render(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xv(i: i64) -> Polynomial {
        Polynomial::variable(Vertex(i))
    }

    fn xe(a: i64, b: i64) -> Polynomial {
        Polynomial::variable(Edge::between(a, b))
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn add_cancels_and_merges() {
        let a = xv(1);
        assert!((&a + &(-&a)).is_zero());
        let sum = &xv(1) + &xv(2);
        assert_eq!(sum.term_count(), 2);
        assert_eq!(&sum + &Polynomial::zero(), sum);
    }

    #[test]
    fn mul_distributes() {
        let sq = &xv(1) * &xv(1);
        assert_eq!(sq, Polynomial::from_monomial(Monomial::from_pairs([(VariableId::Vertex(Vertex(1)), 2)])));
        let diff_of_squares = &(&xv(1) + &xv(2)) * &(&xv(1) - &xv(2));
        let expect = &(&xv(1) * &xv(1)) - &(&xv(2) * &xv(2));
        assert_eq!(diff_of_squares, expect);
        let p = &xv(1) + &xv(3);
        assert_eq!(&Polynomial::one() * &p, p);
    }

    #[test]
    fn power_examples() {
        let p = &xv(1) + &xv(2);
        let sq = p.power(2);
        assert_eq!(sq.term_count(), 3);
        assert_eq!(
            sq.coefficient(&Monomial::from_pairs([
                (VariableId::Vertex(Vertex(1)), 1),
                (VariableId::Vertex(Vertex(2)), 1)
            ])),
            rat(2)
        );
        assert_eq!(Polynomial::zero().power(0), Polynomial::one());
        assert_eq!(xv(1).power(3).homogeneous_degree().unwrap(), 3);
    }

    #[test]
    #[should_panic(expected = "different variable families")]
    fn mixed_family_addition_rejected() {
        let _ = &xv(1) + &xe(1, 2);
    }

    #[test]
    #[should_panic(expected = "different variable families")]
    fn mixed_family_product_rejected() {
        let _ = &xv(1) * &xe(1, 2);
    }

    #[test]
    fn apply_diff_single_variable() {
        // d^2/dx^2 (x^3) = 6x
        let op = &xe(1, 2) * &xe(1, 2);
        let target = xe(1, 2).power(3);
        let result = op.apply_diff(&target);
        let mut expect = Polynomial::zero();
        expect.add_term(Monomial::variable(Edge::between(1, 2)), rat(6));
        assert_eq!(result, expect);
    }

    #[test]
    fn apply_diff_respects_degree() {
        let op = xv(1).power(2);
        let target = xv(1);
        assert!(op.apply_diff(&target).is_zero());
    }

    #[test]
    fn apply_diff_cross_family_vanishes() {
        // a vertex-variable derivative annihilates an edge polynomial
        let op = xv(1);
        let target = xe(1, 2);
        assert!(op.apply_diff(&target).is_zero());
    }

    #[test]
    fn evaluate_needs_full_assignment() {
        let p = &xv(1) * &xv(2);
        let mut point = Assignment::new();
        point.insert(VariableId::Vertex(Vertex(1)), rat(2));
        assert!(matches!(
            p.evaluate(&point),
            Err(Error::UnassignedVariable(_))
        ));
        point.insert(VariableId::Vertex(Vertex(2)), rat(3));
        assert_eq!(p.evaluate(&point).unwrap(), rat(6));
        assert_eq!((&p - &p).evaluate(&point).unwrap(), rat(0));
    }

    #[test]
    fn eval_all_ones_sums_coefficients() {
        assert_eq!(Polynomial::zero().eval_all_ones(), rat(0));
        let p = &(&xv(1) + &xv(2)) + &xv(3);
        assert_eq!(p.eval_all_ones(), rat(3));
    }

    #[test]
    fn monomial_order_is_graded_subset_lex() {
        let m12 = Monomial::variable(Edge::between(1, 2));
        let m13 = Monomial::variable(Edge::between(1, 3));
        let m23 = Monomial::variable(Edge::between(2, 3));
        assert!(m12 < m13 && m13 < m23);
        // degree dominates
        let deg2 = m12.mul(&m12);
        assert!(m23 < deg2);
        // x1^2 < x1x2 in the expanded lexicographic order
        let x1 = Monomial::variable(Vertex(1));
        let x2 = Monomial::variable(Vertex(2));
        assert!(x1.mul(&x1) < x1.mul(&x2));
    }

    #[test]
    fn rendering_matches_canonical_form() {
        let phi_like = &(&xe(1, 2) * &xe(3, 4)) + &(&xe(1, 3) * &xe(2, 4));
        assert_eq!(format!("{phi_like}"), "x[1,2]*x[3,4] + x[1,3]*x[2,4]");
        let mut p = Polynomial::zero();
        p.add_term(
            Monomial::from_pairs([
                (VariableId::Edge(Edge::between(1, 2)), 1),
                (VariableId::Edge(Edge::between(3, 4)), 2),
            ]),
            rat(-5),
        );
        p.add_term(Monomial::one(), BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(format!("{p}"), "1/2 - 5*x[1,2]*x[3,4]^2");
        assert_eq!(format!("{}", Polynomial::zero()), "0");
        assert_eq!(format!("{}", -&xv(7)), "-x[7]");
    }

    #[test]
    fn json_form_is_canonical() {
        let p = &xe(1, 2) * &xe(3, 4);
        let v = p.json_value();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"terms":[{"coeff":"1","monomial":[{"var":[1,2],"exp":1},{"var":[3,4],"exp":1}]}]}"#
        );
    }

    // Small random polynomials over three vertex variables.
    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            prop::collection::vec(0u32..=2, 3),
            -3i64..=3,
        );
        prop::collection::vec(term, 0..4).prop_map(|terms| {
            Polynomial::from_terms(terms.into_iter().map(|(exps, c)| {
                let m = Monomial::from_pairs(
                    exps.iter()
                        .enumerate()
                        .map(|(i, &e)| (VariableId::Vertex(Vertex(i as i64 + 1)), e)),
                );
                (m, rat(c))
            }))
        })
    }

    proptest! {
        #[test]
        fn diff_composition_matches_operator_product(
            a in arb_poly(),
            b in arb_poly(),
            p in arb_poly()
        ) {
            let nested = a.apply_diff(&b.apply_diff(&p));
            let combined = (&a * &b).apply_diff(&p);
            prop_assert_eq!(nested, combined);
        }

        #[test]
        fn diff_is_bilinear(a in arb_poly(), b in arb_poly(), p in arb_poly(), q in arb_poly()) {
            let lhs = (&a + &b).apply_diff(&(&p + &q));
            let rhs = &(&(&a.apply_diff(&p) + &a.apply_diff(&q))
                + &b.apply_diff(&p))
                + &b.apply_diff(&q);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn diff_degree_law(a in arb_poly(), p in arb_poly()) {
            let out = a.apply_diff(&p);
            if let (Ok(da), Ok(dp)) = (a.homogeneous_degree(), p.homogeneous_degree()) {
                if da > dp {
                    prop_assert!(out.is_zero());
                } else if !out.is_zero() {
                    prop_assert_eq!(out.homogeneous_degree().unwrap(), dp - da);
                }
            }
        }

        #[test]
        fn arithmetic_keeps_canonical_form(a in arb_poly(), b in arb_poly()) {
            for p in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(p.iter_terms().all(|(_, c)| !c.is_zero()));
            }
        }
    }
}
