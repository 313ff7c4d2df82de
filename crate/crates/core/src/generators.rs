//! The generating polynomials: the matching generating function, elementary
//! symmetric polynomials, matching monomials, and the all-ones linear form.

use num::rational::BigRational;
use num::traits::One;

use crate::combinatorics::{canonical_matching, edge_set, k_subsets, matchings, VertexSet};
use crate::polynomial::{Assignment, Monomial, Polynomial, VariableId};
use crate::{Error, Result};

/// The weighted generating function of the k-edge matchings of the complete
/// graph on `u`: the sum of `x^M` over all such matchings. Square-free and
/// homogeneous of degree `k`; the zero polynomial when `2k > |u|` (the sum
/// is then empty).
pub fn matching_generating_function(u: &VertexSet, k: usize) -> Polynomial {
    Polynomial::from_terms(
        matchings(u, k)
            .iter()
            .map(|m| (Monomial::from_matching(m), BigRational::one())),
    )
}

/// The k-th elementary symmetric polynomial in the vertex variables of `u`.
pub fn elementary_symmetric(u: &VertexSet, k: usize) -> Polynomial {
    Polynomial::from_terms(k_subsets(u, k).iter().map(|s| {
        let m = Monomial::from_pairs(s.iter().map(|v| (VariableId::Vertex(v), 1)));
        (m, BigRational::one())
    }))
}

/// The single monomial `x^M(V)` of the canonical matching of `V`;
/// the constant `1` for the empty set. Rejects odd `|V|`.
pub fn matching_monomial(v: &VertexSet) -> Result<Polynomial> {
    let m = canonical_matching(v)?;
    Ok(Polynomial::from_monomial(Monomial::from_matching(&m)))
}

/// The linear form with coefficient one on every edge variable of `u`.
pub fn all_ones_form(u: &VertexSet) -> Result<Polynomial> {
    if u.len() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            got: u.len(),
        });
    }
    Ok(Polynomial::from_terms(
        edge_set(u)
            .into_iter()
            .map(|e| (Monomial::variable(e), BigRational::one())),
    ))
}

/// Assigns the same rational value to every edge variable of `u`.
pub fn constant_edge_point(u: &VertexSet, value: BigRational) -> Assignment {
    edge_set(u)
        .into_iter()
        .map(|e| (VariableId::Edge(e), value.clone()))
        .collect()
}

/// The all-ones evaluation point on the edges of `u`.
pub fn ones_point(u: &VertexSet) -> Assignment {
    constant_edge_point(u, BigRational::one())
}

/// Recovers `(U, k)` when `p` is exactly the matching generating function of
/// the vertex set spanned by its support, and `None` otherwise. The constant
/// one is the degree-0 generating function of the empty set.
pub fn matching_parameters(p: &Polynomial) -> Option<(VertexSet, usize)> {
    let k = p.homogeneous_degree().ok()?;
    let mut ids = Vec::new();
    for v in p.support_variables() {
        match v {
            VariableId::Edge(e) => ids.extend([e.lo().0, e.hi().0]),
            VariableId::Vertex(_) => return None,
        }
    }
    let u = VertexSet::from_ints(ids);
    (matching_generating_function(&u, k) == *p).then_some((u, k))
}
