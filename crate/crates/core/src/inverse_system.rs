//! The graded structure of `A = P / Ann(Phi)` through Macaulay's inverse
//! system: annihilator membership, catalecticant matrices and their ranks
//! (the Hilbert function), graded annihilator kernels, the Poincaré pairing,
//! and a multiplication-map rank oracle that is independent of the Hessian
//! determinant criterion.

use std::collections::BTreeSet;
use std::fmt;

use num::rational::BigRational;
use num::traits::Zero;

use crate::combinatorics::matchings;
use crate::generators::matching_parameters;
use crate::matrix::ExactMatrix;
use crate::polynomial::{Monomial, Polynomial, VariableId};
use crate::{Error, Result};

/// Which monomials to use as catalecticant columns.
///
/// `AllMonomials` is the trusted slow oracle: every monomial of the degree.
/// `MatchingMonomials` restricts to `x^M` over the k-edge matchings, valid
/// only for matching generating functions, where every other monomial column
/// is identically zero (squares and non-matching supports annihilate).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnStrategy {
    AllMonomials,
    MatchingMonomials,
}

impl ColumnStrategy {
    pub fn token(&self) -> &'static str {
        match self {
            ColumnStrategy::AllMonomials => "all",
            ColumnStrategy::MatchingMonomials => "matching",
        }
    }
}

/// The graded dimensions `h_0 ... h_s` of an Artinian Gorenstein algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    dims: Vec<usize>,
}

impl HilbertFunction {
    /// Wraps computed dimensions, checking the structure a non-degenerate
    /// pairing forces: `h_0 = h_s = 1` and `h_d = h_(s-d)`. A violation is
    /// an implementation bug, so it panics rather than returning an error.
    pub fn from_dims(dims: Vec<usize>) -> Self {
        assert!(!dims.is_empty(), "a Hilbert function needs h_0");
        let s = dims.len() - 1;
        assert!(dims[0] == 1 && dims[s] == 1, "h_0 = h_s = 1 must hold");
        for d in 0..=s {
            assert_eq!(dims[d], dims[s - d], "Gorenstein symmetry violated");
        }
        HilbertFunction { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn socle_degree(&self) -> usize {
        self.dims.len() - 1
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

/// True iff `f` annihilates `phi`, i.e. `f(d) phi = 0`.
pub fn is_annihilator_element(f: &Polynomial, phi: &Polynomial) -> bool {
    f.apply_diff(phi).is_zero()
}

/// All degree-`d` monomials in the given variables, in the canonical
/// monomial order. The constant monomial for `d = 0`.
pub fn monomials_of_degree(vars: &BTreeSet<VariableId>, d: usize) -> Vec<Monomial> {
    let vars: Vec<VariableId> = vars.iter().copied().collect();
    let mut out = Vec::new();
    let mut exps = Vec::new();
    monomials_rec(&vars, 0, d, &mut exps, &mut out);
    out.sort_unstable();
    out
}

fn monomials_rec(
    vars: &[VariableId],
    idx: usize,
    remaining: usize,
    exps: &mut Vec<(VariableId, u32)>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::from_pairs(exps.iter().copied()));
        return;
    }
    if idx == vars.len() {
        return;
    }
    if idx == vars.len() - 1 {
        exps.push((vars[idx], remaining as u32));
        out.push(Monomial::from_pairs(exps.iter().copied()));
        exps.pop();
        return;
    }
    for e in 0..=remaining {
        if e > 0 {
            exps.push((vars[idx], e as u32));
        }
        monomials_rec(vars, idx + 1, remaining - e, exps, out);
        if e > 0 {
            exps.pop();
        }
    }
}

/// The catalecticant of `phi` at degree `d` over the given columns: rows are
/// the degree-`(s-d)` monomials occurring in some `m(d) phi`, and the entry
/// at `(mu, m)` is the coefficient of `mu` in `m(d) phi`. The kernel of the
/// matrix is the degree-`d` annihilator intersected with the span of the
/// columns; its rank is the dimension of the image of that span in `A^(d)`.
pub fn catalecticant(phi: &Polynomial, d: usize, columns: &[Monomial]) -> Result<ExactMatrix> {
    let s = phi.homogeneous_degree()?;
    if d > s {
        return Err(Error::ParameterViolation("d <= socle degree"));
    }
    for m in columns {
        if m.degree() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: m.degree(),
            });
        }
    }
    let results: Vec<Polynomial> = columns
        .iter()
        .map(|m| Polynomial::from_monomial(m.clone()).apply_diff(phi))
        .collect();
    let row_monomials: Vec<Monomial> = results
        .iter()
        .flat_map(|p| p.iter_terms().map(|(m, _)| m.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let entries: Vec<BigRational> = row_monomials
        .iter()
        .flat_map(|mu| results.iter().map(|p| p.coefficient(mu)))
        .collect();
    ExactMatrix::new(
        row_monomials.iter().map(|m| m.to_string()).collect(),
        columns.iter().map(|m| m.to_string()).collect(),
        entries,
    )
}

/// The column monomials the strategy selects at degree `d`.
pub fn catalecticant_columns(
    phi: &Polynomial,
    d: usize,
    strategy: ColumnStrategy,
) -> Result<Vec<Monomial>> {
    match strategy {
        ColumnStrategy::AllMonomials => {
            Ok(monomials_of_degree(&phi.support_variables(), d))
        }
        ColumnStrategy::MatchingMonomials => {
            let (u, _) = matching_parameters(phi).ok_or(Error::NotMatchingGenerator)?;
            Ok(matchings(&u, d)
                .iter()
                .map(Monomial::from_matching)
                .collect())
        }
    }
}

/// The Hilbert function of `P / Ann(phi)`: `h_d` is the rank of the
/// catalecticant at degree `d` under the chosen column strategy.
pub fn hilbert_function(phi: &Polynomial, strategy: ColumnStrategy) -> Result<HilbertFunction> {
    let s = phi.homogeneous_degree()?;
    let mut dims = Vec::with_capacity(s + 1);
    for d in 0..=s {
        let columns = catalecticant_columns(phi, d, strategy)?;
        dims.push(catalecticant(phi, d, &columns)?.rank());
    }
    Ok(HilbertFunction::from_dims(dims))
}

/// A basis of the degree-`d` graded piece of `Ann(phi)`, as kernel vectors
/// of the full-monomial catalecticant turned back into polynomials.
pub fn annihilator_kernel_basis(phi: &Polynomial, d: usize) -> Result<Vec<Polynomial>> {
    let s = phi.homogeneous_degree()?;
    if d > s {
        return Err(Error::ParameterViolation("d <= socle degree"));
    }
    let columns = catalecticant_columns(phi, d, ColumnStrategy::AllMonomials)?;
    let kernel = catalecticant(phi, d, &columns)?.kernel();
    Ok(kernel
        .into_iter()
        .map(|coeffs| {
            Polynomial::from_terms(
                columns
                    .iter()
                    .cloned()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect())
}

/// Degree-`d` monomials whose images form a basis of `A^(d)`: the pivot
/// columns of the full-monomial catalecticant.
pub fn monomial_basis(phi: &Polynomial, d: usize) -> Result<Vec<Monomial>> {
    let columns = catalecticant_columns(phi, d, ColumnStrategy::AllMonomials)?;
    let pivots = catalecticant(phi, d, &columns)?.pivot_columns();
    Ok(pivots.into_iter().map(|j| columns[j].clone()).collect())
}

/// The Poincaré pairing `(f, g) -> f(d) g(d) phi`, a rational constant,
/// defined for homogeneous `f, g` of complementary degrees. Zero arguments
/// pair to zero.
pub fn poincare_pairing(
    f: &Polynomial,
    g: &Polynomial,
    phi: &Polynomial,
) -> Result<BigRational> {
    let s = phi.homogeneous_degree()?;
    if f.is_zero() || g.is_zero() {
        return Ok(BigRational::zero());
    }
    let df = f.homogeneous_degree()?;
    let dg = g.homogeneous_degree()?;
    if df + dg != s {
        return Err(Error::DegreeMismatch {
            expected: s,
            found: df + dg,
        });
    }
    let result = (f * g).apply_diff(phi);
    Ok(result.coefficient(&Monomial::one()))
}

/// Verdict of the multiplication-map rank oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankOracleVerdict {
    pub injective: bool,
    pub kernel_dim: usize,
}

/// Decides injectivity of `f -> f * l^(s-2d)` on the span of `basis` inside
/// `A^(d)` directly from the definition, without any Hessian determinant:
/// the conditions `(l^(s-2d) * sum_i c_i basis[i])(d) phi = 0` form a linear
/// system over the degree-`d` result monomials whose nullity is the kernel
/// dimension. Requires the images of `basis` in `A^(d)` to be linearly
/// independent, which is checked first via a catalecticant rank.
///
/// When the basis spans all of `A^(d)`, injectivity implies bijectivity onto
/// `A^(s-d)` because the pairing forces `h_d = h_(s-d)`.
pub fn lefschetz_rank_oracle(
    phi: &Polynomial,
    l: &Polynomial,
    d: usize,
    basis: &[Polynomial],
) -> Result<RankOracleVerdict> {
    let s = phi.homogeneous_degree()?;
    if 2 * d > s {
        return Err(Error::ParameterViolation("2d <= socle degree"));
    }
    if basis.is_empty() {
        return Err(Error::ParameterViolation("basis must be nonempty"));
    }
    if !l.is_zero() && l.homogeneous_degree() != Ok(1) {
        return Err(Error::ParameterViolation("l must be a linear form"));
    }
    for b in basis {
        if b.is_zero() || b.homogeneous_degree() != Ok(d) {
            return Err(Error::DependentBasis);
        }
    }
    let images: Vec<Polynomial> = basis.iter().map(|b| b.apply_diff(phi)).collect();
    if columns_matrix(&images).rank() < basis.len() {
        return Err(Error::DependentBasis);
    }
    let power = l.power(s - 2 * d);
    let conditions: Vec<Polynomial> = basis
        .iter()
        .map(|b| (&power * b).apply_diff(phi))
        .collect();
    let matrix = columns_matrix(&conditions);
    let kernel_dim = basis.len() - matrix.rank();
    Ok(RankOracleVerdict {
        injective: kernel_dim == 0,
        kernel_dim,
    })
}

/// Stacks polynomials as columns over the union of their monomials.
fn columns_matrix(polys: &[Polynomial]) -> ExactMatrix {
    let rows: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.iter_terms().map(|(m, _)| m.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let entries: Vec<BigRational> = rows
        .iter()
        .flat_map(|mu| polys.iter().map(|p| p.coefficient(mu)))
        .collect();
    ExactMatrix::new(
        rows.iter().map(|m| m.to_string()).collect(),
        (0..polys.len()).map(|j| j.to_string()).collect(),
        entries,
    )
    .expect("column stack is well-formed")
}
