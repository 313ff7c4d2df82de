//! Higher Hessian matrices and the strong Lefschetz verdict.
//!
//! For a basis `B` of a graded piece `A^(d)`, the d-th Hessian of `phi` is
//! the symmetric matrix `(F(d) F'(d) phi)` over `F, F' in B`. Multiplication
//! by the `(s-2d)`-th power of a linear form `l` is bijective from `A^(d)`
//! to `A^(s-d)` exactly when the Hessian determinant is nonzero at the
//! coefficient point of `l`. For matching generating functions the natural
//! basis is the set of canonical matching monomials of the 2d-element vertex
//! subsets, the evaluated Hessian is a scaled disjointness matrix, and its
//! determinant factors accordingly.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::integer::binomial;
use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{k_subsets, matching_count, VertexSet};
use crate::generators::{matching_generating_function, matching_monomial, ones_point};
use crate::inverse_system::lefschetz_rank_oracle;
use crate::matrix::ExactMatrix;
use crate::polynomial::{Assignment, Polynomial};
use crate::rational;
use crate::{Error, Result};

/// A symmetric matrix of polynomial entries over a graded basis.
#[derive(Debug, Clone, PartialEq)]
pub struct HessianMatrix {
    basis: Vec<Polynomial>,
    labels: Vec<String>,
    entries: Vec<Polynomial>, // row-major
    params: Option<(VertexSet, usize, usize)>,
}

impl HessianMatrix {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.basis.len() + j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// The `(U, k, d)` parameters when this is a matching Hessian.
    pub fn params(&self) -> Option<&(VertexSet, usize, usize)> {
        self.params.as_ref()
    }

    /// Entry-wise exact evaluation; the point must cover every variable
    /// appearing in the entries.
    pub fn at_point(&self, point: &Assignment) -> Result<ExactMatrix> {
        let values = self
            .entries
            .iter()
            .map(|p| p.evaluate(point))
            .collect::<Result<Vec<BigRational>>>()?;
        ExactMatrix::new(self.labels.clone(), self.labels.clone(), values)
    }

    /// Evaluation at the all-ones point of the entries' own support.
    pub fn at_ones(&self) -> ExactMatrix {
        let point: Assignment = self
            .entries
            .iter()
            .flat_map(|p| p.support_variables())
            .map(|v| (v, BigRational::one()))
            .collect();
        self.at_point(&point).expect("support is covered")
    }
}

/// The d-th Hessian of `phi` over the basis `B`: entry `(i, j)` is
/// `B[i](d) B[j](d) phi`. All elements of `B` must be homogeneous of one
/// degree `d` with `2d <= deg phi`.
pub fn hessian_matrix(phi: &Polynomial, basis: &[Polynomial]) -> Result<HessianMatrix> {
    let s = phi.homogeneous_degree()?;
    if basis.is_empty() {
        return Err(Error::ParameterViolation("basis must be nonempty"));
    }
    let d = basis[0].homogeneous_degree()?;
    for b in basis {
        let db = b.homogeneous_degree()?;
        if db != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: db,
            });
        }
    }
    if 2 * d > s {
        return Err(Error::ParameterViolation("2d <= socle degree"));
    }
    let n = basis.len();
    let mut entries = vec![Polynomial::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let entry = (&basis[i] * &basis[j]).apply_diff(phi);
            entries[i * n + j] = entry.clone();
            entries[j * n + i] = entry;
        }
    }
    Ok(HessianMatrix {
        labels: basis.iter().map(|b| b.to_string()).collect(),
        basis: basis.to_vec(),
        entries,
        params: None,
    })
}

/// The matching Hessian: rows and columns are indexed by the 2d-element
/// subsets `V` of `U`, the basis elements are the canonical matching
/// monomials `x^M(V)`, and the entries are computed by differentiation and
/// checked against their closed form (the generating function of the
/// complement when `V` and `V'` are disjoint, zero otherwise).
pub fn matching_hessian(u: &VertexSet, k: usize, d: usize) -> Result<HessianMatrix> {
    if 2 * d > k {
        return Err(Error::ParameterViolation("2d <= k"));
    }
    if 2 * k > u.len() {
        return Err(Error::ParameterViolation("2k <= |U|"));
    }
    let phi = matching_generating_function(u, k);
    let subsets = k_subsets(u, 2 * d);
    let basis = subsets
        .iter()
        .map(matching_monomial)
        .collect::<Result<Vec<Polynomial>>>()?;
    let n = subsets.len();
    let mut entries = vec![Polynomial::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let entry = (&basis[i] * &basis[j]).apply_diff(&phi);
            let closed_form = if subsets[i].is_disjoint(&subsets[j]) {
                matching_generating_function(
                    &u.difference(&subsets[i].union(&subsets[j])),
                    k - 2 * d,
                )
            } else {
                Polynomial::zero()
            };
            assert_eq!(entry, closed_form, "Hessian entry closed form failed");
            entries[i * n + j] = entry.clone();
            entries[j * n + i] = entry;
        }
    }
    Ok(HessianMatrix {
        labels: subsets.iter().map(|v| v.to_string()).collect(),
        basis,
        entries,
        params: Some((u.clone(), k, d)),
    })
}

/// The all-ones value of a matching Hessian entry: the number of
/// `(k-2d)`-edge matchings on the `u-4d` vertices outside `V` and `V'`
/// when the index pair is disjoint, zero otherwise.
pub fn hessian_entry_value(u: usize, k: usize, d: usize, disjoint: bool) -> Result<BigUint> {
    if 2 * d > k {
        return Err(Error::ParameterViolation("2d <= k"));
    }
    if 4 * d > u {
        return Err(Error::ParameterViolation("4d <= u"));
    }
    if !disjoint {
        return Ok(BigUint::ZERO);
    }
    Ok(matching_count(u - 4 * d, k - 2 * d))
}

/// The 0/1 matrix on the m-element subsets of `u` with a one exactly at
/// disjoint pairs.
pub fn disjointness_matrix(u: &VertexSet, m: usize) -> ExactMatrix {
    let subsets = k_subsets(u, m);
    let entries: Vec<BigRational> = subsets
        .iter()
        .flat_map(|a| {
            subsets.iter().map(|b| {
                if a.is_disjoint(b) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
        })
        .collect();
    let labels: Vec<String> = subsets.iter().map(|v| v.to_string()).collect();
    ExactMatrix::new(labels.clone(), labels, entries).expect("subset labels are unique")
}

/// One degree of a strong Lefschetz report.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeVerdict {
    pub d: usize,
    /// The Lefschetz power `s - 2d`.
    pub power: usize,
    /// The Hessian determinant at the chosen point.
    pub det: BigRational,
    pub criterion_bijective: bool,
    pub oracle_bijective: bool,
}

/// Per-degree verdicts for multiplication by powers of a linear form.
#[derive(Debug, Clone, PartialEq)]
pub struct LefschetzReport {
    pub vertex_count: usize,
    pub k: usize,
    pub socle_degree: usize,
    /// `"ones"` for the all-ones point, otherwise the full assignment.
    pub point: String,
    pub degrees: Vec<DegreeVerdict>,
    pub strong_lefschetz: bool,
}

#[derive(Serialize)]
struct DegreeForm {
    d: usize,
    power: usize,
    det: String,
    criterion: bool,
    oracle: bool,
}

#[derive(Serialize)]
struct LefschetzForm<'a> {
    u: usize,
    k: usize,
    point: &'a str,
    degrees: Vec<DegreeForm>,
    strong_lefschetz: bool,
}

impl LefschetzReport {
    pub fn to_json_string(&self) -> String {
        let form = LefschetzForm {
            u: self.vertex_count,
            k: self.k,
            point: &self.point,
            degrees: self
                .degrees
                .iter()
                .map(|v| DegreeForm {
                    d: v.d,
                    power: v.power,
                    det: rational::render(&v.det),
                    criterion: v.criterion_bijective,
                    oracle: v.oracle_bijective,
                })
                .collect(),
            strong_lefschetz: self.strong_lefschetz,
        };
        serde_json::to_string(&form).expect("report serialization")
    }
}

impl fmt::Display for LefschetzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "strong Lefschetz check: u={} k={} point={}",
            self.vertex_count, self.k, self.point
        )?;
        for v in &self.degrees {
            writeln!(
                f,
                "  d={} power={} det={} criterion={} oracle={}",
                v.d,
                v.power,
                rational::render(&v.det),
                if v.criterion_bijective { "bijective" } else { "degenerate" },
                if v.oracle_bijective { "bijective" } else { "degenerate" },
            )?;
        }
        write!(f, "strong_lefschetz: {}", self.strong_lefschetz)
    }
}

fn describe_point(u: &VertexSet, point: &Assignment) -> String {
    if point.values().all(|v| v.is_one()) && point.len() == ones_point(u).len() {
        return "ones".to_string();
    }
    point
        .iter()
        .map(|(v, q)| format!("{v}={}", rational::render(q)))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Runs the full strong Lefschetz check for the matching algebra of
/// `(U, k)` at a rational edge point (default all ones): for every `d` with
/// `2d <= k` it evaluates the matching Hessian determinant there (the
/// criterion) and, independently, the multiplication-map rank oracle for the
/// linear form with those coefficients. The overall verdict is the
/// conjunction of the criterion verdicts.
pub fn strong_lefschetz_check(
    u: &VertexSet,
    k: usize,
    point: Option<&Assignment>,
) -> Result<LefschetzReport> {
    if 2 * k > u.len() {
        return Err(Error::ParameterViolation("2k <= |U|"));
    }
    let phi = matching_generating_function(u, k);
    if phi.is_zero() && k > 0 {
        return Err(Error::ZeroPolynomial);
    }
    let default_point;
    let point = match point {
        Some(p) => p,
        None => {
            default_point = ones_point(u);
            &default_point
        }
    };
    // restrict an ambient assignment to the edges of K_U; every edge needs
    // a value
    let mut restricted = Assignment::new();
    for e in crate::combinatorics::edge_set(u) {
        let var = crate::polynomial::VariableId::Edge(e);
        match point.get(&var) {
            Some(q) => {
                restricted.insert(var, q.clone());
            }
            None => return Err(Error::UnassignedVariable(var)),
        }
    }
    let point = &restricted;
    let l = Polynomial::from_terms(point.iter().map(|(v, q)| {
        (
            crate::polynomial::Monomial::variable(*v),
            q.clone(),
        )
    }));
    let mut degrees = Vec::new();
    for d in 0..=k / 2 {
        let hessian = matching_hessian(u, k, d)?;
        let det = hessian.at_point(point)?.det()?;
        let criterion_bijective = !det.is_zero();
        let basis = hessian.basis().to_vec();
        let oracle_bijective = lefschetz_rank_oracle(&phi, &l, d, &basis)?.injective;
        degrees.push(DegreeVerdict {
            d,
            power: k - 2 * d,
            det,
            criterion_bijective,
            oracle_bijective,
        });
    }
    let strong_lefschetz = degrees.iter().all(|v| v.criterion_bijective);
    Ok(LefschetzReport {
        vertex_count: u.len(),
        k,
        socle_degree: k,
        point: describe_point(u, point),
        degrees,
        strong_lefschetz,
    })
}

/// Both sides of the determinant factorization
/// `det(H at ones) = N^C(u,2d) * det(D(U, 2d))`, where `N` is the disjoint
/// entry value.
#[derive(Debug, Clone, PartialEq)]
pub struct DetFactorization {
    pub lhs: BigRational,
    /// The scalar `N^C(u,2d)` pulled out of the matrix.
    pub constant: BigInt,
    pub dmatrix_det: BigRational,
    pub matches: bool,
}

pub fn det_factorization_check(u: &VertexSet, k: usize, d: usize) -> Result<DetFactorization> {
    if 2 * d > k {
        return Err(Error::ParameterViolation("2d <= k"));
    }
    if 2 * k > u.len() {
        return Err(Error::ParameterViolation("2k <= |U|"));
    }
    let lhs = matching_hessian(u, k, d)?.at_ones().det()?;
    let entry: BigInt = hessian_entry_value(u.len(), k, d, true)?.into();
    let exponent = binomial(BigUint::from(u.len()), BigUint::from(2 * d));
    let exponent: u32 = exponent
        .try_into()
        .map_err(|_| Error::ParameterViolation("matrix size fits in u32"))?;
    let constant = entry.pow(exponent);
    let dmatrix_det = disjointness_matrix(u, 2 * d).det()?;
    let rhs = BigRational::from_integer(constant.clone()) * &dmatrix_det;
    Ok(DetFactorization {
        matches: lhs == rhs,
        lhs,
        constant,
        dmatrix_det,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Vertex;
    use crate::generators::{constant_edge_point, elementary_symmetric};

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn phi42() -> Polynomial {
        matching_generating_function(&VertexSet::first_n(4), 2)
    }

    #[test]
    fn generic_hessian_examples() {
        let phi = phi42();
        let h0 = hessian_matrix(&phi, &[Polynomial::one()]).unwrap();
        assert_eq!(h0.size(), 1);
        assert_eq!(h0.entry(0, 0), &phi);

        let edge_basis: Vec<Polynomial> = phi
            .support_variables()
            .into_iter()
            .map(Polynomial::variable)
            .collect();
        let h1 = hessian_matrix(&phi, &edge_basis).unwrap();
        assert_eq!(h1.size(), 6);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(h1.entry(i, j), h1.entry(j, i));
            }
        }

        let e2 = elementary_symmetric(&VertexSet::first_n(3), 2);
        let vertex_basis: Vec<Polynomial> =
            (1..=3).map(|i| Polynomial::variable(Vertex(i))).collect();
        let he = hessian_matrix(&e2, &vertex_basis).unwrap();
        assert_eq!(he.entry(0, 1), &Polynomial::one());
        assert_eq!(he.entry(0, 0), &Polynomial::zero());

        let mixed = vec![Polynomial::one(), Polynomial::variable(Vertex(1))];
        assert!(matches!(
            hessian_matrix(&e2, &mixed),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn matching_hessian_small_cases() {
        let u = VertexSet::first_n(4);
        let h = matching_hessian(&u, 2, 1).unwrap();
        assert_eq!(h.size(), 6);
        let ones = h.at_ones();
        assert_eq!(ones, disjointness_matrix(&u, 2));

        let h0 = matching_hessian(&u, 2, 0).unwrap();
        assert_eq!(h0.size(), 1);
        assert_eq!(h0.entry(0, 0), &phi42());

        assert!(matches!(
            matching_hessian(&u, 2, 2),
            Err(Error::ParameterViolation("2d <= k"))
        ));
        assert!(matches!(
            matching_hessian(&u, 3, 1),
            Err(Error::ParameterViolation("2k <= |U|"))
        ));
    }

    #[test]
    fn matching_hessian_entry_on_eight_vertices() {
        let u = VertexSet::first_n(8);
        let h = matching_hessian(&u, 3, 1).unwrap();
        // V = {1,2} and V' = {3,4} are the first and the C(6,2)-th? find indices
        let subsets = k_subsets(&u, 2);
        let i = subsets
            .iter()
            .position(|s| s == &VertexSet::from_ints([1, 2]))
            .unwrap();
        let j = subsets
            .iter()
            .position(|s| s == &VertexSet::from_ints([3, 4]))
            .unwrap();
        let expect = matching_generating_function(&VertexSet::from_ints([5, 6, 7, 8]), 1);
        assert_eq!(h.entry(i, j), &expect);
        assert_eq!(expect.term_count(), 6);
    }

    #[test]
    fn entry_values() {
        assert_eq!(hessian_entry_value(4, 2, 1, true).unwrap(), 1u32.into());
        assert_eq!(hessian_entry_value(8, 3, 1, true).unwrap(), 6u32.into());
        assert_eq!(hessian_entry_value(6, 3, 1, true).unwrap(), 1u32.into());
        assert_eq!(hessian_entry_value(8, 4, 1, true).unwrap(), 3u32.into());
        assert_eq!(hessian_entry_value(7, 3, 1, false).unwrap(), BigUint::ZERO);
        assert!(hessian_entry_value(8, 3, 2, true).is_err());
        assert!(hessian_entry_value(3, 2, 1, true).is_err());
    }

    #[test]
    fn disjointness_matrices() {
        let d42 = disjointness_matrix(&VertexSet::first_n(4), 2);
        assert_eq!((d42.rows(), d42.cols()), (6, 6));
        assert_eq!(d42.det().unwrap(), rat(-1));
        let trivial = disjointness_matrix(&VertexSet::first_n(3), 0);
        assert_eq!(trivial.rows(), 1);
        assert_eq!(*trivial.get(0, 0), rat(1));
        let impossible = disjointness_matrix(&VertexSet::first_n(3), 2);
        assert_eq!((impossible.rows(), impossible.cols()), (3, 3));
        assert!((0..3).all(|i| (0..3).all(|j| impossible.get(i, j).is_zero())));
        assert_eq!(disjointness_matrix(&VertexSet::first_n(6), 2).det().unwrap(), rat(-1458));
        assert_eq!(disjointness_matrix(&VertexSet::first_n(5), 2).det().unwrap(), rat(48));
    }

    #[test]
    fn disjointness_determinant_nonzero_when_space_allows() {
        for n in 0..=10usize {
            for d in 0..=2usize {
                let matrix = disjointness_matrix(&VertexSet::first_n(n), 2 * d);
                if n < 2 * d {
                    // no subsets at all; the empty determinant is 1
                    assert_eq!(matrix.rows(), 0);
                    continue;
                }
                let det = matrix.det().unwrap();
                if n >= 4 * d {
                    assert!(!det.is_zero(), "n={n} d={d}");
                } else {
                    // subsets exist but every pair intersects
                    assert!(det.is_zero(), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn evaluation_at_points() {
        let u = VertexSet::first_n(4);
        let h = matching_hessian(&u, 2, 0).unwrap();
        let ones = h.at_ones();
        assert_eq!(*ones.get(0, 0), rat(3));

        let zeros = constant_edge_point(&u, BigRational::zero());
        let at_zero = h.at_point(&zeros).unwrap();
        assert_eq!(*at_zero.get(0, 0), rat(0));

        // entries of the degree-0 Hessian contain variables, so an empty
        // assignment is rejected
        let missing: Assignment = Assignment::new();
        assert!(matches!(
            h.at_point(&missing),
            Err(Error::UnassignedVariable(_))
        ));
    }

    #[test]
    fn strong_lefschetz_on_four_vertices() {
        let report = strong_lefschetz_check(&VertexSet::first_n(4), 2, None).unwrap();
        assert!(report.strong_lefschetz);
        assert_eq!(report.point, "ones");
        assert_eq!(report.degrees.len(), 2);
        assert_eq!(report.degrees[0].det, rat(3));
        assert_eq!(report.degrees[0].power, 2);
        assert_eq!(report.degrees[1].det, rat(-1));
        for v in &report.degrees {
            assert!(v.criterion_bijective && v.oracle_bijective);
        }
    }

    #[test]
    fn strong_lefschetz_rejects_and_degenerates() {
        assert!(matches!(
            strong_lefschetz_check(&VertexSet::first_n(4), 3, None),
            Err(Error::ParameterViolation("2k <= |U|"))
        ));
        let u = VertexSet::first_n(6);
        let zeros = constant_edge_point(&u, BigRational::zero());
        let report = strong_lefschetz_check(&u, 2, Some(&zeros)).unwrap();
        assert!(!report.strong_lefschetz);
        assert!(!report.degrees[0].criterion_bijective);
        assert!(!report.degrees[0].oracle_bijective);
        // the top pairing degree survives even at the zero point
        assert!(report.degrees[1].criterion_bijective);
        assert!(report.degrees[1].oracle_bijective);
        // criterion and oracle agree pointwise
        for v in &report.degrees {
            assert_eq!(v.criterion_bijective, v.oracle_bijective);
        }
    }

    #[test]
    fn report_serialization_shape() {
        let report = strong_lefschetz_check(&VertexSet::first_n(4), 2, None).unwrap();
        let json = report.to_json_string();
        assert_eq!(
            json,
            "{\"u\":4,\"k\":2,\"point\":\"ones\",\"degrees\":[\
             {\"d\":0,\"power\":2,\"det\":\"3\",\"criterion\":true,\"oracle\":true},\
             {\"d\":1,\"power\":0,\"det\":\"-1\",\"criterion\":true,\"oracle\":true}],\
             \"strong_lefschetz\":true}"
        );
        let text = report.to_string();
        assert!(text.starts_with("strong Lefschetz check: u=4 k=2 point=ones"));
        assert!(text.ends_with("strong_lefschetz: true"));
    }

    #[test]
    fn det_factorization_cases() {
        let f = det_factorization_check(&VertexSet::first_n(4), 2, 1).unwrap();
        assert!(f.matches);
        assert_eq!(f.lhs, rat(-1));
        assert_eq!(f.constant, BigInt::from(1));
        assert_eq!(f.dmatrix_det, rat(-1));

        let f = det_factorization_check(&VertexSet::first_n(6), 2, 1).unwrap();
        assert!(f.matches);
        assert_eq!(f.lhs, rat(-1458));

        let f = det_factorization_check(&VertexSet::first_n(6), 3, 1).unwrap();
        assert!(f.matches);
        assert_eq!(f.lhs, rat(-1458));

        assert!(det_factorization_check(&VertexSet::first_n(4), 2, 2).is_err());
    }

    #[test]
    fn determinant_vanishing_is_basis_independent() {
        // replace the canonical basis by an invertible unitriangular
        // transform: the determinant changes by det(T)^2 = 1
        let u = VertexSet::first_n(4);
        let phi = phi42();
        let h = matching_hessian(&u, 2, 1).unwrap();
        let base = h.basis().to_vec();
        let transformed: Vec<Polynomial> = (0..base.len())
            .map(|i| {
                if i + 1 < base.len() {
                    &base[i] + &base[i + 1]
                } else {
                    base[i].clone()
                }
            })
            .collect();
        let alt = hessian_matrix(&phi, &transformed).unwrap();
        let det_base = h.at_ones().det().unwrap();
        let det_alt = alt.at_ones().det().unwrap();
        assert_eq!(det_base, det_alt);
        assert!(!det_alt.is_zero());
    }

    #[test]
    fn hessians_stay_symmetric() {
        for (n, k) in [(4, 2), (5, 2), (6, 2), (6, 3)] {
            let u = VertexSet::first_n(n);
            for d in 0..=k / 2 {
                let h = matching_hessian(&u, k, d).unwrap();
                assert!(h.at_ones().is_symmetric());
                for i in 0..h.size() {
                    for j in 0..h.size() {
                        assert_eq!(h.entry(i, j), h.entry(j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn entry_dichotomy_at_ones() {
        for (n, k) in [(4, 2), (6, 2), (6, 3), (8, 3)] {
            let u = VertexSet::first_n(n);
            for d in 0..=k / 2 {
                let h = matching_hessian(&u, k, d).unwrap();
                let ones = h.at_ones();
                let subsets = k_subsets(&u, 2 * d);
                let value = BigRational::from_integer(
                    BigInt::from(hessian_entry_value(n, k, d, true).unwrap()),
                );
                let dmatrix = disjointness_matrix(&u, 2 * d);
                for i in 0..subsets.len() {
                    for j in 0..subsets.len() {
                        let expected = if subsets[i].is_disjoint(&subsets[j]) {
                            value.clone()
                        } else {
                            BigRational::zero()
                        };
                        assert_eq!(*ones.get(i, j), expected);
                        assert_eq!(
                            ones.get(i, j).is_zero(),
                            dmatrix.get(i, j).is_zero()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hessian_at_zero_point_keeps_constant_terms() {
        let u = VertexSet::first_n(6);
        let h = matching_hessian(&u, 3, 1).unwrap();
        let zeros = constant_edge_point(&u, BigRational::zero());
        let at_zero = h.at_point(&zeros).unwrap();
        // degree-1 entries all vanish at zero
        for i in 0..h.size() {
            for j in 0..h.size() {
                assert!(at_zero.get(i, j).is_zero());
            }
        }
    }
}
