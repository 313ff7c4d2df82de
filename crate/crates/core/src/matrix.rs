//! Dense matrices of exact rationals with fraction-free elimination.
//!
//! Determinant, rank, and kernel all run through one Bareiss-style
//! fraction-free row reduction over big integers (after clearing row
//! denominators), so "nonzero determinant" is decided exactly, never
//! estimated. Row and column labels record which monomial or subset indexes
//! each line; they ride along into the JSON and CSV forms.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<BigRational>, // row-major
}

impl ExactMatrix {
    /// Builds a labeled matrix; the shape is implied by the label counts.
    /// Labels must be unique per side.
    pub fn new(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        entries: Vec<BigRational>,
    ) -> Result<Self> {
        let rows = row_labels.len();
        let cols = col_labels.len();
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        for labels in [&row_labels, &col_labels] {
            let mut seen = std::collections::BTreeSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        Ok(ExactMatrix {
            rows,
            cols,
            row_labels,
            col_labels,
            entries,
        })
    }

    /// Builds from rows with positional labels `"0", "1", ...`.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch {
                rows: rows.len(),
                cols,
                len: rows.iter().map(|r| r.len()).sum(),
            });
        }
        ExactMatrix::new(
            (0..rows.len()).map(|i| i.to_string()).collect(),
            (0..cols).map(|j| j.to_string()).collect(),
            rows.into_iter().flatten().collect(),
        )
    }

    pub fn from_int_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Clears denominators row by row. Returns the integer matrix and the
    /// product of the scaling factors (the factor the determinant picked up).
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale_product = BigInt::one();
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            let lcm = row.iter().fold(BigInt::one(), |acc, q| {
                num::integer::lcm(acc, q.denom().clone())
            });
            scale_product *= &lcm;
            out.push(row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect());
        }
        (out, scale_product)
    }

    /// Exact determinant by fraction-free elimination. Rejects non-square
    /// matrices; the empty 0x0 determinant is 1.
    pub fn det(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(BigRational::one());
        }
        let (ints, scale) = self.integer_rows();
        let ech = bareiss_echelon(ints);
        if ech.rank < self.rows {
            return Ok(BigRational::zero());
        }
        let last = ech.mat[self.rows - 1][self.cols - 1].clone();
        let signed = if ech.sign < 0 { -last } else { last };
        Ok(BigRational::new(signed, scale))
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (ints, _) = self.integer_rows();
        bareiss_echelon(ints).rank
    }

    /// The pivot columns of the row echelon form, in ascending order. The
    /// columns they select are a basis of the column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        if self.rows == 0 || self.cols == 0 {
            return Vec::new();
        }
        let (ints, _) = self.integer_rows();
        bareiss_echelon(ints).pivot_cols
    }

    /// A basis of the right kernel, one vector per free column in ascending
    /// column order (each has coordinate 1 at its free column).
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        if self.cols == 0 {
            return Vec::new();
        }
        if self.rows == 0 {
            return (0..self.cols)
                .map(|f| unit_vector(self.cols, f))
                .collect();
        }
        let (ints, _) = self.integer_rows();
        let ech = bareiss_echelon(ints);
        let pivot_set: std::collections::BTreeSet<usize> =
            ech.pivot_cols.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut x = vec![BigRational::zero(); self.cols];
            x[f] = BigRational::one();
            for r in (0..ech.rank).rev() {
                let pc = ech.pivot_cols[r];
                let mut sum = BigRational::zero();
                for (j, entry) in ech.mat[r].iter().enumerate().skip(pc + 1) {
                    if !x[j].is_zero() && !entry.is_zero() {
                        sum += BigRational::from_integer(entry.clone()) * &x[j];
                    }
                }
                x[pc] = -sum / BigRational::from_integer(ech.mat[r][pc].clone());
            }
            basis.push(x);
        }
        basis
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&MatrixForm::from(self)).expect("matrix serialization")
    }

    pub fn json_value(&self) -> serde_json::Value {
        serde_json::to_value(MatrixForm::from(self)).expect("matrix serialization")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let form: MatrixForm =
            serde_json::from_str(s).map_err(|e| Error::MalformedMatrix(e.to_string()))?;
        form.try_into()
    }

    pub fn to_csv_string(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.col_labels.iter().cloned());
        w.write_record(&header).expect("csv header");
        for i in 0..self.rows {
            let mut record = vec![self.row_labels[i].clone()];
            record.extend((0..self.cols).map(|j| rational::render(self.get(i, j))));
            w.write_record(&record).expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("csv is utf-8")
    }
}

impl std::fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", rational::render(self.get(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Serialized form: entries as decimal strings, row-major.
#[derive(Serialize, Deserialize)]
struct MatrixForm {
    rows: usize,
    cols: usize,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<Vec<String>>,
}

impl From<&ExactMatrix> for MatrixForm {
    fn from(m: &ExactMatrix) -> Self {
        MatrixForm {
            rows: m.rows,
            cols: m.cols,
            row_labels: m.row_labels.clone(),
            col_labels: m.col_labels.clone(),
            entries: (0..m.rows)
                .map(|i| (0..m.cols).map(|j| rational::render(m.get(i, j))).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixForm> for ExactMatrix {
    type Error = Error;

    fn try_from(form: MatrixForm) -> Result<Self> {
        if form.row_labels.len() != form.rows || form.col_labels.len() != form.cols {
            return Err(Error::MalformedMatrix("label count mismatch".into()));
        }
        let mut entries = Vec::with_capacity(form.rows * form.cols);
        for row in &form.entries {
            if row.len() != form.cols {
                return Err(Error::MalformedMatrix("ragged entry rows".into()));
            }
            for s in row {
                entries.push(
                    rational::parse(s)
                        .ok_or_else(|| Error::MalformedMatrix(format!("bad entry {s:?}")))?,
                );
            }
        }
        ExactMatrix::new(form.row_labels, form.col_labels, entries)
    }
}

fn unit_vector(len: usize, at: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); len];
    v[at] = BigRational::one();
    v
}

struct Echelon {
    mat: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
    sign: i8,
    rank: usize,
}

/// Fraction-free Gaussian elimination (Bareiss). Intermediate entries stay
/// minors of the input, so every division below is exact. Columns whose
/// remaining entries are all zero are skipped, which keeps the procedure
/// valid on rectangular and rank-deficient input.
fn bareiss_echelon(mut mat: Vec<Vec<BigInt>>) -> Echelon {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut pivot_cols = Vec::new();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            mat.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &mat[r][c] * &mat[i][j] - &mat[i][c] * &mat[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                mat[i][j] = num / &prev;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }
    Echelon {
        mat,
        pivot_cols,
        sign,
        rank: r,
    }
}
