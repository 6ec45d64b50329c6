//! Boundary link Seifert matrices.
//!
//! A matrix is partitioned into `m x m` blocks by `block_sizes`. It is a
//! boundary link Seifert matrix when every diagonal block satisfies
//! `det(A_ii - A_ii^T) = ±1` and every off-diagonal pair of blocks satisfies
//! `A_ij = A_ji^T`. Block order fixes component order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{rows_to_json, to_canonical, unwrap_rows, JsonInt};
use crate::matrix::Matrix;
use crate::Scalar;

/// A square integer matrix together with a block partition, not yet checked
/// against the Seifert matrix invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedMatrix<T> {
    pub block_sizes: Vec<usize>,
    pub rows: Vec<Vec<T>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `det(A_ii - A_ii^T)` is not a unit.
    DiagonalUnimodular,
    /// `A_ij != A_ji^T` for some `i != j`.
    OffDiagonalTranspose,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub blocks: (usize, usize),
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid() {
            return write!(f, "valid");
        }
        let parts: Vec<_> = self.violations.iter().map(|v| v.detail.as_str()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix<T> {
    block_sizes: Vec<usize>,
    entries: Matrix<T>,
}

fn check_structure(block_sizes: &[usize], rows: usize, cols: usize) -> Result<()> {
    if rows != cols {
        return Err(Error::Structure(format!("matrix is {rows}x{cols}, not square")));
    }
    let total: usize = block_sizes.iter().sum();
    if total != rows {
        return Err(Error::Structure(format!("block sizes sum to {total} but the matrix has side {rows}")));
    }
    Ok(())
}

fn block_offsets(block_sizes: &[usize]) -> Vec<usize> {
    let mut offs = Vec::with_capacity(block_sizes.len() + 1);
    let mut acc = 0;
    offs.push(0);
    for s in block_sizes {
        acc += s;
        offs.push(acc);
    }
    offs
}

fn check_invariants<T: Scalar>(block_sizes: &[usize], a: &Matrix<T>) -> ValidationReport {
    let offs = block_offsets(block_sizes);
    let m = block_sizes.len();
    let mut violations = Vec::new();
    for i in 0..m {
        let (o, s) = (offs[i], block_sizes[i]);
        let d = a.window(o, o, s, s);
        let det = d.sub(&d.transpose()).det();
        if !det.is_unit() {
            violations.push(Violation {
                rule: Rule::DiagonalUnimodular,
                blocks: (i, i),
                detail: format!("det(A_{i}{i} - A_{i}{i}^T) = {det}, expected ±1"),
            });
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let aij = a.window(offs[i], offs[j], block_sizes[i], block_sizes[j]);
            let aji = a.window(offs[j], offs[i], block_sizes[j], block_sizes[i]);
            if aij != aji.transpose() {
                violations.push(Violation {
                    rule: Rule::OffDiagonalTranspose,
                    blocks: (i, j),
                    detail: format!("A_{i}{j} != A_{j}{i}^T"),
                });
            }
        }
    }
    ValidationReport { violations }
}

/// Checks a candidate against the boundary link Seifert matrix invariants.
///
/// Shape problems (ragged or non-square rows, a partition that does not
/// cover the side) are returned as `Err(Error::Structure)`; invariant
/// failures are listed in the report.
pub fn validate<T: Scalar>(candidate: &PartitionedMatrix<T>) -> Result<ValidationReport> {
    let n = candidate.rows.len();
    let cols = candidate.rows.first().map_or(0, |r| r.len());
    if candidate.rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Structure("rows have different lengths".into()));
    }
    check_structure(&candidate.block_sizes, n, if n == 0 { 0 } else { cols })?;
    let a = Matrix::from_rows(candidate.rows.clone(), cols).expect("rows checked");
    Ok(check_invariants(&candidate.block_sizes, &a))
}

impl<T: Scalar> SeifertMatrix<T> {
    /// Validates and wraps. Invariant failures become `Error::InvalidMatrix`.
    pub fn new(block_sizes: Vec<usize>, entries: Matrix<T>) -> Result<Self> {
        check_structure(&block_sizes, entries.rows(), entries.cols())?;
        let report = check_invariants(&block_sizes, &entries);
        if !report.valid() {
            return Err(Error::InvalidMatrix(report));
        }
        Ok(SeifertMatrix { block_sizes, entries })
    }

    pub fn from_rows(block_sizes: Vec<usize>, rows: Vec<Vec<T>>) -> Result<Self> {
        let cand = PartitionedMatrix { block_sizes, rows };
        let report = validate(&cand)?;
        if !report.valid() {
            return Err(Error::InvalidMatrix(report));
        }
        let cols = cand.rows.first().map_or(0, |r| r.len());
        let entries = Matrix::from_rows(cand.rows, cols).expect("validated");
        Ok(SeifertMatrix { block_sizes: cand.block_sizes, entries })
    }

    /// Convenience constructor for tests and the catalog.
    pub fn from_i64(block_sizes: &[usize], rows: &[&[i64]]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| T::from_i64(v)).collect()).collect();
        Self::from_rows(block_sizes.to_vec(), rows)
    }

    /// Skips validation. Callers guarantee the invariants; every move in the
    /// S-calculus preserves them.
    pub(crate) fn from_parts_unchecked(block_sizes: Vec<usize>, entries: Matrix<T>) -> Self {
        debug_assert!(check_invariants(&block_sizes, &entries).valid(), "{}", check_invariants(&block_sizes, &entries));
        SeifertMatrix { block_sizes, entries }
    }

    /// The null matrix with `m` genus-zero components.
    pub fn null(m: usize) -> Self {
        SeifertMatrix { block_sizes: vec![0; m], entries: Matrix::zeros(0, 0) }
    }

    pub fn components(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn side(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &Matrix<T> {
        &self.entries
    }

    pub fn is_null(&self) -> bool {
        self.side() == 0
    }

    pub fn offsets(&self) -> Vec<usize> {
        block_offsets(&self.block_sizes)
    }

    pub fn offset(&self, k: usize) -> usize {
        self.block_sizes[..k].iter().sum()
    }

    pub fn block(&self, i: usize, j: usize) -> Matrix<T> {
        self.entries.window(self.offset(i), self.offset(j), self.block_sizes[i], self.block_sizes[j])
    }

    /// Component owning global basis index `idx`.
    pub fn component_of(&self, idx: usize) -> usize {
        let mut acc = 0;
        for (k, s) in self.block_sizes.iter().enumerate() {
            acc += s;
            if idx < acc {
                return k;
            }
        }
        panic!("index {idx} out of range");
    }

    pub fn to_partitioned(&self) -> PartitionedMatrix<T> {
        PartitionedMatrix { block_sizes: self.block_sizes.clone(), rows: self.entries.to_rows() }
    }

    pub fn to_json(&self) -> String {
        to_canonical(&MatrixFile::from(self))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_partitioned(parse_matrix_file(text)?)
    }

    /// Validates a parsed matrix file.
    pub fn from_file(file: MatrixFile<T>) -> Result<Self> {
        Self::from_partitioned(file.into_partitioned()?)
    }

    fn from_partitioned(cand: PartitionedMatrix<T>) -> Result<Self> {
        let report = validate(&cand)?;
        if !report.valid() {
            return Err(Error::InvalidMatrix(report));
        }
        Self::from_rows(cand.block_sizes, cand.rows)
    }
}

impl<T: fmt::Debug> fmt::Debug for SeifertMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix{:?}{:?}", self.block_sizes, self.entries)
    }
}

/// On-disk form: `{"m": int, "block_sizes": [int], "rows": [[int]]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound = "T: Scalar")]
pub struct MatrixFile<T> {
    pub m: usize,
    pub block_sizes: Vec<usize>,
    pub rows: Vec<Vec<JsonInt<T>>>,
}

impl<T: Scalar> From<&SeifertMatrix<T>> for MatrixFile<T> {
    fn from(a: &SeifertMatrix<T>) -> Self {
        MatrixFile { m: a.components(), block_sizes: a.block_sizes.clone(), rows: rows_to_json(&a.entries) }
    }
}

impl<T> MatrixFile<T> {
    pub fn into_partitioned(self) -> Result<PartitionedMatrix<T>> {
        if self.m != self.block_sizes.len() {
            return Err(Error::Structure(format!("m = {} but {} block sizes given", self.m, self.block_sizes.len())));
        }
        Ok(PartitionedMatrix { block_sizes: self.block_sizes, rows: unwrap_rows(self.rows) })
    }
}

/// Parses the matrix file format without checking Seifert invariants.
pub fn parse_matrix_file<T: Scalar>(text: &str) -> Result<PartitionedMatrix<T>> {
    serde_json::from_str::<MatrixFile<T>>(text)?.into_partitioned()
}

/// The blocks `A_ii - A_ii^T`, in component order.
pub fn intersection_form<T: Scalar>(a: &SeifertMatrix<T>) -> Vec<Matrix<T>> {
    (0..a.components())
        .map(|i| {
            let d = a.block(i, i);
            d.sub(&d.transpose())
        })
        .collect()
}

/// Seifert matrix of the standard genus one surfaces of an untwisted
/// Whitehead double: a diagonal sum of `[[0, e], [1 - e, 0]]`.
///
/// `eps[i]` is the clasp sign of pair `i`. Without an `assignment`, pair `i`
/// lies on component `i` and `eps.len()` must equal `m`; with one,
/// `assignment[i]` names the component of pair `i` and pairs keep their
/// relative order inside each block.
pub fn whitehead_double_matrix<T: Scalar>(
    m: usize,
    eps: &[i64],
    assignment: Option<&[usize]>,
) -> Result<SeifertMatrix<T>> {
    if let Some(&bad) = eps.iter().find(|&&e| e != 0 && e != 1) {
        return Err(Error::IllegalClaspSign(bad));
    }
    let default: Vec<usize>;
    let assignment = match assignment {
        Some(a) => a,
        None => {
            if eps.len() != m {
                return Err(Error::Shape(format!("{} clasp signs for {m} components", eps.len())));
            }
            default = (0..m).collect();
            &default
        }
    };
    if assignment.len() != eps.len() {
        return Err(Error::Shape("assignment and clasp signs differ in length".into()));
    }
    if let Some(&k) = assignment.iter().find(|&&k| k >= m) {
        return Err(Error::ComponentOutOfRange { index: k, count: m });
    }
    let mut blocks = Vec::with_capacity(m);
    let mut sizes = Vec::with_capacity(m);
    for k in 0..m {
        let pairs: Vec<Matrix<T>> = eps
            .iter()
            .zip(assignment)
            .filter(|(_, &c)| c == k)
            .map(|(&e, _)| Matrix::from_i64_rows(&[&[0, e], &[1 - e, 0]]))
            .collect();
        sizes.push(2 * pairs.len());
        blocks.push(Matrix::block_diag(&pairs));
    }
    SeifertMatrix::new(sizes, Matrix::block_diag(&blocks))
}
