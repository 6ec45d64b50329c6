//! The S-equivalence moves on boundary link Seifert matrices.
//!
//! Three moves generate S-equivalence: a block-diagonal unimodular
//! congruence, an S-enlargement (adds a hyperbolic pair to one block), and
//! its inverse, the S-reduction. Every move here carries enough witness data
//! to be replayed and checked bit-exactly.
//!
//! Positions are 0-based. An enlargement inserts its pair at `offset` inside
//! block `component`; offset 0 is the front-of-block layout used in the
//! literature. A reduction at `(component, offset)` removes the basis
//! elements at local positions `offset` and `offset + 1`.

mod rearrange;
mod search;

pub use rearrange::{commute_reduction_congruence, normalize_sequence, replace_min_by_max, MinMaxSwap};
pub use search::{
    good_basis_form_check, reduce_to_null, s_equivalent_bounded, EquivalenceCaps, GoodBasis, PairId, SearchOutcome,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{rows_to_json, to_canonical, unwrap_rows, JsonInt};
use crate::matrix::Matrix;
use crate::seifert::SeifertMatrix;
use crate::Scalar;

/// The corner signs `(ε, ε')` of an enlargement. Only `(1,0)` and `(0,1)`
/// are legal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EpsPair {
    /// `(ε, ε') = (0, 1)`
    ZeroOne,
    /// `(ε, ε') = (1, 0)`
    OneZero,
}

impl EpsPair {
    pub fn new(eps: i64, eps_prime: i64) -> Result<Self> {
        match (eps, eps_prime) {
            (1, 0) => Ok(EpsPair::OneZero),
            (0, 1) => Ok(EpsPair::ZeroOne),
            _ => Err(Error::IllegalEps { eps, eps_prime }),
        }
    }

    pub fn eps(self) -> i64 {
        match self {
            EpsPair::OneZero => 1,
            EpsPair::ZeroOne => 0,
        }
    }

    pub fn eps_prime(self) -> i64 {
        1 - self.eps()
    }
}

/// Block-diagonal change of basis `P = diag(P_1, ..., P_m)`, acting by
/// `A -> P^T A P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence<T> {
    blocks: Vec<Matrix<T>>,
}

impl<T: Scalar> Congruence<T> {
    pub fn new(blocks: Vec<Matrix<T>>) -> Result<Self> {
        for (i, b) in blocks.iter().enumerate() {
            if !b.is_square() {
                return Err(Error::Shape(format!("congruence block {i} is not square")));
            }
            let det = b.det();
            if !det.is_unit() {
                return Err(Error::NotUnimodular { block: i, det: det.to_string() });
            }
        }
        Ok(Congruence { blocks })
    }

    pub fn identity(block_sizes: &[usize]) -> Self {
        Congruence { blocks: block_sizes.iter().map(|&n| Matrix::identity(n)).collect() }
    }

    pub fn blocks(&self) -> &[Matrix<T>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.rows()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| *b == Matrix::identity(b.rows()))
    }

    /// Blockwise product `P·Q`; applying `P` then `Q` equals applying `P·Q`.
    pub fn then(&self, q: &Self) -> Self {
        assert_eq!(self.block_sizes(), q.block_sizes(), "congruence shapes");
        Congruence { blocks: self.blocks.iter().zip(&q.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn inverse(&self) -> Self {
        Congruence {
            blocks: self.blocks.iter().map(|b| b.inverse_unimodular().expect("unimodular by construction")).collect(),
        }
    }

    /// The full block-diagonal matrix.
    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix::block_diag(&self.blocks)
    }
}

/// An S-enlargement of one block, with its witness rows `x_1, ..., x_m`
/// (each `x_j` has the length of block `j` before the enlargement).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Enlargement<T> {
    pub component: usize,
    pub offset: usize,
    pub eps: EpsPair,
    pub rows: Vec<Vec<T>>,
}

impl<T: Scalar> Enlargement<T> {
    /// Front-of-block enlargement with all-zero witness rows.
    pub fn zero(a: &SeifertMatrix<T>, component: usize, eps: EpsPair) -> Self {
        Enlargement { component, offset: 0, eps, rows: a.block_sizes().iter().map(|&n| vec![T::zero(); n]).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SMove<T> {
    Congruence(Congruence<T>),
    Enlarge(Enlargement<T>),
    Reduce { component: usize, offset: usize },
}

impl<T: Scalar> SMove<T> {
    pub fn apply(&self, a: &SeifertMatrix<T>) -> Result<SeifertMatrix<T>> {
        match self {
            SMove::Congruence(p) => apply_congruence(a, p),
            SMove::Enlarge(e) => apply_enlargement(a, e),
            SMove::Reduce { component, offset } => apply_reduction(a, *component, *offset),
        }
    }

    pub fn is_enlargement(&self) -> bool {
        matches!(self, SMove::Enlarge(_))
    }

    pub fn is_reduction(&self) -> bool {
        matches!(self, SMove::Reduce { .. })
    }
}

/// Which positions count as an elementary S-reduction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReductionSites {
    /// Only the front of each block, exactly as an enlargement writes it.
    Front,
    /// Any adjacent pair of positions inside a block. Moving such a pair to
    /// the front is a permutation congruence that does not change the size.
    #[default]
    Any,
}

pub fn apply_congruence<T: Scalar>(a: &SeifertMatrix<T>, p: &Congruence<T>) -> Result<SeifertMatrix<T>> {
    if p.block_sizes() != a.block_sizes() {
        return Err(Error::Shape(format!(
            "congruence blocks {:?} do not match matrix blocks {:?}",
            p.block_sizes(),
            a.block_sizes()
        )));
    }
    for (i, b) in p.blocks.iter().enumerate() {
        let det = b.det();
        if !det.is_unit() {
            return Err(Error::NotUnimodular { block: i, det: det.to_string() });
        }
    }
    let full = p.to_matrix();
    let b = full.transpose().mul(a.entries()).mul(&full);
    Ok(SeifertMatrix::from_parts_unchecked(a.block_sizes().to_vec(), b))
}

/// Maps each old global index to its index after inserting a pair at
/// `offset` inside block `k`.
fn shifted_index(a_sizes: &[usize], k: usize, offset: usize) -> Vec<usize> {
    let mut map = Vec::with_capacity(a_sizes.iter().sum());
    let mut old = 0;
    for (j, &n) in a_sizes.iter().enumerate() {
        for local in 0..n {
            let shift = j > k || (j == k && local >= offset);
            map.push(if shift { old + 2 } else { old });
            old += 1;
        }
    }
    map
}

pub fn apply_enlargement<T: Scalar>(a: &SeifertMatrix<T>, e: &Enlargement<T>) -> Result<SeifertMatrix<T>> {
    let m = a.components();
    let sizes = a.block_sizes();
    if e.component >= m {
        return Err(Error::ComponentOutOfRange { index: e.component, count: m });
    }
    if e.offset > sizes[e.component] {
        return Err(Error::Shape(format!(
            "enlargement offset {} beyond block of size {}",
            e.offset, sizes[e.component]
        )));
    }
    if e.rows.len() != m || e.rows.iter().zip(sizes).any(|(r, &n)| r.len() != n) {
        return Err(Error::Shape("enlargement rows do not match block sizes".into()));
    }
    let n = a.side();
    let map = shifted_index(sizes, e.component, e.offset);
    let u = a.offset(e.component) + e.offset;
    let w = u + 1;
    let mut b = Matrix::zeros(n + 2, n + 2);
    for i in 0..n {
        for j in 0..n {
            b[(map[i], map[j])] = a.entries()[(i, j)].clone();
        }
    }
    b[(u, w)] = T::from_i64(e.eps.eps_prime());
    b[(w, u)] = T::from_i64(e.eps.eps());
    let x: Vec<&T> = e.rows.iter().flatten().collect();
    for (i, xi) in x.into_iter().enumerate() {
        b[(w, map[i])] = xi.clone();
        b[(map[i], w)] = xi.clone();
    }
    let mut new_sizes = sizes.to_vec();
    new_sizes[e.component] += 2;
    Ok(SeifertMatrix::from_parts_unchecked(new_sizes, b))
}

/// The enlargement witness that recreates `b` from the reduction at
/// `(k, offset)`, if the pattern is present there.
pub fn reduction_witness<T: Scalar>(b: &SeifertMatrix<T>, k: usize, offset: usize) -> Option<Enlargement<T>> {
    let sizes = b.block_sizes();
    if k >= sizes.len() || offset + 1 >= sizes[k] {
        return None;
    }
    let a = b.entries();
    let u = b.offset(k) + offset;
    let w = u + 1;
    let n = b.side();
    let eps = EpsPair::new(a[(w, u)].to_i64()?, a[(u, w)].to_i64()?).ok()?;
    if !a[(w, w)].is_zero() {
        return None;
    }
    for c in (0..n).filter(|&c| c != w) {
        if !a[(u, c)].is_zero() || !a[(c, u)].is_zero() {
            return None;
        }
        if c != u && a[(w, c)] != a[(c, w)] {
            return None;
        }
    }
    let mut rows = Vec::with_capacity(sizes.len());
    let offs = b.offsets();
    for j in 0..sizes.len() {
        let row = (offs[j]..offs[j + 1]).filter(|&c| c != u && c != w).map(|c| a[(w, c)].clone()).collect();
        rows.push(row);
    }
    Some(Enlargement { component: k, offset, eps, rows })
}

/// Every position where `b` is literally an S-enlargement of a smaller
/// matrix, in `(component, offset)` order. Each entry is the witness whose
/// application to the reduced matrix recreates `b`.
pub fn find_reductions<T: Scalar>(b: &SeifertMatrix<T>, sites: ReductionSites) -> Vec<Enlargement<T>> {
    let mut found = Vec::new();
    for (k, &size) in b.block_sizes().iter().enumerate() {
        let last = match sites {
            ReductionSites::Front => usize::from(size >= 2),
            ReductionSites::Any => size.saturating_sub(1),
        };
        for offset in 0..last {
            if let Some(w) = reduction_witness(b, k, offset) {
                found.push(w);
            }
        }
    }
    found
}

pub fn apply_reduction<T: Scalar>(b: &SeifertMatrix<T>, component: usize, offset: usize) -> Result<SeifertMatrix<T>> {
    if reduction_witness(b, component, offset).is_none() {
        return Err(Error::PatternMismatch { component, offset });
    }
    let u = b.offset(component) + offset;
    let keep: Vec<usize> = (0..b.side()).filter(|&i| i != u && i != u + 1).collect();
    let mut sizes = b.block_sizes().to_vec();
    sizes[component] -= 2;
    Ok(SeifertMatrix::from_parts_unchecked(sizes, b.entries().select(&keep)))
}

/// A start matrix and the moves applied to it, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSequence<T> {
    pub start: SeifertMatrix<T>,
    pub moves: Vec<SMove<T>>,
}

impl<T: Scalar> MoveSequence<T> {
    pub fn new(start: SeifertMatrix<T>, moves: Vec<SMove<T>>) -> Self {
        MoveSequence { start, moves }
    }

    /// Every matrix along the path, starting with `start`.
    pub fn replay(&self) -> Result<Vec<SeifertMatrix<T>>> {
        let mut path = Vec::with_capacity(self.moves.len() + 1);
        path.push(self.start.clone());
        for (index, mv) in self.moves.iter().enumerate() {
            let next =
                mv.apply(path.last().expect("non-empty")).map_err(|e| Error::Replay { index, source: Box::new(e) })?;
            path.push(next);
        }
        Ok(path)
    }

    pub fn end(&self) -> Result<SeifertMatrix<T>> {
        Ok(self.replay()?.pop().expect("non-empty"))
    }

    /// No enlargement occurs after any reduction, so the size rises and then
    /// falls along the path.
    pub fn is_monotone(&self) -> bool {
        let mut reduced = false;
        for mv in &self.moves {
            match mv {
                SMove::Reduce { .. } => reduced = true,
                SMove::Enlarge(_) if reduced => return false,
                _ => {}
            }
        }
        true
    }

    pub fn moves_to_json(&self) -> String {
        moves_to_json(&self.moves)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields, bound = "T: Scalar")]
enum MoveRecord<T> {
    Congruence { blocks: Vec<Vec<Vec<JsonInt<T>>>> },
    Enlarge { component: usize, offset: usize, eps: [i64; 2], rows: Vec<Vec<JsonInt<T>>> },
    Reduce { component: usize, offset: usize },
}

impl<T: Scalar> From<&SMove<T>> for MoveRecord<T> {
    fn from(mv: &SMove<T>) -> Self {
        match mv {
            SMove::Congruence(p) => MoveRecord::Congruence { blocks: p.blocks.iter().map(rows_to_json).collect() },
            SMove::Enlarge(e) => MoveRecord::Enlarge {
                component: e.component,
                offset: e.offset,
                eps: [e.eps.eps(), e.eps.eps_prime()],
                rows: e.rows.iter().map(|r| r.iter().cloned().map(JsonInt).collect()).collect(),
            },
            SMove::Reduce { component, offset } => MoveRecord::Reduce { component: *component, offset: *offset },
        }
    }
}

impl<T: Scalar> TryFrom<MoveRecord<T>> for SMove<T> {
    type Error = Error;

    fn try_from(rec: MoveRecord<T>) -> Result<Self> {
        Ok(match rec {
            MoveRecord::Congruence { blocks } => {
                let mut mats = Vec::with_capacity(blocks.len());
                for rows in blocks {
                    let rows = unwrap_rows(rows);
                    let cols = rows.first().map_or(0, |r| r.len());
                    let m = Matrix::from_rows(rows, cols)
                        .ok_or_else(|| Error::Structure("ragged congruence block".into()))?;
                    mats.push(m);
                }
                SMove::Congruence(Congruence::new(mats)?)
            }
            MoveRecord::Enlarge { component, offset, eps, rows } => SMove::Enlarge(Enlargement {
                component,
                offset,
                eps: EpsPair::new(eps[0], eps[1])?,
                rows: unwrap_rows(rows),
            }),
            MoveRecord::Reduce { component, offset } => SMove::Reduce { component, offset },
        })
    }
}

/// Serializes moves as a JSON list of tagged records.
pub fn moves_to_json<T: Scalar>(moves: &[SMove<T>]) -> String {
    let recs: Vec<MoveRecord<T>> = moves.iter().map(MoveRecord::from).collect();
    to_canonical(&recs)
}

pub fn moves_from_json<T: Scalar>(text: &str) -> Result<Vec<SMove<T>>> {
    let recs: Vec<MoveRecord<T>> = serde_json::from_str(text)?;
    recs.into_iter().map(SMove::try_from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::whitehead_double_matrix;
    use num_bigint::BigInt;

    type S = SeifertMatrix<BigInt>;
    type M = Matrix<BigInt>;

    fn trefoil() -> S {
        S::from_i64(&[2], &[&[-1, 1], &[0, -1]]).unwrap()
    }

    #[test]
    fn identity_congruence_is_neutral() {
        let a = trefoil();
        let p = Congruence::identity(a.block_sizes());
        assert_eq!(apply_congruence(&a, &p).unwrap(), a);
    }

    #[test]
    fn shear_congruence_by_hand() {
        // P = [[1,1],[0,1]]; P^T A P for A = [[0,1],[0,0]]:
        // A P = [[0,1],[0,0]]; P^T (A P) = [[1,0],[1,1]] [[0,1],[0,0]] = [[0,1],[0,1]].
        let a = S::from_i64(&[2], &[&[0, 1], &[0, 0]]).unwrap();
        let p = Congruence::new(vec![M::from_i64_rows(&[&[1, 1], &[0, 1]])]).unwrap();
        let b = apply_congruence(&a, &p).unwrap();
        assert_eq!(b, S::from_i64(&[2], &[&[0, 1], &[0, 1]]).unwrap());
    }

    #[test]
    fn congruence_composition() {
        let a = S::from_i64(&[2, 2], &[&[0, 1, 2, 0], &[0, 0, -1, 3], &[2, -1, 1, 1], &[0, 3, 0, 0]]).unwrap();
        let p = Congruence::new(vec![M::from_i64_rows(&[&[2, 1], &[1, 1]]), M::from_i64_rows(&[&[0, 1], &[1, 0]])])
            .unwrap();
        let q = Congruence::new(vec![M::from_i64_rows(&[&[1, -3], &[0, 1]]), M::from_i64_rows(&[&[-1, 0], &[4, 1]])])
            .unwrap();
        let two_steps = apply_congruence(&apply_congruence(&a, &p).unwrap(), &q).unwrap();
        assert_eq!(two_steps, apply_congruence(&a, &p.then(&q)).unwrap());
        let back = apply_congruence(&apply_congruence(&a, &p).unwrap(), &p.inverse()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn congruence_errors() {
        let a = trefoil();
        assert!(matches!(
            Congruence::<BigInt>::new(vec![M::from_i64_rows(&[&[2, 0], &[0, 1]])]),
            Err(Error::NotUnimodular { .. })
        ));
        let p = Congruence::<BigInt>::identity(&[4]);
        assert!(matches!(apply_congruence(&a, &p), Err(Error::Shape(_))));
    }

    #[test]
    fn smallest_enlargements() {
        let null = S::null(1);
        let e = Enlargement::zero(&null, 0, EpsPair::OneZero);
        assert_eq!(apply_enlargement(&null, &e).unwrap(), S::from_i64(&[2], &[&[0, 0], &[1, 0]]).unwrap());
        let e = Enlargement::zero(&null, 0, EpsPair::ZeroOne);
        assert_eq!(apply_enlargement(&null, &e).unwrap(), S::from_i64(&[2], &[&[0, 1], &[0, 0]]).unwrap());
        assert!(matches!(EpsPair::new(1, 1), Err(Error::IllegalEps { .. })));
    }

    #[test]
    fn enlarging_second_block_keeps_first() {
        let a: S = whitehead_double_matrix(2, &[1, 0], None).unwrap();
        let e = Enlargement {
            component: 1,
            offset: 0,
            eps: EpsPair::OneZero,
            rows: vec![vec![BigInt::from(3), BigInt::from(-2)], vec![BigInt::from(5), BigInt::from(0)]],
        };
        let b = apply_enlargement(&a, &e).unwrap();
        assert_eq!(b.block(0, 0), a.block(0, 0));
        assert_eq!(b.block_sizes(), &[2, 4]);
        // Paper layout of block (k,k): [[0, ε', 0], [ε, 0, x_k], [0, x_k^T, A_kk]].
        let bkk = b.block(1, 1);
        assert_eq!(bkk, M::from_i64_rows(&[&[0, 0, 0, 0], &[1, 0, 5, 0], &[0, 5, 0, 0], &[0, 0, 1, 0]]));
        // Block (k, j) = [[0], [x_j], [A_kj]].
        assert_eq!(b.block(1, 0), M::from_i64_rows(&[&[0, 0], &[3, -2], &[0, 0], &[0, 0]]));
        assert_eq!(b.block(0, 1), b.block(1, 0).transpose());
    }

    #[test]
    fn enlargement_shape_errors() {
        let a = trefoil();
        let mut e = Enlargement::zero(&a, 0, EpsPair::OneZero);
        e.rows[0].push(BigInt::from(1));
        assert!(matches!(apply_enlargement(&a, &e), Err(Error::Shape(_))));
        let mut e = Enlargement::zero(&a, 0, EpsPair::OneZero);
        e.offset = 3;
        assert!(apply_enlargement(&a, &e).is_err());
    }

    #[test]
    fn reductions_found() {
        let a = S::from_i64(&[2], &[&[0, 1], &[0, 0]]).unwrap();
        let r = find_reductions(&a, ReductionSites::Any);
        assert_eq!(r.len(), 1);
        assert!(apply_reduction(&a, 0, 0).unwrap().is_null());
        assert!(find_reductions(&trefoil(), ReductionSites::Any).is_empty());
        assert!(matches!(apply_reduction(&trefoil(), 0, 0), Err(Error::PatternMismatch { .. })));
    }

    /// Exhaustive oracle: tries every adjacent position directly against the
    /// written-out pattern.
    fn brute_force_pattern_count(b: &S) -> usize {
        let a = b.entries();
        let n = b.side();
        let mut count = 0;
        for k in 0..b.components() {
            let off = b.offset(k);
            for o in 0..b.block_sizes()[k].saturating_sub(1) {
                let (u, w) = (off + o, off + o + 1);
                let corner = (a[(u, w)].clone(), a[(w, u)].clone());
                let ok_corner =
                    corner == (BigInt::from(0), BigInt::from(1)) || corner == (BigInt::from(1), BigInt::from(0));
                let row_u = (0..n).all(|c| c == w || a[(u, c)] == BigInt::from(0));
                let col_u = (0..n).all(|c| c == w || a[(c, u)] == BigInt::from(0));
                let sym_w = (0..n).all(|c| c == u || a[(w, c)] == a[(c, w)]);
                if ok_corner && row_u && col_u && sym_w {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn whitehead_double_has_two_reductions() {
        let a: S = whitehead_double_matrix(2, &[1, 1], None).unwrap();
        let found = find_reductions(&a, ReductionSites::Any);
        assert_eq!(brute_force_pattern_count(&a), 2);
        assert_eq!(found.len(), 2);
        assert_eq!((found[0].component, found[0].offset), (0, 0));
        assert_eq!((found[1].component, found[1].offset), (1, 0));
    }

    #[test]
    fn round_trip_examples() {
        let null = S::null(1);
        for eps in [EpsPair::OneZero, EpsPair::ZeroOne] {
            let e = Enlargement::zero(&null, 0, eps);
            let b = apply_enlargement(&null, &e).unwrap();
            let w = reduction_witness(&b, 0, 0).unwrap();
            assert_eq!(w, e);
            assert_eq!(apply_reduction(&b, 0, 0).unwrap(), null);
        }
        let a: S = whitehead_double_matrix(2, &[1, 0], None).unwrap();
        let e = Enlargement {
            component: 1,
            offset: 2,
            eps: EpsPair::ZeroOne,
            rows: vec![vec![BigInt::from(1), BigInt::from(2)], vec![BigInt::from(-1), BigInt::from(4)]],
        };
        let b = apply_enlargement(&a, &e).unwrap();
        assert_eq!(reduction_witness(&b, 1, 2).unwrap(), e);
        assert_eq!(apply_reduction(&b, 1, 2).unwrap(), a);
    }

    #[test]
    fn front_sites_only_look_at_offset_zero() {
        let a: S = whitehead_double_matrix(1, &[1, 0], Some(&[0, 0])).unwrap();
        assert_eq!(find_reductions(&a, ReductionSites::Front).len(), 1);
        let any = find_reductions(&a, ReductionSites::Any);
        assert_eq!(any.iter().map(|w| w.offset).collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn move_json_round_trip() {
        let a = trefoil();
        let moves = vec![
            SMove::Congruence(Congruence::new(vec![M::from_i64_rows(&[&[1, 1], &[0, 1]])]).unwrap()),
            SMove::Enlarge(Enlargement {
                component: 0,
                offset: 2,
                eps: EpsPair::OneZero,
                rows: vec![vec![BigInt::from(7), BigInt::from(-3)]],
            }),
            SMove::Reduce { component: 0, offset: 2 },
        ];
        let seq = MoveSequence::new(a.clone(), moves.clone());
        let text = seq.moves_to_json();
        let back: Vec<SMove<BigInt>> = moves_from_json(&text).unwrap();
        assert_eq!(back, moves);
        let path = seq.replay().unwrap();
        assert_eq!(path.len(), 4);
        assert!(seq.is_monotone());
        assert!(moves_from_json::<BigInt>("[{\"type\":\"reduce\",\"component\":0,\"offset\":0,\"x\":1}]").is_err());
        assert!(moves_from_json::<BigInt>(
            "[{\"type\":\"enlarge\",\"component\":0,\"offset\":0,\"eps\":[1,1],\"rows\":[[]]}]"
        )
        .is_err());
    }

    #[test]
    fn replay_reports_failing_index() {
        let seq = MoveSequence::new(trefoil(), vec![SMove::Reduce { component: 0, offset: 0 }]);
        match seq.replay() {
            Err(Error::Replay { index: 0, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
