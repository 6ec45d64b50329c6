//! Rewriting S-move chains so that every enlargement comes before every
//! reduction.

use super::{apply_congruence, apply_enlargement, apply_reduction, Congruence, Enlargement, MoveSequence, SMove};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::seifert::SeifertMatrix;
use crate::Scalar;

/// A reduction, congruence, enlargement chain rewritten as enlargement,
/// congruence, reduction with the same endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinMaxSwap<T> {
    pub enlargement: Enlargement<T>,
    pub congruence: Congruence<T>,
    pub reduction: (usize, usize),
}

impl<T: Scalar> MinMaxSwap<T> {
    pub fn moves(&self) -> Vec<SMove<T>> {
        vec![
            SMove::Enlarge(self.enlargement.clone()),
            SMove::Congruence(self.congruence.clone()),
            SMove::Reduce { component: self.reduction.0, offset: self.reduction.1 },
        ]
    }
}

/// Builds a block-diagonal congruence on a matrix with block sizes `sizes`
/// that acts as `inner` on the positions not listed in `fixed` (per block,
/// local positions) and as the identity on the listed ones.
fn extend_congruence<T: Scalar>(sizes: &[usize], fixed: &[Vec<usize>], inner: &Congruence<T>) -> Congruence<T> {
    let blocks = sizes
        .iter()
        .zip(fixed)
        .zip(inner.blocks())
        .map(|((&n, fix), p)| {
            let free: Vec<usize> = (0..n).filter(|i| !fix.contains(i)).collect();
            debug_assert_eq!(free.len(), p.rows());
            let mut q = Matrix::identity(n);
            for (a, &ra) in free.iter().enumerate() {
                for (b, &rb) in free.iter().enumerate() {
                    q[(ra, rb)] = p[(a, b)].clone();
                }
            }
            q
        })
        .collect();
    Congruence::new(blocks).expect("extension of a unimodular congruence")
}

fn check_replay<T: Scalar>(
    start: &SeifertMatrix<T>,
    moves: &[SMove<T>],
    target: &SeifertMatrix<T>,
    what: &str,
) -> Result<()> {
    let end = MoveSequence::new(start.clone(), moves.to_vec()).end()?;
    if &end != target {
        return Err(Error::Witness(format!("{what} does not reach the original endpoint")));
    }
    Ok(())
}

/// Given `A`, a reduction `(k, o)` of `A` to `C`, a congruence `P` on `C`,
/// and an enlargement of `P^T C P` to `D`, returns an enlargement of `A`,
/// a congruence, and a reduction that also end at `D`.
///
/// The new pair is added to `A` with witness rows `y_j P_j^{-1}`, padded
/// with zeros at the reduced pair, so that `P` extended by the identity
/// carries it onto the requested one; the old pair survives the congruence
/// untouched and is removed last. The result is checked by replay.
pub fn replace_min_by_max<T: Scalar>(
    a: &SeifertMatrix<T>,
    reduction: (usize, usize),
    p: &Congruence<T>,
    enl: &Enlargement<T>,
) -> Result<MinMaxSwap<T>> {
    let (k, o) = reduction;
    let c = apply_reduction(a, k, o)?;
    let c2 = apply_congruence(&c, p)?;
    let d = apply_enlargement(&c2, enl)?;

    let l = enl.component;
    let p_inv = p.inverse();
    let mut rows = Vec::with_capacity(a.components());
    for (j, y) in enl.rows.iter().enumerate() {
        let mut z = p_inv.blocks()[j].left_mul_row(y);
        if j == k {
            z.splice(o..o, [T::zero(), T::zero()]);
        }
        rows.push(z);
    }
    let new_off = if l == k && enl.offset > o { enl.offset + 2 } else { enl.offset };
    let old_off = if l == k && new_off <= o { o + 2 } else { o };
    let enlargement = Enlargement { component: l, offset: new_off, eps: enl.eps, rows };

    let mut sizes = a.block_sizes().to_vec();
    sizes[l] += 2;
    let mut fixed = vec![Vec::new(); sizes.len()];
    fixed[l].extend([new_off, new_off + 1]);
    fixed[k].extend([old_off, old_off + 1]);
    let congruence = extend_congruence(&sizes, &fixed, p);

    let swap = MinMaxSwap { enlargement, congruence, reduction: (k, old_off) };
    check_replay(a, &swap.moves(), &d, "rearranged chain")?;
    Ok(swap)
}

/// Given `A`, a reduction `(k, o)` of `A` to `C`, and a congruence `R` on
/// `C`, returns a congruence `Q` on `A` such that reducing `Q^T A Q` at the
/// same position gives `R^T C R`. `Q` is `R` extended by the identity on the
/// reduced pair.
pub fn commute_reduction_congruence<T: Scalar>(
    a: &SeifertMatrix<T>,
    reduction: (usize, usize),
    r: &Congruence<T>,
) -> Result<Congruence<T>> {
    let (k, o) = reduction;
    let c = apply_reduction(a, k, o)?;
    let target = apply_congruence(&c, r)?;
    let mut fixed = vec![Vec::new(); a.components()];
    fixed[k].extend([o, o + 1]);
    let q = extend_congruence(a.block_sizes(), &fixed, r);
    let moves = [SMove::Congruence(q.clone()), SMove::Reduce { component: k, offset: o }];
    check_replay(a, &moves, &target, "commuted congruence")?;
    Ok(q)
}

/// Rewrites a chain of S-moves into one with the same endpoints in which no
/// enlargement follows a reduction: enlargements and congruences first,
/// then a single congruence, then reductions only.
///
/// Each step replaces the first reduction-before-enlargement inversion by
/// an enlargement, congruence, reduction triple, which lowers the number of
/// such inversions by one. Congruences left among the reductions are then
/// pushed in front of them and adjacent congruences are merged.
pub fn normalize_sequence<T: Scalar>(seq: &MoveSequence<T>) -> Result<MoveSequence<T>> {
    let target = seq.end()?;
    let mut moves = seq.moves.clone();

    while let Some(e) =
        (0..moves.len()).find(|&i| moves[i].is_enlargement() && moves[..i].iter().any(SMove::is_reduction))
    {
        let r = (0..e).rev().find(|&i| moves[i].is_reduction()).expect("a reduction precedes");
        let path = MoveSequence::new(seq.start.clone(), moves[..r].to_vec()).replay()?;
        let a = path.last().expect("non-empty");
        let SMove::Reduce { component, offset } = moves[r] else { unreachable!() };
        let c = apply_reduction(a, component, offset)?;
        let mut p = Congruence::identity(c.block_sizes());
        for mv in &moves[r + 1..e] {
            let SMove::Congruence(q) = mv else { unreachable!("only congruences between") };
            p = p.then(q);
        }
        let SMove::Enlarge(enl) = &moves[e] else { unreachable!() };
        let swap = replace_min_by_max(a, (component, offset), &p, enl)?;
        moves.splice(r..=e, swap.moves());
    }

    // Push congruences in front of the reductions.
    while let Some(i) =
        (1..moves.len()).find(|&i| moves[i - 1].is_reduction() && matches!(moves[i], SMove::Congruence(_)))
    {
        let path = MoveSequence::new(seq.start.clone(), moves[..i - 1].to_vec()).replay()?;
        let a = path.last().expect("non-empty");
        let SMove::Reduce { component, offset } = moves[i - 1] else { unreachable!() };
        let SMove::Congruence(r) = &moves[i] else { unreachable!() };
        let q = commute_reduction_congruence(a, (component, offset), r)?;
        moves[i - 1] = SMove::Congruence(q);
        moves[i] = SMove::Reduce { component, offset };
    }

    let mut merged: Vec<SMove<T>> = Vec::with_capacity(moves.len());
    for mv in moves {
        if let (Some(SMove::Congruence(prev)), SMove::Congruence(next)) = (merged.last_mut(), &mv) {
            *prev = prev.then(next);
            continue;
        }
        merged.push(mv);
    }
    merged.retain(|mv| !matches!(mv, SMove::Congruence(p) if p.is_identity()));

    let out = MoveSequence::new(seq.start.clone(), merged);
    if out.end()? != target {
        return Err(Error::Witness("normalized chain does not reach the original endpoint".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalc::EpsPair;
    use crate::seifert::whitehead_double_matrix;
    use num_bigint::BigInt;

    type S = SeifertMatrix<BigInt>;
    type M = Matrix<BigInt>;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn swap_inside_one_block() {
        // A has two pairs in block 0; reduce the second, shear, enlarge in front.
        let a: S = whitehead_double_matrix(1, &[1, 0], Some(&[0, 0])).unwrap();
        let p = Congruence::new(vec![M::from_i64_rows(&[&[1, 1], &[0, 1]])]).unwrap();
        let enl = Enlargement { component: 0, offset: 0, eps: EpsPair::OneZero, rows: big(&[&[2, -1]]) };
        let swap = replace_min_by_max(&a, (0, 2), &p, &enl).unwrap();
        assert_eq!(swap.enlargement.offset, 0);
        assert_eq!(swap.reduction, (0, 4));
        // Enlarging after the reduced pair shifts past it.
        let enl = Enlargement { component: 0, offset: 2, eps: EpsPair::ZeroOne, rows: big(&[&[0, 3]]) };
        let swap = replace_min_by_max(&a, (0, 0), &p, &enl).unwrap();
        assert_eq!(swap.enlargement.offset, 4);
        assert_eq!(swap.reduction, (0, 0));
    }

    #[test]
    fn swap_across_blocks() {
        let a: S = whitehead_double_matrix(2, &[1, 0], None).unwrap();
        let p = Congruence::new(vec![M::zeros(0, 0), M::from_i64_rows(&[&[0, 1], &[1, 0]])]).unwrap();
        let enl = Enlargement {
            component: 0,
            offset: 0,
            eps: EpsPair::OneZero,
            rows: vec![vec![], big(&[&[1, 1]])[0].clone()],
        };
        let swap = replace_min_by_max(&a, (0, 0), &p, &enl).unwrap();
        assert_eq!(swap.reduction, (0, 2));
    }

    #[test]
    fn commute_by_hand() {
        let a: S = whitehead_double_matrix(2, &[1, 1], None).unwrap();
        let r = Congruence::new(vec![M::zeros(0, 0), M::from_i64_rows(&[&[1, 0], &[1, 1]])]).unwrap();
        let q = commute_reduction_congruence(&a, (0, 0), &r).unwrap();
        assert_eq!(q.blocks()[0], M::identity(2));
        assert_eq!(q.blocks()[1], r.blocks()[1]);
    }

    #[test]
    fn normalize_simple_valley() {
        // Reduce to null, then enlarge back with the other sign.
        let a = S::from_i64(&[2], &[&[0, 1], &[0, 0]]).unwrap();
        let null = S::null(1);
        let seq = MoveSequence::new(
            a,
            vec![
                SMove::Reduce { component: 0, offset: 0 },
                SMove::Enlarge(Enlargement::zero(&null, 0, EpsPair::OneZero)),
            ],
        );
        assert!(!seq.is_monotone());
        let norm = normalize_sequence(&seq).unwrap();
        assert!(norm.is_monotone());
        assert_eq!(norm.end().unwrap(), seq.end().unwrap());
        assert_eq!(norm.moves.len(), 2);
    }
}
