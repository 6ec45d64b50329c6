//! Seeded generators of Seifert matrices, congruences and S-move chains, for
//! property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::matrix::Matrix;
use crate::scalc::{find_reductions, Congruence, Enlargement, EpsPair, MoveSequence, ReductionSites, SMove};
use crate::seifert::SeifertMatrix;
use crate::Scalar;

/// Random unimodular `n x n` matrix: a product of `steps` elementary
/// matrices (unit transvections, adjacent swaps, sign changes).
pub fn random_unimodular<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> Matrix<T> {
    let mut p = Matrix::identity(n);
    if n == 0 {
        return p;
    }
    for _ in 0..steps {
        let mut e = Matrix::identity(n);
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                e[(i, j)] = T::from_i64(if rng.gen_bool(0.5) { 1 } else { -1 });
            }
            1 if n > 1 => {
                let i = rng.gen_range(0..n - 1);
                e[(i, i)] = T::zero();
                e[(i + 1, i + 1)] = T::zero();
                e[(i, i + 1)] = T::one();
                e[(i + 1, i)] = T::one();
            }
            _ => {
                let i = rng.gen_range(0..n);
                e[(i, i)] = -T::one();
            }
        }
        p = p.mul(&e);
    }
    p
}

pub fn random_congruence<T: Scalar, R: Rng + ?Sized>(rng: &mut R, sizes: &[usize], steps: usize) -> Congruence<T> {
    let blocks = sizes.iter().map(|&n| random_unimodular(rng, n, steps)).collect();
    Congruence::new(blocks).expect("products of elementary matrices are unimodular")
}

/// A random valid Seifert matrix with `m` components, total side at most
/// `max_side` (block sizes even, possibly zero) and entries in
/// `[-entry_cap, entry_cap]`.
///
/// Each diagonal block is `P^T (J + S) P` with `J` the standard pairing
/// (so `A - A^T` is a unimodular congruence of the symplectic form), `S`
/// random symmetric and `P` random unimodular; off-diagonal blocks are
/// arbitrary. Draws whose entries exceed the cap are rejected.
pub fn random_seifert_matrix<T: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    max_side: usize,
    entry_cap: i64,
) -> SeifertMatrix<T> {
    let cap = T::from_i64(entry_cap);
    loop {
        let mut sizes = vec![0; m];
        let mut budget = max_side / 2;
        for s in sizes.iter_mut() {
            let g = rng.gen_range(0..=budget.min(2));
            *s = 2 * g;
            budget -= g;
        }
        let side: usize = sizes.iter().sum();
        let mut full = Matrix::<T>::zeros(side, side);
        let mut off = 0;
        let mut blocks_ok = true;
        for &n in &sizes {
            let mut base = Matrix::<T>::zeros(n, n);
            for t in 0..n / 2 {
                base[(2 * t, 2 * t + 1)] = T::one();
            }
            for i in 0..n {
                for j in i..n {
                    let v = T::from_i64(rng.gen_range(-2..=2));
                    base[(i, j)] = base[(i, j)].clone() + v.clone();
                    if i != j {
                        base[(j, i)] = base[(j, i)].clone() + v;
                    }
                }
            }
            let p = random_unimodular::<T, R>(rng, n, 2);
            let block = p.transpose().mul(&base).mul(&p);
            if block.max_abs() > cap {
                blocks_ok = false;
                break;
            }
            for r in 0..n {
                for c in 0..n {
                    full[(off + r, off + c)] = block[(r, c)].clone();
                }
            }
            off += n;
        }
        if !blocks_ok {
            continue;
        }
        for r in 0..side {
            for c in r + 1..side {
                if owner(&sizes, r) != owner(&sizes, c) {
                    let v = T::from_i64(rng.gen_range(-entry_cap..=entry_cap));
                    full[(r, c)] = v.clone();
                    full[(c, r)] = v;
                }
            }
        }
        return SeifertMatrix::new(sizes, full).expect("valid by construction");
    }
}

fn owner(sizes: &[usize], idx: usize) -> usize {
    let mut acc = 0;
    sizes
        .iter()
        .position(|&s| {
            acc += s;
            idx < acc
        })
        .expect("index in range")
}

/// A random enlargement of `a` at any component and offset, with witness
/// entries in `[-x_cap, x_cap]`.
pub fn random_enlargement<T: Scalar, R: Rng + ?Sized>(rng: &mut R, a: &SeifertMatrix<T>, x_cap: i64) -> Enlargement<T> {
    let component = rng.gen_range(0..a.components());
    let offset = rng.gen_range(0..=a.block_sizes()[component]);
    let eps = if rng.gen_bool(0.5) { EpsPair::OneZero } else { EpsPair::ZeroOne };
    let rows =
        a.block_sizes().iter().map(|&n| (0..n).map(|_| T::from_i64(rng.gen_range(-x_cap..=x_cap))).collect()).collect();
    Enlargement { component, offset, eps, rows }
}

/// A random replayable chain of `len` moves starting at `a`. Reductions are
/// chosen among the available ones; sizes stay at most `max_side`.
pub fn random_sequence<T: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    a: &SeifertMatrix<T>,
    len: usize,
    max_side: usize,
) -> MoveSequence<T> {
    let mut cur = a.clone();
    let mut moves = Vec::with_capacity(len);
    let stuck = a.components() == 0 || max_side < 2;
    while moves.len() < len && !stuck {
        let reds = find_reductions(&cur, ReductionSites::Any);
        let mv = match rng.gen_range(0..3) {
            0 if cur.side() + 2 <= max_side && cur.components() > 0 => SMove::Enlarge(random_enlargement(rng, &cur, 2)),
            1 if !reds.is_empty() => {
                let w = reds.choose(rng).expect("non-empty");
                SMove::Reduce { component: w.component, offset: w.offset }
            }
            2 if cur.side() > 0 => SMove::Congruence(random_congruence(rng, cur.block_sizes(), 2)),
            _ => continue,
        };
        cur = mv.apply(&cur).expect("generated moves are legal");
        moves.push(mv);
    }
    MoveSequence::new(a.clone(), moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_matrices_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in 1..=3 {
            for _ in 0..50 {
                let a: SeifertMatrix<BigInt> = random_seifert_matrix(&mut rng, m, 8, 4);
                assert!(a.side() <= 8);
                assert!(a.entries().max_abs() <= BigInt::from(4));
            }
        }
    }

    #[test]
    fn generated_sequences_replay() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let a: SeifertMatrix<BigInt> = random_seifert_matrix(&mut rng, 2, 6, 4);
            let seq = random_sequence(&mut rng, &a, 6, 10);
            assert_eq!(seq.moves.len(), 6);
            seq.replay().unwrap();
        }
    }
}
