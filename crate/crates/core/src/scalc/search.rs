//! Searches over S-moves: reduction to the null matrix, good-basis
//! detection, and a bounded S-equivalence search.

use std::collections::{HashMap, HashSet};

use super::{
    apply_enlargement, apply_reduction, find_reductions, reduction_witness, Congruence, Enlargement, EpsPair,
    MoveSequence, ReductionSites, SMove,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::seifert::SeifertMatrix;
use crate::Scalar;

/// Result of a bounded search. Only `Found` carries information about the
/// mathematics; the other two mean the search space or budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(MoveSequence<T>),
    /// Every state reachable within the bounds was visited without success.
    Exhausted {
        nodes: usize,
    },
    BudgetExceeded {
        nodes: usize,
    },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&MoveSequence<T>> {
        match self {
            SearchOutcome::Found(s) => Some(s),
            _ => None,
        }
    }

    pub fn nodes(&self) -> Option<usize> {
        match self {
            SearchOutcome::Found(_) => None,
            SearchOutcome::Exhausted { nodes } | SearchOutcome::BudgetExceeded { nodes } => Some(*nodes),
        }
    }
}

/// Looks for a chain of S-reductions ending at the null matrix.
///
/// Depth-first with a memo of states already shown to be dead ends. The
/// budget counts expanded states. Every reduction removes two rows, so all
/// successful chains have the same length and the first one found is
/// as short as any other.
pub fn reduce_to_null<T: Scalar>(a: &SeifertMatrix<T>, budget: usize, sites: ReductionSites) -> SearchOutcome<T> {
    struct Dfs<T> {
        dead: HashSet<SeifertMatrix<T>>,
        budget: usize,
        nodes: usize,
        sites: ReductionSites,
        path: Vec<SMove<T>>,
    }

    enum Step {
        Done,
        Dead,
        OutOfBudget,
    }

    impl<T: Scalar> Dfs<T> {
        fn go(&mut self, b: &SeifertMatrix<T>) -> Step {
            if b.is_null() {
                return Step::Done;
            }
            if self.dead.contains(b) {
                return Step::Dead;
            }
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            for w in find_reductions(b, self.sites) {
                let next = apply_reduction(b, w.component, w.offset).expect("pattern just found");
                self.path.push(SMove::Reduce { component: w.component, offset: w.offset });
                match self.go(&next) {
                    Step::Done => return Step::Done,
                    Step::OutOfBudget => return Step::OutOfBudget,
                    Step::Dead => {
                        self.path.pop();
                    }
                }
            }
            self.dead.insert(b.clone());
            Step::Dead
        }
    }

    let mut dfs = Dfs { dead: HashSet::new(), budget, nodes: 0, sites, path: Vec::new() };
    match dfs.go(a) {
        Step::Done => SearchOutcome::Found(MoveSequence::new(a.clone(), dfs.path)),
        Step::Dead => SearchOutcome::Exhausted { nodes: dfs.nodes },
        Step::OutOfBudget => SearchOutcome::BudgetExceeded { nodes: dfs.nodes },
    }
}

/// A basis pair: local positions `2*pair` and `2*pair + 1` of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairId {
    pub component: usize,
    pub pair: usize,
}

/// An ordering of the aligned basis pairs under which the matrix has the
/// good-basis triangular form, with the sign `A[a_i][b_i]` of each pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodBasis {
    pub order: Vec<PairId>,
    pub signs: Vec<i64>,
}

impl GoodBasis {
    pub fn is_identity_order(&self) -> bool {
        self.order.windows(2).all(|w| w[0] < w[1])
    }

    /// Reductions that strip the pairs from last to first, with offsets
    /// adjusted for the pairs already removed.
    pub fn reduction_moves<T: Scalar>(&self) -> Vec<SMove<T>> {
        let mut moves = Vec::with_capacity(self.order.len());
        for i in (0..self.order.len()).rev() {
            let p = self.order[i];
            let before = self.order[..i].iter().filter(|q| q.component == p.component && q.pair < p.pair).count();
            moves.push(SMove::Reduce { component: p.component, offset: 2 * before });
        }
        moves
    }
}

/// Decides whether the aligned pairs `(2t, 2t+1)` of each block can be
/// ordered so that the matrix takes the good-basis form: each pair, taken
/// last among those still present, looks exactly like a front S-reduction.
///
/// The condition for a pair to go last depends only on the pairs still
/// present, and removing pairs never breaks it for another pair, so a
/// greedy peel is complete. Ties go to the largest pair, which makes the
/// natural order come out whenever it works.
pub fn good_basis_form_check<T: Scalar>(a: &SeifertMatrix<T>) -> Result<Option<GoodBasis>> {
    for (k, &n) in a.block_sizes().iter().enumerate() {
        if n % 2 == 1 {
            return Err(Error::OddBlock { component: k, size: n });
        }
    }
    let e = a.entries();
    let mut remaining: Vec<PairId> = a
        .block_sizes()
        .iter()
        .enumerate()
        .flat_map(|(k, &n)| (0..n / 2).map(move |t| PairId { component: k, pair: t }))
        .collect();
    let global = |p: PairId| a.offset(p.component) + 2 * p.pair;
    let mut peeled = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let live: Vec<usize> = remaining.iter().flat_map(|&p| [global(p), global(p) + 1]).collect();
        let fits = |p: PairId| {
            let (u, w) = (global(p), global(p) + 1);
            let corner = (e[(u, w)].to_i64(), e[(w, u)].to_i64());
            if !matches!(corner, (Some(0), Some(1)) | (Some(1), Some(0))) || !e[(w, w)].is_zero() {
                return false;
            }
            live.iter()
                .filter(|&&c| c != u && c != w)
                .all(|&c| e[(u, c)].is_zero() && e[(c, u)].is_zero() && e[(w, c)] == e[(c, w)])
                && e[(u, u)].is_zero()
        };
        let Some(pos) = (0..remaining.len()).rev().find(|&i| fits(remaining[i])) else {
            return Ok(None);
        };
        peeled.push(remaining.remove(pos));
    }
    peeled.reverse();
    let signs = peeled
        .iter()
        .map(|&p| {
            let u = global(p);
            e[(u, u + 1)].to_i64().expect("checked corner")
        })
        .collect();
    Ok(Some(GoodBasis { order: peeled, signs }))
}

/// Bounds for [`s_equivalent_bounded`].
#[derive(Clone, Debug)]
pub struct EquivalenceCaps {
    /// Largest matrix side explored; `None` means the larger input side plus 4.
    pub size_cap: Option<usize>,
    /// Largest entry magnitude allowed in any explored matrix.
    pub entry_cap: i64,
    /// Enlargement witness entries range over `[-x_cap, x_cap]`.
    pub enlarge_entry_cap: i64,
    /// Maximum number of distinct states visited.
    pub node_budget: usize,
}

impl Default for EquivalenceCaps {
    fn default() -> Self {
        EquivalenceCaps { size_cap: None, entry_cap: 8, enlarge_entry_cap: 1, node_budget: 200_000 }
    }
}

fn elementary_congruences<T: Scalar>(sizes: &[usize]) -> Vec<Congruence<T>> {
    let mut gens = Vec::new();
    for (k, &n) in sizes.iter().enumerate() {
        let with_block = |b: Matrix<T>| {
            let mut blocks: Vec<Matrix<T>> = sizes.iter().map(|&s| Matrix::identity(s)).collect();
            blocks[k] = b;
            Congruence::new(blocks).expect("elementary matrices are unimodular")
        };
        for i in 0..n {
            let mut flip = Matrix::identity(n);
            flip[(i, i)] = -T::one();
            gens.push(with_block(flip));
            if i + 1 < n {
                let mut swap = Matrix::zeros(n, n);
                for r in 0..n {
                    let c = if r == i {
                        i + 1
                    } else if r == i + 1 {
                        i
                    } else {
                        r
                    };
                    swap[(r, c)] = T::one();
                }
                gens.push(with_block(swap));
            }
            for j in (0..n).filter(|&j| j != i) {
                for s in [1, -1] {
                    let mut t = Matrix::identity(n);
                    t[(i, j)] = T::from_i64(s);
                    gens.push(with_block(t));
                }
            }
        }
    }
    gens
}

fn witness_rows<T: Scalar>(sizes: &[usize], cap: i64) -> Vec<Vec<Vec<T>>> {
    let total: usize = sizes.iter().sum();
    let mut flat: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..total {
        flat = flat
            .into_iter()
            .flat_map(|v| {
                (-cap..=cap).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    flat.into_iter()
        .map(|v| {
            let mut it = v.into_iter();
            sizes.iter().map(|&n| it.by_ref().take(n).map(T::from_i64).collect()).collect()
        })
        .collect()
}

/// Searches for a chain of S-moves from `a` to `b` within the caps.
///
/// Bidirectional breadth-first search. From each state the neighbours are
/// every S-reduction, every front enlargement with small witness entries
/// (while the size cap allows), and elementary congruences of one block
/// (sign changes, adjacent swaps, unit transvections). A found chain is
/// verified by replay. A miss says nothing about S-equivalence.
pub fn s_equivalent_bounded<T: Scalar>(
    a: &SeifertMatrix<T>,
    b: &SeifertMatrix<T>,
    caps: &EquivalenceCaps,
) -> Result<SearchOutcome<T>> {
    if a.components() != b.components() {
        return Err(Error::Shape(format!("{} components against {}", a.components(), b.components())));
    }
    let size_cap = caps.size_cap.unwrap_or(a.side().max(b.side()) + 4);
    let entry_cap = T::from_i64(caps.entry_cap);
    let mut gens_cache: HashMap<Vec<usize>, Vec<Congruence<T>>> = HashMap::new();
    let mut rows_cache: HashMap<Vec<usize>, Vec<Vec<Vec<T>>>> = HashMap::new();

    let mut neighbours = |x: &SeifertMatrix<T>| -> Vec<(SMove<T>, SeifertMatrix<T>)> {
        let mut out = Vec::new();
        for w in find_reductions(x, ReductionSites::Any) {
            let y = apply_reduction(x, w.component, w.offset).expect("pattern just found");
            out.push((SMove::Reduce { component: w.component, offset: w.offset }, y));
        }
        if x.side() + 2 <= size_cap {
            let rows = rows_cache
                .entry(x.block_sizes().to_vec())
                .or_insert_with(|| witness_rows(x.block_sizes(), caps.enlarge_entry_cap));
            for k in 0..x.components() {
                for eps in [EpsPair::ZeroOne, EpsPair::OneZero] {
                    for r in rows.iter() {
                        let e = Enlargement { component: k, offset: 0, eps, rows: r.clone() };
                        let y = apply_enlargement(x, &e).expect("well-formed enlargement");
                        out.push((SMove::Enlarge(e), y));
                    }
                }
            }
        }
        let gens =
            gens_cache.entry(x.block_sizes().to_vec()).or_insert_with(|| elementary_congruences(x.block_sizes()));
        for p in gens.iter() {
            let y = super::apply_congruence(x, p).expect("matching shapes");
            out.push((SMove::Congruence(p.clone()), y));
        }
        out.retain(|(_, y)| y.entries().max_abs() <= entry_cap);
        out
    };

    type Parents<T> = HashMap<SeifertMatrix<T>, Option<(SeifertMatrix<T>, SMove<T>)>>;
    let mut sides: [Parents<T>; 2] = [HashMap::new(), HashMap::new()];
    sides[0].insert(a.clone(), None);
    sides[1].insert(b.clone(), None);
    let mut frontiers = [vec![a.clone()], vec![b.clone()]];
    let mut nodes = 2;
    let mut meet = if a == b { Some(a.clone()) } else { None };

    while meet.is_none() {
        if frontiers[0].is_empty() || frontiers[1].is_empty() {
            return Ok(SearchOutcome::Exhausted { nodes });
        }
        let s = usize::from(frontiers[1].len() < frontiers[0].len());
        let mut next = Vec::new();
        'level: for x in std::mem::take(&mut frontiers[s]) {
            for (mv, y) in neighbours(&x) {
                if sides[s].contains_key(&y) {
                    continue;
                }
                sides[s].insert(y.clone(), Some((x.clone(), mv)));
                if sides[1 - s].contains_key(&y) {
                    meet = Some(y);
                    break 'level;
                }
                nodes += 1;
                if nodes > caps.node_budget {
                    return Ok(SearchOutcome::BudgetExceeded { nodes });
                }
                next.push(y);
            }
        }
        frontiers[s] = next;
    }

    let meet = meet.expect("loop ends on a meeting state");
    let mut forward = Vec::new();
    let mut cur = meet.clone();
    while let Some(Some((prev, mv))) = sides[0].get(&cur) {
        forward.push(mv.clone());
        cur = prev.clone();
    }
    forward.reverse();
    let mut cur = meet;
    while let Some(Some((prev, mv))) = sides[1].get(&cur) {
        forward.push(invert_move(prev, mv)?);
        cur = prev.clone();
    }
    let seq = MoveSequence::new(a.clone(), forward);
    if &seq.end()? != b {
        return Err(Error::Witness("equivalence chain does not reach the target".into()));
    }
    Ok(SearchOutcome::Found(seq))
}

/// The move taking `to` back to `from`, given `to = mv(from)`.
fn invert_move<T: Scalar>(from: &SeifertMatrix<T>, mv: &SMove<T>) -> Result<SMove<T>> {
    Ok(match mv {
        SMove::Congruence(p) => SMove::Congruence(p.inverse()),
        SMove::Enlarge(e) => SMove::Reduce { component: e.component, offset: e.offset },
        SMove::Reduce { component, offset } => SMove::Enlarge(
            reduction_witness(from, *component, *offset)
                .ok_or(Error::PatternMismatch { component: *component, offset: *offset })?,
        ),
    })
}
