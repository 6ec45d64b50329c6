//! Zero-framed longitudes from the Wirtinger presentation, expressed in the
//! meridians by Milnor's iteration.
//!
//! Conventions: passing under a crossing of sign `ε` with over arc `x_o`,
//! the arc changes from `x_in` to `x_o^{-ε} x_in x_o^{ε}`. The meridian
//! `m_j` is the arc on which strand `j` starts. Writing
//! `V_t = x_{o_1}^{ε_1} ... x_{o_t}^{ε_t}` for the first `t` undercrossings
//! of strand `j`, the arc after them is `V_t^{-1} m_j V_t`, and the
//! longitude is `λ_j = m_j^{-w_j} V`, `V` taken over the whole strand and
//! `w_j` the writhe of strand `j`.
//!
//! The same iteration runs over any image of the free group on the
//! meridians: exact free-group words (a fixed number of rounds) or
//! truncated Magnus series (until a fixed point, which the truncation
//! guarantees).

use std::marker::PhantomData;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::milnor::magnus::MagnusSeries;
use crate::milnor::word::Word;
use crate::Scalar;

/// A group the meridians can be sent to.
trait GroupImage {
    type Elem: Clone + PartialEq;
    fn one(&self) -> Self::Elem;
    fn meridian(&self, j: usize, inverse: bool) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

struct Words;

impl GroupImage for Words {
    type Elem = Word;

    fn one(&self) -> Word {
        Word::identity()
    }

    fn meridian(&self, j: usize, inverse: bool) -> Word {
        Word::generator(j, inverse)
    }

    fn mul(&self, a: &Word, b: &Word) -> Word {
        a.mul(b)
    }
}

struct Series<T> {
    m: usize,
    cap: usize,
    reduced: bool,
    scalar: PhantomData<T>,
}

impl<T: Scalar> GroupImage for Series<T> {
    type Elem = MagnusSeries<T>;

    fn one(&self) -> MagnusSeries<T> {
        MagnusSeries::one(self.m, self.cap, self.reduced)
    }

    fn meridian(&self, j: usize, inverse: bool) -> MagnusSeries<T> {
        MagnusSeries::generator(self.m, self.cap, self.reduced, j, inverse)
    }

    fn mul(&self, a: &MagnusSeries<T>, b: &MagnusSeries<T>) -> MagnusSeries<T> {
        a.mul(b)
    }
}

/// One undercrossing of a strand: the over arc `(strand, arc)` and the sign.
#[derive(Clone, Copy)]
struct Under {
    over_strand: usize,
    over_arc: usize,
    sign: i8,
}

fn under_lists(d: &LinkDiagram) -> Vec<Vec<Under>> {
    let n = d.components();
    let unders: Vec<usize> = (0..n).map(|s| d.strand(s).iter().filter(|p| !p.over).count()).collect();
    let mut over_arc = vec![0; d.crossings().len()];
    for (s, &count) in unders.iter().enumerate() {
        let mut seen = 0;
        for p in d.strand(s) {
            if p.over {
                over_arc[p.crossing] = if count == 0 { 0 } else { seen % count };
            } else {
                seen += 1;
            }
        }
    }
    (0..n)
        .map(|s| {
            d.strand(s)
                .iter()
                .filter(|p| !p.over)
                .map(|p| {
                    let c = d.crossings()[p.crossing];
                    Under { over_strand: c.over, over_arc: over_arc[p.crossing], sign: c.sign }
                })
                .collect()
        })
        .collect()
}

/// Arc values and their inverses, indexed `[strand][arc]`.
type Arcs<E> = (Vec<Vec<E>>, Vec<Vec<E>>);

/// One round: recomputes every arc from the current values, and returns
/// the new arcs together with the longitudes they give.
fn round<G: GroupImage>(
    g: &G,
    d: &LinkDiagram,
    unders: &[Vec<Under>],
    arcs: &Arcs<G::Elem>,
) -> (Arcs<G::Elem>, Vec<G::Elem>) {
    let (x, xi) = arcs;
    let mut nx = Vec::with_capacity(unders.len());
    let mut nxi = Vec::with_capacity(unders.len());
    let mut longitudes = Vec::with_capacity(unders.len());
    for (j, list) in unders.iter().enumerate() {
        let m = g.meridian(j, false);
        let mi = g.meridian(j, true);
        let arcs_here = list.len().max(1);
        let mut row = Vec::with_capacity(arcs_here);
        let mut row_inv = Vec::with_capacity(arcs_here);
        row.push(m.clone());
        row_inv.push(mi.clone());
        let mut v = g.one();
        let mut vi = g.one();
        for (t, u) in list.iter().enumerate() {
            let (f, fi) = if u.sign > 0 {
                (&x[u.over_strand][u.over_arc], &xi[u.over_strand][u.over_arc])
            } else {
                (&xi[u.over_strand][u.over_arc], &x[u.over_strand][u.over_arc])
            };
            v = g.mul(&v, f);
            vi = g.mul(fi, &vi);
            if t + 1 < list.len() {
                row.push(g.mul(&g.mul(&vi, &m), &v));
                row_inv.push(g.mul(&g.mul(&vi, &mi), &v));
            }
        }
        let w = d.writhe(j);
        let twist = g.meridian(j, w > 0);
        let mut lambda = v;
        for _ in 0..w.unsigned_abs() {
            lambda = g.mul(&twist, &lambda);
        }
        longitudes.push(lambda);
        nx.push(row);
        nxi.push(row_inv);
    }
    ((nx, nxi), longitudes)
}

fn initial<G: GroupImage>(g: &G, unders: &[Vec<Under>]) -> Arcs<G::Elem> {
    let x = unders.iter().enumerate().map(|(j, l)| vec![g.meridian(j, false); l.len().max(1)]).collect();
    let xi = unders.iter().enumerate().map(|(j, l)| vec![g.meridian(j, true); l.len().max(1)]).collect();
    (x, xi)
}

/// Longitudes as free-group words after `rounds` rounds of the iteration
/// (at least one). They agree with the true longitudes modulo the
/// `(rounds + 1)`-th lower central series term. Word length grows quickly;
/// meant for small diagrams and cross-checks.
pub fn longitude_words(d: &LinkDiagram, rounds: usize) -> Vec<Word> {
    let unders = under_lists(d);
    let mut arcs = initial(&Words, &unders);
    let mut longs = Vec::new();
    for _ in 0..rounds.max(1) {
        let (next, l) = round(&Words, d, &unders, &arcs);
        arcs = next;
        longs = l;
    }
    longs
}

/// Magnus expansions of the longitudes, truncated above `degree_cap`,
/// computed to the exact fixed point of the iteration in the truncated
/// ring. In reduced mode monomials with repeated variables vanish.
pub fn longitude_series<T: Scalar>(d: &LinkDiagram, degree_cap: usize, reduced: bool) -> Result<Vec<MagnusSeries<T>>> {
    let g = Series::<T> { m: d.components(), cap: degree_cap, reduced, scalar: PhantomData };
    let unders = under_lists(d);
    let mut arcs = initial(&g, &unders);
    for _ in 0..degree_cap + 2 {
        let (next, longs) = round(&g, d, &unders, &arcs);
        if next == arcs {
            return Ok(longs);
        }
        arcs = next;
    }
    Err(Error::Diagram("Wirtinger iteration did not settle".into()))
}
