//! Operations on diagrams: closure, stacking, disjoint union, sublinks,
//! mirror and inverse, cabling and zero-framed push-offs.

use std::collections::HashSet;

use super::{default_labels, Crossing, DiagramKind, LinkDiagram, Passage};
use crate::error::{Error, Result};

pub fn closure(d: &LinkDiagram) -> LinkDiagram {
    LinkDiagram { kind: DiagramKind::Closed, ..d.clone() }
}

/// Stacks string link `b` on top of string link `a`. Labels come from `a`.
pub fn product(a: &LinkDiagram, b: &LinkDiagram) -> Result<LinkDiagram> {
    if a.kind != DiagramKind::String || b.kind != DiagramKind::String {
        return Err(Error::Diagram("only string links can be stacked".into()));
    }
    if a.components() != b.components() {
        return Err(Error::Diagram(format!("cannot stack {} strands on {}", b.components(), a.components())));
    }
    let shift = a.crossings.len();
    let strands = a
        .strands
        .iter()
        .zip(&b.strands)
        .map(|(x, y)| {
            x.iter().copied().chain(y.iter().map(|p| Passage { crossing: p.crossing + shift, over: p.over })).collect()
        })
        .collect();
    let crossings = a.crossings.iter().chain(&b.crossings).copied().collect();
    LinkDiagram::new(DiagramKind::String, strands, crossings, Some(a.labels.clone()))
}

/// Places `b` beside `a`. Labels are kept when they stay distinct and are
/// renumbered `1..n` otherwise. The kind is taken from `a`.
pub fn split_union(a: &LinkDiagram, b: &LinkDiagram) -> LinkDiagram {
    let cs = a.crossings.len();
    let ss = a.components();
    let mut strands = a.strands.clone();
    strands.extend(
        b.strands.iter().map(|st| st.iter().map(|p| Passage { crossing: p.crossing + cs, over: p.over }).collect()),
    );
    let mut crossings = a.crossings.clone();
    crossings.extend(b.crossings.iter().map(|c| Crossing { over: c.over + ss, under: c.under + ss, sign: c.sign }));
    let mut labels: Vec<String> = a.labels.iter().chain(&b.labels).cloned().collect();
    if labels.iter().collect::<HashSet<_>>().len() != labels.len() {
        labels = default_labels(labels.len());
    }
    LinkDiagram { kind: a.kind, strands, crossings, labels }
}

/// Keeps the listed components, in the listed order, and drops every
/// crossing that touches a removed one.
pub fn sublink(d: &LinkDiagram, keep: &[usize]) -> Result<LinkDiagram> {
    let n = d.components();
    let mut new_index = vec![None; n];
    for (i, &k) in keep.iter().enumerate() {
        if k >= n {
            return Err(Error::ComponentOutOfRange { index: k, count: n });
        }
        if new_index[k].replace(i).is_some() {
            return Err(Error::Diagram(format!("component {k} listed twice")));
        }
    }
    let mut crossing_index = vec![None; d.crossings.len()];
    let mut crossings = Vec::new();
    for (c, x) in d.crossings.iter().enumerate() {
        if let (Some(o), Some(u)) = (new_index[x.over], new_index[x.under]) {
            crossing_index[c] = Some(crossings.len());
            crossings.push(Crossing { over: o, under: u, sign: x.sign });
        }
    }
    let strands = keep
        .iter()
        .map(|&k| {
            d.strands[k]
                .iter()
                .filter_map(|p| crossing_index[p.crossing].map(|c| Passage { crossing: c, over: p.over }))
                .collect()
        })
        .collect();
    let labels = keep.iter().map(|&k| d.labels[k].clone()).collect();
    LinkDiagram::new(d.kind, strands, crossings, Some(labels))
}

/// Reflection through the projection plane: every crossing changes
/// over/under and sign.
pub fn mirror(d: &LinkDiagram) -> LinkDiagram {
    LinkDiagram {
        kind: d.kind,
        strands: d
            .strands
            .iter()
            .map(|s| s.iter().map(|p| Passage { crossing: p.crossing, over: !p.over }).collect())
            .collect(),
        crossings: d.crossings.iter().map(|c| Crossing { over: c.under, under: c.over, sign: -c.sign }).collect(),
        labels: d.labels.clone(),
    }
}

/// The inverse string link: reflect top to bottom and reverse every strand,
/// so that stacking a string link with its inverse is isotopic to the
/// trivial one. Over/under are kept; signs change.
pub fn inverse(d: &LinkDiagram) -> LinkDiagram {
    LinkDiagram {
        kind: d.kind,
        strands: d.strands.iter().map(|s| s.iter().rev().copied().collect()).collect(),
        crossings: d.crossings.iter().map(|c| Crossing { sign: -c.sign, ..*c }).collect(),
        labels: d.labels.clone(),
    }
}

/// Replaces component `i` by `mults[i]` parallel copies with the zero
/// framing: blackboard parallels, corrected by `|w|` full twists of sign
/// `-sign(w)` at the start of the strand, `w` being its writhe.
///
/// Copy `p` of a strand sits `p` steps to the left of copy `p - 1`. The
/// copies of component `i` are consecutive strands labelled
/// `"{label}.{p}"` (1-based) when `mults[i] > 1`.
pub fn cable(d: &LinkDiagram, mults: &[usize]) -> Result<LinkDiagram> {
    let n = d.components();
    if mults.len() != n {
        return Err(Error::Diagram(format!("{} multiplicities for {n} components", mults.len())));
    }
    if let Some(i) = mults.iter().position(|&k| k == 0) {
        return Err(Error::Diagram(format!("component {i} has multiplicity 0")));
    }
    let mut first = Vec::with_capacity(n);
    let mut acc = 0;
    for &k in mults {
        first.push(acc);
        acc += k;
    }
    let total = acc;

    // Grid crossings, ordered by (original crossing, over copy, under copy).
    let mut crossings = Vec::new();
    let mut grid_base = Vec::with_capacity(d.crossings.len());
    for c in &d.crossings {
        grid_base.push(crossings.len());
        for p in 0..mults[c.over] {
            for q in 0..mults[c.under] {
                crossings.push(Crossing { over: first[c.over] + p, under: first[c.under] + q, sign: c.sign });
            }
        }
    }
    let grid_id = |c: usize, p: usize, q: usize| grid_base[c] + p * mults[d.crossings[c].under] + q;

    let mut strands: Vec<Vec<Passage>> = vec![Vec::new(); total];

    // Framing twists come first along each copy.
    for (i, &k) in mults.iter().enumerate() {
        let w = d.writhe(i);
        if k < 2 || w == 0 {
            continue;
        }
        let sign: i8 = if w > 0 { -1 } else { 1 };
        let mut pos: Vec<usize> = (0..k).collect();
        for _ in 0..w.unsigned_abs() {
            for _ in 0..k {
                for t in 1..k {
                    let (right_mover, left_mover) = (pos[t - 1], pos[t]);
                    let (over, under) = if sign == -1 { (right_mover, left_mover) } else { (left_mover, right_mover) };
                    let id = crossings.len();
                    crossings.push(Crossing { over: first[i] + over, under: first[i] + under, sign });
                    strands[first[i] + over].push(Passage { crossing: id, over: true });
                    strands[first[i] + under].push(Passage { crossing: id, over: false });
                    pos.swap(t - 1, t);
                }
            }
        }
        debug_assert!(pos.iter().enumerate().all(|(a, &b)| a == b), "full twist is a pure braid");
    }

    for (i, strand) in d.strands.iter().enumerate() {
        for copy in 0..mults[i] {
            let out = &mut strands[first[i] + copy];
            for pass in strand {
                let c = &d.crossings[pass.crossing];
                let positive = c.sign > 0;
                if pass.over {
                    let k = mults[c.under];
                    let order: Vec<usize> = if positive { (0..k).rev().collect() } else { (0..k).collect() };
                    for q in order {
                        out.push(Passage { crossing: grid_id(pass.crossing, copy, q), over: true });
                    }
                } else {
                    let k = mults[c.over];
                    let order: Vec<usize> = if positive { (0..k).collect() } else { (0..k).rev().collect() };
                    for p in order {
                        out.push(Passage { crossing: grid_id(pass.crossing, p, copy), over: false });
                    }
                }
            }
        }
    }

    let mut labels = Vec::with_capacity(total);
    for (i, &k) in mults.iter().enumerate() {
        if k == 1 {
            labels.push(d.labels[i].clone());
        } else {
            labels.extend((1..=k).map(|p| format!("{}.{p}", d.labels[i])));
        }
    }
    LinkDiagram::new(d.kind, strands, crossings, Some(labels))
}

/// Adds a zero-framed parallel copy of component `i` as the last
/// component, labelled `"{label}+"`.
pub fn pushoff(d: &LinkDiagram, i: usize) -> Result<LinkDiagram> {
    let n = d.components();
    if i >= n {
        return Err(Error::ComponentOutOfRange { index: i, count: n });
    }
    let mut mults = vec![1; n];
    mults[i] = 2;
    let cabled = cable(d, &mults)?;
    // Copies of `i` are strands `i` and `i + 1`; move the second to the end.
    let order: Vec<usize> = (0..=n).filter(|&s| s != i + 1).chain([i + 1]).collect();
    let moved = sublink(&cabled, &order)?;
    let mut labels = d.labels.clone();
    labels.push(format!("{}+", d.labels[i]));
    moved.with_labels(labels)
}
