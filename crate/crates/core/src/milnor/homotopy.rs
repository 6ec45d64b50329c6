//! Link-homotopy triviality and its "+" strengthening for pairs.

use crate::diagram::{pushoff, sublink, LinkDiagram};
use crate::error::{Error, Result};
use crate::milnor::mu::{non_repeating_table, MuEntry, MuTable};
use crate::Scalar;

/// Verdict of a homotopy-triviality test together with every value tested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyVerdict<T> {
    pub trivial: bool,
    pub table: MuTable<T>,
}

impl<T: Scalar> HomotopyVerdict<T> {
    /// The shortest (then lexicographically first) non-vanishing μ̄.
    /// It is exact, since everything shorter vanishes.
    pub fn witness(&self) -> Option<&MuEntry<T>> {
        self.table.first_nonzero()
    }
}

/// A link is homotopically trivial exactly when every μ̄ with distinct
/// indices vanishes. Values are examined by increasing length, so when a
/// length is reached every shorter value is already zero and the one under
/// test has no indeterminacy.
pub fn is_homotopically_trivial<T: Scalar>(d: &LinkDiagram) -> Result<HomotopyVerdict<T>> {
    let table = non_repeating_table::<T>(d, d.components())?;
    let trivial = table.all_zero();
    debug_assert!(table.first_nonzero().is_none_or(MuEntry::is_exact));
    Ok(HomotopyVerdict { trivial, table })
}

/// Result of the pair test: one homotopy verdict per component of `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict<T> {
    pub holds: bool,
    /// `(label of J_i, verdict for K ∪ J_i^+)`.
    pub parts: Vec<(String, HomotopyVerdict<T>)>,
}

/// The pair `(J, K)` of sublinks of `d` (possibly overlapping) is
/// homotopically trivial⁺ when, for every component `J_i`, the link formed
/// by `K` and a zero-framed parallel copy of `J_i` is homotopically trivial.
pub fn is_ht_plus_pair<T: Scalar>(d: &LinkDiagram, j: &[usize], k: &[usize]) -> Result<PairVerdict<T>> {
    let n = d.components();
    if let Some(&bad) = j.iter().chain(k).find(|&&i| i >= n) {
        return Err(Error::ComponentOutOfRange { index: bad, count: n });
    }
    let mut parts = Vec::with_capacity(j.len());
    for &ji in j {
        let with_copy = pushoff(d, ji)?;
        let keep: Vec<usize> = k.iter().copied().chain([n]).collect();
        let link = sublink(&with_copy, &keep)?;
        parts.push((d.labels()[ji].clone(), is_homotopically_trivial(&link)?));
    }
    Ok(PairVerdict { holds: parts.iter().all(|(_, v)| v.trivial), parts })
}

/// Resolves component labels to indices.
pub fn resolve_labels(d: &LinkDiagram, labels: &[String]) -> Result<Vec<usize>> {
    labels.iter().map(|l| d.index_of(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DiagramKind;
    use num_bigint::BigInt;

    #[test]
    fn unlink_pair_is_trivially_plus() {
        let u = LinkDiagram::trivial(DiagramKind::Closed, 3);
        let v = is_ht_plus_pair::<BigInt>(&u, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert!(v.holds);
        assert_eq!(v.parts.len(), 3);
        let one = is_homotopically_trivial::<BigInt>(&LinkDiagram::trivial(DiagramKind::Closed, 1)).unwrap();
        assert!(one.trivial && one.table.entries.is_empty());
    }

    #[test]
    fn hopf_is_not_trivial() {
        let h = LinkDiagram::from_json(
            r#"{"kind":"closed","strands":[["O0","U1"],["U0","O1"]],"crossings":[[0,1,1],[1,0,1]]}"#,
        )
        .unwrap();
        let v = is_homotopically_trivial::<BigInt>(&h).unwrap();
        assert!(!v.trivial);
        assert_eq!(v.witness().unwrap().indices, vec![0, 1]);
        assert!(!is_ht_plus_pair::<BigInt>(&h, &[0, 1], &[0, 1]).unwrap().holds);
    }
}
