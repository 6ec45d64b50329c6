//! Milnor's μ̄ invariants from longitude expansions.

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::json::JsonInt;
use crate::milnor::longitude::longitude_series;
use crate::milnor::magnus::MagnusSeries;
use crate::Scalar;

/// One μ̄ value. `indices` are 0-based; the last one names the longitude.
/// `value` is reduced into `[0, indeterminacy)` when the indeterminacy is
/// positive and equals `raw` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuEntry<T> {
    pub indices: Vec<usize>,
    pub raw: T,
    pub value: T,
    pub indeterminacy: T,
}

impl<T: Scalar> MuEntry<T> {
    pub fn is_exact(&self) -> bool {
        self.indeterminacy.is_zero()
    }

    pub fn vanishes(&self) -> bool {
        self.value.is_zero()
    }

    /// `"μ̄(123)"` style name with 1-based indices.
    pub fn name(&self) -> String {
        let sep = if self.indices.iter().any(|&i| i >= 9) { "," } else { "" };
        let parts: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        format!("μ̄({})", parts.join(sep))
    }
}

/// Longitude expansions of a diagram, ready for coefficient queries.
pub struct Longitudes<T> {
    series: Vec<MagnusSeries<T>>,
}

impl<T: Scalar> Longitudes<T> {
    /// Expansions truncated above `degree_cap`. Reduced mode only answers
    /// queries without repeated indices.
    pub fn new(d: &LinkDiagram, degree_cap: usize, reduced: bool) -> Result<Self> {
        Ok(Longitudes { series: longitude_series(d, degree_cap, reduced)? })
    }

    pub fn series(&self) -> &[MagnusSeries<T>] {
        &self.series
    }

    /// The coefficient μ(I): of `X_{i_1}..X_{i_{k-1}}` in the longitude of
    /// component `i_k`.
    pub fn mu(&self, indices: &[usize]) -> T {
        let (&last, head) = indices.split_last().expect("non-empty index");
        let s = &self.series[last];
        debug_assert!(head.len() <= s.degree_cap());
        s.coefficient(head)
    }

    /// μ̄(I) with its indeterminacy: the gcd of μ over every cyclic
    /// permutation of every proper subsequence of `I` of length at least 2.
    pub fn mu_bar(&self, indices: &[usize]) -> MuEntry<T> {
        let mut delta = T::zero();
        for sub in proper_subsequences(indices) {
            for r in 0..sub.len() {
                let rotated: Vec<usize> = sub[r..].iter().chain(&sub[..r]).copied().collect();
                delta = delta.gcd(&self.mu(&rotated));
            }
        }
        let raw = self.mu(indices);
        let value = if delta.is_zero() { raw.clone() } else { raw.mod_floor(&delta) };
        MuEntry { indices: indices.to_vec(), raw, value, indeterminacy: delta }
    }
}

/// Subsequences of `indices` of length `2..len`, each listed once per
/// choice of positions.
fn proper_subsequences(indices: &[usize]) -> Vec<Vec<usize>> {
    let n = indices.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for mask in 1u64..(1u64 << n) - 1 {
        if mask.count_ones() >= 2 {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| indices[i]).collect());
        }
    }
    out
}

fn check_index(d: &LinkDiagram, indices: &[usize]) -> Result<()> {
    if indices.len() < 2 {
        return Err(Error::Diagram("a μ̄ index needs at least two entries".into()));
    }
    if indices.len() > 64 {
        return Err(Error::Diagram("μ̄ index too long".into()));
    }
    let m = d.components();
    if let Some(&bad) = indices.iter().find(|&&i| i >= m) {
        return Err(Error::ComponentOutOfRange { index: bad, count: m });
    }
    Ok(())
}

/// μ̄(I) of the closure of `d`, with 0-based indices, computed in the full
/// truncated ring. `depth` defaults to `|I|` and must be at least that.
pub fn mu_bar<T: Scalar>(d: &LinkDiagram, indices: &[usize], depth: Option<usize>) -> Result<MuEntry<T>> {
    check_index(d, indices)?;
    let depth = depth.unwrap_or(indices.len());
    if depth < indices.len() {
        return Err(Error::Depth { depth, needed: indices.len() });
    }
    let longs = Longitudes::<T>::new(d, depth - 1, false)?;
    Ok(longs.mu_bar(indices))
}

/// All sequences of distinct components of the given length, in
/// lexicographic order.
pub fn non_repeating(m: usize, len: usize) -> Vec<Vec<usize>> {
    fn extend(m: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 0..m {
            if !cur.contains(&i) {
                cur.push(i);
                extend(m, len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(m, len, &mut Vec::new(), &mut out);
    out
}

/// μ̄ values keyed by index, ordered by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuTable<T> {
    pub labels: Vec<String>,
    pub entries: Vec<MuEntry<T>>,
}

impl<T: Scalar> MuTable<T> {
    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(MuEntry::vanishes)
    }

    pub fn first_nonzero(&self) -> Option<&MuEntry<T>> {
        self.entries.iter().find(|e| !e.vanishes())
    }

    pub fn get(&self, indices: &[usize]) -> Option<&MuEntry<T>> {
        self.entries.iter().find(|e| e.indices == indices)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(TableFile::from(self)).expect("serializable table")
    }
}

#[derive(Serialize)]
#[serde(bound = "T: Scalar")]
struct EntryFile<T: Scalar> {
    index: Vec<usize>,
    value: JsonInt<T>,
    indeterminacy: JsonInt<T>,
}

#[derive(Serialize)]
#[serde(bound = "T: Scalar")]
struct TableFile<T: Scalar> {
    labels: Vec<String>,
    entries: Vec<EntryFile<T>>,
}

impl<T: Scalar> From<&MuTable<T>> for TableFile<T> {
    fn from(t: &MuTable<T>) -> Self {
        TableFile {
            labels: t.labels.clone(),
            entries: t
                .entries
                .iter()
                .map(|e| EntryFile {
                    index: e.indices.iter().map(|i| i + 1).collect(),
                    value: JsonInt(e.value.clone()),
                    indeterminacy: JsonInt(e.indeterminacy.clone()),
                })
                .collect(),
        }
    }
}

/// Every non-repeating μ̄ of length `2..=max_len`, from reduced expansions.
pub fn non_repeating_table<T: Scalar>(d: &LinkDiagram, max_len: usize) -> Result<MuTable<T>> {
    let m = d.components();
    let max_len = max_len.min(m);
    let mut entries = Vec::new();
    if max_len >= 2 {
        let longs = Longitudes::<T>::new(d, max_len - 1, true)?;
        for len in 2..=max_len {
            for idx in non_repeating(m, len) {
                entries.push(longs.mu_bar(&idx));
            }
        }
    }
    Ok(MuTable { labels: d.labels().to_vec(), entries })
}
