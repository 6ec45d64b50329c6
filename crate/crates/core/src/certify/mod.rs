//! Certifier for the hypotheses of the free-sliceness theorem: a good
//! boundary link whose Seifert matrix is in good-basis form, with every
//! derived link `K ⊔ a_j` and `K ⊔ b_j` homotopically trivial.
//!
//! The certifier checks the supplied combinatorial data only. It does not
//! build slice discs; a `certified-freely-slice` verdict says that the
//! hypotheses of the theorem hold for that data.

mod bundle;

pub use bundle::{lbeta_bundle, whitehead_double_bundle, Bundle, DerivedPair};

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::diagram::LinkDiagram;
use crate::json::{sha256_hex, to_canonical};
use crate::milnor::{non_repeating_table, MuTable};
use crate::scalc::{good_basis_form_check, moves_to_json, GoodBasis, MoveSequence, PairId};
use crate::seifert::SeifertMatrix;
use crate::Scalar;

pub const TOOL: &str = "slicecert";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const STATEMENT: &str = "The Seifert matrix is in good-basis form and every derived link K ⊔ a_j, K ⊔ b_j is \
homotopically trivial, so the link admits a homotopically trivial+ good basis and is freely slice by the \
free-sliceness theorem for good boundary links. Slice discs are not constructed.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedFreelySlice,
    HypothesisFailed,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedFreelySlice => "certified-freely-slice",
            Verdict::HypothesisFailed => "hypothesis-failed",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

/// A node of the check tree. Inner nodes summarize their children.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Check>,
}

impl Check {
    fn leaf(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status, detail: detail.into(), witness: None, children: Vec::new() }
    }

    fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    fn group(name: &str, detail: &str, children: Vec<Check>) -> Self {
        let status = summarize(children.iter().map(|c| c.status));
        Check { name: name.into(), status, detail: detail.into(), witness: None, children }
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&Check> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(Check::leaves).collect()
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        if self.name == name {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(name))
    }
}

fn summarize(statuses: impl Iterator<Item = Status>) -> Status {
    let mut out = Status::Pass;
    for s in statuses {
        match s {
            Status::Fail => return Status::Fail,
            Status::Inconclusive => out = Status::Inconclusive,
            Status::Skipped if out == Status::Pass => out = Status::Skipped,
            _ => {}
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub tool: String,
    pub version: String,
    pub verdict: Verdict,
    pub statement: Option<String>,
    /// Name of the first failing (or, failing none, inconclusive) leaf.
    pub failing_check: Option<String>,
    /// SHA-256 digests of the inputs, keyed by role. The library fills in
    /// digests of the canonical JSON forms; callers that read files may
    /// replace them with digests of the file bytes.
    pub inputs: BTreeMap<String, String>,
    pub checks: Check,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        to_canonical(self)
    }

    pub fn failing_leaf(&self) -> Option<&Check> {
        self.failing_check.as_deref().and_then(|n| self.checks.find(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CertifyOptions {
    /// Longest μ̄ index examined on each derived link. `None` means the
    /// component count, which makes the homotopy test complete; anything
    /// shorter can only refute, so a clean shorter table is inconclusive.
    pub depth: Option<usize>,
}

/// `"2.1"`: 1-based component and pair number.
pub fn pair_label(p: PairId) -> String {
    format!("{}.{}", p.component + 1, p.pair + 1)
}

/// Aligned pairs in natural order: by component, then by position.
pub fn natural_pairs<T: Scalar>(a: &SeifertMatrix<T>) -> Vec<PairId> {
    a.block_sizes()
        .iter()
        .enumerate()
        .flat_map(|(k, &n)| (0..n / 2).map(move |t| PairId { component: k, pair: t }))
        .collect()
}

/// First entry joining two different basis pairs that is nonzero, as
/// `(row, column, value)` in global indices. In good-basis form these are
/// the entries left free; an ht+ good basis forces them all to vanish.
pub fn first_nonzero_star<T: Scalar>(a: &SeifertMatrix<T>) -> Option<(usize, usize, T)> {
    let e = a.entries();
    let n = a.side();
    let pair_of = |i: usize| (a.component_of(i), (i - a.offset(a.component_of(i))) / 2);
    for r in 0..n {
        for c in 0..n {
            if pair_of(r) != pair_of(c) && !e[(r, c)].is_zero() {
                return Some((r, c, e[(r, c)].clone()));
            }
        }
    }
    None
}

/// Homotopy test of one derived link at the given depth.
fn homotopy_leaf<T: Scalar>(name: String, what: &str, d: &LinkDiagram, depth: Option<usize>) -> Check {
    let m = d.components();
    let len = depth.unwrap_or(m).min(m);
    let table: MuTable<T> = match non_repeating_table(d, len) {
        Ok(t) => t,
        Err(e) => return Check::leaf(name, Status::Fail, format!("{what}: {e}")),
    };
    let mut witness = json!({ "components": m, "depth": len, "table": table.to_json_value() });
    if let Some(bad) = table.first_nonzero() {
        witness["first_nonzero"] = json!(bad.name());
        let detail = format!("{what} is not homotopically trivial: {} = {}", bad.name(), bad.value);
        return Check::leaf(name, Status::Fail, detail).with_witness(witness);
    }
    if len < m {
        let detail = format!("{what}: non-repeating μ̄ up to length {len} vanish; length {m} not examined");
        return Check::leaf(name, Status::Inconclusive, detail).with_witness(witness);
    }
    let detail = format!("{what}: all {} non-repeating μ̄ vanish", table.entries.len());
    Check::leaf(name, Status::Pass, detail).with_witness(witness)
}

/// Runs the homotopy tests on the derived links of every pair, in natural
/// pair order. Returns one group per pair.
fn derived_checks<T: Scalar>(pairs: &[PairId], derived: &[DerivedPair], depth: Option<usize>) -> Vec<Check> {
    pairs
        .iter()
        .zip(derived)
        .map(|(&p, dp)| {
            let l = pair_label(p);
            let children = vec![
                homotopy_leaf::<T>(format!("derived-a-{l}"), &format!("K ⊔ a_{l}"), &dp.a, depth),
                homotopy_leaf::<T>(format!("derived-b-{l}"), &format!("K ⊔ b_{l}"), &dp.b, depth),
            ];
            Check::group(&format!("pair-{l}"), &format!("derived links of pair {l}"), children)
        })
        .collect()
}

/// Whether the derived links certify the good basis as homotopically
/// trivial+. The matrix must already be in good-basis form; `derived[j]`
/// belongs to the `j`-th pair in natural order. Also fails when a nonzero
/// entry joins two different pairs, which the ht+ property rules out.
pub fn is_ht_plus_good_basis<T: Scalar>(
    a: &SeifertMatrix<T>,
    derived: &[DerivedPair],
    depth: Option<usize>,
) -> crate::Result<bool> {
    if good_basis_form_check(a)?.is_none() {
        return Err(crate::Error::Witness("matrix is not in good-basis form".into()));
    }
    let pairs = natural_pairs(a);
    if derived.len() < pairs.len() {
        return Err(crate::Error::MissingDerived { pair: derived.len() + 1 });
    }
    if first_nonzero_star(a).is_some() {
        return Ok(false);
    }
    Ok(derived_checks::<T>(&pairs, derived, depth).iter().all(|c| c.status == Status::Pass))
}

fn digests<T: Scalar>(a: &SeifertMatrix<T>, derived: &[DerivedPair]) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    out.insert("matrix".to_string(), sha256_hex(a.to_json().as_bytes()));
    for (j, dp) in derived.iter().enumerate() {
        out.insert(format!("derived.{}.a", j + 1), sha256_hex(dp.a.to_json().as_bytes()));
        out.insert(format!("derived.{}.b", j + 1), sha256_hex(dp.b.to_json().as_bytes()));
    }
    out
}

fn good_basis_witness(gb: &GoodBasis) -> Value {
    json!({
        "order": gb.order.iter().map(|&p| pair_label(p)).collect::<Vec<_>>(),
        "signs": gb.signs,
    })
}

/// Checks, in order and stopping at the first failure: the block sizes are
/// even, the matrix is in good-basis form, the good-basis reductions take it
/// to the null matrix, no entry joins two different pairs, a derived pair
/// is supplied for every basis pair, and each derived link is homotopically
/// trivial. Checks after a failure are recorded as skipped.
pub fn certify<T: Scalar>(a: &SeifertMatrix<T>, derived: &[DerivedPair], opts: &CertifyOptions) -> Certificate {
    let mut checks: Vec<Check> = Vec::new();
    let push = |checks: &mut Vec<Check>, c: Check| {
        let failed = c.status == Status::Fail;
        checks.push(c);
        failed
    };

    let sizes = format!("block sizes {:?}", a.block_sizes());
    let odd = a.block_sizes().iter().position(|n| n % 2 == 1);
    let valid = match odd {
        None => Check::leaf("seifert-valid", Status::Pass, format!("boundary link Seifert matrix, {sizes}")),
        Some(k) => Check::leaf("seifert-valid", Status::Fail, format!("component {} has odd block size", k + 1)),
    };
    let mut stop = push(&mut checks, valid);

    let pairs = natural_pairs(a);
    let mut basis = None;
    if !stop {
        let c = match good_basis_form_check(a) {
            Ok(Some(gb)) => {
                let w = good_basis_witness(&gb);
                basis = Some(gb);
                Check::leaf("good-basis-form", Status::Pass, "aligned pairs order into good-basis form").with_witness(w)
            }
            Ok(None) => {
                Check::leaf("good-basis-form", Status::Fail, "no ordering of the aligned pairs gives good-basis form")
            }
            Err(e) => Check::leaf("good-basis-form", Status::Fail, e.to_string()),
        };
        stop = push(&mut checks, c);
    }

    if let (false, Some(gb)) = (stop, &basis) {
        let seq = MoveSequence::new(a.clone(), gb.reduction_moves());
        let c = match seq.end() {
            Ok(end) if end.is_null() => Check::leaf(
                "s-reducible",
                Status::Pass,
                format!("{} S-reductions reach the null matrix", seq.moves.len()),
            )
            .with_witness(serde_json::from_str(&moves_to_json(&seq.moves)).expect("moves serialize to JSON")),
            Ok(_) => Check::leaf("s-reducible", Status::Fail, "reductions stop short of the null matrix"),
            Err(e) => Check::leaf("s-reducible", Status::Fail, e.to_string()),
        };
        stop = push(&mut checks, c);
    }

    if !stop {
        let c = match first_nonzero_star(a) {
            None => Check::leaf("star-entries-vanish", Status::Pass, "no entry joins two different basis pairs"),
            Some((r, col, v)) => Check::leaf(
                "star-entries-vanish",
                Status::Fail,
                format!(
                    "entry ({}, {}) = {v} joins two basis pairs; the matrix contradicts an ht+ good basis",
                    r + 1,
                    col + 1
                ),
            )
            .with_witness(json!({ "row": r + 1, "column": col + 1, "value": v.to_string() })),
        };
        stop = push(&mut checks, c);
    }

    let mut derived_ok = false;
    if !stop {
        let c = if derived.len() == pairs.len() {
            derived_ok = true;
            Check::leaf("derived-supplied", Status::Pass, format!("{} derived pairs supplied", pairs.len()))
        } else {
            Check::leaf(
                "derived-supplied",
                Status::Inconclusive,
                format!("{} basis pairs but {} derived pairs supplied", pairs.len(), derived.len()),
            )
        };
        checks.push(c);
    }

    if !stop && derived_ok {
        let groups = derived_checks::<T>(&pairs, derived, opts.depth);
        let hom = Check::group("homotopy", "derived links are homotopically trivial", groups);
        checks.push(hom);
    }

    for name in ["good-basis-form", "s-reducible", "star-entries-vanish", "derived-supplied", "homotopy"] {
        if !checks.iter().any(|c| c.name == name) {
            checks.push(Check::leaf(name, Status::Skipped, "not reached"));
        }
    }

    let root = Check::group("freely-slice-hypotheses", "hypotheses of the free-sliceness theorem", checks);
    let leaves = root.leaves();
    let failing =
        leaves.iter().find(|c| c.status == Status::Fail).or_else(|| leaves.iter().find(|c| c.status != Status::Pass));
    let verdict = match root.status {
        Status::Pass => Verdict::CertifiedFreelySlice,
        Status::Fail => Verdict::HypothesisFailed,
        _ => Verdict::Inconclusive,
    };
    Certificate {
        tool: TOOL.into(),
        version: VERSION.into(),
        verdict,
        statement: (verdict == Verdict::CertifiedFreelySlice).then(|| STATEMENT.to_string()),
        failing_check: failing.map(|c| c.name.clone()),
        inputs: digests(a, derived),
        checks: root,
    }
}
