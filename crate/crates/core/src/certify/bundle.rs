//! Bundles: a Seifert matrix together with the derived links of each of its
//! basis pairs, ready for the certifier.

use serde::{Deserialize, Serialize};

use super::{certify, natural_pairs, pair_label, Certificate, CertifyOptions};
use crate::diagram::{cable, closure, product, pushoff, split_union, DiagramKind, LinkDiagram};
use crate::error::{Error, Result};
use crate::json::to_canonical;
use crate::seifert::{whitehead_double_matrix, MatrixFile, SeifertMatrix};
use crate::Scalar;

/// The closed diagrams of `K ⊔ a_j` and `K ⊔ b_j` for one basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedPair {
    pub a: LinkDiagram,
    pub b: LinkDiagram,
}

/// A matrix and one derived pair per basis pair, in natural pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle<T> {
    pub matrix: SeifertMatrix<T>,
    pub derived: Vec<DerivedPair>,
}

/// On-disk form:
/// `{"matrix": <matrix file>, "derived": [{"pair": "1.1", "a": <diagram>, "b": <diagram>}]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound = "T: Scalar")]
struct BundleFile<T> {
    matrix: MatrixFile<T>,
    derived: Vec<DerivedFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivedFile {
    pair: String,
    a: LinkDiagram,
    b: LinkDiagram,
}

impl<T: Scalar> Bundle<T> {
    /// Checks that there is exactly one derived pair per basis pair and that
    /// every derived diagram is closed.
    pub fn new(matrix: SeifertMatrix<T>, derived: Vec<DerivedPair>) -> Result<Self> {
        let pairs = natural_pairs(&matrix).len();
        if derived.len() < pairs {
            return Err(Error::MissingDerived { pair: derived.len() + 1 });
        }
        if derived.len() > pairs {
            return Err(Error::Shape(format!("{} derived pairs for {pairs} basis pairs", derived.len())));
        }
        if derived.iter().any(|d| d.a.kind() != DiagramKind::Closed || d.b.kind() != DiagramKind::Closed) {
            return Err(Error::Diagram("derived links must be closed diagrams".into()));
        }
        Ok(Bundle { matrix, derived })
    }

    pub fn certify(&self, opts: &CertifyOptions) -> Certificate {
        certify(&self.matrix, &self.derived, opts)
    }

    pub fn to_json(&self) -> String {
        let matrix = MatrixFile::from(&self.matrix);
        let derived = natural_pairs(&self.matrix)
            .into_iter()
            .zip(&self.derived)
            .map(|(p, d)| DerivedFile { pair: pair_label(p), a: d.a.clone(), b: d.b.clone() })
            .collect();
        to_canonical(&BundleFile { matrix, derived })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: BundleFile<T> = serde_json::from_str(text)?;
        let matrix = SeifertMatrix::from_file(file.matrix)?;
        let pairs = natural_pairs(&matrix);
        for (p, d) in pairs.iter().zip(&file.derived) {
            if d.pair != pair_label(*p) {
                return Err(Error::Structure(format!(
                    "derived entry {:?} where pair {} was expected",
                    d.pair,
                    pair_label(*p)
                )));
            }
        }
        let derived = file.derived.into_iter().map(|d| DerivedPair { a: d.a, b: d.b }).collect();
        Bundle::new(matrix, derived)
    }
}

/// The untwisted Whitehead double of the closed link `j`, each component
/// doubled with clasp sign `eps[i]`. Both derived links of pair `i` are
/// `J ∪ J_i^+`.
pub fn whitehead_double_bundle<T: Scalar>(j: &LinkDiagram, eps: &[i64]) -> Result<Bundle<T>> {
    let j = closure(j);
    let matrix = whitehead_double_matrix(j.components(), eps, None)?;
    let derived = (0..j.components())
        .map(|i| {
            let d = pushoff(&j, i)?;
            Ok(DerivedPair { a: d.clone(), b: d })
        })
        .collect::<Result<Vec<_>>>()?;
    Bundle::new(matrix, derived)
}

/// The bundle of the two-component link `L(β)` built from a 2-strand string
/// link `beta`: each component bounds a genus one surface with basis pair
/// `a_i, b_i`, and `K`, the union of the normal translates of the `b_i`, is
/// the closure of `beta`. Requires that closure to have linking number zero.
///
/// Matrix: one genus one block per component with clasp signs `(1, 1)`.
/// Derived links, with `β_(k,l)` the string link obtained by replacing the
/// strands of `beta` by `k` and `l` untwisted parallel copies:
/// `K ∪ b_1` is the closure of `β_(2,1)`, `K ∪ b_2` that of `β_(1,2)`, and
/// both `K ∪ a_i` are the closure of `(1 ⊗ β) · β_(1,2)`.
pub fn lbeta_bundle<T: Scalar>(beta: &LinkDiagram) -> Result<Bundle<T>> {
    if beta.kind() != DiagramKind::String || beta.components() != 2 {
        return Err(Error::Diagram("expected a 2-strand string link".into()));
    }
    let lk = beta.linking_number(0, 1);
    if lk != 0 {
        return Err(Error::NonzeroLinking(lk.to_string()));
    }
    let b21 = cable(beta, &[2, 1])?;
    let b12 = cable(beta, &[1, 2])?;
    let stacked = product(&split_union(&LinkDiagram::trivial(DiagramKind::String, 1), beta), &b12)?;
    let a = closure(&stacked);
    let derived = vec![DerivedPair { a: a.clone(), b: closure(&b21) }, DerivedPair { a, b: closure(&b12) }];
    Bundle::new(whitehead_double_matrix(2, &[1, 1], None)?, derived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::Verdict;
    use num_bigint::BigInt;

    fn hopf_string() -> LinkDiagram {
        LinkDiagram::from_json(r#"{"kind":"string","strands":[["O0","U1"],["U0","O1"]],"crossings":[[0,1,1],[1,0,1]]}"#)
            .unwrap()
    }

    #[test]
    fn trivial_beta_certifies() {
        let b: Bundle<BigInt> = lbeta_bundle(&LinkDiagram::trivial(DiagramKind::String, 2)).unwrap();
        let c = b.certify(&CertifyOptions::default());
        assert_eq!(c.verdict, Verdict::CertifiedFreelySlice, "{}", c.to_json());
        assert!(b.derived.iter().all(|d| d.a.crossings().is_empty() && d.b.crossings().is_empty()));
    }

    #[test]
    fn linked_beta_is_rejected() {
        match lbeta_bundle::<BigInt>(&hopf_string()) {
            Err(Error::NonzeroLinking(v)) => assert_eq!(v, "1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bundle_json_round_trip() {
        let b: Bundle<BigInt> = whitehead_double_bundle(&hopf_string(), &[1, 0]).unwrap();
        let back = Bundle::<BigInt>::from_json(&b.to_json()).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn missing_derived_pair() {
        let m = whitehead_double_matrix::<BigInt>(2, &[1, 1], None).unwrap();
        let u = LinkDiagram::trivial(DiagramKind::Closed, 3);
        let err = Bundle::new(m, vec![DerivedPair { a: u.clone(), b: u }]).unwrap_err();
        assert!(matches!(err, Error::MissingDerived { pair: 2 }));
    }
}
