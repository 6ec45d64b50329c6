//! Link and string link diagrams as signed Gauss codes.
//!
//! Each strand is one component. A strand is the ordered list of crossings
//! it passes through, each marked over or under; a crossing records which
//! strand goes over, which goes under, and its sign
//! `sign(d_over x d_under)` with `a x b = a.x*b.y - a.y*b.x`. A string link
//! and its closure share the same code and differ only in `kind`.
//!
//! Diagrams are taken to be planar; the code is not checked for
//! realizability.

mod ops;

pub use ops::{cable, closure, inverse, mirror, product, pushoff, split_union, sublink};

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::to_canonical;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    /// Strands run from bottom to top of a cylinder and are not closed up.
    String,
    Closed,
}

/// One pass of a strand through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.over { 'O' } else { 'U' }, self.crossing)
    }
}

impl Serialize for Passage {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Passage {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let over = match head {
            "O" => true,
            "U" => false,
            _ => return Err(D::Error::custom(format!("passage {s:?} must start with O or U"))),
        };
        let crossing = tail.parse().map_err(|_| D::Error::custom(format!("passage {s:?} has no crossing number")))?;
        Ok(Passage { crossing, over })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: usize,
    pub under: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    kind: DiagramKind,
    strands: Vec<Vec<Passage>>,
    crossings: Vec<Crossing>,
    labels: Vec<String>,
}

impl LinkDiagram {
    /// Checks that every crossing is passed exactly once over, by its over
    /// strand, and once under, by its under strand; signs are `±1`; labels
    /// are distinct.
    pub fn new(
        kind: DiagramKind,
        strands: Vec<Vec<Passage>>,
        crossings: Vec<Crossing>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = strands.len();
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(Error::Diagram(format!("{} labels for {n} strands", labels.len())));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::Diagram(format!("duplicate component label {l:?}")));
            }
        }
        let mut hits = vec![(0usize, 0usize); crossings.len()];
        for (s, strand) in strands.iter().enumerate() {
            for p in strand {
                let Some(c) = crossings.get(p.crossing) else {
                    return Err(Error::Diagram(format!("strand {s} names unknown crossing {}", p.crossing)));
                };
                let expected = if p.over { c.over } else { c.under };
                if expected != s {
                    return Err(Error::Diagram(format!(
                        "crossing {} is passed {} by strand {s}, but its record says strand {expected}",
                        p.crossing,
                        if p.over { "over" } else { "under" }
                    )));
                }
                let h = &mut hits[p.crossing];
                if p.over {
                    h.0 += 1;
                } else {
                    h.1 += 1;
                }
            }
        }
        for (i, (c, h)) in crossings.iter().zip(&hits).enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::Diagram(format!("crossing {i} has sign {}", c.sign)));
            }
            if c.over >= n || c.under >= n {
                return Err(Error::Diagram(format!("crossing {i} names a missing strand")));
            }
            if *h != (1, 1) {
                return Err(Error::Diagram(format!(
                    "crossing {i} is passed over {} and under {} times; expected once each",
                    h.0, h.1
                )));
            }
        }
        Ok(LinkDiagram { kind, strands, crossings, labels })
    }

    /// The `n`-component trivial diagram: no crossings.
    pub fn trivial(kind: DiagramKind, n: usize) -> Self {
        LinkDiagram { kind, strands: vec![Vec::new(); n], crossings: Vec::new(), labels: default_labels(n) }
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn components(&self) -> usize {
        self.strands.len()
    }

    pub fn strands(&self) -> &[Vec<Passage>] {
        &self.strands
    }

    pub fn strand(&self, i: usize) -> &[Passage] {
        &self.strands[i]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownComponent(label.to_string()))
    }

    /// Renames the components; labels must stay distinct.
    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        LinkDiagram::new(self.kind, self.strands, self.crossings, Some(labels))
    }

    /// Sum of the signs of the crossings of strand `i` with itself.
    pub fn writhe(&self, i: usize) -> i64 {
        self.crossings.iter().filter(|c| c.over == i && c.under == i).map(|c| i64::from(c.sign)).sum()
    }

    /// Linking number of components `i` and `j`: the sum of the signs of
    /// the crossings where `i` passes over `j`. For closed planar diagrams
    /// this equals the sum where `j` passes over `i`.
    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        self.crossings.iter().filter(|c| c.over == i && c.under == j && i != j).map(|c| i64::from(c.sign)).sum()
    }

    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.components();
        (0..n).map(|i| (0..n).map(|j| if i == j { 0 } else { self.linking_number(i, j) }).collect()).collect()
    }

    pub fn to_json(&self) -> String {
        to_canonical(&DiagramFile::from(self))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DiagramFile = serde_json::from_str(text)?;
        file.into_diagram()
    }
}

impl Serialize for LinkDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinkDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        DiagramFile::deserialize(d)?.into_diagram().map_err(D::Error::custom)
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Component labels in strand order, each owning a one-strand list.
struct Components(Vec<String>);

impl Serialize for Components {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (i, l) in self.0.iter().enumerate() {
            map.serialize_entry(l, &[i])?;
        }
        map.end()
    }
}

/// On-disk form:
/// `{"kind": "string"|"closed", "strands": [["O0", "U1", ...]],
///   "crossings": [[over, under, sign]], "components": {"label": [strand]}}`.
/// `components` is optional on input; labels default to `"1".."n"`.
#[derive(Serialize)]
struct DiagramFile {
    kind: DiagramKind,
    strands: Vec<Vec<Passage>>,
    crossings: Vec<(usize, usize, i8)>,
    components: Components,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramInput {
    kind: DiagramKind,
    strands: Vec<Vec<Passage>>,
    crossings: Vec<(usize, usize, i8)>,
    #[serde(default)]
    components: Option<BTreeMap<String, Vec<usize>>>,
}

impl From<&LinkDiagram> for DiagramFile {
    fn from(d: &LinkDiagram) -> Self {
        DiagramFile {
            kind: d.kind,
            strands: d.strands.clone(),
            crossings: d.crossings.iter().map(|c| (c.over, c.under, c.sign)).collect(),
            components: Components(d.labels.clone()),
        }
    }
}

impl DiagramFile {
    fn into_diagram(self) -> Result<LinkDiagram> {
        let crossings = self.crossings.into_iter().map(|(over, under, sign)| Crossing { over, under, sign }).collect();
        LinkDiagram::new(self.kind, self.strands, crossings, Some(self.components.0))
    }
}

impl<'de> Deserialize<'de> for DiagramFile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let input = DiagramInput::deserialize(d)?;
        let n = input.strands.len();
        let labels = match input.components {
            None => default_labels(n),
            Some(map) => {
                let mut labels = vec![None; n];
                for (label, strands) in map {
                    match strands.as_slice() {
                        [s] if *s < n && labels[*s].is_none() => labels[*s] = Some(label),
                        [s] if *s < n => return Err(D::Error::custom(format!("strand {s} belongs to two components"))),
                        _ => {
                            return Err(D::Error::custom(format!(
                                "component {label:?} must own exactly one existing strand"
                            )))
                        }
                    }
                }
                labels
                    .into_iter()
                    .enumerate()
                    .map(|(i, l)| l.ok_or_else(|| D::Error::custom(format!("strand {i} has no component"))))
                    .collect::<std::result::Result<_, _>>()?
            }
        };
        Ok(DiagramFile {
            kind: input.kind,
            strands: input.strands,
            crossings: input.crossings,
            components: Components(labels),
        })
    }
}
