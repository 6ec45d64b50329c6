//! JSON plumbing shared by the file formats: arbitrary-size integers as plain
//! JSON numbers, canonical pretty printing, and content digests.

use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::matrix::Matrix;
use crate::Scalar;

/// An integer that travels through JSON as a bare number literal of any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt<T>(pub T);

impl<T: Scalar> Serialize for JsonInt<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for JsonInt<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        let text = n.to_string();
        T::from_str(&text).map(JsonInt).map_err(|_| D::Error::custom(format!("expected an integer, found {text}")))
    }
}

pub fn rows_to_json<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<JsonInt<T>>> {
    (0..m.rows()).map(|r| m.row(r).iter().cloned().map(JsonInt).collect()).collect()
}

pub fn unwrap_rows<T>(rows: Vec<Vec<JsonInt<T>>>) -> Vec<Vec<T>> {
    rows.into_iter().map(|r| r.into_iter().map(|v| v.0).collect()).collect()
}

/// Pretty JSON with a trailing newline, with arrays of scalars kept on one
/// line. Field order follows struct declaration order and maps are
/// `BTreeMap`s, so output is byte-stable.
pub fn to_canonical<V: Serialize + ?Sized>(value: &V) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("serializable value");
    let mut s = collapse_flat_arrays(&pretty);
    s.push('\n');
    s
}

/// Rewrites every array without nested arrays or objects as `[a, b, c]`.
fn collapse_flat_arrays(pretty: &str) -> String {
    let chars: Vec<char> = pretty.chars().collect();
    let mut out = String::with_capacity(pretty.len());
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '"' {
            let end = string_end(&chars, i);
            out.extend(&chars[i..end]);
            i = end;
        } else if c == '[' {
            match flat_array(&chars, i) {
                Some((items, end)) => {
                    out.push('[');
                    out.push_str(&items.join(", "));
                    out.push(']');
                    i = end;
                }
                None => {
                    out.push(c);
                    i += 1;
                }
            }
        } else {
            out.push(c);
            i += 1;
        }
    }
    out
}

/// Index just past the string literal starting at `start`.
fn string_end(chars: &[char], start: usize) -> usize {
    let mut i = start + 1;
    while i < chars.len() {
        match chars[i] {
            '\\' => i += 2,
            '"' => return i + 1,
            _ => i += 1,
        }
    }
    chars.len()
}

/// The items of the array opening at `start` if none of them is an array
/// or object, with the index just past its closing bracket.
fn flat_array(chars: &[char], start: usize) -> Option<(Vec<String>, usize)> {
    let mut items = Vec::new();
    let mut cur = String::new();
    let mut i = start + 1;
    while i < chars.len() {
        match chars[i] {
            '"' => {
                let end = string_end(chars, i);
                cur.extend(&chars[i..end]);
                i = end;
                continue;
            }
            '[' | '{' => return None,
            ']' => {
                if !cur.trim().is_empty() {
                    items.push(cur.trim().to_string());
                }
                return Some((items, i + 1));
            }
            ',' => items.push(std::mem::take(&mut cur).trim().to_string()),
            c => cur.push(c),
        }
        i += 1;
    }
    None
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
