//! File access and the mapping from errors to exit codes.

use std::fmt;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use slicecert_core::diagram::{closure, LinkDiagram};
use slicecert_core::json::sha256_hex;
use slicecert_core::scalc::moves_from_json;
use slicecert_core::{Error, SMove, SeifertMatrix};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INCONCLUSIVE: u8 = 1;
pub const EXIT_FAILED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

/// A problem with how the tool was invoked rather than with the mathematics.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Malformed input and bad invocations exit 64; inputs that parse but fail
/// a mathematical requirement exit 2.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<Usage>() || cause.is::<std::io::Error>() {
            return EXIT_USAGE;
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::Json(_)
                | Error::Structure(_)
                | Error::Catalog { .. }
                | Error::UnknownComponent(_)
                | Error::ComponentOutOfRange { .. }
                | Error::Depth { .. }
                | Error::Letter { .. }
                | Error::Diagram(_) => EXIT_USAGE,
                _ => EXIT_FAILED,
            };
        }
    }
    EXIT_FAILED
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn digest_of(text: &str) -> String {
    sha256_hex(text.as_bytes())
}

pub fn load_matrix(path: &Path) -> Result<(SeifertMatrix, String)> {
    let text = read_text(path)?;
    let a = SeifertMatrix::from_json(&text).with_context(|| format!("matrix {}", path.display()))?;
    Ok((a, digest_of(&text)))
}

/// Reads a diagram; string links are closed up.
pub fn load_closed_diagram(path: &Path) -> Result<(LinkDiagram, String)> {
    let (d, digest) = load_diagram(path)?;
    Ok((closure(&d), digest))
}

pub fn load_diagram(path: &Path) -> Result<(LinkDiagram, String)> {
    let text = read_text(path)?;
    let d = LinkDiagram::from_json(&text).with_context(|| format!("diagram {}", path.display()))?;
    Ok((d, digest_of(&text)))
}

pub fn load_moves(path: &Path) -> Result<Vec<SMove>> {
    let text = read_text(path)?;
    moves_from_json(&text).with_context(|| format!("moves {}", path.display()))
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Writes `text` to `path` if given. Returns whether anything was written.
pub fn write_artifact(path: Option<&Path>, text: &str) -> Result<bool> {
    match path {
        Some(p) => {
            write_file(p, text)?;
            Ok(true)
        }
        None => Ok(false),
    }
}
