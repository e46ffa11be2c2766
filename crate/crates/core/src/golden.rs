//! Golden cobracket tables: a JSON list of
//! `{"element": "t^2*E1", "delta": [["coeff", "symA", "symB"], ...]}`.
//!
//! Comparison is semantic. Both sides are parsed into tensors, so term order
//! and coefficient spelling (`2/4` vs `1/2`) do not matter.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::render::{format_tensor, Style};
use crate::algebra::TensorElement;
use crate::error::Error;
use crate::expr::{parse_symbol, parse_tensor_terms, SymbolTable};
use crate::report::Report;

pub const GOLDEN_DIR_VAR: &str = "KMBRAID_GOLDEN_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub element: String,
    pub delta: Vec<(String, String, String)>,
}

impl GoldenEntry {
    pub fn new<A: SymbolTable>(alg: &A, x: &A::Sym, delta: &TensorElement<A::Sym>) -> Self {
        GoldenEntry {
            element: alg.symbol_name(x),
            delta: delta
                .iter()
                .map(|((a, b), c)| (c.to_string(), alg.symbol_name(a), alg.symbol_name(b)))
                .collect(),
        }
    }
}

/// One entry per line, wrapped in a list.
pub fn to_json(entries: &[GoldenEntry]) -> String {
    let lines: Vec<String> = entries
        .iter()
        .map(|e| format!("  {}", serde_json::to_string(e).expect("plain strings")))
        .collect();
    if lines.is_empty() {
        return "[]\n".into();
    }
    format!("[\n{}\n]\n", lines.join(",\n"))
}

pub fn from_json(text: &str) -> Result<Vec<GoldenEntry>, Error> {
    Ok(serde_json::from_str(text)?)
}

/// Resolves `file` as given, falling back to the golden directory
/// (`$KMBRAID_GOLDEN_DIR`, default `golden`).
pub fn resolve_path(file: &str) -> PathBuf {
    let p = Path::new(file);
    if p.exists() || p.is_absolute() {
        return p.to_path_buf();
    }
    let root = std::env::var_os(GOLDEN_DIR_VAR).unwrap_or_else(|| "golden".into());
    Path::new(&root).join(p)
}

pub fn load(file: &str) -> Result<Vec<GoldenEntry>, Error> {
    from_json(&std::fs::read_to_string(resolve_path(file))?)
}

/// Checks every entry against `delta`; one check per entry.
pub fn compare<A, E>(
    instance: &str,
    alg: &A,
    entries: &[GoldenEntry],
    delta: impl Fn(&A::Sym) -> Result<TensorElement<A::Sym>, E>,
) -> Result<Report, Error>
where
    A: SymbolTable,
    Error: From<E>,
{
    let mut report = Report::new(instance, "golden");
    for entry in entries {
        let x = parse_symbol(&entry.element, alg)?;
        let expected = parse_tensor_terms(&entry.delta, alg)?;
        let got = delta(&x)?;
        report.check(
            "golden",
            || entry.element.clone(),
            None,
            &expected,
            &got,
            |t| format_tensor(alg, t, Style::Ascii),
        );
    }
    Ok(report)
}
