//! Cobracket tables in JSON (the golden format), LaTeX wedge layout, and
//! plain text.

use std::str::FromStr;

use num_traits::{One, Signed};

use crate::algebra::render::{format_wedges, wedge_decomposition, Style};
use crate::algebra::{LieAlgebra, TensorElement};
use crate::expr::SymbolTable;
use crate::golden::{self, GoldenEntry};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Latex,
    Text,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(TableFormat::Json),
            "latex" => Ok(TableFormat::Latex),
            "text" => Ok(TableFormat::Text),
            other => Err(format!("unknown table format `{other}`")),
        }
    }
}

/// Which cobracket a table lists.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DeltaMap {
    #[default]
    Cobracket,
    Braided,
}

impl DeltaMap {
    /// `*braided*` file names hold the braided cobracket.
    pub fn from_file_name(name: &str) -> Self {
        let base = std::path::Path::new(name)
            .file_name()
            .map_or(name.into(), |s| s.to_string_lossy());
        if base.contains("braided") {
            DeltaMap::Braided
        } else {
            DeltaMap::Cobracket
        }
    }

    fn text_name(self, style: Style) -> &'static str {
        match (self, style) {
            (DeltaMap::Cobracket, Style::Ascii) => "delta",
            (DeltaMap::Braided, Style::Ascii) => "delta_bar",
            (DeltaMap::Cobracket, Style::Unicode) => "δ",
            (DeltaMap::Braided, Style::Unicode) => "δ̄",
        }
    }

    fn latex_name(self) -> &'static str {
        match self {
            DeltaMap::Cobracket => "\\delta",
            DeltaMap::Braided => "\\bar\\delta",
        }
    }
}

impl FromStr for DeltaMap {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cobracket" => Ok(DeltaMap::Cobracket),
            "braided" => Ok(DeltaMap::Braided),
            other => Err(format!("unknown map `{other}`")),
        }
    }
}

pub type Row<S> = (S, TensorElement<S>);

pub fn render<A: SymbolTable>(
    alg: &A,
    rows: &[Row<A::Sym>],
    map: DeltaMap,
    format: TableFormat,
    style: Style,
) -> String {
    match format {
        TableFormat::Json => {
            let entries: Vec<GoldenEntry> = rows
                .iter()
                .map(|(x, d)| GoldenEntry::new(alg, x, d))
                .collect();
            golden::to_json(&entries)
        }
        TableFormat::Text => rows
            .iter()
            .map(|(x, d)| {
                format!(
                    "{}({}) = {}\n",
                    map.text_name(style),
                    alg.symbol_name(x),
                    format_wedges(alg, d, style)
                )
            })
            .collect(),
        TableFormat::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            for (x, d) in rows {
                out.push_str(&format!(
                    "{}({}) &= {} \\\\\n",
                    map.latex_name(),
                    latex_symbol(&alg.symbol_name(x)),
                    latex_wedges(alg, d)
                ));
            }
            out.push_str("\\end{align*}\n");
            out
        }
    }
}

/// `t^2*E12` becomes `t^{2}\otimes E_{12}`; degree-zero loop symbols are
/// written `1\otimes X` once any loop symbol is in play.
pub fn latex_symbol(name: &str) -> String {
    let (degree, base) = if let Some(rest) = name.strip_prefix("t^") {
        match rest.split_once('*') {
            Some((k, b)) => (Some(k.to_string()), b),
            None => (None, name),
        }
    } else if let Some(b) = name.strip_prefix("t*") {
        (Some("1".to_string()), b)
    } else {
        (None, name)
    };
    let split = base
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(base.len());
    let (head, sub) = base.split_at(split);
    let body = if sub.is_empty() {
        head.to_string()
    } else {
        format!("{head}_{{{sub}}}")
    };
    match degree.as_deref() {
        None => body,
        Some("1") => format!("t\\otimes {body}"),
        Some(k) => format!("t^{{{k}}}\\otimes {body}"),
    }
}

fn latex_coeff(c: &Scalar) -> String {
    let a = c.abs();
    if a.is_one() {
        String::new()
    } else if a.is_integer() {
        a.to_string()
    } else {
        format!("\\tfrac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

fn latex_wedges<A: LieAlgebra>(alg: &A, t: &TensorElement<A::Sym>) -> String {
    let affine = t
        .keys()
        .any(|(a, b)| alg.symbol_name(a).starts_with('t') || alg.symbol_name(b).starts_with('t'));
    let name = |s: &A::Sym| {
        let n = alg.symbol_name(s);
        if affine && n != "c" && n != "d" && !n.starts_with('t') {
            format!("1\\otimes {}", latex_symbol(&n))
        } else {
            latex_symbol(&n)
        }
    };
    let (wedges, rest) = wedge_decomposition(t);
    let mut terms: Vec<(Scalar, String)> = wedges
        .into_iter()
        .map(|(c, a, b)| (c, format!("({})\\wedge({})", name(&a), name(&b))))
        .collect();
    terms.extend(
        rest.iter()
            .map(|((a, b), c)| (c.clone(), format!("{}\\otimes {}", name(a), name(b)))),
    );
    let mut out = String::new();
    for (i, (c, body)) in terms.iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&latex_coeff(c));
        out.push_str(body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
