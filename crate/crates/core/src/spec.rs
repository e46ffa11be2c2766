//! Algebra specifications as accepted on the command line: a named type
//! (`A2`), its affinization (`affine:A2`), or a path to a Cartan JSON file,
//! optionally behind the same `affine:` prefix.

use std::fmt;
use std::path::Path;

use crate::cartan::{CartanJson, CartanMatrix};
use crate::error::{CartanError, Error};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Finite(CartanMatrix),
    Affine(CartanMatrix),
}

impl AlgebraSpec {
    pub fn parse(src: &str) -> Result<Self, Error> {
        let src = src.trim();
        match src.strip_prefix("affine:") {
            Some(rest) => Ok(AlgebraSpec::Affine(matrix(rest)?)),
            None => Ok(AlgebraSpec::Finite(matrix(src)?)),
        }
    }

    /// The finite Cartan matrix underlying the spec.
    pub fn cartan(&self) -> &CartanMatrix {
        match self {
            AlgebraSpec::Finite(c) | AlgebraSpec::Affine(c) => c,
        }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, AlgebraSpec::Affine(_))
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Finite(c) => write!(f, "{}", type_name(c)),
            AlgebraSpec::Affine(c) => write!(f, "affine:{}", type_name(c)),
        }
    }
}

fn matrix(src: &str) -> Result<CartanMatrix, Error> {
    if src.ends_with(".json") || Path::new(src).is_file() {
        let text = std::fs::read_to_string(src)?;
        let json: CartanJson = serde_json::from_str(&text)?;
        let m = CartanMatrix::from_json(&json)?;
        if !m.is_finite_type() {
            return Err(CartanError::NotFiniteType.into());
        }
        return Ok(m);
    }
    Ok(CartanMatrix::named(src)?)
}

/// `A2`, `B2`, ... when the matrix is one of the named ones, else `rank-n`.
pub fn type_name(c: &CartanMatrix) -> String {
    let n = c.n();
    for series in ["A", "B", "G"] {
        let name = format!("{series}{n}");
        if let Ok(m) = CartanMatrix::named(&name) {
            if m.entries() == c.entries() {
                return name;
            }
        }
    }
    format!("rank-{n}")
}
