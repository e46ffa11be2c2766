//! Canonical text rendering of elements and tensors.
//!
//! Coefficients print as `p` or `p/q`, terms follow the ambient symbol
//! order, tensor factors are joined by `(x)` and wedges by `/\`. The unicode
//! style swaps in `⊗`, `∧` and `−` for display only.

use num_traits::{One, Signed};

use super::{LieAlgebra, LieElement, Symbol, TensorElement, TripleTensor};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Style {
    #[default]
    Ascii,
    Unicode,
}

impl Style {
    fn tensor_sep(self) -> &'static str {
        match self {
            Style::Ascii => "(x)",
            Style::Unicode => "⊗",
        }
    }

    fn wedge_sep(self) -> &'static str {
        match self {
            Style::Ascii => "/\\",
            Style::Unicode => "∧",
        }
    }

    fn minus(self) -> &'static str {
        match self {
            Style::Ascii => "-",
            Style::Unicode => "−",
        }
    }
}

/// Joins `(coefficient, body)` pairs into `a + 2*b - 1/2*c` form.
pub fn join_terms(terms: impl IntoIterator<Item = (Scalar, String)>, style: Style) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push_str(style.minus());
            }
        } else {
            out.push(' ');
            out.push_str(if neg { style.minus() } else { "+" });
            out.push(' ');
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_element<A: LieAlgebra>(alg: &A, x: &LieElement<A::Sym>) -> String {
    join_terms(
        x.iter().map(|(s, c)| (c.clone(), alg.symbol_name(s))),
        Style::Ascii,
    )
}

pub fn format_tensor<A: LieAlgebra>(alg: &A, t: &TensorElement<A::Sym>, style: Style) -> String {
    join_terms(
        t.iter().map(|((a, b), c)| {
            (
                c.clone(),
                format!(
                    "{}{}{}",
                    alg.symbol_name(a),
                    style.tensor_sep(),
                    alg.symbol_name(b)
                ),
            )
        }),
        style,
    )
}

pub fn format_triple<A: LieAlgebra>(alg: &A, t: &TripleTensor<A::Sym>, style: Style) -> String {
    let sep = style.tensor_sep();
    join_terms(
        t.iter().map(|((a, b, d), c)| {
            (
                c.clone(),
                format!(
                    "{}{sep}{}{sep}{}",
                    alg.symbol_name(a),
                    alg.symbol_name(b),
                    alg.symbol_name(d)
                ),
            )
        }),
        style,
    )
}

/// Splits a tensor into `Σ k (a)∧(b)` over pairs `a < b` plus a residual
/// non-antisymmetric part.
pub fn wedge_decomposition<S: Symbol>(
    t: &TensorElement<S>,
) -> (Vec<(Scalar, S, S)>, TensorElement<S>) {
    let mut wedges = Vec::new();
    let mut rest = TensorElement::zero();
    for ((a, b), c) in t {
        if a < b {
            let back = t.coeff(&(b.clone(), a.clone()));
            if back == -c.clone() {
                wedges.push((c.clone(), a.clone(), b.clone()));
            } else {
                rest.add_term((a.clone(), b.clone()), c.clone());
                rest.add_term((b.clone(), a.clone()), back);
            }
        } else if a == b {
            rest.add_term((a.clone(), b.clone()), c.clone());
        }
    }
    (wedges, rest)
}

/// Wedge-form rendering, e.g. `(t*E1)/\(t*H1) - (t*E12)/\(t*F2)`.
pub fn format_wedges<A: LieAlgebra>(alg: &A, t: &TensorElement<A::Sym>, style: Style) -> String {
    let (wedges, rest) = wedge_decomposition(t);
    let mut terms: Vec<(Scalar, String)> = wedges
        .into_iter()
        .map(|(c, a, b)| {
            (
                c,
                format!(
                    "({}){}({})",
                    alg.symbol_name(&a),
                    style.wedge_sep(),
                    alg.symbol_name(&b)
                ),
            )
        })
        .collect();
    for ((a, b), c) in &rest {
        terms.push((
            c.clone(),
            format!(
                "{}{}{}",
                alg.symbol_name(a),
                style.tensor_sep(),
                alg.symbol_name(b)
            ),
        ));
    }
    join_terms(terms, style)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn joins_signs() {
        let s = join_terms(
            vec![
                (int(-1), "a".to_string()),
                (frac(1, 2), "b".into()),
                (int(-3), "c".into()),
            ],
            Style::Ascii,
        );
        assert_eq!(s, "-a + 1/2*b - 3*c");
        assert_eq!(join_terms(Vec::new(), Style::Ascii), "0");
        let u = join_terms(
            vec![(int(1), "a".into()), (int(-1), "b".into())],
            Style::Unicode,
        );
        assert_eq!(u, "a − b");
    }
}
