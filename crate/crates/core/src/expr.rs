//! Element expressions:
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := [rational '*'] atom
//! atom     := 't^' int '*' SYM | 't*' SYM | SYM | 'c' | 'd'
//! rational := int ['/' posint]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::affine::{AffineAlgebra, AffineSym};
use crate::algebra::{LieAlgebra, LieElement, TensorElement};
use crate::error::ParseError;
use crate::finite::{ChevalleyAlgebra, FiniteSym};
use crate::scalar::Scalar;

/// Resolves `t^degree * name` to a basis symbol.
pub trait SymbolTable: LieAlgebra {
    fn resolve(&self, degree: i64, name: &str) -> Option<Self::Sym>;
}

impl SymbolTable for ChevalleyAlgebra {
    fn resolve(&self, degree: i64, name: &str) -> Option<FiniteSym> {
        if degree != 0 {
            return None;
        }
        self.symbol(name)
    }
}

impl SymbolTable for AffineAlgebra {
    fn resolve(&self, degree: i64, name: &str) -> Option<AffineSym> {
        match (degree, name) {
            (0, "c") => Some(AffineSym::C),
            (0, "d") => Some(AffineSym::D),
            _ => self.finite().symbol(name).map(|i| self.loop_sym(degree, i)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '/' | '^' => {
                out.push((
                    pos,
                    match ch {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '/' => Tok::Slash,
                        _ => Tok::Caret,
                    },
                ));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|p| p.1).collect();
                out.push((pos, Tok::Int(text.parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                out.push((
                    pos,
                    Tok::Ident(chars[start..i].iter().map(|p| p.1).collect()),
                ));
            }
            other => {
                return Err(ParseError::Syntax {
                    position: pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a, A: SymbolTable> {
    alg: &'a A,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl<A: SymbolTable> Parser<'_, A> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat(&Tok::Minus);
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(if neg { -n } else { n })
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<LieElement<A::Sym>, ParseError> {
        let mut out = LieElement::zero();
        let mut sign = Scalar::one();
        if self.eat(&Tok::Minus) {
            sign = -sign;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let (c, s) = self.term()?;
            out.add_term(s, c * &sign);
            if self.eat(&Tok::Plus) {
                sign = Scalar::one();
            } else if self.eat(&Tok::Minus) {
                sign = -Scalar::one();
            } else if self.peek().is_none() {
                return Ok(out);
            } else {
                return self.err("expected `+`, `-` or end of input");
            }
        }
    }

    fn term(&mut self) -> Result<(Scalar, A::Sym), ParseError> {
        let coeff = match self.peek() {
            Some(Tok::Int(_)) => {
                let num = self.int()?;
                let den = if self.eat(&Tok::Slash) {
                    let d = self.int()?;
                    if d <= BigInt::zero() {
                        return self.err("denominator must be positive");
                    }
                    d
                } else {
                    BigInt::one()
                };
                self.expect(&Tok::Star, "`*` after the coefficient")?;
                Scalar::new(num, den)
            }
            _ => Scalar::one(),
        };
        Ok((coeff, self.atom()?))
    }

    fn atom(&mut self) -> Result<A::Sym, ParseError> {
        let start = self.pos();
        let name = match self.peek().cloned() {
            Some(Tok::Ident(n)) => n,
            _ => return self.err("expected a symbol"),
        };
        self.at += 1;
        if name == "t" {
            let degree = if self.eat(&Tok::Caret) {
                let pos = self.pos();
                let k = self.int()?;
                i64::try_from(k).map_err(|_| ParseError::Syntax {
                    position: pos,
                    message: "loop degree out of range".into(),
                })?
            } else {
                1
            };
            self.expect(&Tok::Star, "`*` after the loop variable")?;
            let pos = self.pos();
            let sym = match self.peek().cloned() {
                Some(Tok::Ident(n)) => n,
                _ => return self.err("expected a symbol after the loop variable"),
            };
            self.at += 1;
            if degree != 0 && (sym == "c" || sym == "d") {
                return Err(ParseError::Syntax {
                    position: pos,
                    message: format!("`{sym}` carries no loop degree"),
                });
            }
            return self
                .alg
                .resolve(degree, &sym)
                .ok_or(ParseError::UnknownSymbol {
                    name: if degree == 0 {
                        sym
                    } else {
                        format!("t^{degree}*{sym}")
                    },
                    position: start,
                });
        }
        self.alg.resolve(0, &name).ok_or(ParseError::UnknownSymbol {
            name,
            position: start,
        })
    }
}

/// Parses an element expression against an algebra's symbols; like terms
/// are merged.
pub fn parse_element<A: SymbolTable>(src: &str, alg: &A) -> Result<LieElement<A::Sym>, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax {
            position: 0,
            message: "empty expression".into(),
        });
    }
    Parser {
        alg,
        toks,
        at: 0,
        end: src.len(),
    }
    .expr()
}

/// Parses a single basis symbol such as `t^2*E12` or `c`.
pub fn parse_symbol<A: SymbolTable>(src: &str, alg: &A) -> Result<A::Sym, ParseError> {
    let x = parse_element(src, alg)?;
    match x.iter().next() {
        Some((s, c)) if x.len() == 1 && c.is_one() => Ok(s.clone()),
        _ => Err(ParseError::Syntax {
            position: 0,
            message: format!("`{src}` is not a single basis symbol"),
        }),
    }
}

/// Builds a tensor from `(coefficient, left symbol, right symbol)` strings.
pub fn parse_tensor_terms<A: SymbolTable>(
    terms: &[(String, String, String)],
    alg: &A,
) -> Result<TensorElement<A::Sym>, ParseError> {
    let mut out = TensorElement::zero();
    for (c, a, b) in terms {
        let c = crate::scalar::parse_scalar(c)?;
        out.add_term((parse_symbol(a, alg)?, parse_symbol(b, alg)?), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::algebra::render::format_element;
    use crate::scalar::{frac, int};

    fn a2() -> AffineAlgebra {
        AffineAlgebra::named("A2").unwrap()
    }

    fn sym(alg: &AffineAlgebra, k: i64, n: &str) -> AffineSym {
        alg.loop_sym(k, alg.finite().symbol(n).unwrap())
    }

    #[test]
    fn grammar_examples() {
        let alg = a2();
        let x = parse_element("1/2*t^2*E12 - c", &alg).unwrap();
        let mut want = LieElement::term(sym(&alg, 2, "E12"), frac(1, 2));
        want.add_term(AffineSym::C, int(-1));
        assert_eq!(x, want);
        assert_eq!(
            parse_element("E1 + E1", &alg).unwrap(),
            LieElement::term(sym(&alg, 0, "E1"), int(2))
        );
        assert_eq!(
            parse_element("t^0*H1", &alg).unwrap(),
            parse_element("H1", &alg).unwrap()
        );
        assert_eq!(
            parse_element("t*E1", &alg).unwrap(),
            parse_element("t^1*E1", &alg).unwrap()
        );
        assert_eq!(
            parse_element("-3*t^-2*F21 + d", &alg).unwrap(),
            &LieElement::term(sym(&alg, -2, "F21"), int(-3)) + &LieElement::basis(AffineSym::D)
        );
        assert!(parse_element("E1 - E1", &alg).unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        let alg = a2();
        assert_eq!(
            parse_element("E1 + X7", &alg),
            Err(ParseError::UnknownSymbol {
                name: "X7".into(),
                position: 5
            })
        );
        assert!(matches!(
            parse_element("E1 + ", &alg),
            Err(ParseError::Syntax { position: 5, .. })
        ));
        assert!(matches!(
            parse_element("2 E1", &alg),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_element("1/0*E1", &alg),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_element("E1 # E2", &alg),
            Err(ParseError::Syntax { position: 3, .. })
        ));
        let fin = ChevalleyAlgebra::named("A2").unwrap();
        assert!(matches!(
            parse_element("t*E1", &fin),
            Err(ParseError::UnknownSymbol { .. })
        ));
        assert!(matches!(
            parse_element("c", &fin),
            Err(ParseError::UnknownSymbol { .. })
        ));
    }

    #[test]
    fn single_symbols() {
        let alg = a2();
        assert_eq!(parse_symbol("t^3*H2", &alg).unwrap(), sym(&alg, 3, "H2"));
        assert!(parse_symbol("2*E1", &alg).is_err());
        assert!(parse_symbol("E1 + E2", &alg).is_err());
    }

    fn element() -> impl Strategy<Value = Vec<(i64, i64, i64, usize)>> {
        proptest::collection::vec((-9i64..=9, 1i64..=4, -3i64..=3, 0usize..10), 0..6)
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(terms in element()) {
            let alg = a2();
            let mut x = LieElement::zero();
            for (n, d, k, i) in terms {
                let s = if i < 8 { alg.loop_sym(k, FiniteSym(i)) } else if i == 8 { AffineSym::C } else { AffineSym::D };
                x.add_term(s, frac(n, d));
            }
            let printed = format_element(&alg, &x);
            let back = parse_element(&printed, &alg).unwrap_or_else(|_| LieElement::zero());
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(format_element(&alg, &back), printed);
        }
    }
}
