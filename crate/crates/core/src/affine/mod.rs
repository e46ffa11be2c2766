//! The untwisted affine algebra `(k[t,t⁻¹] ⊗ g) ⊕ kc ⊕ kd` over a finite
//! Chevalley algebra `g`.

pub mod laurent;

use num_traits::Zero;

use crate::algebra::{InvariantForm, LieAlgebra, LieElement};
use crate::cartan::{affinize, CartanMatrix};
use crate::error::CartanError;
use crate::finite::{ChevalleyAlgebra, FiniteSym};
use crate::scalar::{self, Scalar};

/// `tⁱ ⊗ X`, then `c`, then `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AffineSym {
    Loop { degree: i64, index: FiniteSym },
    C,
    D,
}

impl AffineSym {
    pub fn degree(&self) -> i64 {
        match self {
            AffineSym::Loop { degree, .. } => *degree,
            AffineSym::C | AffineSym::D => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(i64),
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl DegreeWindow {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty window");
        DegreeWindow { lo, hi }
    }

    pub fn contains(&self, degree: i64) -> bool {
        (self.lo..=self.hi).contains(&degree)
    }
}

/// One Chevalley triple `(e_i, f_i, h_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple<S: Ord> {
    pub e: LieElement<S>,
    pub f: LieElement<S>,
    pub h: LieElement<S>,
}

#[derive(Debug)]
pub struct AffineAlgebra {
    finite: ChevalleyAlgebra,
    affine_cartan: CartanMatrix,
}

impl AffineAlgebra {
    pub fn new(cartan: &CartanMatrix) -> Result<Self, CartanError> {
        let finite = ChevalleyAlgebra::new(cartan)?;
        let affine_cartan = affinize(cartan)?;
        Ok(AffineAlgebra {
            finite,
            affine_cartan,
        })
    }

    pub fn named(name: &str) -> Result<Self, CartanError> {
        Self::new(&CartanMatrix::named(name)?)
    }

    pub fn finite(&self) -> &ChevalleyAlgebra {
        &self.finite
    }

    /// `C̃`, indexed `0..=l`.
    pub fn affine_cartan(&self) -> &CartanMatrix {
        &self.affine_cartan
    }

    pub fn loop_sym(&self, degree: i64, index: FiniteSym) -> AffineSym {
        AffineSym::Loop { degree, index }
    }

    /// `tⁱ ⊗ x` for a finite element `x`.
    pub fn embed(&self, degree: i64, x: &LieElement<FiniteSym>) -> LieElement<AffineSym> {
        x.map_keys(|&index| AffineSym::Loop { degree, index })
    }

    /// Triples `0..=l`: `e₀ = t⊗E₀`, `f₀ = t⁻¹⊗F₀`, `h₀ = −H_θ + c`.
    pub fn serre_generators(&self) -> Vec<Triple<AffineSym>> {
        let theta = self.finite.theta_vectors();
        let mut h0 = -self.embed(0, &theta.h_theta);
        h0.add_term(AffineSym::C, scalar::one());
        let mut out = vec![Triple {
            e: self.embed(1, &theta.e0),
            f: self.embed(-1, &theta.f0),
            h: h0,
        }];
        for i in 0..self.finite.rank() {
            let s = |x: FiniteSym| {
                LieElement::basis(AffineSym::Loop {
                    degree: 0,
                    index: x,
                })
            };
            out.push(Triple {
                e: s(self.finite.e(i)),
                f: s(self.finite.f(i)),
                h: s(self.finite.h(i)),
            });
        }
        out
    }

    pub fn degree(&self, x: &LieElement<AffineSym>) -> Homogeneity {
        let mut degs = x.keys().map(AffineSym::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// All `(i, X)` with `i` in the window, then `c` and `d`.
    pub fn basis_window(&self, w: DegreeWindow) -> Vec<AffineSym> {
        let mut out: Vec<AffineSym> = (w.lo..=w.hi)
            .flat_map(|degree| {
                self.finite
                    .basis()
                    .into_iter()
                    .map(move |index| AffineSym::Loop { degree, index })
            })
            .collect();
        out.push(AffineSym::C);
        out.push(AffineSym::D);
        out
    }

    /// Coefficients of the affine root of a basis vector over `α_0..α_l`,
    /// using `δ = α_0 + θ`.
    pub fn root_coordinates(&self, s: &AffineSym) -> Vec<i64> {
        let l = self.finite.rank();
        match s {
            AffineSym::Loop { degree, index } => {
                let a = self.finite.highest_root().a;
                let w = self.finite.weight(*index);
                let mut out = vec![*degree];
                out.extend((0..l).map(|i| degree * a[i] + w[i]));
                out
            }
            _ => vec![0; l + 1],
        }
    }

    /// Finite symbol name with the loop prefix: `E1`, `t*E1`, `t^-2*E1`.
    pub fn format_loop(&self, degree: i64, name: &str) -> String {
        match degree {
            0 => name.to_string(),
            1 => format!("t*{name}"),
            k => format!("t^{k}*{name}"),
        }
    }
}

impl LieAlgebra for AffineAlgebra {
    type Sym = AffineSym;

    fn add_bracket_basis(
        &self,
        a: &AffineSym,
        b: &AffineSym,
        coeff: &Scalar,
        out: &mut LieElement<AffineSym>,
    ) {
        use AffineSym::*;
        match (a, b) {
            (C, _) | (_, C) | (D, D) => {}
            (D, Loop { degree, .. }) => {
                if *degree != 0 {
                    out.add_term(*b, scalar::int(*degree) * coeff);
                }
            }
            (Loop { degree, .. }, D) => {
                if *degree != 0 {
                    out.add_term(*a, scalar::int(-degree) * coeff);
                }
            }
            (
                Loop {
                    degree: i,
                    index: x,
                },
                Loop {
                    degree: j,
                    index: y,
                },
            ) => {
                let mut inner = LieElement::zero();
                self.finite.add_bracket_basis(x, y, coeff, &mut inner);
                for (k, v) in inner.into_terms() {
                    out.add_term(
                        Loop {
                            degree: i + j,
                            index: k,
                        },
                        v,
                    );
                }
                if i + j == 0 && *i != 0 {
                    // Res(d(tⁱ)/dt · tʲ) = i
                    let f = self.finite.form_basis(x, y);
                    if !f.is_zero() {
                        out.add_term(C, f * scalar::int(*i) * coeff);
                    }
                }
            }
        }
    }

    fn symbol_name(&self, s: &AffineSym) -> String {
        match s {
            AffineSym::Loop { degree, index } => {
                self.format_loop(*degree, self.finite.name(*index))
            }
            AffineSym::C => "c".into(),
            AffineSym::D => "d".into(),
        }
    }
}

impl InvariantForm for AffineAlgebra {
    fn form_basis(&self, a: &AffineSym, b: &AffineSym) -> Scalar {
        use AffineSym::*;
        match (a, b) {
            (C, D) | (D, C) => scalar::one(),
            (
                Loop {
                    degree: i,
                    index: x,
                },
                Loop {
                    degree: j,
                    index: y,
                },
            ) if i + j == 0 => self.finite.form_basis(x, y),
            _ => Scalar::zero(),
        }
    }
}
