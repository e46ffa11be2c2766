//! Sparse elements, tensors and the Lie algebra interface every construction
//! in the crate computes through.

mod combination;
pub mod render;
pub mod tensor;

use std::fmt::Debug;
use std::hash::Hash;

pub use combination::Combination;
pub use tensor::{
    ad_tensor, ad_triple, antisymmetric_part, cybe_defect, cyclic, flip, schouten_bracket,
    symmetric_part, tensor, wedge,
};

use crate::scalar::Scalar;

/// Basis symbols: totally ordered, hashable, cheap to clone.
pub trait Symbol: Clone + Ord + Hash + Debug + Send + Sync {}

impl<T: Clone + Ord + Hash + Debug + Send + Sync> Symbol for T {}

pub type LieElement<S> = Combination<S>;
pub type TensorElement<S> = Combination<(S, S)>;
pub type TripleTensor<S> = Combination<(S, S, S)>;

/// A Lie algebra with a distinguished (possibly infinite) ordered basis.
pub trait LieAlgebra: Sync {
    type Sym: Symbol;

    /// `out += coeff * [a, b]`.
    fn add_bracket_basis(
        &self,
        a: &Self::Sym,
        b: &Self::Sym,
        coeff: &Scalar,
        out: &mut LieElement<Self::Sym>,
    );

    /// Printable name of a basis symbol in the element grammar.
    fn symbol_name(&self, s: &Self::Sym) -> String;

    fn bracket_basis(&self, a: &Self::Sym, b: &Self::Sym) -> LieElement<Self::Sym> {
        let mut out = LieElement::zero();
        self.add_bracket_basis(a, b, &crate::scalar::one(), &mut out);
        out
    }

    fn bracket(
        &self,
        x: &LieElement<Self::Sym>,
        y: &LieElement<Self::Sym>,
    ) -> LieElement<Self::Sym> {
        let mut out = LieElement::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                self.add_bracket_basis(a, b, &(ca * cb), &mut out);
            }
        }
        out
    }

    /// `[x, b]` for a basis symbol `b`.
    fn bracket_with_basis(
        &self,
        x: &LieElement<Self::Sym>,
        b: &Self::Sym,
    ) -> LieElement<Self::Sym> {
        let mut out = LieElement::zero();
        for (a, ca) in x {
            self.add_bracket_basis(a, b, ca, &mut out);
        }
        out
    }
}

impl<A: LieAlgebra> LieAlgebra for &A {
    type Sym = A::Sym;

    fn add_bracket_basis(
        &self,
        a: &Self::Sym,
        b: &Self::Sym,
        coeff: &Scalar,
        out: &mut LieElement<Self::Sym>,
    ) {
        (**self).add_bracket_basis(a, b, coeff, out)
    }

    fn symbol_name(&self, s: &Self::Sym) -> String {
        (**self).symbol_name(s)
    }
}

/// An invariant symmetric bilinear form given on basis pairs.
pub trait InvariantForm: LieAlgebra {
    fn form_basis(&self, a: &Self::Sym, b: &Self::Sym) -> Scalar;

    fn form(&self, x: &LieElement<Self::Sym>, y: &LieElement<Self::Sym>) -> Scalar {
        let mut s = crate::scalar::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                let f = self.form_basis(a, b);
                if !num_traits::Zero::is_zero(&f) {
                    s += ca * cb * f;
                }
            }
        }
        s
    }
}

/// Jacobi defect `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobi_defect<A: LieAlgebra>(
    alg: &A,
    x: &LieElement<A::Sym>,
    y: &LieElement<A::Sym>,
    z: &LieElement<A::Sym>,
) -> LieElement<A::Sym> {
    let mut out = alg.bracket(&alg.bracket(x, y), z);
    out += &alg.bracket(&alg.bracket(y, z), x);
    out += &alg.bracket(&alg.bracket(z, x), y);
    out
}

/// `(ad x)^n y`.
pub fn ad_power<A: LieAlgebra>(
    alg: &A,
    x: &LieElement<A::Sym>,
    n: usize,
    y: &LieElement<A::Sym>,
) -> LieElement<A::Sym> {
    let mut cur = y.clone();
    for _ in 0..n {
        if cur.is_zero() {
            break;
        }
        cur = alg.bracket(x, &cur);
    }
    cur
}
