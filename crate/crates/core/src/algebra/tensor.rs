//! Tensor-square and tensor-cube operations: wedge, flip, the adjoint action
//! extended to tensors, and the Schouten bracket.

use super::{LieAlgebra, LieElement, Symbol, TensorElement, TripleTensor};
use crate::scalar::{half, Scalar};

pub fn tensor<S: Symbol>(a: &LieElement<S>, b: &LieElement<S>) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_term((x.clone(), y.clone()), cx * cy);
        }
    }
    out
}

/// `a ∧ b = a⊗b − b⊗a`, expanded.
pub fn wedge<S: Symbol>(a: &LieElement<S>, b: &LieElement<S>) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            let c = cx * cy;
            out.add_term((y.clone(), x.clone()), -c.clone());
            out.add_term((x.clone(), y.clone()), c);
        }
    }
    out
}

/// The flip `τ(a⊗b) = b⊗a`.
pub fn flip<S: Symbol>(t: &TensorElement<S>) -> TensorElement<S> {
    t.map_keys(|(a, b)| (b.clone(), a.clone()))
}

/// `½(t + τt)`.
pub fn symmetric_part<S: Symbol>(t: &TensorElement<S>) -> TensorElement<S> {
    (t + &flip(t)).scaled(&half())
}

/// `½(t − τt)`.
pub fn antisymmetric_part<S: Symbol>(t: &TensorElement<S>) -> TensorElement<S> {
    (t - &flip(t)).scaled(&half())
}

/// `ad_x(a⊗b) = [x,a]⊗b + a⊗[x,b]`, extended linearly.
pub fn ad_tensor<A: LieAlgebra>(
    alg: &A,
    x: &LieElement<A::Sym>,
    t: &TensorElement<A::Sym>,
) -> TensorElement<A::Sym> {
    let mut out = TensorElement::zero();
    for ((a, b), c) in t {
        for (k, v) in &alg.bracket_with_basis(x, a) {
            out.add_term((k.clone(), b.clone()), v * c);
        }
        for (k, v) in &alg.bracket_with_basis(x, b) {
            out.add_term((a.clone(), k.clone()), v * c);
        }
    }
    out
}

/// The adjoint action on the third tensor power.
pub fn ad_triple<A: LieAlgebra>(
    alg: &A,
    x: &LieElement<A::Sym>,
    t: &TripleTensor<A::Sym>,
) -> TripleTensor<A::Sym> {
    let mut out = TripleTensor::zero();
    for ((a, b, d), c) in t {
        for (k, v) in &alg.bracket_with_basis(x, a) {
            out.add_term((k.clone(), b.clone(), d.clone()), v * c);
        }
        for (k, v) in &alg.bracket_with_basis(x, b) {
            out.add_term((a.clone(), k.clone(), d.clone()), v * c);
        }
        for (k, v) in &alg.bracket_with_basis(x, d) {
            out.add_term((a.clone(), b.clone(), k.clone()), v * c);
        }
    }
    out
}

/// `⟦r, s⟧ = [r₁₂, s₁₃] + [r₁₂, s₂₃] + [r₁₃, s₂₃]`.
pub fn schouten_bracket<A: LieAlgebra>(
    alg: &A,
    r: &TensorElement<A::Sym>,
    s: &TensorElement<A::Sym>,
) -> TripleTensor<A::Sym> {
    let mut out = TripleTensor::zero();
    for ((r1, r2), cr) in r {
        for ((s1, s2), cs) in s {
            let c = cr * cs;
            for (k, v) in &alg.bracket_basis(r1, s1) {
                out.add_term((k.clone(), r2.clone(), s2.clone()), v * &c);
            }
            for (k, v) in &alg.bracket_basis(r2, s1) {
                out.add_term((r1.clone(), k.clone(), s2.clone()), v * &c);
            }
            for (k, v) in &alg.bracket_basis(r2, s2) {
                out.add_term((r1.clone(), s1.clone(), k.clone()), v * &c);
            }
        }
    }
    out
}

/// The classical Yang–Baxter defect `⟦r, r⟧`.
pub fn cybe_defect<A: LieAlgebra>(alg: &A, r: &TensorElement<A::Sym>) -> TripleTensor<A::Sym> {
    schouten_bracket(alg, r, r)
}

/// `[r₁₃, r₁₂] = [r¹, r′¹] ⊗ r′² ⊗ r²`.
pub fn bracket_13_12<A: LieAlgebra>(alg: &A, r: &TensorElement<A::Sym>) -> TripleTensor<A::Sym> {
    let mut out = TripleTensor::zero();
    for ((a1, a2), ca) in r {
        for ((b1, b2), cb) in r {
            let c = ca * cb;
            for (k, v) in &alg.bracket_basis(a1, b1) {
                out.add_term((k.clone(), b2.clone(), a2.clone()), v * &c);
            }
        }
    }
    out
}

/// Cyclic rotation `a⊗b⊗c ↦ c⊗a⊗b`.
pub fn cyclic<S: Symbol>(t: &TripleTensor<S>) -> TripleTensor<S> {
    t.map_keys(|(a, b, c)| (c.clone(), a.clone(), b.clone()))
}

/// `(f ⊗ id)(t)` for a map `f` into the tensor square.
pub fn apply_left<S: Symbol>(
    t: &TensorElement<S>,
    mut f: impl FnMut(&S) -> TensorElement<S>,
) -> TripleTensor<S> {
    let mut out = TripleTensor::zero();
    for ((a, b), c) in t {
        for ((x, y), v) in &f(a) {
            out.add_term((x.clone(), y.clone(), b.clone()), v * c);
        }
    }
    out
}

/// `(id ⊗ f)(t)` for a map `f` into the tensor square.
pub fn apply_right<S: Symbol>(
    t: &TensorElement<S>,
    mut f: impl FnMut(&S) -> TensorElement<S>,
) -> TripleTensor<S> {
    let mut out = TripleTensor::zero();
    for ((a, b), c) in t {
        for ((x, y), v) in &f(b) {
            out.add_term((a.clone(), x.clone(), y.clone()), v * c);
        }
    }
    out
}

/// `(f ⊗ g)(t)` for linear maps on the factors.
pub fn map_factors<S: Symbol>(
    t: &TensorElement<S>,
    mut f: impl FnMut(&S) -> LieElement<S>,
    mut g: impl FnMut(&S) -> LieElement<S>,
) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for ((a, b), c) in t {
        let fa = f(a);
        if fa.is_zero() {
            continue;
        }
        let gb = g(b);
        for (x, cx) in &fa {
            for (y, cy) in &gb {
                out.add_term((x.clone(), y.clone()), cx * cy * c);
            }
        }
    }
    out
}

/// `Σ λ_k (a_k ⊗ b_k)` from scalar-weighted factor pairs.
pub fn sum_tensors<S: Symbol>(
    parts: impl IntoIterator<Item = (Scalar, LieElement<S>, LieElement<S>)>,
) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for (c, a, b) in parts {
        out.add_scaled(&tensor(&a, &b), &c);
    }
    out
}
