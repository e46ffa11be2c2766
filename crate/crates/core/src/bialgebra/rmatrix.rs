use num_traits::Zero;

use crate::algebra::render::{format_tensor, format_triple, Style};
use crate::algebra::tensor::{apply_right, bracket_13_12};
use crate::algebra::{
    ad_tensor, cybe_defect, symmetric_part, LieAlgebra, LieElement, TensorElement,
};
use crate::error::BialgebraError;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::{self, Scalar};

use super::{Bialgebra, KacMoody};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasitriangularStructure<S: Ord> {
    pub r: TensorElement<S>,
    pub r_plus: TensorElement<S>,
    /// Scale of the root-vector part.
    pub a: Scalar,
    /// Scale of the Cartan part.
    pub b: Scalar,
}

/// `a·Σ e_α⊗f_α/⟨e_α,f_α⟩ + b·Ω` over the given symbols, where `e_α` runs
/// over the positive root vectors among them and `Ω` is the dual-basis
/// element of the Cartan symbols among them.
pub fn standard_r<A: KacMoody>(
    alg: &A,
    symbols: &[A::Sym],
    a: &Scalar,
    b: &Scalar,
) -> TensorElement<A::Sym> {
    let mut r = TensorElement::zero();
    for s in symbols {
        let w = alg.root_coordinates(s);
        if alg.is_cartan(s) || w.iter().any(|&c| c < 0) || w.iter().all(|&c| c == 0) {
            continue;
        }
        let neg: Vec<i64> = w.iter().map(|c| -c).collect();
        let partner = symbols
            .iter()
            .find(|p| alg.root_coordinates(p) == neg)
            .expect("negative partner present");
        let pairing = alg.form_basis(s, partner);
        r.add_term((s.clone(), partner.clone()), a / pairing);
    }
    r.add_scaled(&cartan_casimir(alg, symbols), b);
    r
}

/// `Σ G⁻¹_{ij} h_i ⊗ h_j` over the Cartan symbols in `symbols`.
pub fn cartan_casimir<A: KacMoody>(alg: &A, symbols: &[A::Sym]) -> TensorElement<A::Sym> {
    let hs: Vec<&A::Sym> = symbols.iter().filter(|s| alg.is_cartan(s)).collect();
    let gram = Matrix::from_rows(
        hs.iter()
            .map(|x| hs.iter().map(|y| alg.form_basis(x, y)).collect())
            .collect(),
    );
    let inv = gram.inverse().expect("form is nondegenerate on the Cartan");
    let mut out = TensorElement::zero();
    for (i, x) in hs.iter().enumerate() {
        for (j, y) in hs.iter().enumerate() {
            out.add_term(((*x).clone(), (*y).clone()), inv[(i, j)].clone());
        }
    }
    out
}

/// `∂r(x) = ad_x(r)`.
pub fn coboundary<A: LieAlgebra>(
    alg: &A,
    r: &TensorElement<A::Sym>,
    x: &LieElement<A::Sym>,
) -> TensorElement<A::Sym> {
    ad_tensor(alg, x, r)
}

/// Solves for the scales `a`, `b` of [`standard_r`] so that `∂r = δ` on
/// all generators of a finite-dimensional algebra.
pub fn canonical_r<A: KacMoody>(
    bialg: &Bialgebra<A>,
) -> Result<QuasitriangularStructure<A::Sym>, BialgebraError> {
    let alg = bialg.algebra();
    if !alg.is_finite_dimensional() {
        return Err(BialgebraError::NormalizationFailure(
            "canonical r needs a finite-dimensional algebra".into(),
        ));
    }
    let basis = alg.basis_window(0, 0);
    let one = scalar::one();
    let zero = Scalar::zero();
    let r1 = standard_r(alg, &basis, &one, &zero);
    let r2 = standard_r(alg, &basis, &zero, &one);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for (g, dg) in bialg.generator_cobracket() {
        let x = LieElement::basis(g.clone());
        let p1 = coboundary(alg, &r1, &x);
        let p2 = coboundary(alg, &r2, &x);
        let mut keys: Vec<_> = p1
            .keys()
            .chain(p2.keys())
            .chain(dg.keys())
            .cloned()
            .collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            rows.push(vec![p1.coeff(&k), p2.coeff(&k)]);
            rhs.push(dg.coeff(&k));
        }
    }
    let m = Matrix::from_rows(rows);
    if m.rank() != 2 {
        return Err(BialgebraError::NormalizationFailure(
            "the generator equations do not determine both scales".into(),
        ));
    }
    let sol = m.solve(&rhs).ok_or_else(|| {
        BialgebraError::NormalizationFailure("no scaling reproduces δ on generators".into())
    })?;
    let (a, b) = (sol[0].clone(), sol[1].clone());
    let r = standard_r(alg, &basis, &a, &b);
    Ok(QuasitriangularStructure {
        r_plus: symmetric_part(&r),
        r,
        a,
        b,
    })
}

/// CYBE, ad-invariance of `r₊`, `(id⊗δ)r = [r₁₃, r₁₂]` and `∂r = δ` on
/// every basis vector.
pub fn verify_quasitriangular<L: LieAlgebra>(
    instance: &str,
    alg: &L,
    basis: &[L::Sym],
    r: &TensorElement<L::Sym>,
    delta: &dyn Fn(&L::Sym) -> TensorElement<L::Sym>,
) -> Report {
    let mut report = Report::new(instance, "quasitriangular");
    let tensor = |t: &TensorElement<L::Sym>| format_tensor(alg, t, Style::Ascii);
    let triple = |t: &crate::algebra::TripleTensor<L::Sym>| format_triple(alg, t, Style::Ascii);
    report.check(
        "cybe",
        || tensor(r),
        None,
        &crate::algebra::TripleTensor::zero(),
        &cybe_defect(alg, r),
        triple,
    );
    let r_plus = symmetric_part(r);
    for x in basis {
        let xe = LieElement::basis(x.clone());
        report.check(
            "ad_invariance",
            || alg.symbol_name(x),
            None,
            &TensorElement::zero(),
            &ad_tensor(alg, &xe, &r_plus),
            tensor,
        );
        report.check(
            "coboundary",
            || alg.symbol_name(x),
            None,
            &delta(x),
            &coboundary(alg, r, &xe),
            tensor,
        );
    }
    report.check(
        "id_tensor_delta",
        || tensor(r),
        None,
        &bracket_13_12(alg, r),
        &apply_right(r, |s| delta(s)),
        triple,
    );
    report
}
