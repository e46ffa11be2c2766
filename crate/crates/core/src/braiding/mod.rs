//! Gradings by deleted nodes, the degree-0 projection `π` and the
//! braided-Lie bialgebra living on `ker π`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Zero;
use rayon::prelude::*;

use crate::affine::{AffineAlgebra, AffineSym};
use crate::algebra::render::{format_element, format_tensor, format_triple, Style};
use crate::algebra::{ad_tensor, cyclic, flip, LieElement, TensorElement, TripleTensor};
use crate::bialgebra::{Bialgebra, KacMoody};
use crate::cartan::{
    affinization_subdatum, grading_from_subdatum, node_deletion, CartanMatrix, GeneratorGrading,
};
use crate::error::{BialgebraError, Error};
use crate::finite::ChevalleyAlgebra;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::{self, Scalar};

#[cfg(test)]
mod tests;

/// `deg(s) = Σ_k deg e_k · (root coordinate k of s)`.
pub fn symbol_degree<A: KacMoody>(alg: &A, grading: &GeneratorGrading, s: &A::Sym) -> i64 {
    alg.root_coordinates(s)
        .iter()
        .zip(&grading.deg_e)
        .map(|(c, d)| c * d)
        .sum()
}

/// The split projection onto the degree-0 part.
pub struct GradedProjection<'a, A: KacMoody> {
    alg: &'a A,
    grading: &'a GeneratorGrading,
}

impl<'a, A: KacMoody> GradedProjection<'a, A> {
    pub fn new(alg: &'a A, grading: &'a GeneratorGrading) -> Self {
        GradedProjection { alg, grading }
    }

    pub fn degree(&self, s: &A::Sym) -> i64 {
        symbol_degree(self.alg, self.grading, s)
    }

    /// `π`: keeps the degree-0 components.
    pub fn project(&self, x: &LieElement<A::Sym>) -> LieElement<A::Sym> {
        x.filter(|s| self.degree(s) == 0)
    }

    /// `ι`: the degree-0 part sits inside the ambient algebra unchanged.
    pub fn include(&self, x: &LieElement<A::Sym>) -> LieElement<A::Sym> {
        debug_assert!(x.keys().all(|s| self.degree(s) == 0));
        x.clone()
    }

    /// Basis of the degree-0 subalgebra.
    pub fn degree_zero_basis(&self) -> Vec<A::Sym> {
        self.alg
            .basis_window(0, 0)
            .into_iter()
            .filter(|s| self.degree(s) == 0)
            .collect()
    }
}

/// Which half of the grading carries the braided structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarrierSide {
    /// Negative degrees, the kernel inside the negative Borel.
    Negative,
    /// Positive degrees, the dual presentation.
    Positive,
}

impl CarrierSide {
    pub fn contains(self, degree: i64) -> bool {
        match self {
            CarrierSide::Negative => degree < 0,
            CarrierSide::Positive => degree > 0,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            CarrierSide::Negative => CarrierSide::Positive,
            CarrierSide::Positive => CarrierSide::Negative,
        }
    }

    fn psi_sign(self) -> Scalar {
        match self {
            CarrierSide::Negative => scalar::one(),
            CarrierSide::Positive => -scalar::one(),
        }
    }
}

pub struct BraidedLieBialgebra<A: KacMoody> {
    bialg: Bialgebra<A>,
    grading: GeneratorGrading,
    side: CarrierSide,
    g0: Vec<A::Sym>,
    casimir: TensorElement<A::Sym>,
    psi_scale: Scalar,
    memo: RwLock<HashMap<A::Sym, TensorElement<A::Sym>>>,
}

impl<A: KacMoody> BraidedLieBialgebra<A> {
    pub fn new(
        bialg: Bialgebra<A>,
        grading: GeneratorGrading,
        side: CarrierSide,
    ) -> Result<Self, BialgebraError> {
        let g0 = GradedProjection::new(bialg.algebra(), &grading).degree_zero_basis();
        let casimir = split_casimir(bialg.algebra(), &g0)?;
        Ok(BraidedLieBialgebra {
            bialg,
            grading,
            side,
            g0,
            casimir,
            psi_scale: scalar::one(),
            memo: RwLock::new(HashMap::new()),
        })
    }

    /// Rescales `ψ` (fault injection).
    pub fn with_psi_scale(mut self, k: Scalar) -> Self {
        self.psi_scale = k;
        self
    }

    pub fn with_side(mut self, side: CarrierSide) -> Self {
        self.side = side;
        self
    }

    pub fn bialgebra(&self) -> &Bialgebra<A> {
        &self.bialg
    }

    pub fn algebra(&self) -> &A {
        self.bialg.algebra()
    }

    pub fn grading(&self) -> &GeneratorGrading {
        &self.grading
    }

    pub fn side(&self) -> CarrierSide {
        self.side
    }

    pub fn projection(&self) -> GradedProjection<'_, A> {
        GradedProjection::new(self.algebra(), &self.grading)
    }

    pub fn degree(&self, s: &A::Sym) -> i64 {
        symbol_degree(self.algebra(), &self.grading, s)
    }

    pub fn degree_zero_basis(&self) -> &[A::Sym] {
        &self.g0
    }

    /// `2r₊` of the degree-0 algebra, the split Casimir of the form.
    pub fn casimir(&self) -> &TensorElement<A::Sym> {
        &self.casimir
    }

    pub fn in_carrier(&self, s: &A::Sym) -> bool {
        self.side.contains(self.degree(s))
    }

    /// Carrier symbols of degree in `[lo, hi]`. The enumeration goes through
    /// the algebra's own window, so the grading should refine it.
    pub fn carrier_window(&self, lo: i64, hi: i64) -> Vec<A::Sym> {
        self.algebra()
            .basis_window(lo, hi)
            .into_iter()
            .filter(|s| {
                let d = self.degree(s);
                lo <= d && d <= hi && self.side.contains(d)
            })
            .collect()
    }

    /// `e_i`, `f_i` for the undeleted nodes together with the Cartan.
    pub fn degree_zero_generators(&self) -> Vec<LieElement<A::Sym>> {
        let alg = self.algebra();
        let mut out = Vec::new();
        for (t, d) in alg.triples().into_iter().zip(&self.grading.deg_e) {
            if *d == 0 {
                out.push(t.e);
                out.push(t.f);
            }
        }
        out.extend(alg.cartan_symbols().into_iter().map(LieElement::basis));
        out
    }

    /// `δ̄`: the ambient cobracket with every term touching degree 0 removed.
    pub fn braided_cobracket_symbol(
        &self,
        s: &A::Sym,
    ) -> Result<TensorElement<A::Sym>, BialgebraError> {
        if let Some(v) = self.memo.read().unwrap().get(s) {
            return Ok(v.clone());
        }
        let value = self
            .bialg
            .cobracket_symbol(s)?
            .filter(|(a, b)| self.degree(a) != 0 && self.degree(b) != 0);
        self.memo.write().unwrap().insert(s.clone(), value.clone());
        Ok(value)
    }

    pub fn braided_cobracket(
        &self,
        x: &LieElement<A::Sym>,
    ) -> Result<TensorElement<A::Sym>, BialgebraError> {
        let mut out = TensorElement::zero();
        for (s, c) in x {
            out.add_scaled(&self.braided_cobracket_symbol(s)?, c);
        }
        Ok(out)
    }

    /// `β = (π⊗id)∘δ`.
    pub fn coaction(
        &self,
        x: &LieElement<A::Sym>,
    ) -> Result<TensorElement<A::Sym>, BialgebraError> {
        Ok(self
            .bialg
            .cobracket(x)?
            .filter(|(a, _)| self.degree(a) == 0))
    }

    /// `ψ(x⊗y) = ±2r₊ ▷ (x⊗y − y⊗x)`, the sign fixed by the carrier side.
    pub fn infinitesimal_braiding(
        &self,
        x: &LieElement<A::Sym>,
        y: &LieElement<A::Sym>,
    ) -> TensorElement<A::Sym> {
        let alg = self.algebra();
        let mut out = TensorElement::zero();
        for ((p, q), c) in &self.casimir {
            let (px, py) = (alg.bracket_with_basis(x, p), alg.bracket_with_basis(y, p));
            let (qx, qy) = (alg.bracket_with_basis(x, q), alg.bracket_with_basis(y, q));
            // [x,p]⊗[y,q] = [p,x]⊗[q,y]
            out.add_scaled(&crate::algebra::tensor(&px, &qy), c);
            out.add_scaled(&crate::algebra::tensor(&py, &qx), &-c.clone());
        }
        out.scaled(&(self.side.psi_sign() * &self.psi_scale))
    }

    /// The braided-Lie bialgebra axioms on carrier symbols of degree in
    /// `[lo, hi]`: `dδ̄ = ψ` on every pair, anticocommutativity and co-Jacobi
    /// of `δ̄`, closure of the carrier, and covariance of bracket, `δ̄` and
    /// `ψ` under the degree-0 generators.
    pub fn verify(&self, lo: i64, hi: i64) -> Result<Report, BialgebraError> {
        let alg = self.algebra();
        self.bialg.prefill((2 * lo).min(0), (2 * hi).max(0))?;
        let basis = self.carrier_window(lo, hi);
        let gens = self.degree_zero_generators();
        let el = |x: &LieElement<A::Sym>| format_element(alg, x);
        let tensor = |t: &TensorElement<A::Sym>| format_tensor(alg, t, Style::Ascii);
        let triple = |t: &TripleTensor<A::Sym>| format_triple(alg, t, Style::Ascii);
        let off_carrier = |t: &TensorElement<A::Sym>| {
            t.filter(|(a, b)| !(self.in_carrier(a) && self.in_carrier(b)))
        };

        let reports: Result<Vec<Report>, BialgebraError> = basis
            .par_iter()
            .map(|x| {
                let mut rep = Report::default();
                let name = || alg.symbol_name(x);
                let xe = LieElement::basis(x.clone());
                let dx = self.braided_cobracket_symbol(x)?;
                rep.check(
                    "carrier_cobracket",
                    name,
                    None,
                    &TensorElement::zero(),
                    &off_carrier(&dx),
                    tensor,
                );
                rep.check(
                    "anticocommutativity",
                    name,
                    None,
                    &TensorElement::zero(),
                    &(&dx + &flip(&dx)),
                    tensor,
                );
                let mut first = TripleTensor::zero();
                for ((a, b), c) in &dx {
                    let da = self.braided_cobracket_symbol(a)?;
                    for ((p, q), v) in &da {
                        first.add_term((p.clone(), q.clone(), b.clone()), v * c);
                    }
                }
                let mut co = first.clone();
                let c1 = cyclic(&first);
                co += &c1;
                co += &cyclic(&c1);
                rep.check("co_jacobi", name, None, &TripleTensor::zero(), &co, triple);
                for g in &gens {
                    let gx = alg.bracket(g, &xe);
                    rep.check(
                        "module_cobracket",
                        name,
                        Some(el(g)),
                        &ad_tensor(alg, g, &dx),
                        &self.braided_cobracket(&gx)?,
                        tensor,
                    );
                }
                for y in &basis {
                    let ye = LieElement::basis(y.clone());
                    let yname = || Some(alg.symbol_name(y));
                    let xy = alg.bracket(&xe, &ye);
                    rep.check(
                        "carrier_bracket",
                        name,
                        yname(),
                        &LieElement::zero(),
                        &xy.filter(|s| !self.in_carrier(s)),
                        el,
                    );
                    let dy = self.braided_cobracket_symbol(y)?;
                    let psi = self.infinitesimal_braiding(&xe, &ye);
                    let mut expected = &ad_tensor(alg, &xe, &dy) - &ad_tensor(alg, &ye, &dx);
                    expected -= &psi;
                    rep.check(
                        "braided_cocycle",
                        name,
                        yname(),
                        &expected,
                        &self.braided_cobracket(&xy)?,
                        tensor,
                    );
                    for g in &gens {
                        let (gx, gy) = (alg.bracket(g, &xe), alg.bracket(g, &ye));
                        let mut lhs = alg.bracket(&gx, &ye);
                        lhs += &alg.bracket(&xe, &gy);
                        rep.check(
                            "module_bracket",
                            name,
                            yname(),
                            &alg.bracket(g, &xy),
                            &lhs,
                            el,
                        );
                        let mut lhs = self.infinitesimal_braiding(&gx, &ye);
                        lhs += &self.infinitesimal_braiding(&xe, &gy);
                        rep.check(
                            "module_braiding",
                            name,
                            yname(),
                            &ad_tensor(alg, g, &psi),
                            &lhs,
                            tensor,
                        );
                    }
                }
                Ok(rep)
            })
            .collect();

        let mut report = Report::new(alg.label(), "braided");
        for r in reports? {
            report.merge(r);
        }
        Ok(report)
    }
}

/// `Σ G⁻¹_{ab} b_a ⊗ b_b` over `symbols`, `G` the Gram matrix of the form.
pub fn split_casimir<A: KacMoody>(
    alg: &A,
    symbols: &[A::Sym],
) -> Result<TensorElement<A::Sym>, BialgebraError> {
    let gram = Matrix::from_rows(
        symbols
            .iter()
            .map(|x| symbols.iter().map(|y| alg.form_basis(x, y)).collect())
            .collect(),
    );
    let inv = gram.inverse().ok_or_else(|| {
        BialgebraError::NormalizationFailure("the form is degenerate on the degree-0 part".into())
    })?;
    let mut out = TensorElement::zero();
    for (i, x) in symbols.iter().enumerate() {
        for (j, y) in symbols.iter().enumerate() {
            let c = &inv[(i, j)];
            if !c.is_zero() {
                out.add_term((x.clone(), y.clone()), c.clone());
            }
        }
    }
    Ok(out)
}

/// `k[u]⊗L(C)` as the positive-degree carrier of the affinization.
pub fn current_algebra_view(
    cartan: &CartanMatrix,
) -> Result<BraidedLieBialgebra<AffineAlgebra>, Error> {
    let alg = AffineAlgebra::new(cartan)?;
    let grading = grading_from_subdatum(&affinization_subdatum(cartan)?);
    Ok(BraidedLieBialgebra::new(
        Bialgebra::new(alg),
        grading,
        CarrierSide::Positive,
    )?)
}

/// The carrier obtained by deleting one node of a finite Cartan matrix.
pub fn node_deletion_view(
    cartan: &CartanMatrix,
    label: &str,
) -> Result<BraidedLieBialgebra<ChevalleyAlgebra>, Error> {
    let grading = grading_from_subdatum(&node_deletion(cartan, label)?);
    let alg = ChevalleyAlgebra::new(cartan)?;
    Ok(BraidedLieBialgebra::new(
        Bialgebra::new(alg),
        grading,
        CarrierSide::Negative,
    )?)
}

/// `tⁱ⊗X ↦ t⁻ⁱ⊗X`, moving an element between the two carrier sides.
pub fn flip_loop_degree(x: &LieElement<AffineSym>) -> LieElement<AffineSym> {
    x.map_keys(|s| match *s {
        AffineSym::Loop { degree, index } => AffineSym::Loop {
            degree: -degree,
            index,
        },
        other => other,
    })
}
