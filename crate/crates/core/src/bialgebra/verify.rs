use rayon::prelude::*;

use crate::algebra::render::{format_tensor, format_triple, Style};
use crate::algebra::tensor::apply_left;
use crate::algebra::{
    ad_tensor, cyclic, flip, LieAlgebra, LieElement, TensorElement, TripleTensor,
};
use crate::error::BialgebraError;
use crate::report::Report;

use super::{Bialgebra, KacMoody};

/// Anticocommutativity, weight compatibility and co-Jacobi on every basis
/// vector of the window, and the cocycle identity on every pair.
pub fn verify_lie_bialgebra<A: KacMoody>(
    bialg: &Bialgebra<A>,
    lo: i64,
    hi: i64,
) -> Result<Report, BialgebraError> {
    let alg = bialg.algebra();
    bialg.prefill(2 * lo.min(0), 2 * hi.max(0))?;
    let basis = alg.basis_window(lo, hi);
    let delta = |s: &A::Sym| bialg.cobracket_symbol(s).expect("prefilled");
    let mut report = verify_cobracket(&alg.label(), alg, &basis, &delta);
    let tensor = |t: &TensorElement<A::Sym>| format_tensor(alg, t, Style::Ascii);
    for x in &basis {
        let wx = alg.root_coordinates(x);
        let off_weight = delta(x).filter(|(a, b)| {
            let (wa, wb) = (alg.root_coordinates(a), alg.root_coordinates(b));
            wa.iter()
                .zip(&wb)
                .map(|(p, q)| p + q)
                .ne(wx.iter().copied())
        });
        report.check(
            "weight",
            || alg.symbol_name(x),
            None,
            &TensorElement::zero(),
            &off_weight,
            tensor,
        );
    }
    Ok(report)
}

/// The cobracket axioms for an arbitrary `δ` given on basis symbols:
/// anticocommutativity and co-Jacobi per symbol, the cocycle identity per
/// pair. `δ` must be defined on every bracket of two basis symbols.
pub fn verify_cobracket<L: LieAlgebra>(
    instance: &str,
    alg: &L,
    basis: &[L::Sym],
    delta: &(dyn Fn(&L::Sym) -> TensorElement<L::Sym> + Sync),
) -> Report {
    let tensor = |t: &TensorElement<L::Sym>| format_tensor(alg, t, Style::Ascii);
    let triple = |t: &TripleTensor<L::Sym>| format_triple(alg, t, Style::Ascii);
    let extend = |x: &LieElement<L::Sym>| {
        let mut out = TensorElement::zero();
        for (s, c) in x {
            out.add_scaled(&delta(s), c);
        }
        out
    };

    let reports: Vec<Report> = basis
        .par_iter()
        .map(|x| {
            let mut rep = Report::default();
            let name = || alg.symbol_name(x);
            let dx = delta(x);
            rep.check(
                "anticocommutativity",
                name,
                None,
                &TensorElement::zero(),
                &(&dx + &flip(&dx)),
                tensor,
            );
            let first = apply_left(&dx, |s| delta(s));
            let mut co = first.clone();
            let c1 = cyclic(&first);
            co += &c1;
            co += &cyclic(&c1);
            rep.check("co_jacobi", name, None, &TripleTensor::zero(), &co, triple);
            let xe = LieElement::basis(x.clone());
            for y in basis {
                let ye = LieElement::basis(y.clone());
                let lhs = extend(&alg.bracket(&xe, &ye));
                let rhs = &ad_tensor(alg, &xe, &delta(y)) - &ad_tensor(alg, &ye, &dx);
                rep.check(
                    "cocycle",
                    name,
                    Some(alg.symbol_name(y)),
                    &rhs,
                    &lhs,
                    tensor,
                );
            }
            rep
        })
        .collect();

    let mut report = Report::new(instance, "bialgebra");
    for r in reports {
        report.merge(r);
    }
    report
}
