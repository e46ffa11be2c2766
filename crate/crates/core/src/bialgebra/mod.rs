//! The standard Lie bialgebra structure: `δe_i = (d_i/2) e_i ∧ h_i`,
//! `δf_i = (d_i/2) f_i ∧ h_i`, `δ = 0` on the Cartan, extended to every
//! basis vector through bracket certificates and the cocycle identity.

mod kac_moody;
mod rmatrix;
mod verify;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::algebra::{ad_tensor, wedge, LieElement, TensorElement};
use crate::error::BialgebraError;
use crate::scalar::{self, Scalar};

pub use kac_moody::KacMoody;
pub use rmatrix::{
    canonical_r, coboundary, standard_r, verify_quasitriangular, QuasitriangularStructure,
};
pub use verify::{verify_cobracket, verify_lie_bialgebra};

/// Which diagonal scales the generator cobracket.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WeightConvention {
    /// `d` with `C·diag(d)` symmetric.
    Symmetrizer,
    /// `d_i = 1/⟨e_i, f_i⟩ = (α_i, α_i)/2` in the normalized form, so
    /// `diag(d)·C` is symmetric and long roots get 1.
    #[default]
    RootLengths,
}

/// `b = Σ λ_k [x_k, y_k]` with every `x_k`, `y_k` of strictly lower rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<S> {
    pub symbol: S,
    pub terms: Vec<(Scalar, S, S)>,
    pub rank: usize,
}

struct CertState<S> {
    built: bool,
    lo: i64,
    hi: i64,
    rank: BTreeMap<S, usize>,
    certs: BTreeMap<S, Certificate<S>>,
}

pub struct Bialgebra<A: KacMoody> {
    alg: A,
    weights: Vec<Scalar>,
    base: BTreeMap<A::Sym, TensorElement<A::Sym>>,
    state: RwLock<CertState<A::Sym>>,
    memo: RwLock<HashMap<A::Sym, TensorElement<A::Sym>>>,
}

impl<A: KacMoody> Bialgebra<A> {
    pub fn new(alg: A) -> Self {
        Self::with_convention(alg, WeightConvention::default())
    }

    pub fn with_convention(alg: A, convention: WeightConvention) -> Self {
        let weights = match convention {
            WeightConvention::Symmetrizer => {
                alg.km_cartan()
                    .symmetrize()
                    .expect("Kac-Moody data is symmetrizable")
                    .d
            }
            WeightConvention::RootLengths => alg
                .triples()
                .iter()
                .map(|t| Scalar::one() / alg.form(&t.e, &t.f))
                .collect(),
        };
        let mut base = BTreeMap::new();
        for s in alg.cartan_symbols() {
            base.insert(s, TensorElement::zero());
        }
        let half = scalar::half();
        for (t, d) in alg.triples().iter().zip(&weights) {
            let w = d * &half;
            for x in [&t.e, &t.f] {
                let (s, k) = single_term(x);
                let value = wedge(x, &t.h).scaled(&(&w / &k));
                base.insert(s, value);
            }
        }
        let rank = base.keys().map(|s| (s.clone(), 0)).collect();
        Bialgebra {
            alg,
            weights,
            base,
            state: RwLock::new(CertState {
                built: false,
                lo: 0,
                hi: 0,
                rank,
                certs: BTreeMap::new(),
            }),
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Replaces the generator value of one basis symbol (fault injection).
    pub fn with_generator_override(mut self, s: A::Sym, value: TensorElement<A::Sym>) -> Self {
        self.base.insert(s, value);
        self.memo.write().unwrap().clear();
        self
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    /// Generator values of `δ` on the basis symbols they live on.
    pub fn generator_cobracket(&self) -> &BTreeMap<A::Sym, TensorElement<A::Sym>> {
        &self.base
    }

    pub fn is_generator(&self, s: &A::Sym) -> bool {
        self.base.contains_key(s)
    }

    /// Extends the certificate closure so it covers `[lo, hi]`.
    pub fn build_certificates(&self, lo: i64, hi: i64) {
        let (lo, hi) = (lo.min(-1), hi.max(1));
        {
            let st = self.state.read().unwrap();
            if st.built && st.lo <= lo && st.hi >= hi {
                return;
            }
        }
        let mut st = self.state.write().unwrap();
        let (lo, hi) = (lo.min(st.lo), hi.max(st.hi));
        let targets: BTreeSet<A::Sym> = self.alg.basis_window(lo, hi).into_iter().collect();
        let mut frontier: Vec<A::Sym> = st.rank.keys().cloned().collect();
        loop {
            let known: Vec<(A::Sym, usize)> =
                st.rank.iter().map(|(s, r)| (s.clone(), *r)).collect();
            let front: BTreeSet<&A::Sym> = frontier.iter().collect();
            let mut pairs: Vec<(usize, &A::Sym, &A::Sym)> = Vec::new();
            for (x, rx) in &known {
                for (y, ry) in &known {
                    if x >= y || !(front.contains(x) || front.contains(y)) {
                        continue;
                    }
                    let deg = self.alg.window_degree(x) + self.alg.window_degree(y);
                    if deg < lo || deg > hi {
                        continue;
                    }
                    pairs.push((rx.max(ry) + 1, x, y));
                }
            }
            pairs.sort();
            let mut fresh: BTreeMap<A::Sym, Certificate<A::Sym>> = BTreeMap::new();
            for (rank, x, y) in pairs {
                let z = self.alg.bracket_basis(x, y);
                if z.len() != 1 {
                    continue;
                }
                let (b, lambda) = z.iter().next().unwrap();
                if st.rank.contains_key(b) || fresh.contains_key(b) || !targets.contains(b) {
                    continue;
                }
                fresh.insert(
                    b.clone(),
                    Certificate {
                        symbol: b.clone(),
                        terms: vec![(Scalar::one() / lambda, x.clone(), y.clone())],
                        rank,
                    },
                );
            }
            if fresh.is_empty() {
                break;
            }
            frontier = fresh.keys().cloned().collect();
            for (b, c) in fresh {
                st.rank.insert(b.clone(), c.rank);
                st.certs.insert(b, c);
            }
        }
        st.built = true;
        st.lo = lo;
        st.hi = hi;
    }

    pub fn certificate(&self, s: &A::Sym) -> Option<Certificate<A::Sym>> {
        self.state.read().unwrap().certs.get(s).cloned()
    }

    pub fn rank_of(&self, s: &A::Sym) -> Option<usize> {
        self.state.read().unwrap().rank.get(s).copied()
    }

    /// Replays a certificate through the bracket.
    pub fn replay(&self, c: &Certificate<A::Sym>) -> LieElement<A::Sym> {
        let mut out = LieElement::zero();
        for (l, x, y) in &c.terms {
            self.alg.add_bracket_basis(x, y, l, &mut out);
        }
        out
    }

    /// Every pure bracket `[x, y] = λ b` among certified symbols other than
    /// the primary one, up to `limit`.
    pub fn alternate_certificates(&self, b: &A::Sym, limit: usize) -> Vec<Certificate<A::Sym>> {
        let primary = self.certificate(b);
        let st = self.state.read().unwrap();
        let known: Vec<A::Sym> = st.rank.keys().cloned().collect();
        let target = self.alg.window_degree(b);
        let mut out = Vec::new();
        for x in &known {
            for y in &known {
                if x == b || y == b || x >= y {
                    continue;
                }
                if self.alg.window_degree(x) + self.alg.window_degree(y) != target {
                    continue;
                }
                let z = self.alg.bracket_basis(x, y);
                if z.len() != 1 || z.coeff(b).is_zero() {
                    continue;
                }
                let c = Certificate {
                    symbol: b.clone(),
                    terms: vec![(Scalar::one() / z.coeff(b), x.clone(), y.clone())],
                    rank: st.rank[x].max(st.rank[y]) + 1,
                };
                if Some(&c) != primary.as_ref() {
                    out.push(c);
                    if out.len() == limit {
                        return out;
                    }
                }
            }
        }
        out
    }

    /// `Σ λ (ad_x δy − ad_y δx)` along a certificate.
    pub fn cobracket_along(
        &self,
        c: &Certificate<A::Sym>,
    ) -> Result<TensorElement<A::Sym>, BialgebraError> {
        let mut out = TensorElement::zero();
        for (l, x, y) in &c.terms {
            let dx = self.cobracket_symbol(x)?;
            let dy = self.cobracket_symbol(y)?;
            let xe = LieElement::basis(x.clone());
            let ye = LieElement::basis(y.clone());
            out.add_scaled(&ad_tensor(&self.alg, &xe, &dy), l);
            out.add_scaled(&ad_tensor(&self.alg, &ye, &dx), &-l.clone());
        }
        Ok(out)
    }

    pub fn cobracket_symbol(&self, s: &A::Sym) -> Result<TensorElement<A::Sym>, BialgebraError> {
        if let Some(v) = self.base.get(s) {
            return Ok(v.clone());
        }
        if let Some(v) = self.memo.read().unwrap().get(s) {
            return Ok(v.clone());
        }
        let cert = match self.certificate(s) {
            Some(c) => c,
            None => {
                let d = self.alg.window_degree(s);
                self.build_certificates(d - 1, d + 1);
                self.certificate(s)
                    .ok_or_else(|| BialgebraError::CertificateNotFound {
                        symbol: self.alg.symbol_name(s),
                    })?
            }
        };
        let value = self.cobracket_along(&cert)?;
        self.memo.write().unwrap().insert(s.clone(), value.clone());
        Ok(value)
    }

    pub fn cobracket(
        &self,
        x: &LieElement<A::Sym>,
    ) -> Result<TensorElement<A::Sym>, BialgebraError> {
        let mut out = TensorElement::zero();
        for (s, c) in x {
            out.add_scaled(&self.cobracket_symbol(s)?, c);
        }
        Ok(out)
    }

    /// Fills the memo for every basis symbol in the window, lowest rank
    /// first so the recursion stays shallow.
    pub fn prefill(&self, lo: i64, hi: i64) -> Result<(), BialgebraError> {
        self.build_certificates(lo, hi);
        let mut syms = self.alg.basis_window(lo, hi);
        syms.sort_by_key(|s| self.rank_of(s).unwrap_or(usize::MAX));
        for s in syms {
            self.cobracket_symbol(&s)?;
        }
        Ok(())
    }
}

fn single_term<S: crate::algebra::Symbol>(x: &LieElement<S>) -> (S, Scalar) {
    assert_eq!(x.len(), 1, "generator is not a multiple of a basis vector");
    let (s, k) = x.iter().next().unwrap();
    (s.clone(), k.clone())
}

#[cfg(test)]
mod tests;
