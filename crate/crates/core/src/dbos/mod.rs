//! Double-bosonisation `b ⋊· g0 ·⋊ c`, assembled from a braided carrier `b`
//! (negative degrees), the degree-0 algebra `g0` with its r-matrix, and the
//! dual carrier `c` (positive degrees), plus the single bosonisation
//! `b ⋊· g0`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::render::{format_element, format_tensor, Style};
use crate::algebra::{flip, tensor, LieAlgebra, LieElement, TensorElement};
use crate::bialgebra::{standard_r, verify_cobracket, verify_quasitriangular, KacMoody};
use crate::braiding::BraidedLieBialgebra;
use crate::error::DbosError;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::{self, Scalar};


/// A basis symbol of the assembled algebra, tagged with its piece.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceSym<S> {
    B(S),
    G(S),
    C(S),
}

impl<S> PieceSym<S> {
    pub fn ambient(&self) -> &S {
        match self {
            PieceSym::B(s) | PieceSym::G(s) | PieceSym::C(s) => s,
        }
    }
}

/// Forgets the piece tags.
pub fn to_ambient<S: crate::algebra::Symbol>(x: &LieElement<PieceSym<S>>) -> LieElement<S> {
    x.map_keys(|p| p.ambient().clone())
}

pub fn tensor_to_ambient<S: crate::algebra::Symbol>(
    t: &TensorElement<PieceSym<S>>,
) -> TensorElement<S> {
    t.map_keys(|(a, b)| (a.ambient().clone(), b.ambient().clone()))
}

struct Level<S: Ord> {
    b: Vec<S>,
    c: Vec<S>,
    /// `f^a` for each `e_a` in `b`, as combinations of `c`.
    dual: Vec<LieElement<S>>,
}

/// Dual bases of `b_n` and `c_{−n}` under the invariant form, one degree
/// at a time.
pub struct DualPairing<S: Ord> {
    levels: BTreeMap<i64, Level<S>>,
    lo: i64,
    bounded: bool,
}

impl<S: crate::algebra::Symbol> DualPairing<S> {
    pub fn new<A: KacMoody<Sym = S>>(
        blb: &BraidedLieBialgebra<A>,
        lo: i64,
        bounded: bool,
    ) -> Result<Self, DbosError> {
        let alg = blb.algebra();
        let mut levels = BTreeMap::new();
        let all = alg.basis_window(lo, -lo);
        for n in lo..0 {
            let b: Vec<S> = all.iter().filter(|s| blb.degree(s) == n).cloned().collect();
            let c: Vec<S> = all
                .iter()
                .filter(|s| blb.degree(s) == -n)
                .cloned()
                .collect();
            if b.len() != c.len() {
                return Err(DbosError::PairingMismatch(format!(
                    "degree {n} has {} symbols against {} in degree {}",
                    b.len(),
                    c.len(),
                    -n
                )));
            }
            let gram = Matrix::from_rows(
                c.iter()
                    .map(|p| b.iter().map(|x| alg.form_basis(p, x)).collect())
                    .collect(),
            );
            let inv = gram.inverse().ok_or_else(|| {
                DbosError::PairingMismatch(format!(
                    "the form is degenerate between degrees {n} and {}",
                    -n
                ))
            })?;
            let dual = (0..b.len())
                .map(|a| {
                    let mut f = LieElement::zero();
                    for (i, p) in c.iter().enumerate() {
                        f.add_term(p.clone(), inv[(a, i)].clone());
                    }
                    f
                })
                .collect();
            levels.insert(n, Level { b, c, dual });
        }
        Ok(DualPairing {
            levels,
            lo,
            bounded,
        })
    }

    fn level(&self, n: i64) -> Result<Option<&Level<S>>, DbosError> {
        if n < self.lo && !self.bounded {
            return Err(DbosError::WindowOverflow {
                degree: n,
                lo: self.lo,
                hi: -self.lo,
            });
        }
        Ok(self.levels.get(&n))
    }

    /// `(e_a, f^a)` in degree `n < 0`.
    pub fn dual_basis(&self, n: i64) -> Result<Vec<(&S, &LieElement<S>)>, DbosError> {
        Ok(match self.level(n)? {
            Some(l) => l.b.iter().zip(&l.dual).collect(),
            None => Vec::new(),
        })
    }

    /// Basis of `b` in degree `n < 0`.
    pub fn b_basis(&self, n: i64) -> &[S] {
        self.levels.get(&n).map_or(&[], |l| &l.b)
    }

    /// Basis of `c` in degree `m > 0`.
    pub fn c_basis(&self, m: i64) -> &[S] {
        self.levels.get(&-m).map_or(&[], |l| &l.c)
    }

    pub fn min_degree(&self) -> i64 {
        self.lo
    }
}

/// `[ξ,x] = ξ▷x`, `[ξ,φ] = ξ▷φ`, the mixed bracket
/// `[x,φ] = x₍₁₎⟨φ,x₍₂₎⟩ + φ₍₁₎⟨φ₍₂₎,x⟩ + 2r₊⁽¹⁾⟨φ, r₊⁽²⁾▷x⟩`,
/// and the cobrackets deformed by `r` of `g0`.
pub struct DoubleBosonisation<'a, A: KacMoody> {
    blb: &'a BraidedLieBialgebra<A>,
    pairing: DualPairing<A::Sym>,
    r: TensorElement<A::Sym>,
    instance: String,
    finite: bool,
}

type PElem<S> = LieElement<PieceSym<S>>;
type PTensor<S> = TensorElement<PieceSym<S>>;

impl<'a, A: KacMoody> DoubleBosonisation<'a, A> {
    /// `window` bounds the degrees that will be compared; the dual bases are
    /// built on twice that range. Finite-dimensional algebras ignore it.
    pub fn build(blb: &'a BraidedLieBialgebra<A>, window: i64) -> Result<Self, DbosError> {
        let alg = blb.algebra();
        let finite = alg.is_finite_dimensional();
        let lo = if finite {
            -alg.basis_window(0, 0)
                .iter()
                .map(|s| blb.degree(s).abs())
                .max()
                .unwrap_or(0)
        } else {
            -2 * window.max(1)
        };
        let pairing = DualPairing::new(blb, lo, finite)?;
        let r = standard_r(
            alg,
            blb.degree_zero_basis(),
            &scalar::one(),
            &scalar::half(),
        );
        Ok(DoubleBosonisation {
            blb,
            pairing,
            r,
            instance: format!("{} double-bosonisation", alg.label()),
            finite,
        })
    }

    pub fn braided(&self) -> &BraidedLieBialgebra<A> {
        self.blb
    }

    pub fn pairing(&self) -> &DualPairing<A::Sym> {
        &self.pairing
    }

    /// `r` of the degree-0 algebra.
    pub fn r_g0(&self) -> &TensorElement<A::Sym> {
        &self.r
    }

    fn piece(&self, s: &A::Sym) -> PieceSym<A::Sym> {
        match self.blb.degree(s) {
            d if d < 0 => PieceSym::B(s.clone()),
            0 => PieceSym::G(s.clone()),
            _ => PieceSym::C(s.clone()),
        }
    }

    fn tag(&self, x: &LieElement<A::Sym>) -> PElem<A::Sym> {
        x.map_keys(|s| self.piece(s))
    }

    fn tag2(&self, t: &TensorElement<A::Sym>) -> PTensor<A::Sym> {
        t.map_keys(|(a, b)| (self.piece(a), self.piece(b)))
    }

    /// Assembled basis with degrees in `[lo, hi]`.
    pub fn basis(&self, lo: i64, hi: i64) -> Vec<PieceSym<A::Sym>> {
        let mut out = Vec::new();
        for n in lo..=hi.min(-1) {
            out.extend(self.pairing.b_basis(n).iter().cloned().map(PieceSym::B));
        }
        if lo <= 0 && 0 <= hi {
            out.extend(
                self.blb
                    .degree_zero_basis()
                    .iter()
                    .cloned()
                    .map(PieceSym::G),
            );
        }
        for m in lo.max(1)..=hi {
            out.extend(self.pairing.c_basis(m).iter().cloned().map(PieceSym::C));
        }
        out
    }

    /// Every basis symbol; only for finite-dimensional algebras.
    pub fn full_basis(&self) -> Result<Vec<PieceSym<A::Sym>>, DbosError> {
        if !self.finite {
            return Err(DbosError::InfiniteDimensional);
        }
        let lo = self.pairing.min_degree();
        Ok(self.basis(lo, -lo))
    }

    fn pair(&self, phi: &LieElement<A::Sym>, x: &LieElement<A::Sym>) -> Scalar {
        self.blb.algebra().form(phi, x)
    }

    /// `ξ▷φ` through `⟨ξ▷φ, x⟩ = −⟨φ, ξ▷x⟩`.
    fn dual_action(
        &self,
        xi: &LieElement<A::Sym>,
        phi: &A::Sym,
    ) -> Result<LieElement<A::Sym>, DbosError> {
        let alg = self.blb.algebra();
        let phi_e = LieElement::basis(phi.clone());
        let mut out = LieElement::zero();
        for (e, f) in self.pairing.dual_basis(-self.blb.degree(phi))? {
            let v = self.pair(&phi_e, &alg.bracket_with_basis(xi, e));
            if !v.is_zero() {
                out.add_scaled(f, &-v);
            }
        }
        Ok(out)
    }

    /// The bracket of `c`, dual to `−δ̄` on `b`.
    fn c_bracket(&self, phi: &A::Sym, psi: &A::Sym) -> Result<LieElement<A::Sym>, DbosError> {
        let n = -(self.blb.degree(phi) + self.blb.degree(psi));
        let (pe, qe) = (
            LieElement::basis(phi.clone()),
            LieElement::basis(psi.clone()),
        );
        let mut out = LieElement::zero();
        for (e, f) in self.pairing.dual_basis(n)? {
            let de = self.blb.braided_cobracket_symbol(e)?;
            let mut v = Scalar::zero();
            for ((u, w), c) in &de {
                let pu = self.pair(&pe, &LieElement::basis(u.clone()));
                if pu.is_zero() {
                    continue;
                }
                v += c * pu * self.pair(&qe, &LieElement::basis(w.clone()));
            }
            if !v.is_zero() {
                out.add_scaled(f, &-v);
            }
        }
        Ok(out)
    }

    /// The cobracket of `c`, dual to the bracket of `b`.
    pub fn c_cobracket(&self, phi: &A::Sym) -> Result<TensorElement<A::Sym>, DbosError> {
        let alg = self.blb.algebra();
        let m = self.blb.degree(phi);
        let pe = LieElement::basis(phi.clone());
        let mut out = TensorElement::zero();
        for n1 in (-m + 1)..0 {
            let n2 = -m - n1;
            let left = self.pairing.dual_basis(n1)?;
            let right = self.pairing.dual_basis(n2)?;
            for (ea, fa) in &left {
                for (eb, fb) in &right {
                    let v = self.pair(&pe, &alg.bracket_basis(ea, eb));
                    if !v.is_zero() {
                        out.add_scaled(&tensor(fa, fb), &v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[x, φ]` for `x ∈ b`, `φ ∈ c`.
    fn mixed_bracket(&self, x: &A::Sym, phi: &A::Sym) -> Result<LieElement<A::Sym>, DbosError> {
        let alg = self.blb.algebra();
        let (xe, pe) = (LieElement::basis(x.clone()), LieElement::basis(phi.clone()));
        let mut out = LieElement::zero();
        for ((u, w), c) in &self.blb.braided_cobracket_symbol(x)? {
            let v = self.pair(&pe, &LieElement::basis(w.clone()));
            if !v.is_zero() {
                out.add_term(u.clone(), c * v);
            }
        }
        for ((u, w), c) in &self.c_cobracket(phi)? {
            let v = self.pair(&LieElement::basis(w.clone()), &xe);
            if !v.is_zero() {
                out.add_term(u.clone(), c * v);
            }
        }
        for ((p, q), c) in self.blb.casimir() {
            let v = self.pair(&pe, &alg.bracket_basis(q, x));
            if !v.is_zero() {
                out.add_term(p.clone(), c * v);
            }
        }
        Ok(out)
    }

    pub fn bracket_pieces(
        &self,
        a: &PieceSym<A::Sym>,
        b: &PieceSym<A::Sym>,
    ) -> Result<PElem<A::Sym>, DbosError> {
        use PieceSym::{B, C, G};
        let alg = self.blb.algebra();
        let amb = |x: &A::Sym, y: &A::Sym| self.tag(&alg.bracket_basis(x, y));
        Ok(match (a, b) {
            (G(x), G(y)) | (G(x), B(y)) | (B(x), G(y)) | (B(x), B(y)) => amb(x, y),
            (G(x), C(p)) => self.tag(&self.dual_action(&LieElement::basis(x.clone()), p)?),
            (C(p), G(x)) => -self.tag(&self.dual_action(&LieElement::basis(x.clone()), p)?),
            (C(p), C(q)) => self.tag(&self.c_bracket(p, q)?),
            (B(x), C(p)) => self.tag(&self.mixed_bracket(x, p)?),
            (C(p), B(x)) => -self.tag(&self.mixed_bracket(x, p)?),
        })
    }

    /// `δξ` on `g0`; `δ̄x + r⁽²⁾⊗r⁽¹⁾▷x − r⁽¹⁾▷x⊗r⁽²⁾` on `b`;
    /// `δ_c φ + r⁽²⁾▷φ⊗r⁽¹⁾ − r⁽¹⁾⊗r⁽²⁾▷φ` on `c`.
    pub fn cobracket_piece(&self, a: &PieceSym<A::Sym>) -> Result<PTensor<A::Sym>, DbosError> {
        let alg = self.blb.algebra();
        Ok(match a {
            PieceSym::G(x) => self.tag2(&self.blb.bialgebra().cobracket_symbol(x)?),
            PieceSym::B(x) => {
                let mut out = self.blb.braided_cobracket_symbol(x)?;
                for ((p, q), c) in &self.r {
                    let px = alg.bracket_basis(p, x);
                    let q = LieElement::basis(q.clone());
                    out.add_scaled(&tensor(&q, &px), c);
                    out.add_scaled(&tensor(&px, &q), &-c.clone());
                }
                self.tag2(&out)
            }
            PieceSym::C(phi) => {
                let mut out = self.c_cobracket(phi)?;
                for ((p, q), c) in &self.r {
                    let pe = LieElement::basis(p.clone());
                    let qphi = self.dual_action(&LieElement::basis(q.clone()), phi)?;
                    out.add_scaled(&tensor(&qphi, &pe), c);
                    out.add_scaled(&tensor(&pe, &qphi), &-c.clone());
                }
                self.tag2(&out)
            }
        })
    }

    /// `r^new = r + Σ_a f^a ⊗ e_a`.
    pub fn r_new(&self) -> Result<PTensor<A::Sym>, DbosError> {
        if !self.finite {
            return Err(DbosError::InfiniteDimensional);
        }
        let mut out = self.tag2(&self.r);
        for n in self.pairing.min_degree()..0 {
            for (e, f) in self.pairing.dual_basis(n)? {
                out.add_scaled(
                    &self.tag2(&tensor(f, &LieElement::basis(e.clone()))),
                    &scalar::one(),
                );
            }
        }
        Ok(out)
    }

    /// Assembled brackets against the ambient ones on every pair with
    /// degrees in `[lo, hi]`, plus closure of `b`, `g0` and `c`.
    pub fn compare_brackets(&self, lo: i64, hi: i64) -> Result<Report, DbosError> {
        let alg = self.blb.algebra();
        let basis = self.basis(lo, hi);
        let el = |x: &LieElement<A::Sym>| format_element(alg, x);
        let reports: Result<Vec<Report>, DbosError> = basis
            .par_iter()
            .map(|a| {
                let mut rep = Report::default();
                for b in &basis {
                    let got = self.bracket_pieces(a, b)?;
                    let amb = alg.bracket_basis(a.ambient(), b.ambient());
                    let name = || alg.symbol_name(a.ambient());
                    let y = Some(alg.symbol_name(b.ambient()));
                    rep.check("bracket", name, y.clone(), &amb, &to_ambient(&got), el);
                    let same = |p: &PieceSym<A::Sym>, q: &PieceSym<A::Sym>| {
                        std::mem::discriminant(p) == std::mem::discriminant(q)
                    };
                    if same(a, b) {
                        let stray = got.filter(|k| !same(k, a));
                        rep.check(
                            "closure",
                            name,
                            y,
                            &LieElement::zero(),
                            &to_ambient(&stray),
                            el,
                        );
                    }
                }
                Ok(rep)
            })
            .collect();
        let mut report = Report::new(self.instance.clone(), "dbos_bracket");
        for r in reports? {
            report.merge(r);
        }
        Ok(report)
    }

    /// Assembled cobrackets against the ambient ones.
    pub fn compare_cobrackets(&self, lo: i64, hi: i64) -> Result<Report, DbosError> {
        let alg = self.blb.algebra();
        let tensor = |t: &TensorElement<A::Sym>| format_tensor(alg, t, Style::Ascii);
        let mut report = Report::new(self.instance.clone(), "dbos_cobracket");
        for a in self.basis(lo, hi) {
            let got = tensor_to_ambient(&self.cobracket_piece(&a)?);
            let amb = self.blb.bialgebra().cobracket_symbol(a.ambient())?;
            report.check(
                "cobracket",
                || alg.symbol_name(a.ambient()),
                None,
                &amb,
                &got,
                tensor,
            );
        }
        Ok(report)
    }

    /// `⟨φ,[x,y]⟩ = ⟨δ_c φ, x⊗y⟩` and `⟨[φ,ψ], x⟩ = −⟨φ⊗ψ, δ̄x⟩` with the
    /// ambient bracket on `c`, for degrees up to `w`.
    pub fn verify_pairing(&self, w: i64) -> Result<Report, DbosError> {
        let alg = self.blb.algebra();
        let show = |v: &Scalar| scalar::format_scalar(v);
        let pair2 = |t: &TensorElement<A::Sym>, u: &TensorElement<A::Sym>| {
            let mut s = Scalar::zero();
            for ((a, b), c) in t {
                for ((x, y), d) in u {
                    let f = alg.form_basis(a, x);
                    if !f.is_zero() {
                        s += c * d * f * alg.form_basis(b, y);
                    }
                }
            }
            s
        };
        let b: Vec<A::Sym> = (-w..0)
            .flat_map(|n| self.pairing.b_basis(n).to_vec())
            .collect();
        let c: Vec<A::Sym> = (1..=w)
            .flat_map(|m| self.pairing.c_basis(m).to_vec())
            .collect();
        let one = |s: &A::Sym| LieElement::basis(s.clone());
        let mut report = Report::new(self.instance.clone(), "pairing");
        for phi in &c {
            let dphi = self.c_cobracket(phi)?;
            for x in &b {
                for y in &b {
                    if self.blb.degree(phi) + self.blb.degree(x) + self.blb.degree(y) != 0 {
                        continue;
                    }
                    let lhs = self.pair(&one(phi), &alg.bracket_basis(x, y));
                    let rhs = pair2(&dphi, &tensor(&one(x), &one(y)));
                    report.check(
                        "cobracket_dual_to_bracket",
                        || alg.symbol_name(phi),
                        Some(format!("{} (x) {}", alg.symbol_name(x), alg.symbol_name(y))),
                        &lhs,
                        &rhs,
                        show,
                    );
                }
            }
        }
        for x in &b {
            let dx = self.blb.braided_cobracket_symbol(x)?;
            for phi in &c {
                for psi in &c {
                    if self.blb.degree(phi) + self.blb.degree(psi) + self.blb.degree(x) != 0 {
                        continue;
                    }
                    let lhs = self.pair(&alg.bracket_basis(phi, psi), &one(x));
                    let rhs = -pair2(&tensor(&one(phi), &one(psi)), &dx);
                    report.check(
                        "bracket_dual_to_cobracket",
                        || alg.symbol_name(x),
                        Some(format!(
                            "{} (x) {}",
                            alg.symbol_name(phi),
                            alg.symbol_name(psi)
                        )),
                        &lhs,
                        &rhs,
                        show,
                    );
                }
            }
        }
        Ok(report)
    }

    /// The quasitriangular suite for `r^new` on the assembled algebra.
    pub fn verify_r_new(&self) -> Result<Report, DbosError> {
        let r = self.r_new()?;
        let basis = self.full_basis()?;
        let table = self.cobracket_table(&basis)?;
        let delta = |s: &PieceSym<A::Sym>| table[s].clone();
        Ok(verify_quasitriangular(
            &self.instance,
            self,
            &basis,
            &r,
            &delta,
        ))
    }

    /// The Lie bialgebra axioms on the assembled algebra.
    pub fn verify_axioms(&self) -> Result<Report, DbosError> {
        let basis = self.full_basis()?;
        let table = self.cobracket_table(&basis)?;
        let delta = |s: &PieceSym<A::Sym>| table[s].clone();
        Ok(verify_cobracket(&self.instance, self, &basis, &delta))
    }

    fn cobracket_table(
        &self,
        basis: &[PieceSym<A::Sym>],
    ) -> Result<BTreeMap<PieceSym<A::Sym>, PTensor<A::Sym>>, DbosError> {
        basis
            .iter()
            .map(|s| Ok((s.clone(), self.cobracket_piece(s)?)))
            .collect()
    }
}

impl<A: KacMoody> LieAlgebra for DoubleBosonisation<'_, A> {
    type Sym = PieceSym<A::Sym>;

    fn add_bracket_basis(
        &self,
        a: &Self::Sym,
        b: &Self::Sym,
        coeff: &Scalar,
        out: &mut LieElement<Self::Sym>,
    ) {
        let v = self
            .bracket_pieces(a, b)
            .expect("bracket inside the assembled window");
        out.add_scaled(&v, coeff);
    }

    fn symbol_name(&self, s: &Self::Sym) -> String {
        self.blb.algebra().symbol_name(s.ambient())
    }
}

/// `b ⋊· g0` with `δx = δ̄x + β(x) − τβ(x)` on the carrier.
pub struct Bosonisation<'a, A: KacMoody> {
    blb: &'a BraidedLieBialgebra<A>,
    instance: String,
}

impl<'a, A: KacMoody> Bosonisation<'a, A> {
    pub fn build(blb: &'a BraidedLieBialgebra<A>) -> Self {
        Bosonisation {
            blb,
            instance: format!("{} bosonisation", blb.algebra().label()),
        }
    }

    fn piece(&self, s: &A::Sym) -> Result<PieceSym<A::Sym>, DbosError> {
        match self.blb.degree(s) {
            d if d < 0 => Ok(PieceSym::B(s.clone())),
            0 => Ok(PieceSym::G(s.clone())),
            d => Err(DbosError::WindowOverflow {
                degree: d,
                lo: i64::MIN,
                hi: 0,
            }),
        }
    }

    fn tag(&self, x: &LieElement<A::Sym>) -> Result<PElem<A::Sym>, DbosError> {
        let mut out = LieElement::zero();
        for (s, c) in x {
            out.add_term(self.piece(s)?, c.clone());
        }
        Ok(out)
    }

    /// Basis with degrees in `[lo, 0]`.
    pub fn basis(&self, lo: i64) -> Vec<PieceSym<A::Sym>> {
        self.blb
            .algebra()
            .basis_window(lo, 0)
            .into_iter()
            .filter(|s| (lo..=0).contains(&self.blb.degree(s)))
            .filter_map(|s| self.piece(&s).ok())
            .collect()
    }

    /// `[ξ,ξ′]` in `g0`, `ξ▷x`, and the carrier bracket.
    pub fn bracket_pieces(
        &self,
        a: &PieceSym<A::Sym>,
        b: &PieceSym<A::Sym>,
    ) -> Result<PElem<A::Sym>, DbosError> {
        self.tag(&self.blb.algebra().bracket_basis(a.ambient(), b.ambient()))
    }

    pub fn cobracket_piece(&self, a: &PieceSym<A::Sym>) -> Result<PTensor<A::Sym>, DbosError> {
        let t = match a {
            PieceSym::G(x) => self.blb.bialgebra().cobracket_symbol(x)?,
            PieceSym::B(x) | PieceSym::C(x) => {
                let xe = LieElement::basis(x.clone());
                let beta = self.blb.coaction(&xe)?;
                let mut out = self.blb.braided_cobracket_symbol(x)?;
                out += &beta;
                out -= &flip(&beta);
                out
            }
        };
        let mut out = TensorElement::zero();
        for ((p, q), c) in &t {
            out.add_term((self.piece(p)?, self.piece(q)?), c.clone());
        }
        Ok(out)
    }

    /// Brackets and cobrackets against the ambient negative part on
    /// degrees `[lo, 0]`, and `[g0, b] ⊆ b`.
    pub fn compare(&self, lo: i64) -> Result<Report, DbosError> {
        let alg = self.blb.algebra();
        let basis = self.basis(lo);
        let el = |x: &LieElement<A::Sym>| format_element(alg, x);
        let tensor = |t: &TensorElement<A::Sym>| format_tensor(alg, t, Style::Ascii);
        let mut report = Report::new(self.instance.clone(), "bosonisation");
        for a in &basis {
            let name = || alg.symbol_name(a.ambient());
            for b in &basis {
                let got = self.bracket_pieces(a, b)?;
                let y = Some(alg.symbol_name(b.ambient()));
                let amb = alg.bracket_basis(a.ambient(), b.ambient());
                report.check("bracket", name, y.clone(), &amb, &to_ambient(&got), el);
                if matches!((a, b), (PieceSym::G(_), PieceSym::B(_))) {
                    let stray = got.filter(|k| !matches!(k, PieceSym::B(_)));
                    report.check(
                        "ideal",
                        name,
                        y,
                        &LieElement::zero(),
                        &to_ambient(&stray),
                        el,
                    );
                }
            }
            let got = tensor_to_ambient(&self.cobracket_piece(a)?);
            let amb = self.blb.bialgebra().cobracket_symbol(a.ambient())?;
            report.check("cobracket", name, None, &amb, &got, tensor);
        }
        Ok(report)
    }
}
