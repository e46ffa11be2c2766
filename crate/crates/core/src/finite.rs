//! Finite-type simple Lie algebras in a Chevalley basis.
//!
//! Structure constants come from the extraspecial-pair algorithm: for each
//! non-simple positive root `ξ`, the pair `(α, β)` with `α` minimal in the
//! root order and `ξ − α` positive gets `N_{α,β} = p + 1`; every other
//! `N_{r,s}` follows from the standard identities between the constants.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{InvariantForm, LieAlgebra, LieElement};
use crate::cartan::{CartanMatrix, HighestRootData, RootSystem};
use crate::error::CartanError;
use crate::scalar::{self, Scalar};

pub const MAX_RANK: usize = 4;

/// Index into the Chevalley basis: positive root vectors, then the Cartan
/// generators, then negative root vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSym(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Positive(usize),
    Cartan(usize),
    Negative(usize),
}

#[derive(Debug)]
pub struct ChevalleyAlgebra {
    roots: RootSystem,
    names: Vec<String>,
    lookup: HashMap<String, FiniteSym>,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    form: BTreeMap<(usize, usize), Scalar>,
    theta: ThetaVectors,
}

/// `F₀ = λ e_θ`, `E₀ = λ f_θ`, `H_θ = [F₀, E₀]`, with the sign `λ` recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaVectors {
    pub e0: LieElement<FiniteSym>,
    pub f0: LieElement<FiniteSym>,
    pub h_theta: LieElement<FiniteSym>,
    pub sign: i64,
}

/// Structure-constant dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDump {
    pub basis: Vec<String>,
    pub bracket: Vec<(usize, usize, Vec<(usize, i64, i64)>)>,
    pub form: Vec<(usize, usize, i64, i64)>,
}

struct Constants<'a> {
    rs: &'a RootSystem,
    norms: HashMap<Vec<i64>, Scalar>,
    memo: Mutex<HashMap<(Vec<i64>, Vec<i64>), Scalar>>,
}

impl<'a> Constants<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let mut norms = HashMap::new();
        for r in rs.positive_roots() {
            let n = rs.inner(r, r);
            norms.insert(neg(r), n.clone());
            norms.insert(r.clone(), n);
        }
        Constants {
            rs,
            norms,
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn is_root(&self, v: &[i64]) -> bool {
        self.norms.contains_key(v)
    }

    fn norm(&self, v: &[i64]) -> &Scalar {
        &self.norms[v]
    }

    /// `N_{r,s}`, zero unless `r + s` is a root.
    fn n(&self, r: &[i64], s: &[i64]) -> Scalar {
        let sum = add(r, s);
        if !self.is_root(&sum) {
            return Scalar::zero();
        }
        let key = (r.to_vec(), s.to_vec());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.compute(r, s, &sum);
        self.memo.lock().unwrap().insert(key, v.clone());
        v
    }

    fn compute(&self, r: &[i64], s: &[i64], sum: &[i64]) -> Scalar {
        let pos = |v: &[i64]| v.iter().all(|&c| c >= 0);
        match (pos(r), pos(s)) {
            (true, true) => {
                let ord = crate::cartan::root_order(r, s);
                if ord == std::cmp::Ordering::Greater {
                    return -self.n(s, r);
                }
                let (alpha, beta) = self.extraspecial(sum);
                if alpha == r {
                    let mut p = 0;
                    let mut probe = sub(&beta, &alpha);
                    while self.is_root(&probe) {
                        p += 1;
                        probe = sub(&probe, &alpha);
                    }
                    return scalar::int(p + 1);
                }
                // Jacobi on e_α, e_β, e_{−r}, e_{−s}
                let n_ab = self.n(&alpha, &beta);
                let mut acc = Scalar::zero();
                let br = sub(&beta, r);
                if self.is_root(&br) {
                    acc += self.n(&beta, &neg(r)) * self.n(&alpha, &neg(s)) / self.norm(&br);
                }
                let ar = sub(&alpha, r);
                if self.is_root(&ar) {
                    acc += self.n(&neg(r), &alpha) * self.n(&beta, &neg(s)) / self.norm(&ar);
                }
                self.norm(sum).clone() / n_ab * acc
            }
            (false, false) => -self.n(&neg(r), &neg(s)),
            (r_pos, _) => {
                // r + s + t = 0: N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)
                let t = neg(sum);
                let tt = self.norm(&t).clone();
                if pos(&t) == r_pos {
                    tt / self.norm(s) * self.n(&t, r)
                } else {
                    tt / self.norm(r) * self.n(s, &t)
                }
            }
        }
    }

    fn extraspecial(&self, xi: &[i64]) -> (Vec<i64>, Vec<i64>) {
        for alpha in self.rs.positive_roots() {
            let beta = sub(xi, alpha);
            if beta.iter().all(|&c| c >= 0) && self.rs.position(&beta).is_some() {
                return (alpha.clone(), beta);
            }
        }
        unreachable!("non-simple positive root without a decomposition")
    }
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

fn root_name(prefix: char, root: &[i64], labels: &[String], reversed: bool) -> String {
    let mut parts: Vec<&str> = Vec::new();
    for (i, &m) in root.iter().enumerate() {
        for _ in 0..m {
            parts.push(&labels[i]);
        }
    }
    if reversed {
        parts.reverse();
    }
    format!("{prefix}{}", parts.concat())
}

impl ChevalleyAlgebra {
    pub fn new(cartan: &CartanMatrix) -> Result<Self, CartanError> {
        if !cartan.is_finite_type() {
            return Err(CartanError::NotFiniteType);
        }
        if !cartan.is_irreducible() {
            return Err(CartanError::NotIrreducible);
        }
        if cartan.n() > MAX_RANK {
            return Err(CartanError::RankTooLarge {
                rank: cartan.n(),
                max: MAX_RANK,
            });
        }
        let rs = RootSystem::new(cartan)?;
        let npos = rs.positive_roots().len();
        let n = cartan.n();
        let dim = 2 * npos + n;
        let labels = cartan.labels();
        let mut names = Vec::with_capacity(dim);
        for r in rs.positive_roots() {
            names.push(root_name('E', r, labels, false));
        }
        for l in labels {
            names.push(format!("H{l}"));
        }
        for r in rs.positive_roots() {
            names.push(root_name('F', r, labels, true));
        }
        let lookup = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), FiniteSym(i)))
            .collect();

        let consts = Constants::new(&rs);
        let weight = |k: usize| -> Vec<i64> {
            if k < npos {
                rs.positive_roots()[k].clone()
            } else if k < npos + n {
                vec![0; n]
            } else {
                neg(&rs.positive_roots()[k - npos - n])
            }
        };
        let index_of_root = |v: &[i64]| -> usize {
            if v.iter().all(|&c| c >= 0) {
                rs.position(v).expect("root")
            } else {
                npos + n + rs.position(&neg(v)).expect("root")
            }
        };
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let (wa, wb) = (weight(a), weight(b));
                let a_cartan = (npos..npos + n).contains(&a);
                let b_cartan = (npos..npos + n).contains(&b);
                let entry = match (a_cartan, b_cartan) {
                    (true, true) => Vec::new(),
                    (true, false) => {
                        let v = rs.pairing(&wb, a - npos);
                        if v == 0 {
                            Vec::new()
                        } else {
                            vec![(b, scalar::int(v))]
                        }
                    }
                    (false, true) => {
                        let v = rs.pairing(&wa, b - npos);
                        if v == 0 {
                            Vec::new()
                        } else {
                            vec![(a, scalar::int(-v))]
                        }
                    }
                    (false, false) => {
                        let sum = add(&wa, &wb);
                        if sum.iter().all(|&c| c == 0) {
                            // [e_r, e_{−r}] = h_r for r > 0
                            let r_pos = a < npos;
                            let r = if r_pos { wa.clone() } else { wb.clone() };
                            let sign = if r_pos { Scalar::one() } else { -Scalar::one() };
                            rs.coroot(&r)
                                .into_iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(i, c)| (npos + i, c * &sign))
                                .collect()
                        } else if consts.is_root(&sum) {
                            vec![(index_of_root(&sum), consts.n(&wa, &wb))]
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[a][b] = entry;
            }
        }

        let mut alg = ChevalleyAlgebra {
            roots: rs,
            names,
            lookup,
            table,
            form: BTreeMap::new(),
            theta: ThetaVectors {
                e0: LieElement::zero(),
                f0: LieElement::zero(),
                h_theta: LieElement::zero(),
                sign: 1,
            },
        };
        alg.form = alg.normalized_killing_form();
        alg.theta = alg.compute_theta();
        Ok(alg)
    }

    pub fn named(name: &str) -> Result<Self, CartanError> {
        Self::new(&CartanMatrix::named(name)?)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        self.roots.cartan()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.cartan().n()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.positive_roots().len()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis(&self) -> Vec<FiniteSym> {
        (0..self.dim()).map(FiniteSym).collect()
    }

    pub fn name(&self, s: FiniteSym) -> &str {
        &self.names[s.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn symbol(&self, name: &str) -> Option<FiniteSym> {
        self.lookup.get(name).copied()
    }

    pub fn kind(&self, s: FiniteSym) -> BasisKind {
        let (p, n) = (self.num_positive(), self.rank());
        if s.0 < p {
            BasisKind::Positive(s.0)
        } else if s.0 < p + n {
            BasisKind::Cartan(s.0 - p)
        } else {
            BasisKind::Negative(s.0 - p - n)
        }
    }

    /// Root of a basis vector; zero for the Cartan part.
    pub fn weight(&self, s: FiniteSym) -> Vec<i64> {
        match self.kind(s) {
            BasisKind::Positive(k) => self.roots.positive_roots()[k].clone(),
            BasisKind::Cartan(_) => vec![0; self.rank()],
            BasisKind::Negative(k) => neg(&self.roots.positive_roots()[k]),
        }
    }

    pub fn e(&self, i: usize) -> FiniteSym {
        let mut root = vec![0; self.rank()];
        root[i] = 1;
        FiniteSym(self.roots.position(&root).expect("simple root"))
    }

    pub fn f(&self, i: usize) -> FiniteSym {
        FiniteSym(self.e(i).0 + self.num_positive() + self.rank())
    }

    pub fn h(&self, i: usize) -> FiniteSym {
        FiniteSym(self.num_positive() + i)
    }

    /// `e_α` for the `k`-th positive root and its partner `f_α`.
    pub fn root_pair(&self, k: usize) -> (FiniteSym, FiniteSym) {
        (
            FiniteSym(k),
            FiniteSym(k + self.num_positive() + self.rank()),
        )
    }

    pub fn cartan_symbols(&self) -> Vec<FiniteSym> {
        (0..self.rank()).map(|i| self.h(i)).collect()
    }

    pub fn highest_root(&self) -> HighestRootData {
        self.roots.highest_root()
    }

    pub fn theta_vectors(&self) -> &ThetaVectors {
        &self.theta
    }

    /// The automorphism with `ω(e_i) = −f_i`, `ω(f_i) = −e_i`, `ω(h) = −h`.
    pub fn omega(&self, x: &LieElement<FiniteSym>) -> LieElement<FiniteSym> {
        let (p, n) = (self.num_positive(), self.rank());
        x.map_linear(|&s| {
            let image = match self.kind(s) {
                BasisKind::Positive(k) => FiniteSym(k + p + n),
                BasisKind::Cartan(_) => s,
                BasisKind::Negative(k) => FiniteSym(k),
            };
            LieElement::term(image, -Scalar::one())
        })
    }

    fn killing(&self, a: usize, b: usize) -> Scalar {
        // tr(ad a ∘ ad b)
        let mut tr = Scalar::zero();
        for k in 0..self.dim() {
            for (m, c) in &self.table[b][k] {
                for (q, d) in &self.table[a][*m] {
                    if *q == k {
                        tr += c * d;
                    }
                }
            }
        }
        tr
    }

    fn normalized_killing_form(&self) -> BTreeMap<(usize, usize), Scalar> {
        let dim = self.dim();
        let mut raw = BTreeMap::new();
        for a in 0..dim {
            for b in 0..dim {
                let v = self.killing(a, b);
                if !v.is_zero() {
                    raw.insert((a, b), v);
                }
            }
        }
        let hr = self.highest_root();
        let h_theta: Vec<(usize, Scalar)> =
            hr.c.iter()
                .enumerate()
                .map(|(i, &c)| (self.h(i).0, scalar::int(c)))
                .collect();
        let mut hh = Scalar::zero();
        for (a, ca) in &h_theta {
            for (b, cb) in &h_theta {
                if let Some(v) = raw.get(&(*a, *b)) {
                    hh += ca * cb * v;
                }
            }
        }
        let scale = scalar::int(2) / hh;
        raw.into_iter().map(|(k, v)| (k, v * &scale)).collect()
    }

    fn compute_theta(&self) -> ThetaVectors {
        let top = self.num_positive() - 1;
        let (e_theta, f_theta) = self.root_pair(top);
        let pairing = self.form_basis(&e_theta, &f_theta);
        let lambda = scalar::rational_sqrt(&(Scalar::one() / pairing))
            .expect("⟨e_θ, f_θ⟩ is the reciprocal of a rational square");
        debug_assert!(lambda.is_positive());
        let f0 = LieElement::term(e_theta, lambda.clone());
        let e0 = LieElement::term(f_theta, lambda);
        let h_theta = self.bracket(&f0, &e0);
        ThetaVectors {
            e0,
            f0,
            h_theta,
            sign: 1,
        }
    }

    pub fn structure_dump(&self) -> StructureDump {
        let pair = |s: &Scalar| scalar::to_i64_pair(s).expect("small structure constant");
        let mut bracket = Vec::new();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                if !self.table[a][b].is_empty() {
                    let terms = self.table[a][b]
                        .iter()
                        .map(|(k, v)| {
                            let (p, q) = pair(v);
                            (*k, p, q)
                        })
                        .collect();
                    bracket.push((a, b, terms));
                }
            }
        }
        let form = self
            .form
            .iter()
            .map(|((a, b), v)| {
                let (p, q) = pair(v);
                (*a, *b, p, q)
            })
            .collect();
        StructureDump {
            basis: self.names.clone(),
            bracket,
            form,
        }
    }

    /// Bracket table as a LaTeX `tabular`, row `x`, column `y`, entry `[x,y]`.
    pub fn latex_table(&self) -> String {
        let tex_name = |s: &str| {
            let (head, tail) = s.split_at(1);
            format!("{head}_{{{tail}}}")
        };
        let mut out = String::new();
        out.push_str(&format!(
            "\\begin{{tabular}}{{c|{}}}\n",
            "c".repeat(self.dim())
        ));
        let header: Vec<String> = self
            .names
            .iter()
            .map(|n| format!("${}$", tex_name(n)))
            .collect();
        out.push_str(&format!(
            "$[\\cdot,\\cdot]$ & {} \\\\\n\\hline\n",
            header.join(" & ")
        ));
        for a in 0..self.dim() {
            let mut cells = vec![format!("${}$", tex_name(&self.names[a]))];
            for b in 0..self.dim() {
                let terms = self.table[a][b]
                    .iter()
                    .map(|(k, v)| (v.clone(), tex_name(&self.names[*k])));
                let body = crate::algebra::render::join_terms(terms, Default::default());
                cells.push(format!("${}$", body.replace('*', "")));
            }
            out.push_str(&cells.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

impl LieAlgebra for ChevalleyAlgebra {
    type Sym = FiniteSym;

    fn add_bracket_basis(
        &self,
        a: &FiniteSym,
        b: &FiniteSym,
        coeff: &Scalar,
        out: &mut LieElement<FiniteSym>,
    ) {
        for (k, v) in &self.table[a.0][b.0] {
            out.add_term(FiniteSym(*k), v * coeff);
        }
    }

    fn symbol_name(&self, s: &FiniteSym) -> String {
        self.names[s.0].clone()
    }
}

impl InvariantForm for ChevalleyAlgebra {
    fn form_basis(&self, a: &FiniteSym, b: &FiniteSym) -> Scalar {
        self.form
            .get(&(a.0, b.0))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ad_power, jacobi_defect};
    use crate::scalar::int;

    fn sym(alg: &ChevalleyAlgebra, name: &str) -> LieElement<FiniteSym> {
        LieElement::basis(alg.symbol(name).unwrap())
    }

    #[test]
    fn a2_basis_and_named_brackets() {
        let a2 = ChevalleyAlgebra::named("A2").unwrap();
        assert_eq!(
            a2.names(),
            &["E1", "E2", "E12", "H1", "H2", "F1", "F2", "F21"]
        );
        let b = |x: &str, y: &str| a2.bracket(&sym(&a2, x), &sym(&a2, y));
        assert_eq!(b("E1", "E2"), sym(&a2, "E12"));
        assert_eq!(b("F2", "F1"), sym(&a2, "F21"));
        assert_eq!(b("E1", "F1"), sym(&a2, "H1"));
        assert_eq!(b("H1", "E1"), sym(&a2, "E1").scaled(&int(2)));
        assert_eq!(b("E12", "F21"), &sym(&a2, "H1") + &sym(&a2, "H2"));
    }

    #[test]
    fn sl2_relations() {
        let a1 = ChevalleyAlgebra::named("A1").unwrap();
        assert_eq!(a1.dim(), 3);
        let (e, f, h) = (sym(&a1, "E1"), sym(&a1, "F1"), sym(&a1, "H1"));
        assert_eq!(a1.bracket(&e, &f), h);
        assert_eq!(a1.bracket(&h, &e), e.scaled(&int(2)));
        assert_eq!(a1.bracket(&h, &f), f.scaled(&int(-2)));
    }

    #[test]
    fn dimensions() {
        for (name, dim) in [("A3", 15), ("A4", 24), ("B2", 10), ("G2", 14)] {
            assert_eq!(ChevalleyAlgebra::named(name).unwrap().dim(), dim);
        }
        let a5 = CartanMatrix::named("A5").unwrap();
        assert_eq!(
            ChevalleyAlgebra::new(&a5).unwrap_err(),
            CartanError::RankTooLarge { rank: 5, max: 4 }
        );
    }

    #[test]
    fn b2_long_name() {
        let b2 = ChevalleyAlgebra::named("B2").unwrap();
        assert!(b2.symbol("E112").is_some());
        assert!(b2.symbol("F211").is_some());
    }

    fn check_invariants(alg: &ChevalleyAlgebra) {
        let basis: Vec<LieElement<FiniteSym>> =
            alg.basis().into_iter().map(LieElement::basis).collect();
        for x in &basis {
            for y in &basis {
                assert_eq!(alg.bracket(x, y), -alg.bracket(y, x));
                for z in &basis {
                    assert!(jacobi_defect(alg, x, y, z).is_zero());
                    assert_eq!(
                        alg.form(&alg.bracket(x, y), z),
                        alg.form(x, &alg.bracket(y, z))
                    );
                }
                assert_eq!(
                    alg.omega(&alg.bracket(x, y)),
                    alg.bracket(&alg.omega(x), &alg.omega(y))
                );
                assert_eq!(alg.form(x, y), alg.form(y, x));
            }
            assert_eq!(&alg.omega(&alg.omega(x)), x);
        }
        let n = alg.rank();
        for i in 0..n {
            for j in 0..n {
                let ef = alg.bracket(&LieElement::basis(alg.e(i)), &LieElement::basis(alg.f(j)));
                let expect = if i == j {
                    LieElement::basis(alg.h(i))
                } else {
                    LieElement::zero()
                };
                assert_eq!(ef, expect);
                if i != j {
                    let k = (1 - alg.cartan().get(i, j)) as usize;
                    let ei = LieElement::basis(alg.e(i));
                    let fi = LieElement::basis(alg.f(i));
                    assert!(ad_power(alg, &ei, k, &LieElement::basis(alg.e(j))).is_zero());
                    assert!(ad_power(alg, &fi, k, &LieElement::basis(alg.f(j))).is_zero());
                }
            }
        }
        let t = alg.theta_vectors();
        assert_eq!(alg.form(&t.f0, &t.e0), int(1));
        assert_eq!(alg.omega(&t.f0), -t.e0.clone());
        assert_eq!(alg.bracket(&t.h_theta, &t.f0), t.f0.scaled(&int(2)));
        assert_eq!(alg.form(&t.h_theta, &t.h_theta), int(2));
    }

    #[test]
    fn invariants_rank_two_and_below() {
        for name in ["A1", "A2", "B2", "G2"] {
            check_invariants(&ChevalleyAlgebra::named(name).unwrap());
        }
    }

    #[test]
    fn invariants_a3() {
        check_invariants(&ChevalleyAlgebra::named("A3").unwrap());
    }

    #[test]
    fn root_space_grading() {
        let alg = ChevalleyAlgebra::named("G2").unwrap();
        for a in alg.basis() {
            for b in alg.basis() {
                let sum = add(&alg.weight(a), &alg.weight(b));
                for k in alg.bracket_basis(&a, &b).keys() {
                    assert_eq!(alg.weight(*k), sum);
                }
            }
        }
    }

    #[test]
    fn form_values() {
        let a2 = ChevalleyAlgebra::named("A2").unwrap();
        assert_eq!(a2.form(&sym(&a2, "E1"), &sym(&a2, "F1")), int(1));
        assert_eq!(a2.form(&sym(&a2, "E1"), &sym(&a2, "E2")), int(0));
        assert_eq!(a2.form(&sym(&a2, "H1"), &sym(&a2, "H2")), int(-1));
        // ⟨e_α, f_α⟩ = 2/(α,α) once (θ,θ) = 2
        for name in ["B2", "G2", "A3"] {
            let alg = ChevalleyAlgebra::named(name).unwrap();
            let rs = alg.root_system();
            let theta = rs.highest_root().a;
            let scale = int(2) / rs.inner(&theta, &theta);
            for (k, r) in rs.positive_roots().iter().enumerate() {
                let (e, f) = alg.root_pair(k);
                let expect = int(2) / (rs.inner(r, r) * &scale);
                assert_eq!(alg.form_basis(&e, &f), expect);
            }
        }
        let b2 = ChevalleyAlgebra::named("B2").unwrap();
        assert_eq!(b2.form(&sym(&b2, "E1"), &sym(&b2, "F1")), int(2));
        assert_eq!(b2.form(&sym(&b2, "H1"), &sym(&b2, "H1")), int(4));
        assert_eq!(b2.form(&sym(&b2, "E2"), &sym(&b2, "F2")), int(1));
    }

    #[test]
    fn omega_and_theta_in_a2() {
        let a2 = ChevalleyAlgebra::named("A2").unwrap();
        assert_eq!(a2.omega(&sym(&a2, "E1")), -sym(&a2, "F1"));
        assert_eq!(a2.omega(&sym(&a2, "E12")), -sym(&a2, "F21"));
        let t = a2.theta_vectors();
        assert_eq!(t.f0, sym(&a2, "E12"));
        assert_eq!(t.e0, sym(&a2, "F21"));
        assert_eq!(t.h_theta, &sym(&a2, "H1") + &sym(&a2, "H2"));
        let a1 = ChevalleyAlgebra::named("A1").unwrap();
        assert_eq!(a1.theta_vectors().f0, sym(&a1, "E1"));
    }

    #[test]
    fn dump_shapes() {
        let a1 = ChevalleyAlgebra::named("A1").unwrap();
        let d = a1.structure_dump();
        assert_eq!(d.basis, vec!["E1", "H1", "F1"]);
        assert!(d.bracket.contains(&(0, 2, vec![(1, 1, 1)])));
        assert!(d.form.contains(&(1, 1, 2, 1)));
        assert!(a1.latex_table().contains("$H_{1}$"));
    }
}
