use crate::affine::{AffineAlgebra, AffineSym, DegreeWindow, Triple};
use crate::algebra::{InvariantForm, LieElement};
use crate::cartan::CartanMatrix;
use crate::finite::{BasisKind, ChevalleyAlgebra, FiniteSym};

/// What the cobracket machinery needs from a concrete Kac–Moody algebra.
pub trait KacMoody: InvariantForm {
    /// Cartan matrix indexing the Chevalley triples.
    fn km_cartan(&self) -> &CartanMatrix;

    fn triples(&self) -> Vec<Triple<Self::Sym>>;

    /// Basis of the Cartan subalgebra (including `c`, `d` when present).
    fn cartan_symbols(&self) -> Vec<Self::Sym>;

    fn is_cartan(&self, s: &Self::Sym) -> bool;

    /// Root of a basis vector over the simple roots of `km_cartan`.
    fn root_coordinates(&self, s: &Self::Sym) -> Vec<i64>;

    /// Degree used for windows: the loop degree, or 0 when finite.
    fn window_degree(&self, s: &Self::Sym) -> i64;

    /// Basis vectors with window degree in `[lo, hi]`.
    fn basis_window(&self, lo: i64, hi: i64) -> Vec<Self::Sym>;

    fn is_finite_dimensional(&self) -> bool;

    fn label(&self) -> String;
}

impl KacMoody for ChevalleyAlgebra {
    fn km_cartan(&self) -> &CartanMatrix {
        self.cartan()
    }

    fn triples(&self) -> Vec<Triple<FiniteSym>> {
        (0..self.rank())
            .map(|i| Triple {
                e: LieElement::basis(self.e(i)),
                f: LieElement::basis(self.f(i)),
                h: LieElement::basis(self.h(i)),
            })
            .collect()
    }

    fn cartan_symbols(&self) -> Vec<FiniteSym> {
        ChevalleyAlgebra::cartan_symbols(self)
    }

    fn is_cartan(&self, s: &FiniteSym) -> bool {
        matches!(self.kind(*s), BasisKind::Cartan(_))
    }

    fn root_coordinates(&self, s: &FiniteSym) -> Vec<i64> {
        self.weight(*s)
    }

    fn window_degree(&self, _: &FiniteSym) -> i64 {
        0
    }

    fn basis_window(&self, _: i64, _: i64) -> Vec<FiniteSym> {
        self.basis()
    }

    fn is_finite_dimensional(&self) -> bool {
        true
    }

    fn label(&self) -> String {
        finite_label(self.cartan())
    }
}

impl KacMoody for AffineAlgebra {
    fn km_cartan(&self) -> &CartanMatrix {
        self.affine_cartan()
    }

    fn triples(&self) -> Vec<Triple<AffineSym>> {
        self.serre_generators()
    }

    fn cartan_symbols(&self) -> Vec<AffineSym> {
        let mut out: Vec<AffineSym> = self
            .finite()
            .cartan_symbols()
            .into_iter()
            .map(|h| self.loop_sym(0, h))
            .collect();
        out.push(AffineSym::C);
        out.push(AffineSym::D);
        out
    }

    fn is_cartan(&self, s: &AffineSym) -> bool {
        match s {
            AffineSym::Loop { degree, index } => {
                *degree == 0 && matches!(self.finite().kind(*index), BasisKind::Cartan(_))
            }
            _ => true,
        }
    }

    fn root_coordinates(&self, s: &AffineSym) -> Vec<i64> {
        AffineAlgebra::root_coordinates(self, s)
    }

    fn window_degree(&self, s: &AffineSym) -> i64 {
        s.degree()
    }

    fn basis_window(&self, lo: i64, hi: i64) -> Vec<AffineSym> {
        AffineAlgebra::basis_window(self, DegreeWindow::new(lo, hi))
    }

    fn is_finite_dimensional(&self) -> bool {
        false
    }

    fn label(&self) -> String {
        format!("affine:{}", finite_label(self.finite().cartan()))
    }
}

fn finite_label(c: &CartanMatrix) -> String {
    for name in ["A1", "A2", "A3", "A4", "B2", "G2"] {
        if CartanMatrix::named(name).as_ref() == Ok(c) {
            return name.to_string();
        }
    }
    format!("{:?}", c.entries())
}
