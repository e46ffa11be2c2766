use crate::error::CartanError;
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};

use super::roots::{affinize, highest_root};
use super::CartanMatrix;

/// A realization: coroots `h_i ∈ H` (rows of `coroots`) and roots
/// `α_j ∈ H*` (rows of `roots`) in dual coordinates, with
/// `α_j(h_i) = C_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub cartan: CartanMatrix,
    pub dim_h: usize,
    pub coroots: Matrix,
    pub roots: Matrix,
}

impl RootDatum {
    pub fn n(&self) -> usize {
        self.cartan.n()
    }

    /// `α_j(v)` for `v ∈ H` in coordinates.
    pub fn eval_root(&self, j: usize, v: &[Scalar]) -> Scalar {
        self.roots
            .row(j)
            .iter()
            .zip(v)
            .fold(scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn validate(&self) -> Result<(), CartanError> {
        let n = self.n();
        let bad = |m: String| Err(CartanError::InvalidSubDatum(m));
        if self.coroots.rows() != n || self.roots.rows() != n {
            return bad("wrong number of simple (co)roots".into());
        }
        if self.coroots.cols() != self.dim_h || self.roots.cols() != self.dim_h {
            return bad("coordinate dimension mismatch".into());
        }
        if self.coroots.rank() != n || self.roots.rank() != n {
            return bad("simple (co)roots are not linearly independent".into());
        }
        for i in 0..n {
            for j in 0..n {
                if self.eval_root(j, self.coroots.row(i)) != scalar::int(self.cartan.get(i, j)) {
                    return bad(format!("α_{j}(h_{i}) differs from C_{i}{j}"));
                }
            }
        }
        Ok(())
    }
}

/// Realization of dimension `2n − rank`: coroots are the first `n`
/// standard vectors; `α_j` carries column `j` of `C`, and the simple roots
/// whose columns are dependent get a unit vector in the extra coordinates.
pub fn minimal_realization(cartan: &CartanMatrix) -> RootDatum {
    let n = cartan.n();
    let rank = cartan.rank();
    let dim_h = 2 * n - rank;
    let mut coroots = Matrix::zeros(n, dim_h);
    for i in 0..n {
        coroots[(i, i)] = scalar::one();
    }
    let mut roots = Matrix::zeros(n, dim_h);
    for j in 0..n {
        for i in 0..n {
            roots[(j, i)] = scalar::int(cartan.get(i, j));
        }
    }
    // greedily keep independent columns; the rest get extra coordinates
    let mut kept: Vec<Vec<Scalar>> = Vec::new();
    let mut extra = n;
    for j in 0..n {
        let col: Vec<Scalar> = (0..n).map(|i| scalar::int(cartan.get(i, j))).collect();
        let mut trial = kept.clone();
        trial.push(col.clone());
        if Matrix::from_rows(trial).rank() == kept.len() + 1 {
            kept.push(col);
        } else {
            roots[(j, extra)] = scalar::one();
            extra += 1;
        }
    }
    debug_assert_eq!(extra, dim_h);
    RootDatum {
        cartan: cartan.clone(),
        dim_h,
        coroots,
        roots,
    }
}

/// The affine datum on `H = span(h_1..h_l) ⊕ kc ⊕ kd` with
/// `h_0 = c − Σ c_i h_i`, `α_0(d) = 1` and `α_j(c) = α_j(d) = 0`.
pub fn affine_realization(cartan: &CartanMatrix) -> Result<RootDatum, CartanError> {
    let affine = affinize(cartan)?;
    let hr = highest_root(cartan)?;
    let l = cartan.n();
    let dim_h = l + 2;
    let mut coroots = Matrix::zeros(l + 1, dim_h);
    for k in 0..l {
        coroots[(0, k)] = scalar::int(-hr.c[k]);
        coroots[(k + 1, k)] = scalar::one();
    }
    coroots[(0, l)] = scalar::one();
    let mut roots = Matrix::zeros(l + 1, dim_h);
    for k in 0..l {
        roots[(0, k)] = scalar::int(affine.get(k + 1, 0));
        for j in 0..l {
            roots[(j + 1, k)] = scalar::int(cartan.get(k, j));
        }
    }
    roots[(0, l + 1)] = scalar::one();
    let datum = RootDatum {
        cartan: affine,
        dim_h,
        coroots,
        roots,
    };
    datum.validate()?;
    Ok(datum)
}

/// `ι: J → I` with a linear `s: H′ → H` (columns are images of the inner
/// coordinate vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubRootDatum {
    pub inner: RootDatum,
    pub outer: RootDatum,
    pub iota: Vec<usize>,
    pub s: Matrix,
}

impl SubRootDatum {
    pub fn new(
        inner: RootDatum,
        outer: RootDatum,
        iota: Vec<usize>,
        s: Matrix,
    ) -> Result<Self, CartanError> {
        let sd = SubRootDatum {
            inner,
            outer,
            iota,
            s,
        };
        sd.validate()?;
        Ok(sd)
    }

    /// Checks `C′_ij = C_ι(i)ι(j)`, injectivity, `s(h′_i) = h_ι(i)` and
    /// `α_ι(i) ∘ s = α′_i`.
    pub fn validate(&self) -> Result<(), CartanError> {
        let bad = |m: String| Err(CartanError::InvalidSubDatum(m));
        let (m, n) = (self.inner.n(), self.outer.n());
        if self.iota.len() != m {
            return bad("ι has the wrong length".into());
        }
        let mut seen = vec![false; n];
        for &k in &self.iota {
            if k >= n || seen[k] {
                return bad("ι is not an injection".into());
            }
            seen[k] = true;
        }
        for i in 0..m {
            for j in 0..m {
                if self.inner.cartan.get(i, j) != self.outer.cartan.get(self.iota[i], self.iota[j])
                {
                    return bad(format!("C′_{i}{j} differs from the outer entry"));
                }
            }
        }
        if self.s.rows() != self.outer.dim_h || self.s.cols() != self.inner.dim_h {
            return bad("s has the wrong shape".into());
        }
        if self.s.rank() != self.inner.dim_h {
            return bad("s is not injective".into());
        }
        let st = self.s.transpose();
        for i in 0..m {
            let image = self.s.mul_vec(self.inner.coroots.row(i));
            if image != self.outer.coroots.row(self.iota[i]) {
                return bad(format!("s(h′_{i}) differs from h_ι({i})"));
            }
            // α_ι(i) ∘ s as a covector on H′
            let pulled = st.mul_vec(self.outer.roots.row(self.iota[i]));
            if pulled != self.inner.roots.row(i) {
                return bad(format!("α_ι({i}) ∘ s differs from α′_{i}"));
            }
        }
        Ok(())
    }

    /// `D = I ∖ ι(J)`.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.outer.n())
            .filter(|k| !self.iota.contains(k))
            .collect()
    }

    pub fn chi(&self, k: usize) -> i64 {
        i64::from(!self.iota.contains(&k))
    }
}

/// `deg e_i = χ_D(i)`, `deg f_i = −χ_D(i)`, Cartan in degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorGrading {
    pub deg_e: Vec<i64>,
}

impl GeneratorGrading {
    pub fn deg_f(&self, i: usize) -> i64 {
        -self.deg_e[i]
    }
}

pub fn grading_from_subdatum(sd: &SubRootDatum) -> GeneratorGrading {
    GeneratorGrading {
        deg_e: (0..sd.outer.n()).map(|k| sd.chi(k)).collect(),
    }
}

/// The finite datum inside its affinization, `ι(i) = i`, `D = {0}`.
pub fn affinization_subdatum(cartan: &CartanMatrix) -> Result<SubRootDatum, CartanError> {
    let outer = affine_realization(cartan)?;
    let inner = minimal_realization(cartan);
    let l = cartan.n();
    if inner.dim_h != l {
        return Err(CartanError::NotFiniteType);
    }
    let mut s = Matrix::zeros(outer.dim_h, l);
    for k in 0..l {
        s[(k, k)] = scalar::one();
    }
    SubRootDatum::new(inner, outer, (1..=l).collect(), s)
}

/// Deletes the node with the given label from a nonsingular Cartan matrix.
pub fn node_deletion(cartan: &CartanMatrix, label: &str) -> Result<SubRootDatum, CartanError> {
    let del = cartan
        .index_of(label)
        .ok_or_else(|| CartanError::InvalidSubDatum(format!("no node labelled `{label}`")))?;
    let n = cartan.n();
    if cartan.rank() != n {
        return Err(CartanError::InvalidSubDatum(
            "node deletion needs a nonsingular Cartan matrix".into(),
        ));
    }
    let iota: Vec<usize> = (0..n).filter(|&k| k != del).collect();
    let sub = cartan.submatrix(&iota);
    let inner = minimal_realization(&sub);
    if inner.dim_h != iota.len() {
        return Err(CartanError::InvalidSubDatum(
            "the remaining submatrix is singular".into(),
        ));
    }
    let outer = minimal_realization(cartan);
    let mut s = Matrix::zeros(n, iota.len());
    for (k, &i) in iota.iter().enumerate() {
        s[(i, k)] = scalar::one();
    }
    SubRootDatum::new(inner, outer, iota, s)
}
