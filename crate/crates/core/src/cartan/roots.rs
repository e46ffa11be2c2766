use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use crate::error::CartanError;
use crate::scalar::{self, Scalar};

use super::CartanMatrix;

/// Root system of a finite-type Cartan matrix, with positive roots sorted by
/// height and then by coefficient vector (earlier simple roots first).
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<Vec<i64>>,
    lengths: Vec<Scalar>,
}

/// `θ = Σ a_i α_i` and `h_θ = Σ c_i h_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestRootData {
    pub a: Vec<i64>,
    pub c: Vec<i64>,
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

/// Height first; within a height, `α_1` beats `α_2` and so on.
pub fn root_order(a: &[i64], b: &[i64]) -> Ordering {
    height(a).cmp(&height(b)).then_with(|| b.cmp(a))
}

impl RootSystem {
    pub fn new(cartan: &CartanMatrix) -> Result<Self, CartanError> {
        if !cartan.is_finite_type() {
            return Err(CartanError::NotFiniteType);
        }
        let n = cartan.n();
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                // s_i(β) = β − β(h_i) α_i
                let p: i64 = (0..n).map(|j| beta[j] * cartan.get(i, j)).sum();
                let mut image = beta.clone();
                image[i] -= p;
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| root_order(a, b));
        Ok(RootSystem {
            cartan: cartan.clone(),
            positive,
            lengths: cartan.root_lengths()?,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.n()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn position(&self, root: &[i64]) -> Option<usize> {
        self.positive.iter().position(|r| r == root)
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if v.iter().all(|&c| c >= 0) {
            self.position(v).is_some()
        } else {
            let neg: Vec<i64> = v.iter().map(|c| -c).collect();
            self.position(&neg).is_some()
        }
    }

    /// `(α_i, α_j)` up to the global scale of the root lengths.
    pub fn simple_inner(&self, i: usize, j: usize) -> Scalar {
        scalar::int(self.cartan.get(i, j)) * &self.lengths[i] / scalar::int(2)
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Scalar {
        let n = self.rank();
        let mut s = scalar::zero();
        for i in 0..n {
            for j in 0..n {
                if a[i] != 0 && b[j] != 0 {
                    s += scalar::int(a[i] * b[j]) * self.simple_inner(i, j);
                }
            }
        }
        s
    }

    /// Coefficients of the coroot `h_β` in the simple coroots.
    pub fn coroot(&self, beta: &[i64]) -> Vec<Scalar> {
        let norm = self.inner(beta, beta);
        (0..self.rank())
            .map(|i| scalar::int(beta[i]) * &self.lengths[i] / &norm)
            .collect()
    }

    /// `β(h_i)`.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank())
            .map(|j| beta[j] * self.cartan.get(i, j))
            .sum()
    }

    pub fn highest_root(&self) -> HighestRootData {
        let theta = self.positive.last().expect("nonempty").clone();
        let c = self
            .coroot(&theta)
            .iter()
            .map(|v| {
                assert!(v.is_integer(), "coroot coefficient of θ must be integral");
                scalar::to_i64_pair(v).expect("small").0
            })
            .collect();
        HighestRootData { a: theta, c }
    }
}

pub fn highest_root(cartan: &CartanMatrix) -> Result<HighestRootData, CartanError> {
    Ok(RootSystem::new(cartan)?.highest_root())
}

/// `C̃` indexed `0..=l`: `C̃_{i0} = −Σ_j a_j C_ij`, `C̃_{0j} = −Σ_i c_i C_ij`.
pub fn affinize(cartan: &CartanMatrix) -> Result<CartanMatrix, CartanError> {
    if !cartan.is_finite_type() {
        return Err(CartanError::NotFiniteType);
    }
    if !cartan.is_irreducible() {
        return Err(CartanError::NotIrreducible);
    }
    let HighestRootData { a, c } = highest_root(cartan)?;
    let l = cartan.n();
    let mut m = vec![vec![0i64; l + 1]; l + 1];
    m[0][0] = 2;
    for i in 0..l {
        m[i + 1][0] = -(0..l).map(|j| a[j] * cartan.get(i, j)).sum::<i64>();
        m[0][i + 1] = -(0..l).map(|k| c[k] * cartan.get(k, i)).sum::<i64>();
        for j in 0..l {
            m[i + 1][j + 1] = cartan.get(i, j);
        }
    }
    let mut labels = vec!["0".to_string()];
    labels.extend(cartan.labels().iter().cloned());
    CartanMatrix::with_labels(m, labels)
}
