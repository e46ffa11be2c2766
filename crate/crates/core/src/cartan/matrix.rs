use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CartanError;
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};

/// A validated generalized Cartan matrix, with the convention
/// `entries[i][j] = α_j(h_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    labels: Vec<String>,
}

/// Positive diagonal `d` with `C·diag(d)` symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrizer {
    pub d: Vec<Scalar>,
}

impl CartanMatrix {
    /// Checks the three GCM axioms; labels default to `1..=n`.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let labels = (1..=entries.len()).map(|i| i.to_string()).collect();
        Self::with_labels(entries, labels)
    }

    pub fn with_labels(entries: Vec<Vec<i64>>, labels: Vec<String>) -> Result<Self, CartanError> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(CartanError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        if labels.len() != n {
            return Err(CartanError::LabelCount {
                labels: labels.len(),
                n,
            });
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(CartanError::DiagonalNotTwo {
                    i,
                    value: entries[i][i],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(CartanError::PositiveOffDiagonal {
                        i,
                        j,
                        value: entries[i][j],
                    });
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    let (i, j) = if entries[i][j] == 0 { (i, j) } else { (j, i) };
                    return Err(CartanError::AsymmetricZeroPattern { i, j });
                }
            }
        }
        Ok(CartanMatrix { entries, labels })
    }

    /// Named finite types: `A1`..`A8`, `B2`, `G2`.
    pub fn named(name: &str) -> Result<Self, CartanError> {
        let unknown = || CartanError::UnknownType(name.to_string());
        let (series, rank) = name.split_at(1.min(name.len()));
        let rank: usize = rank.parse().map_err(|_| unknown())?;
        let entries = match (series, rank) {
            ("A", 1..=8) => {
                let mut m = vec![vec![0; rank]; rank];
                for i in 0..rank {
                    m[i][i] = 2;
                    if i + 1 < rank {
                        m[i][i + 1] = -1;
                        m[i + 1][i] = -1;
                    }
                }
                m
            }
            ("B", 2) => vec![vec![2, -2], vec![-1, 2]],
            ("G", 2) => vec![vec![2, -1], vec![-3, 2]],
            _ => return Err(unknown()),
        };
        CartanMatrix::new(entries)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_i64(&self.entries)
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.n();
        CartanMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
            labels: self.labels.clone(),
        }
    }

    /// Principal submatrix on `indices`, keeping their labels.
    pub fn submatrix(&self, indices: &[usize]) -> CartanMatrix {
        CartanMatrix {
            entries: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Connected components of the Dynkin graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(i) = queue.pop_front() {
                comp.push(i);
                for j in 0..n {
                    if !seen[j] && self.entries[i][j] != 0 {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_irreducible(&self) -> bool {
        self.components().len() == 1
    }

    /// Minimal positive-integer `d` (per Dynkin component) with
    /// `C_ij d_j = C_ji d_i`.
    pub fn symmetrize(&self) -> Result<Symmetrizer, CartanError> {
        let n = self.n();
        let mut d: Vec<Option<Scalar>> = vec![None; n];
        for comp in self.components() {
            let root = comp[0];
            d[root] = Some(Scalar::one());
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let di = d[i].clone().expect("visited");
                for &j in &comp {
                    if i == j || self.entries[i][j] == 0 {
                        continue;
                    }
                    // C_ij d_j = C_ji d_i
                    let dj =
                        &di * scalar::int(self.entries[j][i]) / scalar::int(self.entries[i][j]);
                    match &d[j] {
                        None => {
                            d[j] = Some(dj);
                            queue.push_back(j);
                        }
                        Some(existing) if *existing != dj => {
                            return Err(CartanError::NotSymmetrizable)
                        }
                        Some(_) => {}
                    }
                }
            }
            // scale this component to the smallest positive integers
            let lcm = comp
                .iter()
                .map(|&i| d[i].as_ref().unwrap().denom().clone())
                .fold(num_bigint::BigInt::one(), |a, b| a.lcm(&b));
            let ints: Vec<num_bigint::BigInt> = comp
                .iter()
                .map(|&i| (d[i].as_ref().unwrap() * Scalar::from_integer(lcm.clone())).to_integer())
                .collect();
            let g = ints
                .iter()
                .fold(num_bigint::BigInt::zero(), |a, b| a.gcd(b));
            for (&i, v) in comp.iter().zip(ints) {
                d[i] = Some(Scalar::from_integer(v / &g));
            }
        }
        let d: Vec<Scalar> = d.into_iter().map(|x| x.expect("all visited")).collect();
        debug_assert!(d.iter().all(|x| x.is_positive()));
        Ok(Symmetrizer { d })
    }

    /// Squared root lengths `ℓ_i = (α_i, α_i)` up to a common scale per
    /// component: the positive `ℓ` with `ℓ_i C_ij = ℓ_j C_ji`.
    pub fn root_lengths(&self) -> Result<Vec<Scalar>, CartanError> {
        Ok(self.transpose().symmetrize()?.d)
    }

    /// `C · diag(d)`.
    pub fn symmetrized(&self) -> Result<Matrix, CartanError> {
        let d = self.symmetrize()?.d;
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = scalar::int(self.entries[i][j]) * &d[j];
            }
        }
        Ok(m)
    }

    /// Finite type: symmetrizable with positive-definite symmetrization.
    pub fn is_finite_type(&self) -> bool {
        self.symmetrized()
            .map(|m| m.is_positive_definite())
            .unwrap_or(false)
    }

    pub fn to_json(&self) -> CartanJson {
        CartanJson {
            n: self.n(),
            entries: self.entries.clone(),
            symmetrizer: self.symmetrize().ok().map(|s| {
                s.d.iter()
                    .map(|v| {
                        let (p, q) = scalar::to_i64_pair(v).expect("small symmetrizer");
                        [p, q]
                    })
                    .collect()
            }),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(json: &CartanJson) -> Result<Self, CartanError> {
        let m = CartanMatrix::with_labels(json.entries.clone(), json.labels.clone())?;
        if m.n() != json.n {
            return Err(CartanError::NotSquare {
                rows: json.n,
                cols: m.n(),
            });
        }
        Ok(m)
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// JSON form `{"n", "entries", "symmetrizer": [[num, den]], "labels"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    pub n: usize,
    pub entries: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizer: Option<Vec<[i64; 2]>>,
    pub labels: Vec<String>,
}
