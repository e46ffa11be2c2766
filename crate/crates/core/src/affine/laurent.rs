//! Laurent polynomials in `t` with exact coefficients.

use crate::algebra::Combination;
use crate::scalar::{self, Scalar};

/// `Σ ζ_i tⁱ`, keyed by exponent.
pub type Laurent = Combination<i64>;

pub fn monomial(exp: i64) -> Laurent {
    Laurent::basis(exp)
}

/// `Res(Σ ζ_i tⁱ) = ζ_{−1}`.
pub fn residue(p: &Laurent) -> Scalar {
    p.coeff(&-1)
}

pub fn derivative(p: &Laurent) -> Laurent {
    p.iter()
        .map(|(&e, c)| (e - 1, c * scalar::int(e)))
        .collect()
}

pub fn mul(p: &Laurent, q: &Laurent) -> Laurent {
    let mut out = Laurent::zero();
    for (a, ca) in p {
        for (b, cb) in q {
            out.add_term(a + b, ca * cb);
        }
    }
    out
}

/// The central cocycle coefficient `Res((dp/dt)·q)`.
pub fn cocycle(p: &Laurent, q: &Laurent) -> Scalar {
    residue(&mul(&derivative(p), q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    #[test]
    fn residues() {
        assert_eq!(residue(&monomial(-1)), int(1));
        assert_eq!(residue(&monomial(2)), int(0));
        let p: Laurent = [(2, int(3)), (-3, int(-5))].into_iter().collect();
        assert_eq!(residue(&derivative(&p)), int(0));
    }

    fn laurent() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec((-5i64..=5, -9i64..=9), 0..6)
            .prop_map(|terms| terms.into_iter().map(|(e, c)| (e, int(c))).collect())
    }

    proptest! {
        #[test]
        fn cocycle_is_antisymmetric(p in laurent(), q in laurent()) {
            prop_assert_eq!(cocycle(&p, &q), -cocycle(&q, &p));
        }
    }
}
