//! Constructive antiLaplacian: given g, build u with Δu = g and
//! deg u = deg g + 2.
//!
//! The recursion on a monomial x^α absorbs two powers into the first
//! variable:
//!
//!   Δ(x1²x^α/((α1+1)(α1+2))) = x^α + Σ_{k≥2} (α_k(α_k−1)/((α1+1)(α1+2)))·x1²x^α/x_k²
//!
//! so each correction term trades α_k ≥ 2 for α_k − 2 while raising α1 by 2.
//! Σ_{k≥2} α_k strictly decreases, and once every α_k ≤ 1 for k ≥ 2 the
//! candidate itself is an antiLaplacian. The absorbing axis is always x1,
//! which makes the construction deterministic.

use std::collections::HashMap;

use num::BigInt;

use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::rational::Rational;

pub fn anti_laplacian(g: &Polynomial) -> Polynomial {
    let dim = g.dim();
    let mut memo: HashMap<MultiIndex, Polynomial> = HashMap::new();
    let mut out = Polynomial::zero(dim);
    for (alpha, c) in g.terms() {
        let u = anti_monomial(dim, alpha, &mut memo);
        out = &out + &u.scale(c);
    }
    out
}

fn anti_monomial(
    dim: usize,
    alpha: &MultiIndex,
    memo: &mut HashMap<MultiIndex, Polynomial>,
) -> Polynomial {
    if let Some(hit) = memo.get(alpha) {
        return hit.clone();
    }
    let a1 = alpha.exponent(0) as u64;
    let denom = Rational::from(BigInt::from((a1 + 1) * (a1 + 2)));
    let lifted = alpha.raised(0, 2);
    let mut u = Polynomial::monomial(dim, lifted.clone(), Rational::from(BigInt::from(1)) / &denom);
    for k in 1..dim {
        let ak = alpha.exponent(k) as u64;
        if ak >= 2 {
            let shifted = lifted.lowered(k, 2).unwrap();
            let coeff = Rational::from(BigInt::from(ak * (ak - 1))) / &denom;
            let sub = anti_monomial(dim, &shifted, memo);
            u = &u - &sub.scale(&coeff);
        }
    }
    memo.insert(alpha.clone(), u.clone());
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn mi(exps: &[u32]) -> MultiIndex {
        MultiIndex::new(exps.to_vec())
    }

    #[test]
    fn degree_14_monomial_golden() {
        let g = Polynomial::monomial(3, mi(&[9, 3, 2]), int(1));
        let u = anti_laplacian(&g);
        let want = Polynomial::from_terms(
            3,
            vec![
                (mi(&[15, 1, 0]), rat(2, 300300)),
                (mi(&[13, 3, 0]), rat(-35, 300300)),
                (mi(&[13, 1, 2]), rat(-105, 300300)),
                (mi(&[11, 3, 2]), rat(2730, 300300)),
            ],
        );
        assert_eq!(u, want);
        assert_eq!(u.laplacian(), g);
    }

    #[test]
    fn constant_and_base_cases() {
        let one = Polynomial::one(2);
        assert_eq!(
            anti_laplacian(&one),
            Polynomial::monomial(2, mi(&[2, 0]), rat(1, 2))
        );
        // g = x2²: one recursion step then the base case
        let g = Polynomial::monomial(2, mi(&[0, 2]), int(1));
        let want = &Polynomial::monomial(2, mi(&[2, 2]), rat(1, 2))
            - &Polynomial::monomial(2, mi(&[4, 0]), rat(1, 12));
        assert_eq!(anti_laplacian(&g), want);
    }

    #[test]
    fn zero_maps_to_zero() {
        assert!(anti_laplacian(&Polynomial::zero(3)).is_zero());
    }

    #[test]
    fn degree_rises_by_two() {
        let g = Polynomial::from_terms(
            3,
            vec![(mi(&[2, 3, 1]), rat(5, 7)), (mi(&[0, 0, 0]), int(-2))],
        );
        let u = anti_laplacian(&g);
        assert_eq!(u.degree(), Some(g.degree().unwrap() + 2));
        assert_eq!(u.laplacian(), g);
    }
}
