//! Shared helpers for the integration suites: seeded random polynomials,
//! ellipsoids, and divergence-free vector fields.

use neumann_core::{Ellipsoid, MultiIndex, PolyVectorField, Polynomial, Rational};
use rand::Rng;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    rat(n, 1)
}

pub fn random_coeff<R: Rng>(rng: &mut R) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-9..=9);
    }
    let den = rng.gen_range(1..=9);
    rat(num, den)
}

pub fn random_multi_index<R: Rng>(rng: &mut R, dim: usize, max_deg: usize) -> MultiIndex {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; dim];
    for _ in 0..deg {
        let j = rng.gen_range(0..dim);
        exps[j] += 1;
    }
    MultiIndex::new(exps)
}

pub fn random_poly<R: Rng>(rng: &mut R, dim: usize, max_deg: usize, max_terms: usize) -> Polynomial {
    let terms = rng.gen_range(1..=max_terms);
    let mut p = Polynomial::zero(dim);
    for _ in 0..terms {
        p.add_term(random_multi_index(rng, dim, max_deg), random_coeff(rng));
    }
    p
}

/// Random polynomial with zero constant term.
pub fn random_poly_origin_zero<R: Rng>(
    rng: &mut R,
    dim: usize,
    max_deg: usize,
    max_terms: usize,
) -> Polynomial {
    let mut p = random_poly(rng, dim, max_deg, max_terms);
    let c = p.constant_term();
    p.add_term(MultiIndex::zero(dim), -c);
    p
}

pub fn random_ellipsoid<R: Rng>(rng: &mut R, dim: usize) -> Ellipsoid {
    let beta = (0..dim)
        .map(|_| rat(rng.gen_range(1..=9), rng.gen_range(1..=4)))
        .collect();
    Ellipsoid::new(beta).unwrap()
}

/// Divergence-free field built from antisymmetric pairs
/// (…, −∂_j φ, …, ∂_i φ, …) for random stream polynomials φ.
pub fn random_divergence_free<R: Rng>(
    rng: &mut R,
    dim: usize,
    max_deg: usize,
) -> PolyVectorField {
    let mut comps = vec![Polynomial::zero(dim); dim];
    let pairs = rng.gen_range(1..=3);
    for _ in 0..pairs {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim);
        while j == i {
            j = rng.gen_range(0..dim);
        }
        let phi = random_poly(rng, dim, max_deg, 4);
        comps[i] = &comps[i] - &phi.partial_derivative(j).unwrap();
        comps[j] = &comps[j] + &phi.partial_derivative(i).unwrap();
    }
    PolyVectorField::new(comps).unwrap()
}
