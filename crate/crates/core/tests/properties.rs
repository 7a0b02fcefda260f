//! Randomized invariant suites (seeded, deterministic).

mod common;
use rand::Rng;

use common::*;
use neumann_core::solver::solve_neumann;
use neumann_core::{
    anti_laplacian, generalized_compatible, neumann_compatible, parse_polynomial,
    surface_integral, volume_integral, MultiIndex, Polynomial,
};
use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn ring_axioms_hold_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..60 {
        let dim = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, dim, 4, 4);
        let r = random_poly(&mut rng, dim, 4, 4);
        let s = random_poly(&mut rng, dim, 4, 4);
        assert_eq!(&(&p + &r) + &s, &p + &(&r + &s));
        assert_eq!(&p + &r, &r + &p);
        assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
        assert_eq!(&p * &r, &r * &p);
        assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
    }
}

#[test]
fn laplacian_product_rule() {
    // Δ(p·r) = p·Δr + r·Δp + 2·∇p·∇r
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, dim, 5, 4);
        let r = random_poly(&mut rng, dim, 5, 4);
        let mut grad_dot = Polynomial::zero(dim);
        for j in 0..dim {
            grad_dot = &grad_dot
                + &(&p.partial_derivative(j).unwrap() * &r.partial_derivative(j).unwrap());
        }
        let lhs = (&p * &r).laplacian();
        let rhs = &(&(&p * &r.laplacian()) + &(&r * &p.laplacian()))
            + &grad_dot.scale(&int(2));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn homogeneous_components_sum_to_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, dim, 6, 6);
        let sum = p
            .homogeneous_components()
            .into_iter()
            .fold(Polynomial::zero(dim), |acc, (k, part)| {
                assert!(part.is_homogeneous_of_degree(k));
                assert!(!part.is_zero());
                &acc + &part
            });
        assert_eq!(sum, p);
    }
}

#[test]
fn partial_derivatives_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, dim, 6, 5);
        for i in 0..dim {
            for j in 0..dim {
                let ij = p.partial_derivative(i).unwrap().partial_derivative(j).unwrap();
                let ji = p.partial_derivative(j).unwrap().partial_derivative(i).unwrap();
                assert_eq!(ij, ji);
            }
        }
    }
}

#[test]
fn canonical_text_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let dim = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, dim, 6, 6);
        let text = p.to_plain_string();
        let back = parse_polynomial(&text, dim).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_plain_string(), text);
    }
}

#[test]
fn s_inverse_inverts_s_apply() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let e = random_ellipsoid(&mut rng, dim);
        let g = random_poly_origin_zero(&mut rng, dim, 6, 5);
        let s = e.s_apply(&g).unwrap();
        assert_eq!(e.s_inverse(&s).unwrap(), g);
        assert_eq!(e.s_apply(&e.s_inverse(&s).unwrap()).unwrap(), s);
    }
}

#[test]
fn s_inverse_q_mul_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let e = random_ellipsoid(&mut rng, dim);
        let g = random_poly(&mut rng, dim, 5, 5);
        let closed = e.s_inverse_q_mul(&g).unwrap();
        let direct = e.s_inverse(&(&e.q() * &g)).unwrap();
        assert_eq!(closed, direct);
    }
}

#[test]
fn boundary_reduction_reconstruction() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let e = random_ellipsoid(&mut rng, dim);
        let p = random_poly(&mut rng, dim, 6, 6);
        let red = e.reduce_mod_boundary(&p).unwrap();
        let qm1 = &e.q() - &Polynomial::one(dim);
        assert_eq!(&(&qm1 * &red.quotient) + &red.remainder, p);
        assert!(red.remainder.terms().all(|(a, _)| a.exponent(0) < 2));

        // multiples of q-1 vanish on the boundary
        let s = random_poly(&mut rng, dim, 4, 4);
        assert!(e.vanishes_on_boundary(&(&qm1 * &s)).unwrap());
        // nonzero fully-reduced remainders do not
        if !red.remainder.is_zero() {
            assert!(!e.vanishes_on_boundary(&red.remainder).unwrap());
        }
    }
}

#[test]
fn anti_laplacian_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let g = random_poly(&mut rng, dim, 8, 5);
        let u = anti_laplacian(&g);
        assert_eq!(u.laplacian(), g);
        assert_eq!(u.degree(), g.degree().map(|d| d + 2));
    }
}

#[test]
fn anti_laplacian_linearity() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..20 {
        let dim = rng.gen_range(2..=4);
        let g1 = random_poly(&mut rng, dim, 6, 4);
        let g2 = random_poly(&mut rng, dim, 6, 4);
        let a = random_coeff(&mut rng);
        let combined = anti_laplacian(&(&g1.scale(&a) + &g2));
        let split = &anti_laplacian(&g1).scale(&a) + &anti_laplacian(&g2);
        assert_eq!(combined, split);
    }
}

#[test]
fn odd_monomials_integrate_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=4);
        let e = random_ellipsoid(&mut rng, dim);
        let mut alpha = random_multi_index(&mut rng, dim, 6);
        // force one odd exponent
        let j = rng.gen_range(0..dim);
        if alpha.exponent(j) % 2 == 0 {
            alpha = alpha.raised(j, 1);
        }
        let mono = Polynomial::monomial(dim, alpha, int(1));
        assert!(surface_integral(&e, &mono).unwrap().is_zero());
        assert!(volume_integral(&e, &mono).unwrap().is_zero());
    }
}

#[test]
fn solver_even_odd_decoupling() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for parity in [0usize, 1] {
        for _ in 0..10 {
            let dim = rng.gen_range(2..=3);
            let e = random_ellipsoid(&mut rng, dim);
            // parity-pure f: keep only components of matching degree parity
            let raw = random_poly(&mut rng, dim, 6, 6);
            let mut f = Polynomial::zero(dim);
            for (k, part) in raw.homogeneous_components() {
                if k % 2 == parity {
                    f = &f + &part;
                }
            }
            let residual = neumann_compatible(&e, &f).unwrap();
            f = &f - &Polynomial::constant(dim, residual);
            if f.is_zero() {
                continue;
            }
            let sol = solve_neumann(&e, &f).unwrap();
            for poly in [&sol.h, &sol.g] {
                for (k, _) in poly.homogeneous_components() {
                    assert_eq!(
                        k % 2,
                        parity,
                        "parity-pure input produced mixed-parity output"
                    );
                }
            }
        }
    }
}

#[test]
fn solver_deterministic_under_insertion_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let dim = 3;
    let e = random_ellipsoid(&mut rng, dim);
    let f0 = random_poly(&mut rng, dim, 6, 8);
    let residual = neumann_compatible(&e, &f0).unwrap();
    let f = &f0 - &Polynomial::constant(dim, residual);
    let sol = solve_neumann(&e, &f).unwrap();

    // rebuild f with terms inserted in reverse order
    let mut terms: Vec<(MultiIndex, _)> =
        f.terms().map(|(a, c)| (a.clone(), c.clone())).collect();
    terms.reverse();
    let f_rev = Polynomial::from_terms(dim, terms);
    assert_eq!(f_rev, f);
    let sol_rev = solve_neumann(&e, &f_rev).unwrap();
    assert_eq!(sol.h.to_plain_string(), sol_rev.h.to_plain_string());
    assert_eq!(sol.g.to_plain_string(), sol_rev.g.to_plain_string());
}

#[test]
fn generalized_degree_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..10 {
        let dim = rng.gen_range(2..=3);
        let e = random_ellipsoid(&mut rng, dim);
        let g = random_poly(&mut rng, dim, 3, 3);
        let f0 = random_poly(&mut rng, dim, 5, 5);
        let residual = generalized_compatible(&e, &f0, &g).unwrap();
        let f = &f0 - &Polynomial::constant(dim, residual);
        let sol = neumann_core::solve_generalized(&e, &f, &g).unwrap();
        assert_eq!(sol.h.laplacian(), g);
        assert!(sol.h.constant_term().is_zero());
        let limit = f
            .degree()
            .into_iter()
            .chain(g.degree().map(|d| d + 2))
            .max();
        if let (Some(dh), Some(limit)) = (sol.h.degree(), limit) {
            assert!(dh <= limit);
        }
        assert!(neumann_core::verify_solution(&e, &sol.h, &f, Some(&g))
            .unwrap()
            .ok);
    }
}

#[test]
fn mri_divergence_free_fields_are_compatible() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..20 {
        let dim = rng.gen_range(2..=3);
        let e = random_ellipsoid(&mut rng, dim);
        let w = random_divergence_free(&mut rng, dim, 4);
        let f = neumann_core::boundary_data(&e, &w).unwrap();
        assert!(neumann_compatible(&e, &f).unwrap().is_zero());
    }
}


