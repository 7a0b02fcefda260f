//! The Neumann solver: for compatible boundary data f, the unique harmonic h
//! with h(0) = 0 and ∇h·∇q = f on the ellipsoid, via the degree-indexed
//! system f = ∇h·∇q + (q−1)g. The generalized problem (Δh = g prescribed)
//! reduces to the regular one through an antiLaplacian. A verifier checks any
//! claimed solution independently of the solver path.

use num::{BigInt, Zero};

use crate::antilaplacian::anti_laplacian;
use crate::ellipsoid::Ellipsoid;
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::quadrature::{generalized_compatible, neumann_compatible};
use crate::rational::Rational;

/// A solved problem: h is the solution, g the boundary multiplier in
/// f = ∇h·∇q + (q−1)g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeumannSolution {
    pub h: Polynomial,
    pub g: Polynomial,
    pub ellipsoid: Ellipsoid,
}

/// Outcome of the independent verification: all three residuals must vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub laplacian_residual: Polynomial,
    pub boundary_remainder: Polynomial,
    pub origin_value: Rational,
    pub ok: bool,
}

/// Solve the Neumann problem: find harmonic h with h(0) = 0 and
/// ∇h·∇q = f on {q = 1}. Requires the compatibility residual to be zero.
pub fn solve_neumann(e: &Ellipsoid, f: &Polynomial) -> Result<NeumannSolution> {
    if f.dim() != e.dim() {
        return Err(Error::DimensionMismatch(e.dim(), f.dim()));
    }
    let residual = neumann_compatible(e, f)?;
    if !residual.is_zero() {
        let adjusted = f - &Polynomial::constant(f.dim(), residual.clone());
        return Err(Error::Incompatible {
            residual,
            adjusted: Some(adjusted),
        });
    }
    let n = e.dim();
    if f.is_zero() {
        return Ok(NeumannSolution {
            h: Polynomial::zero(n),
            g: Polynomial::zero(n),
            ellipsoid: e.clone(),
        });
    }

    // f ∈ P_{m+2}; the multiplier g lives in P_m.
    let deg_f = f.degree().unwrap();
    let m = deg_f.saturating_sub(2);

    // Top-down sweep: the degree-(k+2) equation determines g_k, with the
    // convention g_{m+1} = g_{m+2} = 0. Even and odd chains are independent.
    let mut g_parts: Vec<Polynomial> = vec![Polynomial::zero(n); m + 1];
    for k in (0..=m).rev() {
        let f_k2 = f.homogeneous_component(k + 2);
        let mut r = e.s_inverse(&f_k2)?;
        if k + 2 <= m {
            r = &r + &e.s_inverse(&g_parts[k + 2])?;
        }
        let rhs = r.laplacian();
        g_parts[k] = solve_degree_block(e, k, &rhs)?;
    }
    let g = g_parts
        .iter()
        .fold(Polynomial::zero(n), |acc, p| &acc + p);

    // Bottom consistency equation: g0 = -f0. Compatibility makes the sweep's
    // degree-2 block agree with it; a mismatch is a solver bug.
    let f0 = Polynomial::constant(n, f.constant_term());
    if g.constant_term() != -f.constant_term() {
        return Err(Error::InternalInvariant(format!(
            "constant-term equation violated: g0 = {}, f0 = {}",
            g.constant_term(),
            f.constant_term()
        )));
    }

    // h = S^{-1}(f - f0) - S^{-1}(qg) + S^{-1}(g - g0)
    let g0 = Polynomial::constant(n, g.constant_term());
    let h = &(&e.s_inverse(&(f - &f0))? - &e.s_inverse_q_mul(&g)?)
        + &e.s_inverse(&(&g - &g0))?;

    let solution = NeumannSolution {
        h,
        g,
        ellipsoid: e.clone(),
    };
    check_neumann_invariants(e, f, &solution)?;
    Ok(solution)
}

fn check_neumann_invariants(
    e: &Ellipsoid,
    f: &Polynomial,
    sol: &NeumannSolution,
) -> Result<()> {
    if !sol.h.laplacian().is_zero() {
        return Err(Error::InternalInvariant("solution is not harmonic".into()));
    }
    if !sol.h.constant_term().is_zero() {
        return Err(Error::InternalInvariant("solution has h(0) != 0".into()));
    }
    if let (Some(dh), Some(df)) = (sol.h.degree(), f.degree()) {
        if dh > df {
            return Err(Error::InternalInvariant(format!(
                "degree bound violated: deg h = {dh} > deg f = {df}"
            )));
        }
    }
    // f - S(h) must equal (q-1)*g exactly
    let lhs = f - &e.s_apply(&sol.h)?;
    let qm1 = &e.q() - &Polynomial::one(e.dim());
    if lhs != &qm1 * &sol.g {
        return Err(Error::InternalInvariant(
            "boundary factorization f - S(h) = (q-1)g violated".into(),
        ));
    }
    Ok(())
}

/// All monomials of total degree k in dimension n, in graded-lex order.
pub fn monomials_of_degree(n: usize, k: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(out: &mut Vec<MultiIndex>, current: &mut Vec<u32>, pos: usize, left: usize) {
        if pos + 1 == current.len() {
            current[pos] = left as u32;
            out.push(MultiIndex::new(current.clone()));
            return;
        }
        for e in 0..=left {
            current[pos] = e as u32;
            rec(out, current, pos + 1, left - e);
        }
        current[pos] = 0;
    }
    rec(&mut out, &mut current, 0, k);
    out.sort();
    out
}

/// Solve the degree-k block: find g_k = Σ_{|α|=k} c_α x^α with
/// Δ(S^{-1}(q·g_k)) = rhs. The system splits into independent parity blocks,
/// each square and nonsingular.
pub fn solve_degree_block(e: &Ellipsoid, k: usize, rhs: &Polynomial) -> Result<Polynomial> {
    let n = e.dim();
    if rhs.is_zero() {
        return Ok(Polynomial::zero(n));
    }
    if !rhs.is_homogeneous_of_degree(k) {
        return Err(Error::InternalInvariant(format!(
            "degree-{k} block fed a non-homogeneous right-hand side"
        )));
    }

    // Parity classes actually present in the rhs; classes absent from the rhs
    // have the all-zero solution because each block is homogeneous and
    // nonsingular.
    let mut signatures: Vec<Vec<u8>> = Vec::new();
    for (alpha, _) in rhs.terms() {
        let sig = alpha.parity_signature();
        if !signatures.contains(&sig) {
            signatures.push(sig);
        }
    }
    signatures.sort();

    let all = monomials_of_degree(n, k);
    let mut g_k = Polynomial::zero(n);
    for sig in signatures {
        let class: Vec<&MultiIndex> = all
            .iter()
            .filter(|a| a.parity_signature() == sig)
            .collect();
        let size = class.len();
        // Column for unknown c_α is the coefficient vector of Δ(S^{-1}(q·x^α))
        // restricted to the class.
        let mut matrix = vec![vec![Rational::zero(); size]; size];
        let mut b = vec![Rational::zero(); size];
        for (col, alpha) in class.iter().enumerate() {
            let image = e
                .s_inverse_q_mul(&Polynomial::monomial(n, (*alpha).clone(), Rational::from(BigInt::from(1))))?
                .laplacian();
            for (gamma, c) in image.terms() {
                let row = class
                    .iter()
                    .position(|g| *g == gamma)
                    .ok_or_else(|| {
                        Error::InternalInvariant(
                            "parity block image left its class".into(),
                        )
                    })?;
                matrix[row][col] = c.clone();
            }
        }
        for (row, gamma) in class.iter().enumerate() {
            b[row] = rhs.coefficient(gamma);
        }
        let solution = gaussian_solve(matrix, b).ok_or_else(|| {
            Error::InternalInvariant(format!("singular parity block at degree {k}"))
        })?;
        for (alpha, c) in class.iter().zip(solution) {
            g_k.add_term((*alpha).clone(), c);
        }
    }
    Ok(g_k)
}

/// Exact Gaussian elimination with first-nonzero pivoting. Returns `None` on
/// a singular or inconsistent system.
pub fn gaussian_solve(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for j in col..n {
            a[col][j] = &a[col][j] / &p;
        }
        b[col] = &b[col] / &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..n {
                    let delta = &factor * &a[col][j];
                    a[r][j] = &a[r][j] - &delta;
                }
                let delta = &factor * &b[col];
                b[r] = &b[r] - &delta;
            }
        }
    }
    Some(b)
}

/// Solve the generalized problem: find h with Δh = g, ∇h·∇q = f on {q = 1},
/// and h(0) = 0, by splitting off an antiLaplacian of g.
pub fn solve_generalized(
    e: &Ellipsoid,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<NeumannSolution> {
    if f.dim() != e.dim() || g.dim() != e.dim() {
        return Err(Error::DimensionMismatch(e.dim(), f.dim().max(g.dim())));
    }
    let residual = generalized_compatible(e, f, g)?;
    if !residual.is_zero() {
        let adjusted = f - &Polynomial::constant(f.dim(), residual.clone());
        return Err(Error::Incompatible {
            residual,
            adjusted: Some(adjusted),
        });
    }
    let u = anti_laplacian(g);
    let reduced_f = f - &e.s_apply(&u)?;
    let inner = solve_neumann(e, &reduced_f)?;
    // u + p solves the problem but may not vanish at the origin; constants
    // are harmonic with zero gradient, so subtract h(0).
    let mut h = &u + &inner.h;
    let origin = h.constant_term();
    h = &h - &Polynomial::constant(e.dim(), origin);

    if h.laplacian() != *g {
        return Err(Error::InternalInvariant(
            "generalized solution has wrong Laplacian".into(),
        ));
    }
    let bound = match (f.degree(), g.degree()) {
        (Some(df), Some(dg)) => Some(df.max(dg + 2)),
        (Some(df), None) => Some(df),
        (None, Some(dg)) => Some(dg + 2),
        (None, None) => None,
    };
    if let (Some(dh), Some(limit)) = (h.degree(), bound) {
        if dh > limit {
            return Err(Error::InternalInvariant(format!(
                "degree bound violated: deg h = {dh} > {limit}"
            )));
        }
    }
    Ok(NeumannSolution {
        h,
        g: inner.g,
        ellipsoid: e.clone(),
    })
}

/// Check a claimed solution using only polynomial and ellipsoid primitives,
/// independent of the solver path.
pub fn verify_solution(
    e: &Ellipsoid,
    h: &Polynomial,
    f: &Polynomial,
    g_datum: Option<&Polynomial>,
) -> Result<VerificationReport> {
    let laplacian_residual = match g_datum {
        Some(g) => &h.laplacian() - g,
        None => h.laplacian(),
    };
    let boundary_remainder = e
        .reduce_mod_boundary(&(&e.s_apply(h)? - f))?
        .remainder;
    let origin_value = h.constant_term();
    let ok = laplacian_residual.is_zero()
        && boundary_remainder.is_zero()
        && origin_value.is_zero();
    Ok(VerificationReport {
        laplacian_residual,
        boundary_remainder,
        origin_value,
        ok,
    })
}
