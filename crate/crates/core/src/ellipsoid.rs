//! Ellipsoid geometry: q(x) = Σ β_j x_j², the diagonal operator
//! S(g) = ∇g·∇q with its explicit inverse, and reduction modulo the ideal
//! generated by q − 1 (the "vanishes on the boundary" test).

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// The ellipsoid {q = 1} with q(x) = β_1 x_1² + … + β_n x_n², all β_j > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ellipsoid {
    beta: Vec<Rational>,
}

/// Exact division with remainder by q − 1: `input = (q−1)·quotient + remainder`
/// where no remainder term has x1-exponent ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReduction {
    pub quotient: Polynomial,
    pub remainder: Polynomial,
}

impl Ellipsoid {
    pub fn new(beta: Vec<Rational>) -> Result<Self> {
        if beta.len() < 2 {
            return Err(Error::InvalidEllipsoid(format!(
                "needs dimension >= 2, got {}",
                beta.len()
            )));
        }
        if let Some(b) = beta.iter().find(|b| !b.is_positive()) {
            return Err(Error::InvalidEllipsoid(format!(
                "coefficients must be positive, got {b}"
            )));
        }
        Ok(Ellipsoid { beta })
    }

    pub fn dim(&self) -> usize {
        self.beta.len()
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }

    /// q(x) = Σ β_j x_j².
    pub fn q(&self) -> Polynomial {
        let n = self.dim();
        Polynomial::from_terms(
            n,
            (0..n).map(|j| (MultiIndex::unit(n, j).raised(j, 1), self.beta[j].clone())),
        )
    }

    /// ∇q = 2(β_1 x_1, …, β_n x_n).
    pub fn grad_q(&self) -> Vec<Polynomial> {
        let n = self.dim();
        (0..n)
            .map(|j| {
                Polynomial::monomial(
                    n,
                    MultiIndex::unit(n, j),
                    &self.beta[j] * Rational::from(BigInt::from(2)),
                )
            })
            .collect()
    }

    /// 2(α·β), the eigenvalue of S on x^α.
    fn s_eigenvalue(&self, alpha: &MultiIndex) -> Rational {
        let mut dot = Rational::zero();
        for j in 0..self.dim() {
            dot += &self.beta[j] * Rational::from(BigInt::from(alpha.exponent(j)));
        }
        dot * Rational::from(BigInt::from(2))
    }

    /// S(g) = ∇g·∇q, which acts diagonally on monomials: x^α ↦ 2(α·β)x^α.
    pub fn s_apply(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.dim() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), g.dim()));
        }
        let mut out = Polynomial::zero(self.dim());
        for (alpha, c) in g.terms() {
            out.add_term(alpha.clone(), c * self.s_eigenvalue(alpha));
        }
        Ok(out)
    }

    /// S⁻¹, defined only on polynomials with zero constant term.
    pub fn s_inverse(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.dim() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), g.dim()));
        }
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTermInSInverse);
        }
        let mut out = Polynomial::zero(self.dim());
        for (alpha, c) in g.terms() {
            out.add_term(alpha.clone(), c / self.s_eigenvalue(alpha));
        }
        Ok(out)
    }

    /// S⁻¹(q·g) computed by the closed form
    /// Σ_α Σ_j β_j c_α/(2(α·β)+4β_j) x^(α+2δ_j), never by forming q·g first.
    pub fn s_inverse_q_mul(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.dim() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), g.dim()));
        }
        let four = Rational::from(BigInt::from(4));
        let mut out = Polynomial::zero(self.dim());
        for (alpha, c) in g.terms() {
            let eig = self.s_eigenvalue(alpha);
            for j in 0..self.dim() {
                let denom = &eig + &self.beta[j] * &four;
                out.add_term(alpha.raised(j, 2), c * &self.beta[j] / denom);
            }
        }
        Ok(out)
    }

    /// Divide by q − 1, eliminating every term with x1-exponent ≥ 2 against
    /// the leading monomial β_1 x_1². The single-generator reduction is
    /// confluent, so the remainder is well defined.
    pub fn reduce_mod_boundary(&self, p: &Polynomial) -> Result<BoundaryReduction> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), p.dim()));
        }
        let n = self.dim();
        let mut remainder = p.clone();
        let mut quotient = Polynomial::zero(n);
        let q_minus_1 = &self.q() - &Polynomial::one(n);
        loop {
            // Largest reducible term; x1-degree strictly drops each step.
            let target = remainder
                .terms()
                .rev()
                .find(|(alpha, _)| alpha.exponent(0) >= 2)
                .map(|(alpha, c)| (alpha.clone(), c.clone()));
            let Some((alpha, c)) = target else {
                break;
            };
            let factor = &c / &self.beta[0];
            let shifted = alpha.lowered(0, 2).unwrap();
            // remainder -= (factor * x^shifted) * (q - 1)
            let mono = Polynomial::monomial(n, shifted, factor);
            remainder = &remainder - &(&mono * &q_minus_1);
            quotient = &quotient + &mono;
        }
        Ok(BoundaryReduction {
            quotient,
            remainder,
        })
    }

    /// True iff p = 0 identically on the ellipsoid {q = 1}.
    pub fn vanishes_on_boundary(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce_mod_boundary(p)?.remainder.is_zero())
    }
}
