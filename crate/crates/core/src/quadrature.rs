//! Exact surface moments ∫_{∂E} x^α/‖∇q‖ dA and volume moments ∫_E x^α dV.
//!
//! Every moment in scope is an exact rational multiple of the shared unit
//! κ = n·vol(B)/(2√∏β_j), so the compatibility conditions reduce to exact
//! rational comparisons. A floating approximation is available for display
//! only.

use num::{BigInt, One, Zero};

use crate::ellipsoid::Ellipsoid;
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::rational::{to_f64, Rational};

/// An exact rational multiple of κ = n·vol(B)/(2√∏β_j) for a fixed ellipsoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledIntegral {
    coefficient: Rational,
    dim: usize,
    beta_product: Rational,
}

impl ScaledIntegral {
    fn new(e: &Ellipsoid, coefficient: Rational) -> Self {
        let beta_product = e
            .beta()
            .iter()
            .fold(Rational::one(), |acc, b| acc * b);
        ScaledIntegral {
            coefficient,
            dim: e.dim(),
            beta_product,
        }
    }

    /// The exact value in units of κ.
    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// Human-readable description of the unit, e.g. `3*vol(B)/(2*sqrt(6))`.
    pub fn unit_description(&self) -> String {
        format!(
            "{}*vol(B)/(2*sqrt({}))",
            self.dim,
            crate::rational::format_rational(&self.beta_product)
        )
    }

    /// κ itself as a binary float.
    pub fn unit_value(&self) -> f64 {
        let n = self.dim;
        n as f64 * ball_volume(n) / (2.0 * to_f64(&self.beta_product).sqrt())
    }

    /// κ·coefficient as a binary float. Display only; never used in any
    /// exactness decision.
    pub fn approx(&self) -> f64 {
        to_f64(&self.coefficient) * self.unit_value()
    }
}

/// vol(B) for the unit ball in R^n: π^{n/2}/Γ(n/2+1).
pub fn ball_volume(n: usize) -> f64 {
    let half = n as f64 / 2.0;
    std::f64::consts::PI.powf(half) / gamma(half + 1.0)
}

// Γ at integer and half-integer arguments, which is all this crate needs.
fn gamma(x: f64) -> f64 {
    if (x - x.round()).abs() < 1e-9 {
        let n = x.round() as u64; // Γ(n) = (n-1)!
        (1..n).map(|k| k as f64).product()
    } else {
        // half-integer: Γ(1/2) = √π, Γ(x+1) = x·Γ(x)
        let mut v = std::f64::consts::PI.sqrt();
        let mut t = 0.5;
        while t < x - 1e-9 {
            v *= t;
            t += 1.0;
        }
        v
    }
}

/// (m−1)!!···, the double-factorial ratio
/// ∏_j (α_j−1)!! / (n(n+2)···(n+|α|−2)), with empty products equal to 1.
/// Defined for α with all entries even.
fn double_factorial_ratio(n: usize, alpha: &MultiIndex) -> Rational {
    let mut num = BigInt::one();
    for j in 0..alpha.dim() {
        let a = alpha.exponent(j) as i64;
        // (a-1)!! for even a: 1·3·5···(a-1); (−1)!! = 1
        let mut k = 1i64;
        while k <= a - 1 {
            num *= BigInt::from(k);
            k += 2;
        }
    }
    let total = alpha.total_degree();
    let mut den = BigInt::one();
    let mut d = n as i64;
    while d <= (n + total) as i64 - 2 {
        den *= BigInt::from(d);
        d += 2;
    }
    Rational::new(num, den)
}

/// ∏_j β_j^{−α_j/2}; requires every α_j even.
fn beta_power(e: &Ellipsoid, alpha: &MultiIndex) -> Rational {
    let mut out = Rational::one();
    for j in 0..alpha.dim() {
        let half = alpha.exponent(j) / 2;
        for _ in 0..half {
            out /= &e.beta()[j];
        }
    }
    out
}

fn check_dim(e: &Ellipsoid, dim: usize) -> Result<()> {
    if e.dim() != dim {
        return Err(Error::DimensionMismatch(e.dim(), dim));
    }
    Ok(())
}

/// ∫_{∂E} x^α/‖∇q‖ dA in units of κ. Zero whenever some α_j is odd.
pub fn surface_moment(e: &Ellipsoid, alpha: &MultiIndex) -> Result<ScaledIntegral> {
    check_dim(e, alpha.dim())?;
    if alpha.exponents().iter().any(|&a| a % 2 == 1) {
        return Ok(ScaledIntegral::new(e, Rational::zero()));
    }
    let coeff = beta_power(e, alpha) * double_factorial_ratio(e.dim(), alpha);
    Ok(ScaledIntegral::new(e, coeff))
}

/// ∫_E x^α dV in units of κ. Zero whenever some α_j is odd.
pub fn volume_moment(e: &Ellipsoid, alpha: &MultiIndex) -> Result<ScaledIntegral> {
    check_dim(e, alpha.dim())?;
    if alpha.exponents().iter().any(|&a| a % 2 == 1) {
        return Ok(ScaledIntegral::new(e, Rational::zero()));
    }
    let n = e.dim();
    let coeff = beta_power(e, alpha)
        * double_factorial_ratio(n, alpha)
        * Rational::new(BigInt::from(2), BigInt::from(n + alpha.total_degree()));
    Ok(ScaledIntegral::new(e, coeff))
}

/// ∫_{∂E} f/‖∇q‖ dA, linear over the terms of f.
pub fn surface_integral(e: &Ellipsoid, f: &Polynomial) -> Result<ScaledIntegral> {
    check_dim(e, f.dim())?;
    let mut total = Rational::zero();
    for (alpha, c) in f.terms() {
        total += c * surface_moment(e, alpha)?.coefficient;
    }
    Ok(ScaledIntegral::new(e, total))
}

/// ∫_E g dV, linear over the terms of g.
pub fn volume_integral(e: &Ellipsoid, g: &Polynomial) -> Result<ScaledIntegral> {
    check_dim(e, g.dim())?;
    let mut total = Rational::zero();
    for (alpha, c) in g.terms() {
        total += c * volume_moment(e, alpha)?.coefficient;
    }
    Ok(ScaledIntegral::new(e, total))
}

/// Residual of the Neumann compatibility condition ∫_{∂E} f/‖∇q‖ dA = 0,
/// in units of κ. Compatible iff zero; subtracting the residual as a constant
/// from f always restores compatibility.
pub fn neumann_compatible(e: &Ellipsoid, f: &Polynomial) -> Result<Rational> {
    Ok(surface_integral(e, f)?.coefficient)
}

/// Residual of ∫_{∂E} f/‖∇q‖ dA = ∫_E g dV, in units of κ.
pub fn generalized_compatible(
    e: &Ellipsoid,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<Rational> {
    Ok(surface_integral(e, f)?.coefficient - volume_integral(e, g)?.coefficient)
}
