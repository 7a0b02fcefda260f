//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by [`MultiIndex`] under graded-lex order,
//! so iteration order is canonical and equal polynomials serialize
//! identically. No zero coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(dim);
        p.add_term(MultiIndex::zero(dim), c);
        p
    }

    pub fn one(dim: usize) -> Self {
        Polynomial::constant(dim, Rational::one())
    }

    /// The monomial c·x^α.
    pub fn monomial(dim: usize, alpha: MultiIndex, c: Rational) -> Self {
        assert_eq!(alpha.dim(), dim, "multi-index length must equal dimension");
        let mut p = Polynomial::zero(dim);
        p.add_term(alpha, c);
        p
    }

    /// The variable x_{j+1} (0-based axis).
    pub fn variable(dim: usize, j: usize) -> Self {
        Polynomial::monomial(dim, MultiIndex::unit(dim, j), Rational::one())
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Polynomial::zero(dim);
        for (alpha, c) in terms {
            assert_eq!(alpha.dim(), dim, "multi-index length must equal dimension");
            p.add_term(alpha, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` is the "minus infinity" degree of the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|a| a.total_degree())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Rational {
        self.terms.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&MultiIndex::zero(self.dim))
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (alpha, c) in other.terms() {
            out.add_term(alpha.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (alpha, c) in other.terms() {
            out.add_term(alpha.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = Polynomial::zero(self.dim);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.add(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(a, v)| (a.clone(), v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(a, v)| (a.clone(), -v.clone()))
                .collect(),
        }
    }

    /// ∂p/∂x_{j+1} (0-based axis).
    pub fn partial_derivative(&self, j: usize) -> Result<Polynomial> {
        if j >= self.dim {
            return Err(Error::AxisOutOfRange {
                axis: j + 1,
                dim: self.dim,
            });
        }
        let mut out = Polynomial::zero(self.dim);
        for (alpha, c) in self.terms() {
            if let Some(lower) = alpha.lowered(j, 1) {
                out.add_term(lower, c * Rational::from(num::BigInt::from(alpha.exponent(j))));
            }
        }
        Ok(out)
    }

    /// ∇p as a vector of partials. Axes are always in range here.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.dim)
            .map(|j| self.partial_derivative(j).expect("axis in range"))
            .collect()
    }

    /// Δp, computed term-by-term from Δ(x^α) = Σ_j α_j(α_j−1)·x^α/x_j².
    pub fn laplacian(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (alpha, c) in self.terms() {
            for j in 0..self.dim {
                let aj = alpha.exponent(j);
                if aj >= 2 {
                    let factor = Rational::from(num::BigInt::from(aj as u64 * (aj as u64 - 1)));
                    out.add_term(alpha.lowered(j, 2).unwrap(), c * factor);
                }
            }
        }
        out
    }

    /// Split into homogeneous parts, degrees strictly increasing, zero parts
    /// omitted.
    pub fn homogeneous_components(&self) -> Vec<(usize, Polynomial)> {
        let mut parts: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (alpha, c) in self.terms() {
            parts
                .entry(alpha.total_degree())
                .or_insert_with(|| Polynomial::zero(self.dim))
                .add_term(alpha.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// The degree-k homogeneous part (possibly zero).
    pub fn homogeneous_component(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (alpha, c) in self.terms() {
            if alpha.total_degree() == k {
                out.add_term(alpha.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_homogeneous_of_degree(&self, k: usize) -> bool {
        self.terms.keys().all(|a| a.total_degree() == k)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.dim {
            return Err(Error::PointLengthMismatch(point.len(), self.dim));
        }
        let mut total = Rational::zero();
        for (alpha, c) in self.terms() {
            let mut v = c.clone();
            for j in 0..self.dim {
                for _ in 0..alpha.exponent(j) {
                    v *= &point[j];
                }
            }
            total += v;
        }
        Ok(total)
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        let mut total = 0.0;
        for (alpha, c) in self.terms() {
            let mut v = crate::rational::to_f64(c);
            for j in 0..self.dim {
                v *= point[j].powi(alpha.exponent(j) as i32);
            }
            total += v;
        }
        total
    }

    /// Canonical text form: terms in descending graded-lex order, exact
    /// rational coefficients, explicit `*` between factors.
    pub fn to_plain_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (alpha, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&format_term(alpha, &c.abs(), TermStyle::Plain));
        }
        out
    }

    /// LaTeX form, same term order as the plain output.
    pub fn to_latex_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (alpha, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&format_term(alpha, &c.abs(), TermStyle::Latex));
        }
        out
    }
}

#[derive(Clone, Copy)]
enum TermStyle {
    Plain,
    Latex,
}

fn format_term(alpha: &MultiIndex, coeff: &Rational, style: TermStyle) -> String {
    let mut factors: Vec<String> = Vec::new();
    for j in 0..alpha.dim() {
        let e = alpha.exponent(j);
        if e == 0 {
            continue;
        }
        match style {
            TermStyle::Plain => {
                if e == 1 {
                    factors.push(format!("x{}", j + 1));
                } else {
                    factors.push(format!("x{}^{}", j + 1, e));
                }
            }
            TermStyle::Latex => {
                if e == 1 {
                    factors.push(format!("x_{{{}}}", j + 1));
                } else {
                    factors.push(format!("x_{{{}}}^{{{}}}", j + 1, e));
                }
            }
        }
    }
    let coeff_str = match style {
        TermStyle::Plain => format_rational(coeff),
        TermStyle::Latex => {
            if coeff.denom().is_one() {
                coeff.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", coeff.numer(), coeff.denom())
            }
        }
    };
    if factors.is_empty() {
        return coeff_str;
    }
    let monomial = match style {
        TermStyle::Plain => factors.join("*"),
        TermStyle::Latex => factors.join(" "),
    };
    if coeff.is_one() {
        monomial
    } else {
        match style {
            TermStyle::Plain => format!("{coeff_str}*{monomial}"),
            TermStyle::Latex => format!("{coeff_str} {monomial}"),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain_string())
    }
}

// Reference operators panic on dimension mismatch; use the try_* methods when
// the dimensions are not statically known to agree.
impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("dimension mismatch in +")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("dimension mismatch in -")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("dimension mismatch in *")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
