//! Lossless JSON document for a solved problem. Polynomials are stored as
//! term arrays `[e1, ..., en, "num/den"]` in ascending graded-lex order, so a
//! document round-trips byte-for-byte and `verify` can re-derive the report
//! from h, f, g alone.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::ellipsoid::Ellipsoid;
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::rational::{format_rational, parse_rational};
use crate::solver::{verify_solution, NeumannSolution, VerificationReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SolutionDocument {
    pub schema: u32,
    pub dimension: usize,
    pub beta: Vec<String>,
    pub input_f: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_g: Option<String>,
    pub h: Vec<Value>,
    pub certificate_g: Vec<Value>,
    pub report: ReportDocument,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportDocument {
    pub laplacian_ok: bool,
    pub boundary_ok: bool,
    pub origin_ok: bool,
}

fn poly_to_terms(p: &Polynomial) -> Vec<Value> {
    p.terms()
        .map(|(alpha, c)| {
            let mut row: Vec<Value> = alpha
                .exponents()
                .iter()
                .map(|&e| Value::from(e))
                .collect();
            row.push(Value::from(format_rational(c)));
            Value::Array(row)
        })
        .collect()
}

fn terms_to_poly(dim: usize, terms: &[Value]) -> Result<Polynomial> {
    let mut p = Polynomial::zero(dim);
    for row in terms {
        let arr = row.as_array().ok_or_else(|| {
            Error::InternalInvariant("malformed term row in document".into())
        })?;
        if arr.len() != dim + 1 {
            return Err(Error::InternalInvariant(format!(
                "term row has {} entries, expected {}",
                arr.len(),
                dim + 1
            )));
        }
        let exps: Vec<u32> = arr[..dim]
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| Error::InternalInvariant("bad exponent in document".into()))
            })
            .collect::<Result<_>>()?;
        let coeff = arr[dim]
            .as_str()
            .and_then(parse_rational)
            .ok_or_else(|| Error::InternalInvariant("bad coefficient in document".into()))?;
        p.add_term(MultiIndex::new(exps), coeff);
    }
    Ok(p)
}

impl SolutionDocument {
    pub fn from_solution(
        sol: &NeumannSolution,
        f: &Polynomial,
        g_datum: Option<&Polynomial>,
        report: &VerificationReport,
    ) -> Self {
        SolutionDocument {
            schema: SCHEMA_VERSION,
            dimension: sol.ellipsoid.dim(),
            beta: sol.ellipsoid.beta().iter().map(format_rational).collect(),
            input_f: f.to_plain_string(),
            input_g: g_datum.map(|g| g.to_plain_string()),
            h: poly_to_terms(&sol.h),
            certificate_g: poly_to_terms(&sol.g),
            report: ReportDocument {
                laplacian_ok: report.laplacian_residual.is_zero(),
                boundary_ok: report.boundary_remainder.is_zero(),
                origin_ok: report.origin_value == num::Zero::zero(),
            },
        }
    }

    pub fn ellipsoid(&self) -> Result<Ellipsoid> {
        let beta = self
            .beta
            .iter()
            .map(|s| {
                parse_rational(s).ok_or_else(|| {
                    Error::InvalidEllipsoid(format!("bad beta entry '{s}'"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ellipsoid::new(beta)
    }

    pub fn h_polynomial(&self) -> Result<Polynomial> {
        terms_to_poly(self.dimension, &self.h)
    }

    pub fn certificate_polynomial(&self) -> Result<Polynomial> {
        terms_to_poly(self.dimension, &self.certificate_g)
    }

    pub fn f_polynomial(&self) -> Result<Polynomial> {
        Ok(crate::parse::parse_polynomial(&self.input_f, self.dimension)?)
    }

    pub fn g_polynomial(&self) -> Result<Option<Polynomial>> {
        match &self.input_g {
            Some(src) => Ok(Some(crate::parse::parse_polynomial(src, self.dimension)?)),
            None => Ok(None),
        }
    }

    /// Re-derive the verification report from h, f, g alone.
    pub fn reverify(&self) -> Result<VerificationReport> {
        let e = self.ellipsoid()?;
        let h = self.h_polynomial()?;
        let f = self.f_polynomial()?;
        let g = self.g_polynomial()?;
        verify_solution(&e, &h, &f, g.as_ref())
    }
}
