//! Induced electric fields on an ellipsoidal body model: from the spatial
//! part of ∂A/∂t (Coulomb gauge), derive the Neumann boundary data, solve for
//! the scalar potential V, and assemble E = −∇V − ∂A/∂t. Time dependence is
//! the caller's loop; this module works at a fixed instant.

use num::Zero;

use crate::ellipsoid::Ellipsoid;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quadrature::neumann_compatible;
use crate::solver::solve_neumann;

/// A polynomial vector field with one component per ambient axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    components: Vec<Polynomial>,
}

impl PolyVectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let dim = components.len();
        if dim < 2 {
            return Err(Error::InvalidEllipsoid(format!(
                "vector field needs dimension >= 2, got {dim}"
            )));
        }
        for c in &components {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch(dim, c.dim()));
            }
        }
        Ok(PolyVectorField { components })
    }

    pub fn zero(dim: usize) -> Self {
        PolyVectorField {
            components: vec![Polynomial::zero(dim); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

/// ∇·W = Σ_j ∂_j W_j.
pub fn divergence(w: &PolyVectorField) -> Polynomial {
    let mut out = Polynomial::zero(w.dim());
    for (j, c) in w.components().iter().enumerate() {
        out = &out + &c.partial_derivative(j).expect("axis in range");
    }
    out
}

/// Boundary data for the potential: f = −(∂A/∂t)·∇q. Rejects fields that
/// violate the Coulomb gauge, and asserts the divergence theorem's automatic
/// compatibility rather than assuming it.
pub fn boundary_data(e: &Ellipsoid, da_dt: &PolyVectorField) -> Result<Polynomial> {
    if da_dt.dim() != e.dim() {
        return Err(Error::DimensionMismatch(e.dim(), da_dt.dim()));
    }
    let div = divergence(da_dt);
    if !div.is_zero() {
        return Err(Error::GaugeViolation { divergence: div });
    }
    let grad_q = e.grad_q();
    let mut f = Polynomial::zero(e.dim());
    for (w_j, dq_j) in da_dt.components().iter().zip(&grad_q) {
        f = &f - &(w_j * dq_j);
    }
    if !neumann_compatible(e, &f)?.is_zero() {
        return Err(Error::InternalInvariant(
            "divergence-free field produced incompatible boundary data".into(),
        ));
    }
    Ok(f)
}

/// Solve for the scalar potential V and assemble E = −∇V − ∂A/∂t.
pub fn electric_field(
    e: &Ellipsoid,
    da_dt: &PolyVectorField,
) -> Result<(Polynomial, PolyVectorField)> {
    let f = boundary_data(e, da_dt)?;
    let v = solve_neumann(e, &f)?.h;
    let grad_v = v.gradient();
    let components = grad_v
        .iter()
        .zip(da_dt.components())
        .map(|(dv_j, w_j)| &dv_j.neg() - w_j)
        .collect();
    Ok((v, PolyVectorField { components }))
}

/// Σ_j E_j ∂_j q, the unnormalized normal component of a field.
pub fn normal_component(e: &Ellipsoid, field: &PolyVectorField) -> Result<Polynomial> {
    if field.dim() != e.dim() {
        return Err(Error::DimensionMismatch(e.dim(), field.dim()));
    }
    let grad_q = e.grad_q();
    let mut out = Polynomial::zero(e.dim());
    for (f_j, dq_j) in field.components().iter().zip(&grad_q) {
        out = &out + &(f_j * dq_j);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multi_index::MultiIndex;
    use crate::rational::int;

    fn ell(beta: &[i64]) -> Ellipsoid {
        Ellipsoid::new(beta.iter().map(|&b| int(b)).collect()).unwrap()
    }

    fn rotational(dim: usize) -> PolyVectorField {
        // (x2, -x1, 0, ...)
        let mut comps = vec![Polynomial::zero(dim); dim];
        comps[0] = Polynomial::variable(dim, 1);
        comps[1] = Polynomial::variable(dim, 0).neg();
        PolyVectorField::new(comps).unwrap()
    }

    #[test]
    fn divergence_examples() {
        assert!(divergence(&rotational(3)).is_zero());
        let radial = PolyVectorField::new(
            (0..3).map(|j| Polynomial::variable(3, j)).collect(),
        )
        .unwrap();
        assert_eq!(divergence(&radial), Polynomial::constant(3, int(3)));
        // (x2x3, x1x3, x1x2)
        let w = PolyVectorField::new(vec![
            Polynomial::monomial(3, MultiIndex::new(vec![0, 1, 1]), int(1)),
            Polynomial::monomial(3, MultiIndex::new(vec![1, 0, 1]), int(1)),
            Polynomial::monomial(3, MultiIndex::new(vec![1, 1, 0]), int(1)),
        ])
        .unwrap();
        assert!(divergence(&w).is_zero());
    }

    #[test]
    fn boundary_data_examples() {
        // tangential on the sphere
        let e = ell(&[1, 1, 1]);
        assert!(boundary_data(&e, &rotational(3)).unwrap().is_zero());
        // β=(3,1,2): f = -4 x1 x2
        let e = ell(&[3, 1, 2]);
        let f = boundary_data(&e, &rotational(3)).unwrap();
        assert_eq!(
            f,
            Polynomial::monomial(3, MultiIndex::new(vec![1, 1, 0]), int(-4))
        );
        // gauge violation
        let mut comps = vec![Polynomial::zero(3); 3];
        comps[0] = Polynomial::variable(3, 0);
        let bad = PolyVectorField::new(comps).unwrap();
        match boundary_data(&e, &bad) {
            Err(Error::GaugeViolation { divergence }) => {
                assert_eq!(divergence, Polynomial::one(3));
            }
            other => panic!("expected gauge violation, got {other:?}"),
        }
    }

    #[test]
    fn electric_field_sphere_and_ellipsoid() {
        // sphere: V = 0, E = -dA/dt
        let e = ell(&[1, 1, 1]);
        let (v, field) = electric_field(&e, &rotational(3)).unwrap();
        assert!(v.is_zero());
        assert_eq!(field.components()[0], Polynomial::variable(3, 1).neg());
        assert_eq!(field.components()[1], Polynomial::variable(3, 0));
        assert!(field.components()[2].is_zero());

        // zero input
        let (v, field) = electric_field(&e, &PolyVectorField::zero(3)).unwrap();
        assert!(v.is_zero());
        assert!(field.is_zero());

        // genuine ellipsoid: both postcondition identities
        let e = ell(&[3, 1, 2]);
        let (v, field) = electric_field(&e, &rotational(3)).unwrap();
        assert!(v.laplacian().is_zero());
        assert!(divergence(&field).is_zero());
        let normal = normal_component(&e, &field).unwrap();
        assert!(e.vanishes_on_boundary(&normal).unwrap());
    }
}
