//! Points of the projective plane, finite point sets and their symbolic
//! powers.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

/// A point `(a : b : c)`, scaled so that its last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoint<F: Field> {
    coords: [F::Elem; 3],
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(field: &F, coords: [F::Elem; 3]) -> Result<Self> {
        let last = coords
            .iter()
            .rposition(|c| !field.is_zero(c))
            .ok_or_else(|| Error::InvalidPoint("all coordinates are zero".into()))?;
        let inv = field.inv(&coords[last])?;
        let coords = coords.map(|c| field.mul(&c, &inv));
        Ok(ProjectivePoint { coords })
    }

    pub fn from_i64(field: &F, coords: [i64; 3]) -> Result<Self> {
        Self::new(field, coords.map(|c| field.from_i64(c)))
    }

    pub fn coords(&self) -> &[F::Elem; 3] {
        &self.coords
    }

    pub fn format(&self, field: &F) -> String {
        let [a, b, c] = &self.coords;
        format!("({} : {} : {})", field.format(a), field.format(b), field.format(c))
    }

    pub fn coordinate_strings(&self, field: &F) -> Vec<String> {
        self.coords.iter().map(|c| field.format(c)).collect()
    }

    /// Whether the homogeneous polynomial `f` vanishes here.
    pub fn vanishes(&self, f: &Polynomial<F>) -> bool {
        f.field().is_zero(&f.eval(&self.coords))
    }

    /// The 2x2 minors `b x - a y`, `c x - a z`, `c y - b z`.
    pub fn minors(&self, ring: &Arc<Ring<F>>) -> Vec<Polynomial<F>> {
        let [a, b, c] = &self.coords;
        let (x, y, z) = (Polynomial::var(ring, 0), Polynomial::var(ring, 1), Polynomial::var(ring, 2));
        let lin = |p: &F::Elem, u: &Polynomial<F>, q: &F::Elem, v: &Polynomial<F>| {
            &u.scale(p) - &v.scale(q)
        };
        vec![lin(b, &x, a, &y), lin(c, &x, a, &z), lin(c, &y, b, &z)]
    }

    /// `I_P`, seeded with its reduced basis.
    pub fn defining_ideal(&self, ring: &Arc<Ring<F>>) -> Result<Ideal<F>> {
        let ideal = Ideal::new(ring, self.minors(ring))?;
        ideal.groebner()?;
        Ok(ideal)
    }

    /// The two linear forms of the reduced basis of `I_P`.
    pub fn linear_generators(&self, ring: &Arc<Ring<F>>) -> Result<Vec<Polynomial<F>>> {
        let gb = self.defining_ideal(ring)?.groebner()?;
        debug_assert_eq!(gb.len(), 2);
        Ok(gb.elements().to_vec())
    }

    /// `I_P^r`, built from the two linear generators.
    pub fn power_ideal(&self, ring: &Arc<Ring<F>>, r: u32) -> Result<Ideal<F>> {
        Ideal::new(ring, self.linear_generators(ring)?)?.power(r)
    }
}

/// An ordered set of distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet<F: Field> {
    points: Vec<ProjectivePoint<F>>,
    label: String,
}

impl<F: Field> PointSet<F> {
    pub fn new(points: Vec<ProjectivePoint<F>>, label: impl Into<String>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Input("empty point set".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::DuplicatePoints);
            }
        }
        Ok(PointSet {
            points,
            label: label.into(),
        })
    }

    pub fn points(&self) -> &[ProjectivePoint<F>] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `I_H`, intersecting the point ideals left to right.
    pub fn points_ideal(&self, ring: &Arc<Ring<F>>) -> Result<Ideal<F>> {
        let mut acc = self.points[0].defining_ideal(ring)?;
        for p in &self.points[1..] {
            acc = acc.intersect(&p.defining_ideal(ring)?)?;
        }
        Ok(acc)
    }

    /// For each point `P`, whether `xi ∈ I_P^r`.
    pub fn membership_by_point(&self, ring: &Arc<Ring<F>>, xi: &Polynomial<F>, r: u32) -> Result<Vec<bool>> {
        if r == 0 {
            return Err(Error::Input("symbolic power order must be positive".into()));
        }
        self.points
            .par_iter()
            .map(|p| p.power_ideal(ring, r)?.contains(xi))
            .collect()
    }

    /// `xi ∈ I_H^(r)`, checked point by point.
    pub fn symbolic_power_membership(&self, ring: &Arc<Ring<F>>, xi: &Polynomial<F>, r: u32) -> Result<bool> {
        Ok(self.membership_by_point(ring, xi, r)?.into_iter().all(|b| b))
    }

    /// The full intersection of the `I_P^r`; `budget` bounds each Gröbner
    /// basis computation.
    pub fn symbolic_power_ideal(&self, ring: &Arc<Ring<F>>, r: u32, budget: Option<usize>) -> Result<Ideal<F>> {
        if r == 0 {
            return Err(Error::Input("symbolic power order must be positive".into()));
        }
        let mut acc = self.points[0].power_ideal(ring, r)?;
        acc.groebner_in(crate::poly::MonomialOrder::Grevlex, budget)?;
        for p in &self.points[1..] {
            acc = acc.intersect_with_budget(&p.power_ideal(ring, r)?, budget)?;
        }
        Ok(acc)
    }
}
