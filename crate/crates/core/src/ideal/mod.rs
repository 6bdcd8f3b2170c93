//! Ideals of a polynomial ring and the invariants computed from their
//! Gröbner bases: dimension, colength, multiplicity, colon ideals.

mod hilbert;

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{groebner_basis_with_budget, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// A vector-space dimension that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(&self) -> Option<u64> {
        match *self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(n) => s.serialize_u64(*n),
            Length::Infinite => s.serialize_str("infinite"),
        }
    }
}

type Cache<F> = Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis<F>>)>>;

/// Finitely generated ideal with lazily computed Gröbner bases.
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
    unit: bool,
    homogeneous: bool,
    cache: Cache<F>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            unit: self.unit,
            homogeneous: self.homogeneous,
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| g.to_string())).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; an empty list gives the zero ideal.
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            ring.check_compatible(g.ring())?;
        }
        let gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.iter().any(|g| g.is_constant()) {
            return Ok(Self::unit(ring));
        }
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            unit: false,
            homogeneous,
            cache: Mutex::new(Vec::new()),
        })
    }

    pub fn unit(ring: &Arc<Ring<F>>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            unit: true,
            homogeneous: true,
            cache: Mutex::new(Vec::new()),
        }
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &Arc<Ring<F>>) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    /// `m^n`, generated by all monomials of degree `n`.
    pub fn maximal_power(ring: &Arc<Ring<F>>, n: u32) -> Self {
        let one = ring.field().one();
        let gens = monomials_of_degree(ring.nvars(), n)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, one.clone()))
            .collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    /// An ideal whose reduced basis for `order` is already known.
    pub(crate) fn from_basis(gb: GroebnerBasis<F>) -> Self {
        let ring = gb.ring().clone();
        if gb.is_unit() {
            return Self::unit(&ring);
        }
        let mut ideal = Ideal::new(&ring, gb.elements().to_vec()).expect("same ring");
        ideal.cache = Mutex::new(vec![(gb.order(), Arc::new(gb))]);
        ideal
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the generators are homogeneous (so the ideal is).
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.unit {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        Ok(self.groebner()?.is_unit())
    }

    /// Reduced grevlex basis.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis<F>>> {
        self.groebner_in(MonomialOrder::Grevlex, None)
    }

    /// Reduced basis for `order`, cached; `budget` bounds the S-pair count.
    pub fn groebner_in(&self, order: MonomialOrder, budget: Option<usize>) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some((_, gb)) = self.cache.lock().expect("cache lock").iter().find(|(o, _)| *o == order) {
            return Ok(gb.clone());
        }
        if self.is_zero() {
            return Err(Error::EmptyIdeal);
        }
        let gb = if self.unit {
            GroebnerBasis::from_reduced(&self.ring, order, vec![Polynomial::one(&self.ring).with_order(order)])
        } else {
            groebner_basis_with_budget(&self.gens, order, budget)?
        };
        let gb = Arc::new(gb);
        let mut cache = self.cache.lock().expect("cache lock");
        if let Some((_, existing)) = cache.iter().find(|(o, _)| *o == order) {
            return Ok(existing.clone());
        }
        cache.push((order, gb.clone()));
        Ok(gb)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.ring.check_compatible(f.ring())?;
        if f.is_zero() || self.unit {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        Ok(self.groebner()?.contains(f))
    }

    pub fn is_subset_of(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.ring.check_compatible(&other.ring)?;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ok(true),
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        Ok(self.groebner()?.elements() == other.groebner()?.elements())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.ring.check_compatible(&other.ring)?;
        if self.unit || other.unit {
            return Ok(Self::unit(&self.ring));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// `self + (f)`.
    pub fn with_generator(&self, f: Polynomial<F>) -> Result<Ideal<F>> {
        self.sum(&Ideal::new(&self.ring, vec![f])?)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.ring.check_compatible(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^r`, generated by all `r`-fold products of the generators.
    pub fn power(&self, r: u32) -> Result<Ideal<F>> {
        if r == 0 || self.unit {
            return Ok(Self::unit(&self.ring));
        }
        let mut gens = Vec::new();
        let mut stack: Vec<(usize, u32, Polynomial<F>)> = vec![(0, r, Polynomial::one(&self.ring))];
        while let Some((start, left, acc)) = stack.pop() {
            if left == 0 {
                gens.push(acc);
                continue;
            }
            for k in (start..self.gens.len()).rev() {
                stack.push((k, left - 1, &acc * &self.gens[k]));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `s` from `s I + (1 - s) J`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.intersect_with_budget(other, None)
    }

    pub fn intersect_with_budget(&self, other: &Ideal<F>, budget: Option<usize>) -> Result<Ideal<F>> {
        self.ring.check_compatible(&other.ring)?;
        if self.unit {
            return Ok(other.clone());
        }
        if other.unit {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_zero() {
            return Ideal::new(&self.ring, Vec::new());
        }
        let n = self.ring.nvars();
        let big = self.ring.extended(&["_s"])?;
        let s = Polynomial::var(&big, n);
        let one_minus_s = &Polynomial::one(&big) - &s;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(&s * &g.extend_to(&big));
        }
        for g in &other.gens {
            gens.push(&one_minus_s * &g.extend_to(&big));
        }
        let order = MonomialOrder::Block { elim: 1 << n };
        let gb = groebner_basis_with_budget(&gens, order, budget)?;
        let kept: Vec<Polynomial<F>> = gb
            .elements()
            .iter()
            .filter(|g| !g.involves(n))
            .map(|g| g.restrict_to(&self.ring))
            .collect::<Result<_>>()?;
        // The surviving elements are the reduced grevlex basis of the intersection.
        let basis = GroebnerBasis::from_reduced(&self.ring, MonomialOrder::Grevlex, kept);
        Ok(Ideal::from_basis(basis))
    }

    /// `I : (g)`.
    pub fn quotient_by(&self, g: &Polynomial<F>) -> Result<Ideal<F>> {
        self.ring.check_compatible(g.ring())?;
        if g.is_zero() || self.unit {
            return Ok(Self::unit(&self.ring));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for h in &meet.gens {
            gens.push(h.div_exact(g)?.ok_or_else(|| {
                Error::Input("intersection generator not divisible by the divisor".into())
            })?);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.ring.check_compatible(&other.ring)?;
        if other.unit {
            return Ok(self.clone());
        }
        if other.is_zero() {
            return Ok(Self::unit(&self.ring));
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonempty generator list"))
    }

    /// `I : J^∞`.
    pub fn saturate(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut current = self.clone();
        loop {
            let next = current.quotient(other)?;
            if next.same_ideal(&current)? {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> Result<i64> {
        let n = self.ring.nvars();
        if self.is_zero() {
            return Ok(n as i64);
        }
        if self.is_unit()? {
            return Ok(-1);
        }
        let supports: Vec<u8> = self.groebner()?.lead_monomials().iter().map(|m| m.support()).collect();
        let best = (0u32..1 << n)
            .filter(|&set| supports.iter().all(|&s| s as u32 & !set != 0))
            .map(|set| set.count_ones())
            .max()
            .unwrap_or(0);
        Ok(best as i64)
    }

    /// Number of variables minus the Krull dimension.
    pub fn height(&self) -> Result<i64> {
        Ok(self.ring.nvars() as i64 - self.krull_dimension()?)
    }

    /// Dimension of the quotient ring as a vector space over the field.
    pub fn vector_space_dimension(&self) -> Result<Length> {
        if self.unit {
            return Ok(Length::Finite(0));
        }
        if self.krull_dimension()? > 0 {
            return Ok(Length::Infinite);
        }
        let leads = self.groebner()?.lead_monomials();
        Ok(Length::Finite(standard_monomials(self.ring.nvars(), &leads).len() as u64))
    }

    /// Monomials outside the lead ideal; only meaningful in dimension zero.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if self.krull_dimension()? > 0 {
            return Err(Error::WrongDimension {
                expected: 0,
                found: self.krull_dimension()?,
            });
        }
        if self.unit {
            return Ok(Vec::new());
        }
        Ok(standard_monomials(self.ring.nvars(), &self.groebner()?.lead_monomials()))
    }

    /// Multiplicity of a one-dimensional graded quotient.
    pub fn hilbert_multiplicity(&self) -> Result<u64> {
        if !self.homogeneous {
            return Err(Error::NotHomogeneous);
        }
        let d = self.krull_dimension()?;
        if d != 1 {
            return Err(Error::WrongDimension { expected: 1, found: d });
        }
        let n = self.ring.nvars();
        let num = hilbert::numerator(&self.groebner()?.lead_monomials());
        let q = hilbert::divide_by_one_minus_t(num, n - 1)
            .expect("Hilbert numerator divisible by (1-t)^codim");
        let e: i128 = q.iter().sum();
        Ok(u64::try_from(e).expect("multiplicity is positive"))
    }

    /// Whether `f` lies in the radical, via `1 ∈ I + (1 - t f)`.
    pub fn radical_contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.ring.check_compatible(f.ring())?;
        if f.is_zero() || self.unit {
            return Ok(true);
        }
        let n = self.ring.nvars();
        let big = self.ring.extended(&["_t"])?;
        let t = Polynomial::var(&big, n);
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.extend_to(&big)).collect();
        gens.push(&Polynomial::one(&big) - &(&t * &f.extend_to(&big)));
        Ideal::new(&big, gens)?.is_unit()
    }

    /// Generators as text.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur).expect("width"));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Breadth-first enumeration of monomials not divisible by any of `leads`.
/// The caller guarantees the set is finite.
fn standard_monomials(nvars: usize, leads: &[Monomial]) -> Vec<Monomial> {
    let outside = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let start = Monomial::one(nvars);
    if !outside(&start) {
        return Vec::new();
    }
    let mut seen: HashSet<Monomial> = HashSet::from([start]);
    let mut out = vec![start];
    let mut k = 0;
    while k < out.len() {
        let m = out[k];
        k += 1;
        for i in 0..nvars {
            let next = m.mul(&Monomial::var(nvars, i));
            if outside(&next) && seen.insert(next) {
                out.push(next);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RationalField;

    type P = Polynomial<RationalField>;

    fn setup() -> (Arc<Ring<RationalField>>, P, P, P) {
        let r = Ring::xyz(RationalField);
        (r.clone(), P::var(&r, 0), P::var(&r, 1), P::var(&r, 2))
    }

    fn ideal(r: &Arc<Ring<RationalField>>, gens: &[&P]) -> Ideal<RationalField> {
        Ideal::new(r, gens.iter().map(|&g| g.clone()).collect()).unwrap()
    }

    #[test]
    fn intersections() {
        let (r, x, y, z) = setup();
        let i = ideal(&r, &[&x]).intersect(&ideal(&r, &[&y])).unwrap();
        assert!(i.same_ideal(&ideal(&r, &[&(&x * &y)])).unwrap());
        let a = ideal(&r, &[&x, &y]);
        assert!(a.intersect(&a).unwrap().same_ideal(&a).unwrap());
        let b = ideal(&r, &[&y, &z]);
        let meet = a.intersect(&b).unwrap();
        assert!(meet.same_ideal(&ideal(&r, &[&y, &(&x * &z)])).unwrap());
        assert!(meet.is_subset_of(&a).unwrap() && meet.is_subset_of(&b).unwrap());
    }

    #[test]
    fn quotients_and_saturation() {
        let (r, x, y, z) = setup();
        let xy = ideal(&r, &[&(&x * &y)]);
        assert!(xy.quotient(&ideal(&r, &[&x])).unwrap().same_ideal(&ideal(&r, &[&y])).unwrap());
        let i = ideal(&r, &[&(&x * &y), &(&x * &z)]);
        let sat = i.saturate(&ideal(&r, &[&x])).unwrap();
        assert!(sat.same_ideal(&ideal(&r, &[&y, &z])).unwrap());
        assert!(i.quotient(&Ideal::unit(&r)).unwrap().same_ideal(&i).unwrap());
    }

    #[test]
    fn powers() {
        let (r, x, y, _) = setup();
        let sq = ideal(&r, &[&x, &y]).power(2).unwrap();
        assert_eq!(sq.generators().len(), 3);
        assert!(sq.same_ideal(&ideal(&r, &[&x.pow(2), &(&x * &y), &y.pow(2)])).unwrap());
        assert!(ideal(&r, &[&x]).power(0).unwrap().is_unit().unwrap());
    }

    #[test]
    fn dimensions() {
        let (r, x, y, z) = setup();
        let px = ideal(&r, &[&x]);
        assert_eq!((px.krull_dimension().unwrap(), px.height().unwrap()), (2, 1));
        let m = Ideal::maximal(&r);
        assert_eq!((m.krull_dimension().unwrap(), m.height().unwrap()), (0, 3));
        assert_eq!(Ideal::unit(&r).krull_dimension().unwrap(), -1);
        assert_eq!(m.vector_space_dimension().unwrap(), Length::Finite(1));
        assert_eq!(
            Ideal::maximal_power(&r, 2).vector_space_dimension().unwrap(),
            Length::Finite(4)
        );
        let _ = (y, z);
        assert_eq!(px.vector_space_dimension().unwrap(), Length::Infinite);
    }

    #[test]
    fn multiplicities() {
        let (r, x, y, z) = setup();
        let point = ideal(&r, &[&x, &y]);
        assert_eq!(point.hilbert_multiplicity().unwrap(), 1);
        let two = ideal(&r, &[&z, &(&x * &y)]);
        assert_eq!(two.hilbert_multiplicity().unwrap(), 2);
        let fat = ideal(&r, &[&x, &y]).power(2).unwrap();
        assert_eq!(fat.hilbert_multiplicity().unwrap(), 3);
        let affine = ideal(&r, &[&(&x + &P::one(&r))]);
        assert_eq!(affine.hilbert_multiplicity(), Err(Error::NotHomogeneous));
        assert_eq!(
            Ideal::maximal(&r).hilbert_multiplicity(),
            Err(Error::WrongDimension { expected: 1, found: 0 })
        );
    }

    #[test]
    fn radical_membership() {
        let (r, x, y, z) = setup();
        assert!(ideal(&r, &[&x.pow(2)]).radical_contains(&x).unwrap());
        assert!(!ideal(&r, &[&x, &y]).radical_contains(&z).unwrap());
    }
}
