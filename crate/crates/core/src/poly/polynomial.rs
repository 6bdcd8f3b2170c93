use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};
use crate::field::{is_atomic_scalar, Field, PrimeField};

/// Coefficient field plus the ordered list of variable names.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring<F: Field> {
    field: F,
    vars: Vec<String>,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, vars: &[&str]) -> Result<Arc<Self>> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS });
        }
        Ok(Arc::new(Ring {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
        }))
    }

    /// `K[x, y, z]`.
    pub fn xyz(field: F) -> Arc<Self> {
        Ring::new(field, &["x", "y", "z"]).expect("three variables")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same field with extra variables appended after the existing ones.
    pub fn extended(&self, extra: &[&str]) -> Result<Arc<Self>> {
        let mut names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        names.extend_from_slice(extra);
        Ring::new(self.field.clone(), &names)
    }

    /// The same variables over `field`.
    pub fn with_field(&self, field: F) -> Arc<Self> {
        Arc::new(Ring {
            field,
            vars: self.vars.clone(),
        })
    }

    /// The same field with variable `i` removed.
    pub fn without(&self, i: usize) -> Arc<Self> {
        let names: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, s)| s.as_str())
            .collect();
        Ring::new(self.field.clone(), &names).expect("fewer variables")
    }

    pub(crate) fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub(crate) fn check_compatible(self: &Arc<Self>, other: &Arc<Self>) -> Result<()> {
        if Arc::ptr_eq(self, other) {
            return Ok(());
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }
}

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// Sparse polynomial: nonzero terms sorted by `order`, largest first.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    order: MonomialOrder,
    terms: Vec<Term<F>>,
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_as(&other.ring) {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::Grevlex,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F::Elem) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Arc<Ring<F>>, v: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(v))
    }

    pub fn monomial(ring: &Arc<Ring<F>>, m: Monomial, c: F::Elem) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::Grevlex,
            terms,
        }
    }

    pub fn var(ring: &Arc<Ring<F>>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    /// Variables by name: `x`, `y`, `z` in the standard ring.
    pub fn var_named(ring: &Arc<Ring<F>>, name: &str) -> Result<Self> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownSymbol {
            pos: 0,
            name: name.to_string(),
        })?;
        Ok(Self::var(ring, i))
    }

    /// Build from arbitrary terms: duplicates are summed, zeros dropped.
    pub fn from_terms(ring: &Arc<Ring<F>>, order: MonomialOrder, mut terms: Vec<Term<F>>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial {
            ring: ring.clone(),
            order,
            terms: out,
        }
    }

    /// Trusted constructor: `terms` already sorted by `order`, no zeros.
    pub(crate) fn from_sorted(ring: &Arc<Ring<F>>, order: MonomialOrder, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant term (zero if absent).
    pub fn constant_term(&self) -> F::Elem {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn lead_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Re-sort the terms for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero lead coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial {
                terms: Vec::new(),
                ..self.clone()
            };
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`; the term order is preserved because orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (*m, field.neg(a))).collect(),
        }
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let field = self.field();
        let order = self.order;
        let other = if other.order == order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.with_order(order))
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if subtract { field.neg(&t.1) } else { t.1.clone() };
            out.push((t.0, c));
        }
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_compatible(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_compatible(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_compatible(&other.ring)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring).with_order(self.order));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut prods = Vec::with_capacity(small.len() * big.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                prods.push((m1.mul(m2), field.mul(c1, c2)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, self.order, prods))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring).with_order(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self / d` if `d` divides `self`, `None` otherwise.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>> {
        self.ring.check_compatible(&d.ring)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let field = self.field();
        let d = d.with_order(self.order);
        let (dm, dc) = d.lead_term().expect("nonzero");
        let dc_inv = field.inv(dc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.lead_term() {
            let Some(q) = dm.quotient_of(m) else {
                return Ok(None);
            };
            let qc = field.mul(c, &dc_inv);
            rem = rem.merge(&d.mul_term(&q, &qc), true);
            quot.push((q, qc));
        }
        Ok(Some(Polynomial::from_sorted(&self.ring, self.order, quot)))
    }

    /// Total degree and homogeneity flag.
    pub fn degree_and_homogeneity(&self) -> Result<(u32, bool)> {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        let (mut lo, mut hi) = (first, first);
        for d in degs {
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Ok((hi, lo == hi))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_and_homogeneity().map(|(_, h)| h).unwrap_or(true)
    }

    /// Lowest degree of a term: the order of vanishing at the origin.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(i) > 0)
    }

    /// Evaluate at a point of `K^n`.
    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(m.nvars()) {
                let e = m.exponent(i);
                if e > 0 {
                    t = field.mul(&t, &field.pow(x, e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Replace variable `var` by `expr`, which must have degree at most 1 and
    /// must not involve `var`.
    pub fn substitute_linear_form(&self, var: usize, expr: &Self) -> Result<Self> {
        self.ring.check_compatible(&expr.ring)?;
        if expr.involves(var) {
            return Err(Error::SelfReference);
        }
        if expr.total_degree().unwrap_or(0) > 1 {
            return Err(Error::Input("substituted expression must be linear".into()));
        }
        let max_e = self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0);
        let expr = expr.with_order(self.order);
        let mut powers = vec![Polynomial::one(&self.ring).with_order(self.order)];
        for k in 1..=max_e as usize {
            let next = &powers[k - 1] * &expr;
            powers.push(next);
        }
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut rest = *m;
            rest.set_exponent(var, 0);
            for (pm, pc) in powers[e].terms() {
                out.push((rest.mul(pm), self.field().mul(c, pc)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, self.order, out))
    }

    /// Move into `ring`, which must be this ring with extra variables appended.
    pub fn extend_to(&self, ring: &Arc<Ring<F>>) -> Self {
        debug_assert!(ring.nvars() >= self.ring.nvars());
        debug_assert_eq!(&ring.var_names()[..self.ring.nvars()], self.ring.var_names());
        let n = ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_nvars(n), c.clone()))
            .collect();
        Polynomial::from_terms(ring, self.order, terms)
    }

    /// The same terms over `ring`, whose field must contain this one with
    /// elements represented identically (see [`Field::extension`]).
    pub fn base_change(&self, ring: &Arc<Ring<F>>) -> Self {
        debug_assert_eq!(ring.var_names(), self.ring.var_names());
        Polynomial {
            ring: ring.clone(),
            order: self.order,
            terms: self.terms.clone(),
        }
    }

    /// Coefficient-wise image under [`Field::reduce_mod`] in `ring`, a ring
    /// over the modular image of this field with the same variables.
    pub fn reduce_mod(&self, ring: &Arc<Ring<PrimeField>>) -> Option<Polynomial<PrimeField>> {
        let field = self.field();
        let target = ring.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Some((*m, field.reduce_mod(c, target)?)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_terms(ring, self.order, terms))
    }

    /// Move into `ring`, which must be a prefix of this ring's variables; the
    /// dropped trailing variables must not occur.
    pub fn restrict_to(&self, ring: &Arc<Ring<F>>) -> Result<Self> {
        let n = ring.nvars();
        if (n..self.ring.nvars()).any(|i| self.involves(i)) {
            return Err(Error::VariableMismatch);
        }
        let order = match self.order {
            MonomialOrder::Block { .. } => MonomialOrder::Grevlex,
            o => o,
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_nvars(n), c.clone()))
            .collect();
        Ok(Polynomial::from_terms(ring, order, terms))
    }

    /// Remove a variable that does not occur, landing in `ring.without(var)`.
    pub fn drop_variable(&self, var: usize, target: &Arc<Ring<F>>) -> Result<Self> {
        if self.involves(var) {
            return Err(Error::VariableMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.drop_var(var), c.clone()))
            .collect();
        Ok(Polynomial::from_terms(target, self.order, terms))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a, F: Field> std::ops::$tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics if the operands live in different rings; use the
            /// `try_` method for a checked variant.
            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$try(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

/// Canonical text: terms in the polynomial's own order, coefficients in the
/// scalar syntax, `*` between factors, `^` for exponents.
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mono = format_monomial(m, self.ring.var_names());
            let s = field.format(c);
            let (neg, body) = if is_atomic_scalar(&s) {
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            } else {
                (false, format!("({s})"))
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mono.is_empty(), body == "1") {
                (true, _) => write!(f, "{body}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{body}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, name) in names.iter().enumerate() {
        match m.exponent(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RationalField;

    fn xyz() -> (Polynomial<RationalField>, Polynomial<RationalField>, Polynomial<RationalField>) {
        let r = Ring::xyz(RationalField);
        (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2))
    }

    #[test]
    fn sums_and_products() {
        let (x, y, z) = xyz();
        assert_eq!(&(&y - &z) + &(&z - &x), &y - &x);
        assert_eq!(&(&y - &z) * &(&y + &z), &(&y * &y) - &(&z * &z));
    }

    #[test]
    fn fermat_forms_sum_to_zero() {
        let (x, y, z) = xyz();
        for n in 1..=6 {
            let f = &y.pow(n) - &z.pow(n);
            let g = &z.pow(n) - &x.pow(n);
            let h = &x.pow(n) - &y.pow(n);
            assert!((&(&f + &g) + &h).is_zero());
        }
    }

    #[test]
    fn degree_and_homogeneity() {
        let (x, _, _) = xyz();
        let one = Polynomial::one(x.ring());
        assert_eq!((&x + &one).degree_and_homogeneity(), Ok((1, false)));
        assert_eq!(
            Polynomial::<RationalField>::zero(x.ring()).degree_and_homogeneity(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn substitution_examples() {
        let (x, y, z) = xyz();
        let f = &(&x + &y) + &z;
        let minus_xy = -&(&x + &y);
        assert!(f.substitute_linear_form(2, &minus_xy).unwrap().is_zero());
        assert_eq!(x.pow(2).substitute_linear_form(0, &y).unwrap(), y.pow(2));
        let g = &(&x * &y) + &z.pow(2);
        let d = &x - &y;
        assert_eq!(
            g.substitute_linear_form(2, &d).unwrap(),
            &(&x * &y) + &d.pow(2)
        );
        assert_eq!(x.substitute_linear_form(0, &(&x + &y)), Err(Error::SelfReference));
    }

    #[test]
    fn exact_division() {
        let (x, y, z) = xyz();
        let a = &(&x * &y) - &z.pow(2);
        let b = &(&x + &y) + &z;
        let q = (&a * &b).div_exact(&b).unwrap().unwrap();
        assert_eq!(q, a);
        assert_eq!(x.div_exact(&y).unwrap(), None);
        let zero = Polynomial::zero(x.ring());
        assert_eq!(x.div_exact(&zero), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn mismatched_rings() {
        let (x, _, _) = xyz();
        let other = Ring::new(RationalField, &["a", "b"]).unwrap();
        let a = Polynomial::var(&other, 0);
        assert_eq!(x.try_add(&a), Err(Error::VariableMismatch));
    }

    #[test]
    fn display_is_canonical() {
        let (x, y, z) = xyz();
        let r = x.ring().clone();
        let third = Polynomial::constant(&r, num_rational::BigRational::new(1.into(), 3.into()));
        let p = &(&(&Polynomial::from_i64(&r, 2) * &(&x.pow(2) * &y)) - &z.pow(3)) + &(&third * &y);
        assert_eq!(p.to_string(), "2*x^2*y - z^3 + 1/3*y");
        assert_eq!(Polynomial::<RationalField>::zero(&r).to_string(), "0");
    }
}
