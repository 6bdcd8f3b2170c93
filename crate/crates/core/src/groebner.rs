//! Buchberger's algorithm, normal forms and reduced Gröbner bases.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree, then the
//! smallest lcm in the active order) and pruned with the Gebauer-Möller
//! installation of Buchberger's product and chain criteria. Every polynomial
//! that enters a basis is made monic, so reducers never divide.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, Term};

/// A reduced Gröbner basis: monic, interreduced, sorted by decreasing lead
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    order: MonomialOrder,
    elements: Vec<Polynomial<F>>,
    fingerprint: u64,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl<F: Field> GroebnerBasis<F> {
    /// Wrap elements that are already a reduced basis for `order`.
    pub(crate) fn from_reduced(
        ring: &Arc<Ring<F>>,
        order: MonomialOrder,
        mut elements: Vec<Polynomial<F>>,
    ) -> Self {
        elements.sort_by(|a, b| order.cmp(&b.lead_monomial().unwrap(), &a.lead_monomial().unwrap()));
        let fingerprint = fingerprint(&elements);
        GroebnerBasis {
            ring: ring.clone(),
            order,
            elements,
            fingerprint,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Hash of the generators the basis was computed from.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.lead_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    /// Remainder of `f` on division by the basis, in the basis order.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let f = f.with_order(self.order);
        let rem = reduce(self.ring.field(), self.order, &self.elements, f.into_terms(), true);
        Polynomial::from_sorted(&self.ring, self.order, rem)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// S-polynomial of `f` and `g` in the order of `f`.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    f.ring().check_compatible(g.ring())?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = g.with_order(f.order());
    let field = f.field();
    let (fm, fc) = f.lead_term().expect("nonzero");
    let (gm, gc) = g.lead_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).expect("lcm"), &field.inv(fc)?);
    let b = g.mul_term(&gm.quotient_of(&l).expect("lcm"), &field.inv(gc)?);
    a.try_sub(&b)
}

/// Full division remainder of `f` by the list `g`, in `order`.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    g: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<Polynomial<F>> {
    if g.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let mut divisors = Vec::with_capacity(g.len());
    for p in g {
        f.ring().check_compatible(p.ring())?;
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        divisors.push(p.with_order(order).monic());
    }
    let f = f.with_order(order);
    let rem = reduce(f.field(), order, &divisors, f.clone().into_terms(), true);
    Ok(Polynomial::from_sorted(f.ring(), order, rem))
}

/// The unique reduced Gröbner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis<F: Field>(
    gens: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<GroebnerBasis<F>> {
    groebner_basis_with_budget(gens, order, None)
}

/// As [`reduced_groebner_basis`], failing with `BudgetExceeded` once more
/// than `budget` S-pairs have been reduced.
pub fn groebner_basis_with_budget<F: Field>(
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    budget: Option<usize>,
) -> Result<GroebnerBasis<F>> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Err(Error::EmptyIdeal),
    };
    for g in gens {
        ring.check_compatible(g.ring())?;
    }
    let fingerprint = fingerprint(gens);
    let mut input: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).monic())
        .collect();
    if input.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    // Small leads first: they reduce the later generators.
    input.sort_by(|a, b| {
        order
            .cmp(&a.lead_monomial().unwrap(), &b.lead_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });
    let elements = Buchberger::new(&ring, order, budget).run(input)?;
    Ok(GroebnerBasis {
        ring,
        order,
        elements,
        fingerprint,
    })
}

fn fingerprint<F: Field>(gens: &[Polynomial<F>]) -> u64 {
    let mut h = DefaultHasher::new();
    for g in gens {
        g.to_string().hash(&mut h);
    }
    h.finish()
}

/// Whether every S-polynomial of `g` reduces to zero modulo `g`.
pub fn satisfies_buchberger_criterion<F: Field>(g: &[Polynomial<F>], order: MonomialOrder) -> Result<bool> {
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let s = s_polynomial(&g[i].with_order(order), &g[j])?;
            if !normal_form(&s, g, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn find_divisor<F: Field>(basis: &[Polynomial<F>], m: &Monomial) -> Option<usize> {
    basis
        .iter()
        .position(|g| g.lead_monomial().expect("nonzero").divides(m))
}

/// Reduce `p` (sorted in `order`) by the monic polynomials `basis`.
///
/// With `full == false` only the lead term is reduced and the first
/// irreducible lead stops the loop.
fn reduce<F: Field>(
    field: &F,
    order: MonomialOrder,
    basis: &[Polynomial<F>],
    mut p: Vec<Term<F>>,
    full: bool,
) -> Vec<Term<F>> {
    let mut rem: Vec<Term<F>> = Vec::new();
    let mut pos = 0;
    while pos < p.len() {
        let m = p[pos].0;
        let Some(gi) = find_divisor(basis, &m) else {
            if !full {
                rem.extend(p.drain(pos..));
                break;
            }
            pos += 1;
            continue;
        };
        let g = &basis[gi];
        // Terms before `pos` are irreducible: move them out first.
        rem.extend(p.drain(..pos));
        pos = 0;
        let mut tail = std::mem::take(&mut p).into_iter();
        let (_, c) = tail.next().expect("head term");
        if g.len() == 1 {
            p = tail.collect();
            continue;
        }
        let q = g.lead_monomial().unwrap().quotient_of(&m).expect("divisor");
        p = merge_sub(field, order, tail.collect(), &g.terms()[1..], &q, &c);
    }
    if full {
        rem.append(&mut p);
    }
    rem
}

/// `a - c * q * b`, both inputs sorted in `order`.
fn merge_sub<F: Field>(
    field: &F,
    order: MonomialOrder,
    a: Vec<Term<F>>,
    b: &[Term<F>],
    q: &Monomial,
    c: &F::Elem,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut j = 0;
    while j < b.len() {
        let bm = b[j].0.mul(q);
        match a.peek() {
            Some((am, _)) => match order.cmp(am, &bm) {
                std::cmp::Ordering::Greater => out.push(a.next().unwrap()),
                std::cmp::Ordering::Less => {
                    out.push((bm, field.neg(&field.mul(c, &b[j].1))));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (am, mut ac) = a.next().unwrap();
                    field.sub_mul_assign(&mut ac, c, &b[j].1);
                    if !field.is_zero(&ac) {
                        out.push((am, ac));
                    }
                    j += 1;
                }
            },
            None => {
                out.push((bm, field.neg(&field.mul(c, &b[j].1))));
                j += 1;
            }
        }
    }
    out.extend(a);
    out
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Buchberger<'a, F: Field> {
    ring: &'a Arc<Ring<F>>,
    order: MonomialOrder,
    budget: Option<usize>,
    polys: Vec<Polynomial<F>>,
    leads: Vec<Monomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

enum Step {
    Continue,
    Unit,
}

impl<'a, F: Field> Buchberger<'a, F> {
    fn new(ring: &'a Arc<Ring<F>>, order: MonomialOrder, budget: Option<usize>) -> Self {
        Buchberger {
            ring,
            order,
            budget,
            polys: Vec::new(),
            leads: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn active_basis(&self) -> Vec<Polynomial<F>> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.clone())
            .collect()
    }

    fn unit(&self) -> Vec<Polynomial<F>> {
        vec![Polynomial::one(self.ring).with_order(self.order)]
    }

    fn run(mut self, input: Vec<Polynomial<F>>) -> Result<Vec<Polynomial<F>>> {
        let field = self.ring.field().clone();
        let mut basis = Vec::new();
        for g in input {
            if let Step::Unit = self.insert_reduced(&field, &basis, g.into_terms()) {
                return Ok(self.unit());
            }
            basis = self.active_basis();
        }
        let mut processed = 0usize;
        while let Some(pair) = self.select() {
            processed += 1;
            if let Some(b) = self.budget {
                if processed > b {
                    return Err(Error::BudgetExceeded(b));
                }
            }
            let s = s_polynomial(&self.polys[pair.i], &self.polys[pair.j])?;
            if let Step::Unit = self.insert_reduced(&field, &basis, s.into_terms()) {
                return Ok(self.unit());
            }
            basis = self.active_basis();
        }
        Ok(self.finish(&field))
    }

    /// Reduce `terms` by `basis` and, if nonzero, install it.
    fn insert_reduced(&mut self, field: &F, basis: &[Polynomial<F>], terms: Vec<Term<F>>) -> Step {
        let rem = reduce(field, self.order, basis, terms, true);
        if rem.is_empty() {
            return Step::Continue;
        }
        let h = Polynomial::from_sorted(self.ring, self.order, rem).monic();
        if h.is_constant() {
            return Step::Unit;
        }
        self.update(h);
        Step::Continue
    }

    /// Pop the pair with the smallest lcm (degree first, then order, then indices).
    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| {
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.remove(best))
    }

    /// Gebauer-Möller update for the new element `h`.
    fn update(&mut self, h: Polynomial<F>) {
        let t = self.polys.len();
        let lt = h.lead_monomial().expect("nonzero");

        let candidates: Vec<Pair> = (0..t)
            .filter(|&k| self.active[k])
            .map(|k| Pair {
                i: k,
                j: t,
                lcm: self.leads[k].lcm(&lt),
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs are kept as
        // witnesses until the product criterion drops them below.
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = self.leads[p.i].is_coprime(&lt);
            let dominated = candidates[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(*p);
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|p| !self.leads[p.i].is_coprime(&lt))
            .collect();

        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(lt.divides(&p.lcm)
                && leads[p.i].lcm(&lt) != p.lcm
                && leads[p.j].lcm(&lt) != p.lcm)
        });
        self.pairs.extend(fresh);

        for k in 0..t {
            if self.active[k] && lt.divides(&self.leads[k]) {
                self.active[k] = false;
            }
        }
        self.polys.push(h);
        self.leads.push(lt);
        self.active.push(true);
    }

    /// Interreduce the active elements into the reduced basis.
    fn finish(self, field: &F) -> Vec<Polynomial<F>> {
        let basis = self.active_basis();
        let mut out: Vec<Polynomial<F>> = Vec::with_capacity(basis.len());
        for (k, g) in basis.iter().enumerate() {
            let others: Vec<Polynomial<F>> = basis
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, p)| p.clone())
                .collect();
            let mut terms = g.terms().to_vec();
            let head = terms.remove(0);
            let mut rem = reduce(field, self.order, &others, terms, true);
            rem.insert(0, head);
            out.push(Polynomial::from_sorted(self.ring, self.order, rem));
        }
        let order = self.order;
        out.sort_by(|a, b| order.cmp(&b.lead_monomial().unwrap(), &a.lead_monomial().unwrap()));
        out
    }
}
