//! Randomized kernel invariants shared by the property tests and the
//! acceptance suite.

#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use symrees::field::{CyclotomicField, Field, PrimeField, RationalField};
use symrees::groebner::{normal_form, reduced_groebner_basis, s_polynomial};
use symrees::parse::parse_polynomial;
use symrees::points::{PointSet, ProjectivePoint};
use symrees::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub type Spec = Vec<([u32; 3], i64)>;
pub type Check = std::result::Result<(), TestCaseError>;

pub fn terms(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Spec> {
    prop::collection::vec(([0..=max_deg, 0..=max_deg, 0..=max_deg], -6i64..=6), 1..=max_terms)
}

pub fn generator_specs() -> impl Strategy<Value = Vec<Spec>> {
    prop::collection::vec(terms(2, 3), 2..=3)
}

pub fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::Block { elim: 0b001 }),
    ]
}

pub fn build<F: Field>(ring: &Arc<Ring<F>>, spec: &Spec) -> Polynomial<F> {
    let field = ring.field();
    let terms = spec
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(e).unwrap(), field.from_i64(*c)))
        .collect();
    Polynomial::from_terms(ring, MonomialOrder::Grevlex, terms)
}

fn nonzero<F: Field>(ring: &Arc<Ring<F>>, specs: &[Spec]) -> Vec<Polynomial<F>> {
    specs.iter().map(|s| build(ring, s)).filter(|p| !p.is_zero()).collect()
}

/// Every S-polynomial of the computed basis reduces to zero, the input lies
/// in it and the elements are monic.
pub fn s_polynomials_reduce_to_zero(specs: &[Spec], order: MonomialOrder) -> Check {
    let ring = Ring::xyz(PrimeField::new(32003).unwrap());
    let gens = nonzero(&ring, specs);
    if gens.is_empty() {
        return Ok(());
    }
    let gb = reduced_groebner_basis(&gens, order).unwrap();
    let elems = gb.elements();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let s = s_polynomial(&elems[i], &elems[j]).unwrap();
            prop_assert!(normal_form(&s, elems, order).unwrap().is_zero());
        }
    }
    for g in &gens {
        prop_assert!(gb.contains(g));
    }
    for g in elems {
        prop_assert_eq!(g.lead_coeff(), Some(&ring.field().one()));
    }
    Ok(())
}

/// Shuffling the generators leaves the reduced basis unchanged.
pub fn reduced_basis_ignores_generator_order(specs: &[Spec], shift: usize) -> Check {
    let ring = Ring::xyz(RationalField);
    let gens = nonzero(&ring, specs);
    if gens.is_empty() {
        return Ok(());
    }
    let mut shuffled = gens.clone();
    shuffled.rotate_left(shift % gens.len());
    shuffled.reverse();
    let a = reduced_groebner_basis(&gens, MonomialOrder::Grevlex).unwrap();
    let b = reduced_groebner_basis(&shuffled, MonomialOrder::Grevlex).unwrap();
    prop_assert_eq!(a, b);
    Ok(())
}

pub fn point_coords() -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec([-3i64..=3, -3i64..=3, 1i64..=2], 2..=4)
}

pub fn combinations() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=3)
}

/// A product of `r` elements of `I_H` lies in `I_H^(r)`.
pub fn ordinary_powers_lie_in_symbolic_powers(coords: &[[i64; 3]], factors: &[Vec<i64>]) -> Check {
    let field = PrimeField::new(101).unwrap();
    let ring = Ring::xyz(field.clone());
    let mut pts: Vec<ProjectivePoint<PrimeField>> = Vec::new();
    for c in coords {
        let p = ProjectivePoint::from_i64(&field, *c).unwrap();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let set = PointSet::new(pts, "random").unwrap();
    let ideal = set.points_ideal(&ring).unwrap();
    let gens = ideal.groebner().unwrap().elements().to_vec();
    let mut product = Polynomial::one(&ring);
    for f in factors {
        let mut comb = Polynomial::zero(&ring);
        for (g, c) in gens.iter().zip(f) {
            comb = &comb + &g.scale(&field.from_i64(*c));
        }
        product = &product * &comb;
    }
    prop_assert!(set.symbolic_power_membership(&ring, &product, factors.len() as u32).unwrap());
    Ok(())
}

pub fn axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Check {
    prop_assert_eq!(f.add(a, b), f.add(b, a));
    prop_assert_eq!(f.mul(a, b), f.mul(b, a));
    prop_assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    prop_assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    prop_assert_eq!(f.add(a, &f.neg(a)), f.zero());
    prop_assert_eq!(f.sub(&f.add(a, b), b), a.clone());
    if *a != f.zero() {
        prop_assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
        prop_assert_eq!(f.mul(&f.div(b, a).unwrap(), a), b.clone());
    } else {
        prop_assert!(f.inv(a).is_err());
    }
    Ok(())
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_triples() -> impl Strategy<Value = [(i64, i64); 3]> {
    prop::array::uniform3((-50i64..50, 1i64..20))
}

pub fn rational_axioms(v: [(i64, i64); 3]) -> Check {
    let [a, b, c] = v.map(|(n, d)| rational(n, d));
    axioms(&RationalField, &a, &b, &c)
}

pub fn cyclotomic_inputs() -> impl Strategy<Value = (u64, [Vec<i64>; 3])> {
    (3u64..=12, prop::array::uniform3(prop::collection::vec(-5i64..=5, 6)))
}

pub fn cyclotomic_axioms(n: u64, v: [Vec<i64>; 3]) -> Check {
    let field = CyclotomicField::new(n).unwrap();
    let w = field.generator().unwrap();
    let elem = |cs: &Vec<i64>| {
        cs.iter()
            .rev()
            .fold(field.zero(), |acc, &c| field.add(&field.mul(&acc, &w), &field.from_i64(c)))
    };
    let [a, b, c] = v.map(|cs| elem(&cs));
    axioms(&field, &a, &b, &c)?;
    prop_assert_eq!(field.pow(&w, n), field.one());
    Ok(())
}

pub fn prime_inputs() -> impl Strategy<Value = (u64, [u64; 3])> {
    (
        prop::sample::select(vec![2u64, 3, 13, 101, 32003, 2_147_483_647]),
        prop::array::uniform3(any::<u64>()),
    )
}

pub fn prime_axioms(p: u64, v: [u64; 3]) -> Check {
    let field = PrimeField::new(p).unwrap();
    let [a, b, c] = v.map(|x| x % p);
    axioms(&field, &a, &b, &c)
}

pub fn extension_inputs() -> impl Strategy<Value = (u32, [u64; 3])> {
    (2u32..=3, prop::array::uniform3(any::<u64>()))
}

/// Axioms in `F_{11^k}`, plus `a^q = a`.
pub fn extension_axioms(k: u32, v: [u64; 3]) -> Check {
    let field = PrimeField::new(11).unwrap().extension_of_degree(k).unwrap();
    let q = 11u64.pow(k);
    let [a, b, c] = v.map(|x| x % q);
    axioms(&field, &a, &b, &c)?;
    prop_assert_eq!(field.pow(&a, q), a);
    Ok(())
}

pub fn printable_inputs() -> impl Strategy<Value = (Spec, u64)> {
    (terms(4, 5), prop::sample::select(vec![3u64, 4, 6]))
}

/// Printing a polynomial and parsing the text gives it back.
pub fn printed_polynomials_parse_back(spec: &Spec, n: u64) -> Check {
    let ring = Ring::xyz(CyclotomicField::new(n).unwrap());
    let w = ring.field().generator().unwrap();
    let p = &build(&ring, spec) + &build(&ring, &spec[..1].to_vec()).scale(&w);
    prop_assert_eq!(parse_polynomial(&ring, &p.to_string()).unwrap(), p);

    let q = Ring::xyz(RationalField);
    let r = build(&q, spec).scale(&rational(3, 7));
    prop_assert_eq!(parse_polynomial(&q, &r.to_string()).unwrap(), r);
    Ok(())
}
