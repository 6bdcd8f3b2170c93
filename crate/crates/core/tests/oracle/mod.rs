//! Independent local-length oracle: `dim S/(J + m^N)` by Gaussian
//! elimination on truncated Macaulay matrices, with no Gröbner bases.

#![allow(dead_code)]

use std::collections::HashMap;

use symrees::field::Field;
use symrees::poly::Polynomial;

/// Exponent vectors of total degree below `n` in `nvars` variables.
fn monomials_below(nvars: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|m: Vec<u32>| {
                let used: u32 = m.iter().sum();
                (0..n.saturating_sub(used)).map(move |e| {
                    let mut m = m.clone();
                    m.push(e);
                    m
                })
            })
            .collect();
    }
    out.sort_by_key(|m| (m.iter().sum::<u32>(), std::cmp::Reverse(m.clone())));
    out
}

/// `dim S/(J + m^n)` for `J` generated by `gens`.
pub fn truncated_colength<F: Field>(gens: &[Polynomial<F>], n: u32) -> u64 {
    let Some(first) = gens.first() else { return 0 };
    let field = first.field().clone();
    let nvars = first.ring().nvars();
    let monos = monomials_below(nvars, n);
    let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let terms: Vec<Vec<(Vec<u32>, F::Elem)>> = gens
        .iter()
        .map(|g| {
            g.terms()
                .iter()
                .map(|(m, c)| ((0..nvars).map(|i| m.exponent(i)).collect(), c.clone()))
                .collect()
        })
        .collect();
    // Pivot rows keyed by their leading column, stored sparse and monic.
    let mut pivots: HashMap<usize, Vec<(usize, F::Elem)>> = HashMap::new();
    for g in &terms {
        for shift in &monos {
            let mut row: Vec<(usize, F::Elem)> = g
                .iter()
                .filter_map(|(e, c)| {
                    let m: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
                    index.get(&m).map(|&i| (i, c.clone()))
                })
                .collect();
            row.sort_by_key(|(i, _)| *i);
            while let Some((lead, c)) = row.first().cloned() {
                match pivots.get(&lead) {
                    Some(p) => row = axpy(&field, &row, &field.neg(&c), p),
                    None => {
                        let inv = field.inv(&c).expect("nonzero lead");
                        let monic = row.iter().map(|(i, v)| (*i, field.mul(v, &inv))).collect();
                        pivots.insert(lead, monic);
                        break;
                    }
                }
            }
        }
    }
    (monos.len() - pivots.len()) as u64
}

/// `a + s b` on sparse rows sorted by column.
fn axpy<F: Field>(field: &F, a: &[(usize, F::Elem)], s: &F::Elem, b: &[(usize, F::Elem)]) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.mul(s, &b[j].1)));
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(s, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Scan `N = 1, 2, ...` until two consecutive values agree; returns the
/// trace, or `None` past `cap`.
pub fn local_length(gens: &[Polynomial<impl Field>], cap: u32) -> Option<Vec<(u32, u64)>> {
    let mut trace = Vec::new();
    for n in 1..=cap {
        let v = truncated_colength(gens, n);
        let settled = trace.last().is_some_and(|&(_, prev)| prev == v);
        trace.push((n, v));
        if settled {
            return Some(trace);
        }
    }
    None
}
