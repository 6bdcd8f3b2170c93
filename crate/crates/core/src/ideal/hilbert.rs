//! Hilbert series numerators of monomial ideals.

use std::collections::HashMap;

use crate::poly::Monomial;

/// Integer polynomial in `t`, low degree first.
pub(crate) type TPoly = Vec<i128>;

fn trim(mut p: TPoly) -> TPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn add(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn mul(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn shift(a: &TPoly, k: usize) -> TPoly {
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    trim(out)
}

/// `1 - t^d`.
fn one_minus_power(d: u32) -> TPoly {
    let mut p = vec![0; d as usize + 1];
    p[0] = 1;
    p[d as usize] -= 1;
    trim(p)
}

/// Drop generators divisible by another one; sort for a canonical key.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m.exponents().first().unwrap_or(&0)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `K[x_1..x_n] / L`.
pub(crate) fn numerator(gens: &[Monomial]) -> TPoly {
    let mut memo = HashMap::new();
    numerator_rec(minimalize(gens.to_vec()), &mut memo)
}

fn numerator_rec(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, TPoly>) -> TPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let nvars = gens[0].nvars();
    // A variable shared by two generators, the one shared most often.
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if m.exponent(i) > 0 {
                *c += 1;
            }
        }
    }
    let pivot_var = (0..nvars).filter(|&i| counts[i] >= 2).max_by_key(|&i| (counts[i], usize::MAX - i));
    let result = match pivot_var {
        None => gens
            .iter()
            .fold(vec![1], |acc, m| mul(&acc, &one_minus_power(m.degree()))),
        Some(i) => {
            let e = gens
                .iter()
                .map(|m| m.exponent(i))
                .filter(|&e| e > 0)
                .min()
                .expect("shared variable");
            let mut p = Monomial::one(nvars);
            p.set_exponent(i, e);
            // N(L) = N(L + (p)) + t^e N(L : p)
            let mut with_p = gens.clone();
            with_p.push(p);
            let colon: Vec<Monomial> = gens
                .iter()
                .map(|m| {
                    let mut q = *m;
                    q.set_exponent(i, m.exponent(i).saturating_sub(e));
                    q
                })
                .collect();
            let a = numerator_rec(minimalize(with_p), memo);
            let b = numerator_rec(minimalize(colon), memo);
            add(&a, &shift(&b, e as usize))
        }
    };
    memo.insert(gens, result.clone());
    result
}

/// Divide by `(1 - t)` exactly `k` times; `None` if some division is inexact.
pub(crate) fn divide_by_one_minus_t(mut p: TPoly, k: usize) -> Option<TPoly> {
    for _ in 0..k {
        // p = (1 - t) q  <=>  q_i = p_0 + ... + p_i
        let mut q = Vec::with_capacity(p.len());
        let mut acc = 0;
        for c in &p {
            acc += c;
            q.push(acc);
        }
        if acc != 0 {
            return None;
        }
        q.pop();
        if q.is_empty() {
            q.push(0);
        }
        p = trim(q);
    }
    Some(p)
}
