use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base variables `x, y, z` plus at most two auxiliaries.
pub const MAX_VARS: usize = 5;

/// Exponent vector with its total degree cached.
///
/// Slots past the ring's variable count are always zero, so comparisons and
/// divisibility can run over the full fixed-width array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        debug_assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
            nvars: nvars as u8,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS });
        }
        let mut m = Monomial::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e)
                .map_err(|_| Error::Input(format!("exponent {e} out of range")))?;
        }
        m.deg = exps.iter().sum();
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars()]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support(&self) -> u8 {
        let mut mask = 0;
        for i in 0..self.nvars() {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m.deg = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].min(other.exps[i]);
        }
        m.deg = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Same exponents with variable `i` removed, in a ring of one fewer variables.
    pub(crate) fn drop_var(&self, i: usize) -> Monomial {
        let mut m = Monomial::one(self.nvars() - 1);
        let mut k = 0;
        for j in 0..self.nvars() {
            if j != i {
                m.exps[k] = self.exps[j];
                k += 1;
            }
        }
        m.deg = self.deg - self.exps[i] as u32;
        m
    }

    pub(crate) fn with_nvars(&self, nvars: usize) -> Monomial {
        debug_assert!(self.exps[nvars.min(MAX_VARS)..].iter().all(|&e| e == 0));
        let mut m = *self;
        m.nvars = nvars as u8;
        m
    }

    pub(crate) fn set_exponent(&mut self, i: usize, e: u32) {
        self.deg = self.deg - self.exps[i] as u32 + e;
        self.exps[i] = e as u16;
    }
}

/// Monomial orders. Variables are ordered `x0 > x1 > ...` in all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    Lex,
    /// Elimination order: the variables in the `elim` bit mask form a block
    /// compared first (by grevlex), the remaining variables are compared
    /// afterwards (also by grevlex).
    Block { elim: u8 },
}


#[inline]
fn grevlex_masked(a: &Monomial, b: &Monomial, mask: u8) -> Ordering {
    let (mut da, mut db) = (0u32, 0u32);
    for i in 0..MAX_VARS {
        if mask & (1 << i) != 0 {
            da += a.exps[i] as u32;
            db += b.exps[i] as u32;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..MAX_VARS).rev() {
        if mask & (1 << i) != 0 && a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block { elim } => grevlex_masked(a, b, elim)
                .then_with(|| grevlex_masked(a, b, !elim)),
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

/// Compare two monomials over the same variable list.
pub fn compare_monomials(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::VariableMismatch);
    }
    Ok(order.cmp(a, b))
}
