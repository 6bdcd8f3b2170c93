//! Exact coefficient fields.
//!
//! Three kinds are supported: the rationals, cyclotomic extensions
//! `Q(zeta_n)` stored as residues modulo the `n`-th cyclotomic polynomial, and
//! prime fields `F_p` used as a fast verification backend, along with their
//! small extensions `F_{p^k}`.
//!
//! Field values are contexts: they are cheap to clone and every arithmetic
//! operation goes through them, so that a cyclotomic element does not have to
//! carry its modulus around.

mod cyclotomic;
mod prime;
mod rational;
pub mod upoly;

use std::fmt;
use std::hash::Hash;

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicElem, CyclotomicField};
pub use prime::{embed_root_into_prime_field, is_prime, PrimeField, MAX_EXTENSION_SIZE};
pub use rational::RationalField;

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Cyclotomic { n: u64 },
    Prime { p: u64 },
    #[serde(rename = "prime-power")]
    PrimePower { p: u64, k: u32 },
}

impl FieldSpec {
    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Prime { .. } | FieldSpec::PrimePower { .. })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic { n } => write!(f, "Q(zeta_{n})"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
            FieldSpec::PrimePower { p, k } => write!(f, "F_{p}^{k}"),
        }
    }
}

/// A field context together with its element type.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of a rational number; fails in `F_p` when `p` divides the denominator.
    fn from_rational(&self, r: &BigRational) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a -= b * c`, the inner step of every reduction loop.
    fn sub_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.sub(a, &self.mul(b, c));
    }

    /// The element denoted `w` in the text syntax, if the field has one.
    fn generator(&self) -> Option<Self::Elem>;

    /// Some primitive `k`-th root of unity, if the field contains one.
    fn root_of_unity(&self, k: u64) -> Option<Self::Elem>;

    /// The element as a rational number when it lies in `Q`.
    fn as_rational(&self, a: &Self::Elem) -> Option<BigRational>;

    /// Canonical text form. For `F_{p^k}` with `k > 1` the extension
    /// generator prints as `t`, which the parser does not accept.
    fn format(&self, a: &Self::Elem) -> String;

    /// A field of `degree` times the size containing this one, in which every
    /// element of `self` keeps its representation.
    fn extension(&self, _degree: u32) -> Option<Self> {
        None
    }

    /// A prime field receiving a ring map from the elements of `self` whose
    /// denominators are prime to its characteristic.
    fn modular_image(&self) -> Option<PrimeField> {
        None
    }

    /// Image under the map of [`Field::modular_image`]; `None` when a
    /// denominator vanishes modulo the characteristic of `target`.
    fn reduce_mod(&self, _a: &Self::Elem, _target: &PrimeField) -> Option<u64> {
        None
    }

    /// A random element of small height, used to draw linear forms.
    fn sample_small(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        self.from_i64(rng.gen_range(-4..=4))
    }
}

/// A scalar string is "atomic" when it can be printed as a coefficient
/// without parentheses: no `+` and no `-` except a leading sign.
pub(crate) fn is_atomic_scalar(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.contains('+') && !body.contains('-')
}
