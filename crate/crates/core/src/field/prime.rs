use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

use super::{Field, FieldSpec};
use crate::error::{Error, Result};

/// Log and antilog tables for `F_q`, `q = p^k`, `k > 1`.
///
/// Elements are encoded as integers `a_0 + a_1 p + ... + a_{k-1} p^{k-1}`
/// standing for `a_0 + a_1 t + ... + a_{k-1} t^{k-1}`, with `t` a root of a
/// primitive polynomial. Elements of `F_p` keep their encoding.
#[derive(Debug)]
struct Extension {
    k: u32,
    q: u64,
    log: Vec<u32>,
    exp: Vec<u32>,
}

/// Characteristic of the modular image of `Q`.
pub const MODULAR_PRIME: u64 = 2_147_483_647;

/// Modular images of cyclotomic fields use primes above this bound.
pub const MODULAR_PRIME_FLOOR: u64 = 1 << 30;

/// Largest field size for which extension tables are built.
pub const MAX_EXTENSION_SIZE: u64 = 1 << 20;

/// `F_p`, or `F_{p^k}` when built with [`PrimeField::extension_of_degree`],
/// with an optional distinguished root of unity standing in for `w`.
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u64,
    generator: Option<u64>,
    ext: Option<Arc<Extension>>,
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.generator == other.generator && self.degree() == other.degree()
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField {
            p,
            generator: None,
            ext: None,
        })
    }

    /// `F_p` where `w` denotes the smallest residue of multiplicative order `n`.
    pub fn with_root_of_order(p: u64, n: u64) -> Result<Self> {
        let mut f = PrimeField::new(p)?;
        f.generator = Some(embed_root_into_prime_field(n, p)?);
        Ok(f)
    }

    /// The field of `p^k` elements containing this prime field; `w` is kept.
    pub fn extension_of_degree(&self, k: u32) -> Result<Self> {
        if k == self.degree() {
            return Ok(self.clone());
        }
        if self.ext.is_some() || k == 0 {
            return Err(Error::InvalidField("extensions are built over the prime field only".into()));
        }
        if k == 1 {
            return Ok(PrimeField {
                ext: None,
                ..self.clone()
            });
        }
        let q = self
            .p
            .checked_pow(k)
            .filter(|&q| q <= MAX_EXTENSION_SIZE)
            .ok_or_else(|| Error::InvalidField(format!("F_{}^{k} is too large", self.p)))?;
        Ok(PrimeField {
            ext: Some(Arc::new(build_extension(self.p, k, q))),
            ..self.clone()
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.ext.as_ref().map_or(1, |e| e.k)
    }

    #[inline]
    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Digit-wise combination of two encoded extension elements.
    fn digitwise(&self, a: u64, b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        let k = self.degree();
        for _ in 0..k {
            out += op(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn add_mod(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub_mod(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
}

/// Tables for `F_{p^k}` from the first primitive polynomial in encoding order.
fn build_extension(p: u64, k: u32, q: u64) -> Extension {
    // Monic degree-k polynomial t^k + c(t); c encoded like a field element.
    for c in 1..q {
        let times_t = |a: u64| -> u64 {
            // a * t mod (t^k + c)
            let top = a / (q / p);
            let shifted = (a % (q / p)) * p;
            let mut out = 0;
            let (mut s, mut cc, mut place) = (shifted, c, 1);
            for _ in 0..k {
                let digit = (s % p + (p - (top * (cc % p)) % p)) % p;
                out += digit * place;
                s /= p;
                cc /= p;
                place *= p;
            }
            out
        };
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut acc = 1u64;
        let mut primitive = true;
        for i in 0..q - 1 {
            if i > 0 && acc == 1 {
                primitive = false;
                break;
            }
            exp.push(acc as u32);
            acc = times_t(acc);
        }
        if !primitive || acc != 1 {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        return Extension { k, q, log, exp };
    }
    unreachable!("primitive polynomials exist in every degree")
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn has_order(g: u64, n: u64, p: u64, factors: &[u64]) -> bool {
    pow_mod(g, n, p) == 1 && factors.iter().all(|q| pow_mod(g, n / q, p) != 1)
}

/// The smallest residue of multiplicative order exactly `n` in `F_p`.
///
/// Elements of order `n` are the powers `z^k`, `gcd(k, n) = 1`, of any one of
/// them; `z` is obtained from a primitive root, so the search is `O(n log p)`
/// rather than linear in `p`.
pub fn embed_root_into_prime_field(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || !(p - 1).is_multiple_of(n) {
        return Err(Error::NoSuchRoot { n, p });
    }
    if n == 1 {
        return Ok(1);
    }
    let group = prime_factors(p - 1);
    let primitive = (2..p)
        .find(|&g| has_order(g, p - 1, p, &group))
        .expect("F_p^* is cyclic");
    let z = pow_mod(primitive, (p - 1) / n, p);
    let mut best = u64::MAX;
    let mut acc = 1u64;
    for k in 1..=n {
        acc = ((acc as u128 * z as u128) % p as u128) as u64;
        if num_integer::gcd(k, n) == 1 {
            best = best.min(acc);
        }
    }
    Ok(best)
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        match self.degree() {
            1 => FieldSpec::Prime { p: self.p },
            k => FieldSpec::PrimePower { p: self.p, k },
        }
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn from_rational(&self, r: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let reduce = |x: &BigInt| -> u64 {
            let m = x % &p;
            let m = if m.is_negative() { m + &p } else { m };
            m.to_u64().expect("residue fits")
        };
        let den = reduce(r.denom());
        let num = reduce(r.numer());
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mulmod(num, pow_mod(den, self.p - 2, self.p)))
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        match self.ext {
            None => self.add_mod(*a, *b),
            Some(_) => self.digitwise(*a, *b, |x, y| self.add_mod(x, y)),
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        match self.ext {
            None => self.sub_mod(*a, *b),
            Some(_) => self.digitwise(*a, *b, |x, y| self.sub_mod(x, y)),
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        self.sub(&0, a)
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        match &self.ext {
            None => self.mulmod(*a, *b),
            Some(_) if *a == 0 || *b == 0 => 0,
            Some(e) => {
                let s = e.log[*a as usize] as u64 + e.log[*b as usize] as u64;
                e.exp[(s % (e.q - 1)) as usize] as u64
            }
        }
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        match &self.ext {
            None => Ok(pow_mod(*a, self.p - 2, self.p)),
            Some(e) => {
                let l = e.log[*a as usize] as u64;
                Ok(e.exp[((e.q - 1 - l) % (e.q - 1)) as usize] as u64)
            }
        }
    }

    #[inline]
    fn sub_mul_assign(&self, a: &mut u64, b: &u64, c: &u64) {
        let prod = self.mul(b, c);
        *a = self.sub(a, &prod);
    }

    fn generator(&self) -> Option<u64> {
        self.generator
    }

    fn root_of_unity(&self, k: u64) -> Option<u64> {
        if let Ok(r) = embed_root_into_prime_field(k, self.p) {
            return Some(r);
        }
        let e = self.ext.as_ref()?;
        if k == 0 || (e.q - 1) % k != 0 {
            return None;
        }
        // Generators of the order-k subgroup are exp[(q-1)/k * j], gcd(j, k) = 1.
        let step = (e.q - 1) / k;
        (1..=k)
            .filter(|&j| num_integer::gcd(j, k) == 1)
            .map(|j| e.exp[(step * j) as usize % (e.q - 1) as usize] as u64)
            .min()
    }

    fn extension(&self, degree: u32) -> Option<Self> {
        self.extension_of_degree(self.degree() * degree).ok()
    }

    fn sample_small(&self, rng: &mut ChaCha8Rng) -> u64 {
        let a = self.from_i64(rng.gen_range(-4..=4));
        match self.ext {
            None => a,
            Some(_) => {
                let b = self.from_i64(rng.gen_range(-4..=4));
                self.add(&a, &(b * self.p))
            }
        }
    }

    fn as_rational(&self, _a: &u64) -> Option<BigRational> {
        None
    }

    fn format(&self, a: &u64) -> String {
        if self.ext.is_none() || *a < self.p {
            return a.to_string();
        }
        let mut parts = Vec::new();
        let mut rest = *a;
        for i in 0..self.degree() {
            let d = rest % self.p;
            rest /= self.p;
            match (d, i) {
                (0, _) => {}
                (_, 0) => parts.push(d.to_string()),
                (1, 1) => parts.push("t".to_string()),
                (_, 1) => parts.push(format!("{d}*t")),
                (1, _) => parts.push(format!("t^{i}")),
                _ => parts.push(format!("{d}*t^{i}")),
            }
        }
        parts.join("+")
    }
}
