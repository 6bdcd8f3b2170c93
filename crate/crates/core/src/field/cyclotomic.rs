use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::format_rational;
use super::upoly::UPoly;
use super::prime::MODULAR_PRIME_FLOOR;
use super::{is_prime, Field, FieldSpec, PrimeField};
use crate::error::{Error, Result};

/// The `n`-th cyclotomic polynomial, via
/// `Phi_n(t) = (t^n - 1) / prod_{d | n, d < n} Phi_d(t)`.
pub fn cyclotomic_polynomial(n: u64) -> Result<UPoly> {
    if n == 0 {
        return Err(Error::InvalidField("cyclotomic conductor must be >= 1".into()));
    }
    let mut memo = BTreeMap::new();
    Ok(cyclotomic_memo(n, &mut memo))
}

fn cyclotomic_memo(n: u64, memo: &mut BTreeMap<u64, UPoly>) -> UPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    coeffs[0] = -BigRational::one();
    coeffs[n as usize] = BigRational::one();
    let mut num = UPoly::new(coeffs);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_memo(d, memo);
        let (q, r) = num.div_rem(&phi_d);
        debug_assert!(r.is_zero());
        num = q;
    }
    memo.insert(n, num.clone());
    num
}

#[derive(Debug)]
struct CycloCtx {
    n: u64,
    /// Coefficients of `Phi_n` below the leading one, as integers.
    phi: Vec<BigInt>,
    modulus: UPoly,
}

/// `Q(zeta_n)`, elements stored as residues modulo `Phi_n`.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    ctx: Arc<CycloCtx>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n
    }
}

/// Coefficient vector of length `deg Phi_n` over `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElem(pub Vec<BigRational>);

impl CyclotomicField {
    pub fn new(n: u64) -> Result<Self> {
        let modulus = cyclotomic_polynomial(n)?;
        let phi = modulus
            .coeffs()
            .iter()
            .take(modulus.degree().unwrap_or(0))
            .map(|c| c.to_integer())
            .collect();
        Ok(CyclotomicField {
            ctx: Arc::new(CycloCtx { n, phi, modulus }),
        })
    }

    pub fn conductor(&self) -> u64 {
        self.ctx.n
    }

    /// `deg Phi_n = phi(n)`.
    pub fn degree(&self) -> usize {
        self.ctx.phi.len()
    }

    pub fn modulus(&self) -> &UPoly {
        &self.ctx.modulus
    }

    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> CyclotomicElem {
        let v = coeffs.to_vec();
        self.reduce(v)
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> CyclotomicElem {
        let d = self.degree();
        for k in (d..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[k], BigRational::zero());
            for (i, p) in self.ctx.phi.iter().enumerate() {
                if !p.is_zero() {
                    v[k - d + i] -= &c * p;
                }
            }
        }
        v.resize(d, BigRational::zero());
        CyclotomicElem(v)
    }

    fn to_upoly(&self, a: &CyclotomicElem) -> UPoly {
        UPoly::new(a.0.clone())
    }
}

impl Field for CyclotomicField {
    type Elem = CyclotomicElem;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Cyclotomic { n: self.ctx.n }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> CyclotomicElem {
        CyclotomicElem(vec![BigRational::zero(); self.degree()])
    }

    fn one(&self) -> CyclotomicElem {
        self.from_i64(1)
    }

    fn from_i64(&self, v: i64) -> CyclotomicElem {
        self.from_rational(&BigRational::from_integer(BigInt::from(v))).unwrap()
    }

    fn from_rational(&self, r: &BigRational) -> Result<CyclotomicElem> {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = r.clone();
        Ok(CyclotomicElem(v))
    }

    fn is_zero(&self, a: &CyclotomicElem) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }

    fn is_one(&self, a: &CyclotomicElem) -> bool {
        a.0[0].is_one() && a.0[1..].iter().all(|c| c.is_zero())
    }

    fn add(&self, a: &CyclotomicElem, b: &CyclotomicElem) -> CyclotomicElem {
        CyclotomicElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn sub(&self, a: &CyclotomicElem, b: &CyclotomicElem) -> CyclotomicElem {
        CyclotomicElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    fn neg(&self, a: &CyclotomicElem) -> CyclotomicElem {
        CyclotomicElem(a.0.iter().map(|x| -x).collect())
    }

    fn mul(&self, a: &CyclotomicElem, b: &CyclotomicElem) -> CyclotomicElem {
        let d = self.degree();
        if d == 1 {
            return CyclotomicElem(vec![&a.0[0] * &b.0[0]]);
        }
        let mut out = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce(out)
    }

    fn sub_mul_assign(&self, a: &mut CyclotomicElem, b: &CyclotomicElem, c: &CyclotomicElem) {
        // Rational scalars are the common case; skip the convolution for them.
        let rational = |e: &CyclotomicElem| e.0[1..].iter().all(|x| x.is_zero());
        if rational(b) {
            let s = &b.0[0];
            for (x, y) in a.0.iter_mut().zip(&c.0) {
                if !y.is_zero() {
                    *x -= s * y;
                }
            }
        } else if rational(c) {
            let s = &c.0[0];
            for (x, y) in a.0.iter_mut().zip(&b.0) {
                if !y.is_zero() {
                    *x -= s * y;
                }
            }
        } else {
            let prod = self.mul(b, c);
            for (x, y) in a.0.iter_mut().zip(&prod.0) {
                *x -= y;
            }
        }
    }

    fn inv(&self, a: &CyclotomicElem) -> Result<CyclotomicElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        if a.0[1..].iter().all(|c| c.is_zero()) {
            return self.from_rational(&a.0[0].recip());
        }
        let (g, s, _) = UPoly::ext_gcd(&self.to_upoly(a), self.modulus());
        // Phi_n is irreducible, so any nonzero residue is coprime to it.
        debug_assert_eq!(g, UPoly::one());
        Ok(self.reduce(s.into_coeffs()))
    }

    fn generator(&self) -> Option<CyclotomicElem> {
        Some(self.reduce(vec![BigRational::zero(), BigRational::one()]))
    }

    fn root_of_unity(&self, k: u64) -> Option<CyclotomicElem> {
        let n = self.ctx.n;
        if k == 0 {
            return None;
        }
        let w = self.generator()?;
        if n.is_multiple_of(k) {
            Some(self.pow(&w, n / k))
        } else if n.is_odd() && (2 * n).is_multiple_of(k) {
            Some(self.pow(&self.neg(&w), 2 * n / k))
        } else {
            None
        }
    }

    fn as_rational(&self, a: &CyclotomicElem) -> Option<BigRational> {
        a.0[1..].iter().all(|c| c.is_zero()).then(|| a.0[0].clone())
    }

    /// `F_p` for the smallest prime `p ≡ 1 (mod n)` above `2^30`, with `zeta_n`
    /// sent to the smallest residue of order `n`.
    fn modular_image(&self) -> Option<PrimeField> {
        let n = self.ctx.n;
        let p = (MODULAR_PRIME_FLOOR / n + 1..)
            .map(|k| k * n + 1)
            .find(|&p| is_prime(p))?;
        PrimeField::with_root_of_order(p, n).ok()
    }

    fn reduce_mod(&self, a: &CyclotomicElem, target: &PrimeField) -> Option<u64> {
        let r = target.generator()?;
        let mut acc = 0;
        for c in a.0.iter().rev() {
            acc = target.add(&target.mul(&acc, &r), &target.from_rational(c).ok()?);
        }
        Some(acc)
    }

    fn format(&self, a: &CyclotomicElem) -> String {
        let mut out = String::new();
        for (k, c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match k {
                0 => format_rational(c),
                _ => {
                    let pow = if k == 1 { "w".to_string() } else { format!("w^{k}") };
                    if c.is_one() {
                        pow
                    } else if (-c).is_one() {
                        format!("-{pow}")
                    } else {
                        format!("{}*{pow}", format_rational(c))
                    }
                }
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
