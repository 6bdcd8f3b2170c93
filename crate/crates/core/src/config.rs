//! Constructors for the point configurations and their witness pairs.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, Ring};
use crate::points::{PointSet, ProjectivePoint};

/// Two polynomials with the symbolic power orders they are claimed to lie in.
#[derive(Clone, Debug)]
pub struct WitnessPair<F: Field> {
    pub xi1: Polynomial<F>,
    pub r1: u32,
    pub xi2: Polynomial<F>,
    pub r2: u32,
}

impl<F: Field> WitnessPair<F> {
    pub fn new(xi1: Polynomial<F>, r1: u32, xi2: Polynomial<F>, r2: u32) -> Result<Self> {
        if r1 == 0 || r2 == 0 {
            return Err(Error::Input("witness orders must be positive".into()));
        }
        if xi1.is_zero() || xi2.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(WitnessPair { xi1, r1, xi2, r2 })
    }
}

/// How a configuration was produced.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Fermat { n: u64, alpha: String },
    Grid { m: u64, n: u64 },
    ThreePoints,
    TwoPencils { m: u64, n: u64, f_factors: Vec<String>, g_factors: Vec<String> },
    Custom,
}

/// The two pencil products `f`, `g` and the grid `{f = g = 0}` they cut out.
#[derive(Clone, Debug)]
pub struct Pencils<F: Field> {
    pub f: Polynomial<F>,
    pub g: Polynomial<F>,
    pub grid: PointSet<F>,
}

/// A point set together with a witness pair.
#[derive(Clone, Debug)]
pub struct Configuration<F: Field> {
    pub id: String,
    pub ring: Arc<Ring<F>>,
    pub points: PointSet<F>,
    pub witnesses: WitnessPair<F>,
    pub provenance: Provenance,
    pub pencils: Option<Pencils<F>>,
}

impl<F: Field> Configuration<F> {
    pub fn field(&self) -> &F {
        self.ring.field()
    }

    /// The same data over an extension field from [`Field::extension`].
    pub fn base_change(&self, field: F) -> Configuration<F> {
        let ring = self.ring.with_field(field);
        let w = &self.witnesses;
        Configuration {
            id: self.id.clone(),
            ring: ring.clone(),
            points: self.points.clone(),
            witnesses: WitnessPair {
                xi1: w.xi1.base_change(&ring),
                r1: w.r1,
                xi2: w.xi2.base_change(&ring),
                r2: w.r2,
            },
            provenance: self.provenance.clone(),
            pencils: self.pencils.as_ref().map(|p| Pencils {
                f: p.f.base_change(&ring),
                g: p.g.base_change(&ring),
                grid: p.grid.clone(),
            }),
        }
    }
}

fn vars<F: Field>(ring: &Arc<Ring<F>>) -> [Polynomial<F>; 3] {
    [0, 1, 2].map(|i| Polynomial::var(ring, i))
}

fn linear_form<F: Field>(ring: &Arc<Ring<F>>, c: [F::Elem; 3]) -> Polynomial<F> {
    let terms = c
        .into_iter()
        .enumerate()
        .map(|(i, c)| (Monomial::var(3, i), c))
        .collect();
    Polynomial::from_terms(ring, Default::default(), terms)
}

/// Coefficients of a linear form in `x, y, z`.
fn linear_coeffs<F: Field>(l: &Polynomial<F>) -> Result<[F::Elem; 3]> {
    let field = l.field();
    let mut c = [field.zero(), field.zero(), field.zero()];
    if l.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for (m, a) in l.terms() {
        if m.degree() != 1 {
            return Err(Error::UnsupportedForm(format!("{l} is not a linear form")));
        }
        let i = (0..3).find(|&i| m.exponent(i) == 1).expect("degree one");
        c[i] = a.clone();
    }
    Ok(c)
}

fn cross<F: Field>(field: &F, a: &[F::Elem; 3], b: &[F::Elem; 3]) -> [F::Elem; 3] {
    let d = |i: usize, j: usize| field.sub(&field.mul(&a[i], &b[j]), &field.mul(&a[j], &b[i]));
    [d(1, 2), d(2, 0), d(0, 1)]
}

fn det<F: Field>(field: &F, a: &[F::Elem; 3], b: &[F::Elem; 3], c: &[F::Elem; 3]) -> F::Elem {
    let k = cross(field, b, c);
    let mut acc = field.zero();
    for i in 0..3 {
        acc = field.add(&acc, &field.mul(&a[i], &k[i]));
    }
    acc
}

/// The line through two distinct points, scaled so that its first nonzero
/// coefficient (in the order `x, y, z`) is 1.
pub fn line_through<F: Field>(
    ring: &Arc<Ring<F>>,
    a: &ProjectivePoint<F>,
    b: &ProjectivePoint<F>,
) -> Result<Polynomial<F>> {
    let field = ring.field();
    let c = cross(field, a.coords(), b.coords());
    let lead = c.iter().find(|v| !field.is_zero(v)).ok_or(Error::SamePoint)?;
    let inv = field.inv(lead)?;
    Ok(linear_form(ring, c.map(|v| field.mul(&v, &inv))))
}

/// Three non-collinear points with the witnesses `f1 f2 f3` (order 2) and
/// `f1 f2 + f2 f3 + f3 f1` (order 1), `f_i` the line through `P_i, P_{i+1}`.
pub fn three_points<F: Field>(ring: &Arc<Ring<F>>, pts: [ProjectivePoint<F>; 3]) -> Result<Configuration<F>> {
    let field = ring.field();
    if pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2] {
        return Err(Error::DuplicatePoints);
    }
    if field.is_zero(&det(field, pts[0].coords(), pts[1].coords(), pts[2].coords())) {
        return Err(Error::CollinearPoints);
    }
    let f: Vec<Polynomial<F>> = (0..3)
        .map(|i| line_through(ring, &pts[i], &pts[(i + 1) % 3]))
        .collect::<Result<_>>()?;
    let xi1 = &(&f[0] * &f[1]) * &f[2];
    let xi2 = &(&(&f[0] * &f[1]) + &(&f[1] * &f[2])) + &(&f[2] * &f[0]);
    let id = format!(
        "three-points {} {} {}",
        pts[0].format(field),
        pts[1].format(field),
        pts[2].format(field)
    );
    Ok(Configuration {
        id,
        ring: ring.clone(),
        points: PointSet::new(pts.to_vec(), "three points")?,
        witnesses: WitnessPair::new(xi1, 2, xi2, 1)?,
        provenance: Provenance::ThreePoints,
        pencils: None,
    })
}

/// The Fermat configuration: the coordinate points and the `n^2` points
/// `(θ^i : θ^j : 1)`, with the witness pair for `n = 3` or `n ≥ 4`.
///
/// `θ` is the field's primitive `n`-th root of unity; `alpha` is only used
/// for `n ≥ 4`.
pub fn fermat<F: Field>(ring: &Arc<Ring<F>>, n: u64, alpha: &F::Elem) -> Result<Configuration<F>> {
    let field = ring.field();
    if n <= 2 {
        return Err(Error::UnsupportedN(n));
    }
    let p = field.characteristic();
    if p != 0 && n.is_multiple_of(p) {
        return Err(Error::InvalidField(format!("characteristic {p} divides n = {n}")));
    }
    if n >= 4 && (field.is_zero(alpha) || field.is_one(alpha)) {
        return Err(Error::BadAlpha);
    }
    let theta = field
        .root_of_unity(n)
        .ok_or_else(|| Error::MissingRoots(format!("{} has no primitive {n}-th root of unity", field.spec())))?;

    let mut pts = vec![
        ProjectivePoint::from_i64(field, [1, 0, 0])?,
        ProjectivePoint::from_i64(field, [0, 1, 0])?,
        ProjectivePoint::from_i64(field, [0, 0, 1])?,
    ];
    let mut grid = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let c = [field.pow(&theta, i), field.pow(&theta, j), field.one()];
            grid.push(ProjectivePoint::new(field, c)?);
        }
    }
    pts.extend(grid.iter().cloned());

    let [x, y, z] = vars(ring);
    let e = n as u32;
    let f = &y.pow(e) - &z.pow(e);
    let g = &z.pow(e) - &x.pow(e);
    let h = &x.pow(e) - &y.pow(e);
    let (xf, yg, zh) = (&x * &f, &y * &g, &z * &h);
    let fgh = &(&f * &g) * &h;
    let witnesses = if n == 3 {
        let xi2 = &(&(&xf * &yg) + &(&yg * &zh)) + &(&zh * &xf);
        WitnessPair::new(fgh, 3, xi2, 2)?
    } else {
        let af_g = &f.scale(alpha) + &g;
        let xi1 = &fgh * &af_g.pow(e - 3);
        let xi2 = &(&(&(&xf.pow(2) * &yg.pow(e - 2)) + &(&yg.pow(2) * &zh.pow(e - 2)))
            + &(&zh.pow(2) * &xf.pow(e - 2)))
            + &(&f.pow(e - 2) * &(&g * &h));
        WitnessPair::new(xi1, e, xi2, e)?
    };
    Ok(Configuration {
        id: format!("fermat n={n}"),
        ring: ring.clone(),
        points: PointSet::new(pts, format!("fermat n={n}"))?,
        witnesses,
        provenance: Provenance::Fermat {
            n,
            alpha: field.format(alpha),
        },
        pencils: Some(Pencils {
            f,
            g,
            grid: PointSet::new(grid, "fermat grid")?,
        }),
    })
}

/// Lines `f_i` through `A` and `g_j` through `B`; `H = {A, B}` plus the `mn`
/// points `f_i = g_j = 0`, with witnesses `f^n g^m (f + g)^{mn-m-n}` (order
/// `mn`) and `fg + (f + g)^2 h^2` (order 2), `h` the line `AB`.
pub fn two_pencils<F: Field>(
    ring: &Arc<Ring<F>>,
    f_factors: &[Polynomial<F>],
    g_factors: &[Polynomial<F>],
    a: &ProjectivePoint<F>,
    b: &ProjectivePoint<F>,
) -> Result<Configuration<F>> {
    let field = ring.field();
    let (m, n) = (f_factors.len(), g_factors.len());
    if m < 2 || n < 2 {
        return Err(Error::DegenerateParameters(format!(
            "need at least two lines in each pencil, got m = {m}, n = {n}"
        )));
    }
    if a == b {
        return Err(Error::SamePoint);
    }
    let fc: Vec<[F::Elem; 3]> = f_factors.iter().map(linear_coeffs).collect::<Result<_>>()?;
    let gc: Vec<[F::Elem; 3]> = g_factors.iter().map(linear_coeffs).collect::<Result<_>>()?;
    for (l, own, other) in f_factors
        .iter()
        .map(|l| (l, a, b))
        .chain(g_factors.iter().map(|l| (l, b, a)))
    {
        if !own.vanishes(l) || other.vanishes(l) {
            return Err(Error::FactorThroughWrongPoint(l.to_string()));
        }
    }
    let is_zero_vec = |v: &[F::Elem; 3]| v.iter().all(|c| field.is_zero(c));
    for family in [&fc, &gc] {
        for i in 0..family.len() {
            for k in i + 1..family.len() {
                if is_zero_vec(&cross(field, &family[i], &family[k])) {
                    return Err(Error::ProportionalFactors);
                }
            }
        }
    }
    let mut grid: Vec<ProjectivePoint<F>> = Vec::with_capacity(m * n);
    for f in &fc {
        for g in &gc {
            let p = ProjectivePoint::new(field, cross(field, f, g))?;
            if !grid.contains(&p) {
                grid.push(p);
            }
        }
    }
    if grid.len() != m * n {
        return Err(Error::DegenerateParameters(format!(
            "the pencils meet in {} points instead of {}",
            grid.len(),
            m * n
        )));
    }
    let mut pts = vec![a.clone(), b.clone()];
    pts.extend(grid.iter().cloned());

    let one = Polynomial::one(ring);
    let f = f_factors.iter().fold(one.clone(), |acc, l| &acc * l);
    let g = g_factors.iter().fold(one, |acc, l| &acc * l);
    let h = line_through(ring, a, b)?;
    let (mu, nu) = (m as u32, n as u32);
    let f_plus_g = &f + &g;
    let xi1 = &(&f.pow(nu) * &g.pow(mu)) * &f_plus_g.pow(mu * nu - mu - nu);
    let xi2 = &(&f * &g) + &(&f_plus_g.pow(2) * &h.pow(2));
    Ok(Configuration {
        id: format!("two-pencils m={m} n={n}"),
        ring: ring.clone(),
        points: PointSet::new(pts, format!("two pencils m={m} n={n}"))?,
        witnesses: WitnessPair::new(xi1, mu * nu, xi2, 2)?,
        provenance: Provenance::TwoPencils {
            m: m as u64,
            n: n as u64,
            f_factors: f_factors.iter().map(|l| l.to_string()).collect(),
            g_factors: g_factors.iter().map(|l| l.to_string()).collect(),
        },
        pencils: Some(Pencils {
            f,
            g,
            grid: PointSet::new(grid, "pencil grid")?,
        }),
    })
}

/// The pencils of `y^m - z^m` through `(1:0:0)` and `z^n - x^n` through
/// `(0:1:0)`; the field must contain the `m`-th and `n`-th roots of unity.
pub fn grid_example<F: Field>(ring: &Arc<Ring<F>>, m: u64, n: u64) -> Result<Configuration<F>> {
    if m < 2 || n < 2 {
        return Err(Error::DegenerateParameters(format!(
            "grid needs m, n >= 2, got m = {m}, n = {n}"
        )));
    }
    let field = ring.field();
    let p = field.characteristic();
    if p != 0 && (m * n).is_multiple_of(p) {
        return Err(Error::InvalidField(format!("characteristic {p} divides m*n = {}", m * n)));
    }
    let [x, y, z] = vars(ring);
    let f = &y.pow(m as u32) - &z.pow(m as u32);
    let g = &z.pow(n as u32) - &x.pow(n as u32);
    let fs = split_binomial(&f)?;
    let gs = split_binomial(&g)?;
    let a = ProjectivePoint::from_i64(field, [1, 0, 0])?;
    let b = ProjectivePoint::from_i64(field, [0, 1, 0])?;
    let mut config = two_pencils(ring, &fs, &gs, &a, &b)?;
    config.id = format!("grid m={m} n={n}");
    config.provenance = Provenance::Grid { m, n };
    Ok(config)
}

/// A user-supplied point set and witness pair.
pub fn custom<F: Field>(ring: &Arc<Ring<F>>, points: PointSet<F>, witnesses: WitnessPair<F>) -> Configuration<F> {
    Configuration {
        id: format!("custom {}", points.label()),
        ring: ring.clone(),
        points,
        witnesses,
        provenance: Provenance::Custom,
        pencils: None,
    }
}

/// Exact `k`-th root of a rational number, if there is one.
fn rational_root(r: &BigRational, k: u32) -> Option<BigRational> {
    let root = |v: &BigInt| -> Option<BigInt> {
        if v.is_negative() && k.is_multiple_of(2) {
            return None;
        }
        let s = v.abs().nth_root(k);
        let s = if v.is_negative() { -s } else { s };
        (num_traits::pow(s.clone(), k as usize) == *v).then_some(s)
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

/// Some `c` with `c^k = ratio`, from the cases the fields can express.
fn kth_root<F: Field>(field: &F, ratio: &F::Elem, k: u64) -> Option<F::Elem> {
    if field.is_one(ratio) {
        return Some(field.one());
    }
    if let Some(q) = field.as_rational(ratio) {
        if let Some(r) = rational_root(&q, k as u32) {
            return field.from_rational(&r).ok();
        }
        if q == -BigRational::one() {
            return field.root_of_unity(2 * k);
        }
        return None;
    }
    // Residue fields: a k-th root is found by search when p is small.
    let p = field.characteristic();
    if p > 0 && p < 1 << 20 {
        return (0..p as i64)
            .map(|v| field.from_i64(v))
            .find(|c| field.pow(c, k) == *ratio);
    }
    None
}

/// Split `c1 w1^k - c2 w2^k` into `k` linear forms whose product is the input.
pub fn split_binomial<F: Field>(poly: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    let field = poly.field();
    let unsupported = || Error::UnsupportedForm(format!("{poly} is not a binomial c1*w1^k - c2*w2^k"));
    let terms = poly.terms();
    if terms.len() != 2 {
        return Err(unsupported());
    }
    let single_var = |m: &Monomial| -> Option<usize> {
        let vs: Vec<usize> = (0..m.nvars()).filter(|&i| m.exponent(i) > 0).collect();
        (vs.len() == 1).then(|| vs[0])
    };
    let (m1, c1) = &terms[0];
    let (m2, neg_c2) = &terms[1];
    let (w1, w2) = match (single_var(m1), single_var(m2)) {
        (Some(a), Some(b)) if a != b && m1.degree() == m2.degree() => (a, b),
        _ => return Err(unsupported()),
    };
    let k = m1.degree() as u64;
    let c2 = field.neg(neg_c2);
    let ratio = field.div(&c2, c1)?;
    let zeta = field
        .root_of_unity(k)
        .ok_or_else(|| Error::MissingRoots(format!("{} lacks a primitive {k}-th root of unity", field.spec())))?;
    let r = kth_root(field, &ratio, k)
        .ok_or_else(|| Error::MissingRoots(format!("{} lacks a {k}-th root of {}", field.spec(), field.format(&ratio))))?;
    let ring = poly.ring();
    let (v1, v2) = (Polynomial::var(ring, w1), Polynomial::var(ring, w2));
    let mut out = Vec::with_capacity(k as usize);
    let mut root = r;
    for i in 0..k {
        let mut factor = &v1 - &v2.scale(&root);
        if i == 0 {
            factor = factor.scale(c1);
        }
        out.push(factor);
        root = field.mul(&root, &zeta);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CyclotomicField, PrimeField, RationalField};

    fn q_ring() -> Arc<Ring<RationalField>> {
        Ring::xyz(RationalField)
    }

    fn pt<F: Field>(field: &F, c: [i64; 3]) -> ProjectivePoint<F> {
        ProjectivePoint::from_i64(field, c).unwrap()
    }

    fn product<F: Field>(ring: &Arc<Ring<F>>, ps: &[Polynomial<F>]) -> Polynomial<F> {
        ps.iter().fold(Polynomial::one(ring), |acc, p| &acc * p)
    }

    #[test]
    fn lines() {
        let r = q_ring();
        let q = RationalField;
        let [x, y, z] = vars(&r);
        assert_eq!(line_through(&r, &pt(&q, [1, 0, 0]), &pt(&q, [0, 1, 0])).unwrap(), z);
        assert_eq!(line_through(&r, &pt(&q, [0, 0, 1]), &pt(&q, [1, 1, 1])).unwrap(), &x - &y);
        assert_eq!(
            line_through(&r, &pt(&q, [1, 1, 1]), &pt(&q, [2, 2, 2])).unwrap_err(),
            Error::SamePoint
        );
    }

    #[test]
    fn coordinate_triangle() {
        let r = q_ring();
        let q = RationalField;
        let [x, y, z] = vars(&r);
        let c = three_points(&r, [pt(&q, [1, 0, 0]), pt(&q, [0, 1, 0]), pt(&q, [0, 0, 1])]).unwrap();
        assert_eq!(c.witnesses.xi1, &(&x * &y) * &z);
        assert_eq!(c.witnesses.xi2, &(&(&z * &x) + &(&x * &y)) + &(&y * &z));
        let collinear = three_points(&r, [pt(&q, [1, 0, 0]), pt(&q, [0, 1, 0]), pt(&q, [1, 1, 0])]);
        assert_eq!(collinear.unwrap_err(), Error::CollinearPoints);
        let dup = three_points(&r, [pt(&q, [1, 0, 0]), pt(&q, [2, 0, 0]), pt(&q, [1, 1, 0])]);
        assert_eq!(dup.unwrap_err(), Error::DuplicatePoints);
    }

    #[test]
    fn fermat_parameters() {
        let k3 = CyclotomicField::new(3).unwrap();
        let r3 = Ring::xyz(k3.clone());
        let c = fermat(&r3, 3, &k3.from_i64(2)).unwrap();
        assert_eq!(c.points.len(), 12);
        let k4 = CyclotomicField::new(4).unwrap();
        let r4 = Ring::xyz(k4.clone());
        let c = fermat(&r4, 4, &k4.from_i64(2)).unwrap();
        assert_eq!(c.points.len(), 19);
        assert!(!c.witnesses.xi2.is_homogeneous());
        assert_eq!(c.witnesses.xi1.degree_and_homogeneity(), Ok((16, true)));
        assert_eq!(fermat(&r4, 4, &k4.one()).unwrap_err(), Error::BadAlpha);
        assert_eq!(fermat(&r4, 2, &k4.from_i64(2)).unwrap_err(), Error::UnsupportedN(2));
        let qr = q_ring();
        assert!(matches!(fermat(&qr, 3, &RationalField.from_i64(2)), Err(Error::MissingRoots(_))));
    }

    #[test]
    fn fermat_identities() {
        for n in 3..=5u64 {
            let k = CyclotomicField::new(n).unwrap();
            let r = Ring::xyz(k.clone());
            let c = fermat(&r, n, &k.from_i64(2)).unwrap();
            let p = c.pencils.as_ref().unwrap();
            let h = -&(&p.f + &p.g);
            for q in p.grid.points() {
                assert!(q.vanishes(&p.f) && q.vanishes(&p.g) && q.vanishes(&h));
            }
            assert_eq!(c.points.len() as u64, n * n + 3);
        }
    }

    #[test]
    fn fermat_in_prime_field() {
        let k = PrimeField::with_root_of_order(13, 4).unwrap();
        let r = Ring::xyz(k.clone());
        let c = fermat(&r, 4, &k.from_i64(2)).unwrap();
        assert_eq!(c.points.len(), 19);
    }

    #[test]
    fn small_grid() {
        let r = q_ring();
        let q = RationalField;
        let [x, y, z] = vars(&r);
        let c = grid_example(&r, 2, 2).unwrap();
        assert_eq!(c.points.len(), 6);
        let h = line_through(&r, &pt(&q, [1, 0, 0]), &pt(&q, [0, 1, 0])).unwrap();
        assert_eq!(h, z.clone());
        for p in [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]] {
            assert!(c.points.points().contains(&pt(&q, p)));
        }
        let by_hand = two_pencils(
            &r,
            &[&y - &z, &y + &z],
            &[&z - &x, &z + &x],
            &pt(&q, [1, 0, 0]),
            &pt(&q, [0, 1, 0]),
        )
        .unwrap();
        assert_eq!(by_hand.points.len(), 6);
        assert_eq!((by_hand.witnesses.r1, by_hand.witnesses.r2), (4, 2));
        let _ = x;
    }

    #[test]
    fn pencil_validation() {
        let r = q_ring();
        let q = RationalField;
        let [x, y, z] = vars(&r);
        let a = pt(&q, [1, 0, 0]);
        let b = pt(&q, [0, 1, 0]);
        let g = [&z - &x, &z + &x];
        assert_eq!(
            two_pencils(&r, &[&y - &z, &y - &z], &g, &a, &b).unwrap_err(),
            Error::ProportionalFactors
        );
        assert!(matches!(
            two_pencils(&r, &[&y - &z], &g, &a, &b),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            two_pencils(&r, &[&y - &z, x.clone()], &g, &a, &b),
            Err(Error::FactorThroughWrongPoint(_))
        ));
        assert_eq!(
            two_pencils(&r, &[&y - &z, &y + &z], &g, &a, &a).unwrap_err(),
            Error::SamePoint
        );
        assert!(matches!(grid_example(&r, 1, 2), Err(Error::DegenerateParameters(_))));
    }

    #[test]
    fn grid_two_by_three() {
        let k = CyclotomicField::new(6).unwrap();
        let r = Ring::xyz(k);
        let c = grid_example(&r, 2, 3).unwrap();
        assert_eq!(c.points.len(), 8);
        assert_eq!((c.witnesses.r1, c.witnesses.r2), (6, 2));
    }

    #[test]
    fn binomial_splitting() {
        let k = CyclotomicField::new(3).unwrap();
        let r = Ring::xyz(k.clone());
        let [_, y, z] = vars(&r);
        let f = &y.pow(3) - &z.pow(3);
        let parts = split_binomial(&f).unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], &y - &z);
        assert_eq!(product(&r, &parts), f);

        let qr = q_ring();
        let [x, y, z] = vars(&qr);
        let parts = split_binomial(&(&x.pow(2) - &y.pow(2))).unwrap();
        assert_eq!(parts, vec![&x - &y, &x + &y]);
        let sum = &y.pow(2) + &z.pow(2);
        assert!(matches!(split_binomial(&sum), Err(Error::MissingRoots(_))));
        let scaled = &x.pow(2).scale(&RationalField.from_i64(3)) - &y.pow(2).scale(&RationalField.from_i64(12));
        assert_eq!(product(&qr, &split_binomial(&scaled).unwrap()), scaled);
        assert!(matches!(split_binomial(&(&x + &(&y * &z))), Err(Error::UnsupportedForm(_))));

        let k4 = CyclotomicField::new(4).unwrap();
        let r4 = Ring::xyz(k4);
        let [_, y, z] = vars(&r4);
        let sum = &y.pow(2) + &z.pow(2);
        assert_eq!(product(&r4, &split_binomial(&sum).unwrap()), sum);
    }
}
