//! Sparse polynomials in the trace coordinates `X = tr A`, `Y = tr B`,
//! `Z = tr AB` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::unipoly::{fam_f, render_terms, UniPoly};

/// Exponent triple `(i, j, k)` of `X^i Y^j Z^k`.
pub type Exps = (u32, u32, u32);

/// Polynomial in `X`, `Y`, `Z`. No stored coefficient is zero, so structural
/// equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Exps, BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), (0, 0, 0))
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), (1, 0, 0))
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), (0, 1, 0))
    }

    pub fn z() -> Self {
        Self::monomial(BigInt::one(), (0, 0, 1))
    }

    pub fn monomial(c: BigInt, e: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        TriPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Exps, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exps) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j, k)| i + j + k).max()
    }

    /// True when no term involves `Z`.
    pub fn is_free_of_z(&self) -> bool {
        self.terms.keys().all(|e| e.2 == 0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TriPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Substitute polynomials for `X`, `Y` and `Z`.
    pub fn substitute(&self, x: &TriPoly, y: &TriPoly, z: &TriPoly) -> Self {
        let mut cache: [Vec<TriPoly>; 3] = [vec![Self::one()], vec![Self::one()], vec![Self::one()]];
        let subs = [x, y, z];
        let mut power = |var: usize, e: u32| -> TriPoly {
            let table = &mut cache[var];
            while table.len() <= e as usize {
                let next = table.last().unwrap() * subs[var];
                table.push(next);
            }
            table[e as usize].clone()
        };
        let mut out = Self::zero();
        for (&(i, j, k), c) in &self.terms {
            let t = &(&power(0, i) * &power(1, j)) * &power(2, k);
            out = &out + &t.scale(c);
        }
        out
    }

    /// The involution `(X, Y, Z) -> (-X, -Y, Z)`.
    pub fn kappa(&self) -> Self {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, if (e.0 + e.1) % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// The involution `(X, Y, Z) -> (X, Y, XY - Z)`.
    pub fn mirror(&self) -> Self {
        self.substitute(&Self::x(), &Self::y(), &(&(&Self::x() * &Self::y()) - &Self::z()))
    }

    /// Exchange `X` and `Y`.
    pub fn swap_xy(&self) -> Self {
        TriPoly { terms: self.terms.iter().map(|(&(i, j, k), c)| ((j, i, k), c.clone())).collect() }
    }

    pub fn lift_x(p: &UniPoly) -> Self {
        Self::lift(p, 0)
    }

    pub fn lift_y(p: &UniPoly) -> Self {
        Self::lift(p, 1)
    }

    pub fn lift_z(p: &UniPoly) -> Self {
        Self::lift(p, 2)
    }

    fn lift(p: &UniPoly, var: usize) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(d, c)| {
            let d = d as u32;
            let e = match var {
                0 => (d, 0, 0),
                1 => (0, d, 0),
                _ => (0, 0, d),
            };
            (e, c.clone())
        }))
    }

    pub fn eval_i64(&self, x: i64, y: i64, z: i64) -> BigInt {
        let (x, y, z) = (BigInt::from(x), BigInt::from(y), BigInt::from(z));
        self.terms
            .iter()
            .map(|(&(i, j, k), c)| c * x.pow(i) * y.pow(j) * z.pow(k))
            .sum()
    }

    pub fn eval(&self, p: [Complex64; 3]) -> Complex64 {
        NumericPoly::new(self).eval(p)
    }

    /// Terms sorted graded-lexicographically with `X > Y > Z`, highest first.
    pub fn sorted_terms(&self) -> Vec<(Exps, BigInt)> {
        let mut v: Vec<(Exps, BigInt)> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|a, b| {
            let (ea, eb) = (a.0, b.0);
            (eb.0 + eb.1 + eb.2).cmp(&(ea.0 + ea.1 + ea.2)).then(eb.cmp(&ea))
        });
        v
    }
}

fn render_monomial(&(i, j, k): &Exps) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("X", i), ("Y", j), ("Z", k)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms().into_iter().map(|(e, c)| (c, render_monomial(&e)));
        f.write_str(&render_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    i: u32,
    j: u32,
    k: u32,
    coeff: String,
}

impl Serialize for TriPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.sorted_terms().into_iter().map(|((i, j, k), c)| TermRecord {
            i,
            j,
            k,
            coeff: c.to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for TriPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(d)?;
        let mut terms = Vec::with_capacity(recs.len());
        for r in recs {
            let c = r.coeff.parse::<BigInt>().map_err(D::Error::custom)?;
            terms.push(((r.i, r.j, r.k), c));
        }
        Ok(TriPoly::from_terms(terms))
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut acc: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                *acc.entry((a.0 + b.0, a.1 + b.1, a.2 + b.2)).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TriPoly { terms: acc }
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TriPoly {
            type Output = TriPoly;
            fn $m(self, rhs: TriPoly) -> TriPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        -&self
    }
}

/// `D = X^2 + Y^2 + Z^2 - XYZ - 4`, which equals `tr[A,B] - 2`.
pub fn poly_d() -> TriPoly {
    TriPoly::from_terms([
        ((2, 0, 0), BigInt::from(1)),
        ((0, 2, 0), BigInt::from(1)),
        ((0, 0, 2), BigInt::from(1)),
        ((1, 1, 1), BigInt::from(-1)),
        ((0, 0, 0), BigInt::from(-4)),
    ])
}

/// Term `k` of `p_{j+1} = c p_j - p_{j-1}` given `p_0`, `p_1`, for any sign of `k`.
fn two_term(p0: TriPoly, p1: TriPoly, c: &TriPoly, k: i64) -> TriPoly {
    if k >= 0 {
        let (mut prev, mut cur) = (p0, p1);
        if k == 0 {
            return prev;
        }
        for _ in 1..k {
            let next = &(c * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    } else {
        let (mut next, mut cur) = (p1, p0);
        for _ in 0..(-k) {
            let prev = &(c * &cur) - &next;
            next = std::mem::replace(&mut cur, prev);
        }
        cur
    }
}

/// `F_{a,b}`, the polynomial with `F_{a,b}(tr A, tr B, tr AB) = tr A^a B^{-b}`.
pub fn trace_ab(a: i64, b: i64) -> TriPoly {
    let (x, y) = (TriPoly::x(), TriPoly::y());
    let col0 = TriPoly::lift_y(&fam_f(b));
    let xy_minus_z = &(&x * &y) - &TriPoly::z();
    let col1 = two_term(x.clone(), xy_minus_z, &y, b);
    two_term(col0, col1, &x, a)
}

/// Double-precision evaluator with per-variable power tables.
#[derive(Clone, Debug)]
pub struct NumericPoly {
    terms: Vec<(f64, [usize; 3])>,
    max: [usize; 3],
}

impl NumericPoly {
    pub fn new(p: &TriPoly) -> Self {
        let mut max = [0usize; 3];
        let terms = p
            .terms
            .iter()
            .map(|(&(i, j, k), c)| {
                let e = [i as usize, j as usize, k as usize];
                for v in 0..3 {
                    max[v] = max[v].max(e[v]);
                }
                (c.to_f64().unwrap_or(f64::INFINITY), e)
            })
            .collect();
        NumericPoly { terms, max }
    }

    fn powers(&self, p: [Complex64; 3]) -> [Vec<Complex64>; 3] {
        std::array::from_fn(|v| {
            let mut t = Vec::with_capacity(self.max[v] + 1);
            t.push(Complex64::new(1.0, 0.0));
            for e in 1..=self.max[v] {
                t.push(t[e - 1] * p[v]);
            }
            t
        })
    }

    pub fn eval(&self, p: [Complex64; 3]) -> Complex64 {
        self.eval_with_scale(p).0
    }

    /// Value together with `sum |c| |monomial(p)|`, the magnitude the
    /// rounding error of the evaluation is proportional to.
    pub fn eval_with_scale(&self, p: [Complex64; 3]) -> (Complex64, f64) {
        let pw = self.powers(p);
        let mut val = Complex64::new(0.0, 0.0);
        let mut mag = 0.0;
        for (c, [i, j, k]) in &self.terms {
            let m = pw[0][*i] * pw[1][*j] * pw[2][*k];
            val += m * *c;
            mag += c.abs() * m.norm();
        }
        (val, mag)
    }

    /// `|p(x)| <= tol * max(1, sum |c| |monomial(x)|)`.
    pub fn vanishes_at(&self, p: [Complex64; 3], tol: f64) -> bool {
        let (v, mag) = self.eval_with_scale(p);
        v.norm() <= tol * mag.max(1.0)
    }
}

impl TriPoly {
    /// Signed-magnitude summary used in diagnostics.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::UniPoly;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn d_examples() {
        let d = poly_d();
        assert_eq!(d.to_string(), "-X*Y*Z + X^2 + Y^2 + Z^2 - 4");
        assert_eq!(d.eval_i64(2, 2, 2), BigInt::zero());
        assert_eq!(d.kappa(), d);
        assert_eq!(d.mirror(), d);
    }

    #[test]
    fn trace_ab_bases() {
        let (x, y, z) = (TriPoly::x(), TriPoly::y(), TriPoly::z());
        assert_eq!(trace_ab(1, 0), x);
        assert_eq!(trace_ab(1, 1), &(&x * &y) - &z);
        assert_eq!(trace_ab(1, -1), z);
        for k in -6..=6 {
            assert_eq!(trace_ab(0, k), TriPoly::lift_y(&fam_f(k)));
            assert_eq!(trace_ab(k, 0), TriPoly::lift_x(&fam_f(k)));
        }
    }

    #[test]
    fn trace_ab_symmetries() {
        for a in -8i64..=8 {
            for b in -8i64..=8 {
                let f = trace_ab(a, b);
                assert_eq!(f.swap_xy(), trace_ab(b, a), "swap ({a},{b})");
                let sign = if (a - b).rem_euclid(2) == 0 { 1 } else { -1 };
                assert_eq!(f.kappa(), f.scale_i64(sign), "kappa ({a},{b})");
                if a.abs() <= 6 && b.abs() <= 6 {
                    assert_eq!(trace_ab(-a, -b), f);
                }
            }
        }
    }

    #[test]
    fn mirror_and_lifts() {
        assert_eq!(TriPoly::z().mirror().to_string(), "X*Y - Z");
        assert_eq!(TriPoly::lift_x(&UniPoly::from_i64s(&[-2, 0, 1])).to_string(), "X^2 - 2");
        let p = &(&TriPoly::x() * &TriPoly::y()) - &TriPoly::z();
        assert_eq!(p.eval_i64(1, 2, 3), BigInt::from(-1));
        assert_eq!(p.eval([c(1.0), c(2.0), c(3.0)]), c(-1.0));
        assert_eq!(TriPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let f = trace_ab(5, -3);
        let js = serde_json::to_string(&f).unwrap();
        let back: TriPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
        let z = serde_json::to_string(&TriPoly::z()).unwrap();
        assert_eq!(z, r#"[{"i":0,"j":0,"k":1,"coeff":"1"}]"#);
    }

    #[test]
    fn numeric_scale_accounts_for_magnitude() {
        let n = NumericPoly::new(&poly_d());
        let (v, mag) = n.eval_with_scale([c(2.0), c(2.0), c(2.0)]);
        assert_eq!(v, c(0.0));
        assert_eq!(mag, 4.0 + 4.0 + 4.0 + 8.0 + 4.0);
        assert!(n.vanishes_at([c(2.0), c(2.0), c(2.0)], 1e-12));
    }
}
