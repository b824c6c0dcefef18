//! Dense univariate polynomials over the integers and the one-variable
//! families used throughout the crate.
//!
//! All families satisfy a two-term linear recurrence with coefficient `T`:
//!
//! * `f_k`, `h_k`: `p_k = T p_{k-1} - p_{k-2}` with `(f_0, f_1) = (2, T)` and
//!   `(h_0, h_1) = (0, 1)`; `f_k(tr A) = tr A^k`.
//! * `s_k`, `sigma_k`: `p_k = T p_{k-2} - p_{k-4}` with bases
//!   `0, 1, 1, T + 1` and `0, 1, 1, T - 1`.
//!
//! Negative indices follow `f_{-k} = f_k`, `h_{-k} = -h_k`, `s_{-k} = -s_k`
//! and `sigma_{-k} = (-1)^{k-1} sigma_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial in one variable with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `T^i`. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `T`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Little-endian integer coefficients, e.g. `[-3, 0, 1]` is `T^2 - 3`.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` standing for the zero polynomial.
    pub fn degree_or_neg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Multiply by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// `p(-T)`.
    pub fn negate_var(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
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

    /// Substitute another polynomial for `T`.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::from_coeffs(vec![c.clone()]))
    }

    /// Division by a divisor whose leading coefficient is `±1`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        if lead.abs() != BigInt::one() {
            return Err(Error::InvalidArgument(format!(
                "divisor must have unit leading coefficient, got {lead}"
            )));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn exact_div(&self, divisor: &UniPoly) -> Option<UniPoly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * x + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Render with a chosen variable name.
    pub fn display_var(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{i}"),
                };
                (c.clone(), mono)
            });
        render_terms(terms)
    }
}

/// Join `(coefficient, monomial)` pairs as `a*M + b*N - c`.
pub(crate) fn render_terms(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("T"))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// The families of polynomials indexed by an integer `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    F,
    H,
    S,
    Sigma,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::F => "f",
            FamilyKind::H => "h",
            FamilyKind::S => "s",
            FamilyKind::Sigma => "sigma",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(FamilyKind::F),
            "h" => Ok(FamilyKind::H),
            "s" => Ok(FamilyKind::S),
            "sigma" => Ok(FamilyKind::Sigma),
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}

/// `F_k^{(c0,c1)}` from `F_0 = c0`, `F_1 = c1`, `F_k = T F_{k-1} - F_{k-2}`.
pub fn fam_general(c0: &UniPoly, c1: &UniPoly, k: i64) -> Result<UniPoly> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    let t = UniPoly::t();
    let (mut prev, mut cur) = (c0.clone(), c1.clone());
    if k == 0 {
        return Ok(prev);
    }
    for _ in 1..k {
        let next = &(&t * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

fn step_two_recurrence(bases: [UniPoly; 4], k: u64) -> UniPoly {
    let t = UniPoly::t();
    let mut seq: Vec<UniPoly> = bases.to_vec();
    for i in 4..=k as usize {
        let next = &(&t * &seq[i - 2]) - &seq[i - 4];
        seq.push(next);
    }
    seq.swap_remove(k as usize)
}

/// `f_k`, the polynomial with `f_k(tr A) = tr A^k`.
pub fn fam_f(k: i64) -> UniPoly {
    fam_general(&UniPoly::constant(2), &UniPoly::t(), k.abs()).expect("nonnegative index")
}

pub fn fam_h(k: i64) -> UniPoly {
    let p = fam_general(&UniPoly::zero(), &UniPoly::one(), k.abs()).expect("nonnegative index");
    if k < 0 {
        -p
    } else {
        p
    }
}

pub fn fam_s(k: i64) -> UniPoly {
    let bases = [
        UniPoly::zero(),
        UniPoly::one(),
        UniPoly::one(),
        UniPoly::from_i64s(&[1, 1]),
    ];
    let p = step_two_recurrence(bases, k.unsigned_abs());
    if k < 0 {
        -p
    } else {
        p
    }
}

pub fn fam_sigma(k: i64) -> UniPoly {
    let bases = [
        UniPoly::zero(),
        UniPoly::one(),
        UniPoly::one(),
        UniPoly::from_i64s(&[-1, 1]),
    ];
    let p = step_two_recurrence(bases, k.unsigned_abs());
    // sigma_{-k} = (-1)^{k-1} sigma_k
    if k < 0 && k.unsigned_abs() % 2 == 0 {
        -p
    } else {
        p
    }
}

pub fn family(kind: FamilyKind, k: i64) -> UniPoly {
    match kind {
        FamilyKind::F => fam_f(k),
        FamilyKind::H => fam_h(k),
        FamilyKind::S => fam_s(k),
        FamilyKind::Sigma => fam_sigma(k),
    }
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

fn cyclotomic_cached(ell: u64, cache: &mut BTreeMap<u64, UniPoly>) -> UniPoly {
    if let Some(p) = cache.get(&ell) {
        return p.clone();
    }
    let mut p = &UniPoly::monomial(BigInt::one(), ell as usize) - &UniPoly::one();
    for d in divisors(ell).into_iter().filter(|&d| d < ell) {
        let cd = cyclotomic_cached(d, cache);
        p = p.exact_div(&cd).expect("cyclotomic factors divide T^n - 1");
    }
    cache.insert(ell, p.clone());
    p
}

/// The `ell`-th cyclotomic polynomial, by exact division of `T^ell - 1`.
pub fn cyclotomic(ell: u64) -> Result<UniPoly> {
    if ell == 0 {
        return Err(Error::ZeroArgument("cyclotomic index"));
    }
    Ok(cyclotomic_cached(ell, &mut BTreeMap::new()))
}

/// Monic minimal polynomial of the primitive `ell`-th roots of `-1`.
pub fn r_poly(ell: u64) -> Result<UniPoly> {
    if ell == 0 {
        return Err(Error::ZeroArgument("r index"));
    }
    if ell % 2 == 0 {
        cyclotomic(2 * ell)
    } else {
        let p = cyclotomic(ell)?.negate_var();
        Ok(if p.is_monic() { p } else { -p })
    }
}

/// `q_ell`, defined by `c_ell(T) = T^{phi(ell)/2} q_ell(T + 1/T)` for
/// `ell >= 3`, with `q_1 = T - 2` and `q_2 = T + 2`.
pub fn q_poly(ell: u64) -> Result<UniPoly> {
    match ell {
        0 => return Err(Error::ZeroArgument("q index")),
        1 => return Ok(UniPoly::from_i64s(&[-2, 1])),
        2 => return Ok(UniPoly::from_i64s(&[2, 1])),
        _ => {}
    }
    let c = cyclotomic(ell)?;
    let deg = c.degree().unwrap_or(0);
    let half = deg / 2;
    if deg % 2 != 0 || (0..=deg).any(|i| c.coeff(i) != c.coeff(deg - i)) {
        return Err(Error::Invariant(format!("c_{ell} is not palindromic of even degree")));
    }
    // c / T^half = b_0 + sum_j b_j (T^j + T^-j), and T^j + T^-j = f_j(T + 1/T).
    let mut q = UniPoly::from_coeffs(vec![c.coeff(half)]);
    for j in 1..=half {
        q = &q + &fam_f(j as i64).scale(&c.coeff(half + j));
    }
    // Expand T^half q(T + 1/T) = sum_i q_i (T^2 + 1)^i T^(half - i) and compare.
    let t2p1 = UniPoly::from_i64s(&[1, 0, 1]);
    let mut back = UniPoly::zero();
    for (i, qi) in q.coeffs().iter().enumerate() {
        if i > half {
            return Err(Error::Invariant(format!("q_{ell} has degree above {half}")));
        }
        back = &back + &t2p1.pow(i as u32).shift(half - i).scale(qi);
    }
    if back != c {
        return Err(Error::Invariant(format!("palindromic expansion of c_{ell} did not close")));
    }
    Ok(q)
}

/// Factorization of `f_k`, `s_k` or `sigma_k` into the `q_ell` pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub kind: FamilyKind,
    pub k: i64,
    /// Sign prefactor for `|k|` (nontrivial only for `sigma`).
    pub sign: i64,
    /// `(ell, factor)` where `factor` is `q_ell(T)` (or `q_ell(-T)` for sigma).
    pub factors: Vec<(u64, UniPoly)>,
}

impl Factorization {
    /// `sign * prod factors`, which equals the family polynomial at `|k|`.
    pub fn product(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.sign), |acc, (_, p)| &acc * p)
    }

    /// The family polynomial at the signed index `k`.
    pub fn reconstruct(&self) -> UniPoly {
        let p = self.product();
        let a = self.k.unsigned_abs();
        let flip = self.k < 0
            && match self.kind {
                FamilyKind::F => false,
                FamilyKind::H | FamilyKind::S => true,
                FamilyKind::Sigma => a % 2 == 0,
            };
        if flip {
            -p
        } else {
            p
        }
    }

    pub fn degree_sum(&self) -> usize {
        self.factors.iter().map(|(_, p)| p.degree().unwrap_or(0)).sum()
    }
}

/// Factor `f_k`, `s_k` or `sigma_k` over the `q_ell`, using `|k|`.
///
/// * `f_k = prod_{ell | k, k/ell odd} q_{4 ell}`; reported with index `4 ell`.
/// * `s_k = prod_{ell | k, ell != 1, 2} q_ell`.
/// * `sigma_k = (-1)^{[(k-1)/2]} prod_{ell | k, ell != 1, 2} q_ell(-T)`.
pub fn factor_family(kind: FamilyKind, k: i64) -> Result<Factorization> {
    if k == 0 {
        return Err(Error::ZeroArgument("k"));
    }
    let a = k.unsigned_abs();
    let mut factors = Vec::new();
    let mut sign = 1;
    match kind {
        FamilyKind::F => {
            for ell in divisors(a).into_iter().filter(|ell| (a / ell) % 2 == 1) {
                factors.push((4 * ell, q_poly(4 * ell)?));
            }
        }
        FamilyKind::S | FamilyKind::Sigma => {
            for ell in divisors(a).into_iter().filter(|&ell| ell > 2) {
                let q = q_poly(ell)?;
                let q = if kind == FamilyKind::Sigma { q.negate_var() } else { q };
                factors.push((ell, q));
            }
            if kind == FamilyKind::Sigma && ((a - 1) / 2) % 2 == 1 {
                sign = -1;
            }
        }
        FamilyKind::H => {
            return Err(Error::InvalidArgument(
                "h_k factors as s_k*sigma_k or s_k*f_(k/2); factor those".into(),
            ))
        }
    }
    Ok(Factorization { kind, k, sign, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn general_family_examples() {
        let two = UniPoly::constant(2);
        let t = UniPoly::t();
        assert_eq!(fam_general(&two, &t, 0).unwrap(), two);
        assert_eq!(fam_general(&UniPoly::zero(), &UniPoly::one(), 2).unwrap(), t);
        assert_eq!(fam_general(&two, &t, 3).unwrap(), p(&[0, -3, 0, 1]));
        assert_eq!(fam_general(&two, &t, -1), Err(Error::NegativeIndex(-1)));
    }

    #[test]
    fn named_family_examples() {
        assert_eq!(fam_s(3), p(&[1, 1]));
        assert_eq!(fam_s(5), p(&[-1, 1, 1]));
        assert_eq!(fam_sigma(-3), p(&[-1, 1]));
        assert_eq!(fam_f(-4), p(&[2, 0, -4, 0, 1]));
        assert_eq!(fam_f(4), fam_f(-4));
        assert_eq!(fam_h(-3), -fam_h(3));
        assert_eq!(fam_s(0), UniPoly::zero());
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
        // oracle: T^4 - 1 divided by c_1 c_2
        let t4 = p(&[-1, 0, 0, 0, 1]);
        let c4 = t4.exact_div(&(&p(&[-1, 1]) * &p(&[1, 1]))).unwrap();
        assert_eq!(c4, cyclotomic(4).unwrap());
    }

    #[test]
    fn r_and_q_examples() {
        assert_eq!(r_poly(1).unwrap(), p(&[1, 1]));
        assert_eq!(r_poly(2).unwrap(), p(&[1, 0, 1]));
        assert_eq!(r_poly(3).unwrap(), p(&[1, -1, 1]));
        assert_eq!(q_poly(1).unwrap(), p(&[-2, 1]));
        assert_eq!(q_poly(2).unwrap(), p(&[2, 1]));
        assert_eq!(q_poly(4).unwrap(), p(&[0, 1]));
        assert_eq!(q_poly(12).unwrap(), p(&[-3, 0, 1]));
        assert_eq!(q_poly(3).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn r_poly_products_give_t_k_plus_one() {
        for k in 1..=30u64 {
            let prod = divisors(k)
                .into_iter()
                .filter(|ell| (k / ell) % 2 == 1)
                .fold(UniPoly::one(), |acc, ell| &acc * &r_poly(ell).unwrap());
            assert_eq!(prod, &UniPoly::monomial(BigInt::one(), k as usize) + &UniPoly::one());
        }
    }

    #[test]
    fn factor_examples() {
        let f = factor_family(FamilyKind::S, 12).unwrap();
        let idx: Vec<u64> = f.factors.iter().map(|(l, _)| *l).collect();
        assert_eq!(idx, vec![3, 4, 6, 12]);
        assert_eq!(f.product(), fam_s(12));
        assert_eq!(f.degree_sum(), 5);

        let f2 = factor_family(FamilyKind::F, 2).unwrap();
        assert_eq!(f2.factors, vec![(8, p(&[-2, 0, 1]))]);

        let s1 = factor_family(FamilyKind::S, 1).unwrap();
        assert!(s1.factors.is_empty());
        assert_eq!(s1.product(), UniPoly::one());

        let neg = factor_family(FamilyKind::Sigma, -6).unwrap();
        assert_eq!(neg.reconstruct(), fam_sigma(-6));
        assert!(factor_family(FamilyKind::S, 0).is_err());
        assert!(factor_family(FamilyKind::H, 4).is_err());
    }

    #[test]
    fn display_and_zero() {
        assert_eq!(p(&[0, -3, 0, 1]).to_string(), "T^3 - 3*T");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::zero().degree_or_neg(), -1);
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[1, -2]).display_var("X"), "-2*X + 1");
    }

    #[test]
    fn json_round_trip() {
        let f = fam_f(120);
        let js = serde_json::to_string(&f).unwrap();
        let back: UniPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
        assert!(f.coeffs().iter().any(|c| c.to_i64().is_none()));
        assert_eq!(serde_json::to_string(&p(&[-2, 0, 1])).unwrap(), r#"["-2","0","1"]"#);
    }

    #[test]
    fn division_rejects_non_unit_leading() {
        assert!(p(&[1, 2, 3]).div_rem(&p(&[1, 2])).is_err());
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, -1, 1]), UniPoly::zero()));
    }

    #[test]
    fn compose_and_negate() {
        let f3 = fam_f(3);
        assert_eq!(f3.negate_var(), -&f3);
        assert_eq!(f3.compose(&p(&[0, -1])), f3.negate_var());
    }
}
