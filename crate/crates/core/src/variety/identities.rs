//! Exact polynomial identities relating `D` to the trace polynomials, and a
//! numeric check that members of `J` vanish on sampled points of `V(J)`.

use serde::Serialize;

use super::abelian::{abelian_samples, line_samples};
use super::ideals::FTable;
use super::lines::{enumerate_lines, ComponentId};
use super::Exponents;
use crate::error::{Error, Result};
use crate::traceword::{TraceReducer, Word};
use crate::tripoly::{poly_d, NumericPoly, TriPoly};
use crate::unipoly::{fam_f, fam_h, fam_s, fam_sigma};

/// One instance of an identity `lhs = rhs`.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub m: i64,
    pub n: i64,
    pub lhs: TriPoly,
    pub rhs: TriPoly,
    /// Whether `lhs` is a member of `J_{m,n}`.
    pub in_j: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn need(cond: bool, what: &str, m: i64, n: i64) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{what} requires other parities, got ({m}, {n})")))
    }
}

fn x(p: &crate::unipoly::UniPoly) -> TriPoly {
    TriPoly::lift_x(p)
}

fn y(p: &crate::unipoly::UniPoly) -> TriPoly {
    TriPoly::lift_y(p)
}

/// `h_m(X) D = tr(x^m y x^-1 y^-1) - f_{m-1}(X)`.
pub fn hm_d_identity(m: i64, r: &mut TraceReducer) -> IdentityCheck {
    let lhs = &x(&fam_h(m)) * &poly_d();
    let rhs = &r.trace(&Word::power_commutator(m)) - &x(&fam_f(m - 1));
    IdentityCheck { name: "h_m D".into(), m, n: 0, lhs, rhs, in_j: true }
}

/// `s_m(X) D` as commutator traces: four terms for odd `m`, two for even `m`.
pub fn sm_d_identity(m: i64, r: &mut TraceReducer) -> IdentityCheck {
    let lhs = &x(&fam_s(m)) * &poly_d();
    let mut c = |k: i64| r.trace(&Word::power_commutator(k));
    let rhs = if m % 2 != 0 {
        let t = &c((m + 1) / 2) + &c((m - 1) / 2);
        &(&t - &x(&fam_f((m - 3) / 2))) - &x(&fam_f((m - 1) / 2))
    } else {
        &c(m / 2) - &x(&fam_f((m - 2) / 2))
    };
    IdentityCheck { name: "s_m D".into(), m, n: 0, lhs, rhs, in_j: false }
}

/// Sum of `F(a,b) - F(c,d)` over the listed index quadruples.
fn diffs(ft: &mut FTable, pairs: &[(i64, i64, i64, i64)]) -> TriPoly {
    pairs.iter().fold(TriPoly::zero(), |acc, &(a, b, c, d)| &acc + &(&ft.get(a, b) - &ft.get(c, d)))
}

/// `s_m(X) f_{n/2}(Y) D` for odd `m`, even `n`.
pub fn odd_even_identity(m: i64, n: i64) -> Result<IdentityCheck> {
    need(m % 2 != 0 && n % 2 == 0, "odd/even identity", m, n)?;
    let mut ft = FTable::default();
    let (a, b) = (|k: i64| (m + k) / 2, |k: i64| (n + k) / 2);
    let lhs = &(&x(&fam_s(m)) * &y(&fam_f(n / 2))) * &poly_d();
    let head = diffs(
        &mut ft,
        &[
            (a(3), b(0), a(-3), b(0)),
            (a(1), b(0), a(-1), b(0)),
            (a(-1), b(-4), a(1), b(4)),
            (a(-3), b(-4), a(3), b(4)),
        ],
    );
    let tail = diffs(&mut ft, &[(a(1), b(2), a(-1), b(-2)), (a(-1), b(2), a(1), b(-2))]);
    let rhs = &head + &(&ft.get(1, 1) * &tail);
    Ok(IdentityCheck { name: "s_m f_(n/2) D, m odd, n even".into(), m, n, lhs, rhs, in_j: true })
}

/// `s_m(X) sigma_n(Y) D` for odd `m`, odd `n`.
pub fn odd_odd_identity(m: i64, n: i64) -> Result<IdentityCheck> {
    need(m % 2 != 0 && n % 2 != 0, "odd/odd identity", m, n)?;
    let mut ft = FTable::default();
    let (a, b) = (|k: i64| (m + k) / 2, |k: i64| (n + k) / 2);
    let lhs = &(&x(&fam_s(m)) * &y(&fam_sigma(n))) * &poly_d();
    let head = diffs(
        &mut ft,
        &[
            (a(3), b(-1), a(-3), b(1)),
            (a(1), b(-1), a(-1), b(1)),
            (a(-1), b(3), a(1), b(-3)),
            (a(-3), b(3), a(3), b(-3)),
        ],
    );
    let tail = diffs(&mut ft, &[(a(1), b(-1), a(-1), b(1)), (a(-1), b(-1), a(1), b(1))]);
    let rhs = &head + &(&ft.get(1, -1) * &tail);
    Ok(IdentityCheck { name: "s_m sigma_n D, m odd, n odd".into(), m, n, lhs, rhs, in_j: true })
}

/// `s_m(X) sigma_n(Y) D` for even `m`, odd `n`.
pub fn even_odd_identity(m: i64, n: i64) -> Result<IdentityCheck> {
    need(m % 2 == 0 && n % 2 != 0, "even/odd identity", m, n)?;
    let mut ft = FTable::default();
    let (a, b) = (|k: i64| (m + k) / 2, |k: i64| (n + k) / 2);
    let lhs = &(&x(&fam_s(m)) * &y(&fam_sigma(n))) * &poly_d();
    let head = diffs(&mut ft, &[(a(2), b(1), a(-2), b(-1)), (a(-2), b(-3), a(2), b(3))]);
    let tail = diffs(&mut ft, &[(a(0), b(1), a(0), b(-1))]);
    let rhs = &head + &(&ft.get(1, 1) * &tail);
    Ok(IdentityCheck { name: "s_m sigma_n D, m even, n odd".into(), m, n, lhs, rhs, in_j: true })
}

/// `s_m(X) f_{n/2}(Y) D` for even `m`, even `n`.
pub fn even_even_identity(m: i64, n: i64) -> Result<IdentityCheck> {
    need(m % 2 == 0 && n % 2 == 0, "even/even identity", m, n)?;
    let mut ft = FTable::default();
    let (a, b) = (|k: i64| (m + k) / 2, |k: i64| (n + k) / 2);
    let lhs = &(&x(&fam_s(m)) * &y(&fam_f(n / 2))) * &poly_d();
    let head = diffs(&mut ft, &[(a(2), b(0), a(-2), b(0)), (a(-2), b(-4), a(2), b(4))]);
    let tail = diffs(&mut ft, &[(a(0), b(2), a(0), b(-2))]);
    let rhs = &head + &(&ft.get(1, 1) * &tail);
    Ok(IdentityCheck { name: "s_m f_(n/2) D, m even, n even".into(), m, n, lhs, rhs, in_j: true })
}

/// `F(i,k) - F(j,k) = s_{i-j}(X) (F([(i+j+2)/2], k) - F([(i+j-1)/2], k))`.
pub fn telescoping_identity(i: i64, j: i64, k: i64) -> IdentityCheck {
    let mut ft = FTable::default();
    let lhs = &ft.get(i, k) - &ft.get(j, k);
    let hi = (i + j + 2).div_euclid(2);
    let lo = (i + j - 1).div_euclid(2);
    let rhs = &x(&fam_s(i - j)) * &(&ft.get(hi, k) - &ft.get(lo, k));
    IdentityCheck { name: "telescoping".into(), m: i, n: j, lhs, rhs, in_j: false }
}

/// Largest value of `|p(x)| / max(1, sum |c| |monomial(x)|)` over sampled
/// points of `V(J_{m,n})`: every line and every abelian curve.
pub fn certify_on_variety(m: i64, n: i64, polys: &[TriPoly], samples: usize, seed: u64) -> Result<f64> {
    let e = Exponents::new(m, n)?;
    let mut points = Vec::new();
    for (idx, line) in enumerate_lines(m, n)?.iter().enumerate() {
        points.extend(line_samples(line, samples, seed.wrapping_add(idx as u64)));
    }
    for c in ComponentId::all(e.d) {
        points.extend(abelian_samples(m, n, c, samples, seed ^ (c.index + 1).wrapping_mul(0x5851_F42D))?);
    }
    let mut worst: f64 = 0.0;
    for p in polys {
        let np = NumericPoly::new(p);
        for pt in &points {
            let (v, mag) = np.eval_with_scale(*pt);
            worst = worst.max(v.norm() / mag.max(1.0));
        }
    }
    Ok(worst)
}

/// Outcome of one identity instance.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityOutcome {
    pub name: String,
    pub m: i64,
    pub n: i64,
    pub exact: bool,
    /// Scaled residual on `V(J)` samples, for members of `J`.
    pub residual: Option<f64>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section3Report {
    pub m: i64,
    pub n: i64,
    pub tol: f64,
    pub checks: Vec<IdentityOutcome>,
}

impl Section3Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Every identity applicable to `(m, n)`, checked exactly, with the members
/// of `J` also evaluated on samples of `V(J)`.
pub fn verify_section3(m: i64, n: i64, samples: usize, seed: u64, tol: f64) -> Result<Section3Report> {
    Exponents::new(m, n)?;
    let mut r = TraceReducer::new();
    let mut checks = vec![hm_d_identity(m, &mut r), sm_d_identity(m, &mut r)];
    checks.push(match (m % 2 != 0, n % 2 != 0) {
        (true, false) => odd_even_identity(m, n)?,
        (true, true) => odd_odd_identity(m, n)?,
        (false, true) => even_odd_identity(m, n)?,
        (false, false) => even_even_identity(m, n)?,
    });
    let mut out = Vec::new();
    for c in checks {
        let exact = c.holds();
        let residual = if c.in_j { Some(certify_on_variety(m, n, std::slice::from_ref(&c.rhs), samples, seed)?) } else { None };
        let passed = exact && residual.is_none_or(|r| r <= tol);
        out.push(IdentityOutcome { name: c.name, m, n, exact, residual, passed });
    }
    Ok(Section3Report { m, n, tol, checks: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        assert!(odd_even_identity(3, 2).unwrap().holds());
        assert!(even_even_identity(2, 2).unwrap().holds());
        assert!(odd_odd_identity(3, 3).unwrap().holds());
        assert!(even_odd_identity(2, 3).unwrap().holds());
        assert!(odd_even_identity(2, 2).is_err());
    }

    #[test]
    fn commutator_identities() {
        let mut r = TraceReducer::new();
        for m in 1..=6 {
            assert!(hm_d_identity(m, &mut r).holds(), "h_{m}");
            assert!(sm_d_identity(m, &mut r).holds(), "s_{m}");
        }
    }

    #[test]
    fn section3_report() {
        let rep = verify_section3(3, 2, 10, 1, 1e-8).unwrap();
        assert!(rep.all_passed(), "{rep:?}");
    }
}
