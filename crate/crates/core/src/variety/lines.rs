use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::angle::{TraceCoord, UnitRational};
use super::Exponents;
use crate::error::{Error, Result};

/// Which ideal a straight line comes from: `I1` (roots of `s_m`, `s_n`) or
/// `I2` (the `sigma` / `f` generators).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LineFamily {
    I1,
    I2,
}

/// The line `{X = a, Y = b}` with `a = lambda + 1/lambda`, `b = mu + 1/mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Line {
    pub xcoord: TraceCoord,
    pub ycoord: TraceCoord,
    pub family: LineFamily,
}

impl Line {
    pub fn lambda(&self) -> UnitRational {
        self.xcoord.angle()
    }

    pub fn mu(&self) -> UnitRational {
        self.ycoord.angle()
    }

    /// The two points where the line meets the abelian curves, as
    /// `(u, v) = (lambda, mu)` and `(lambda, 1/mu)`.
    pub fn candidate_points(&self) -> [(UnitRational, UnitRational); 2] {
        [(self.lambda(), self.mu()), (self.lambda(), self.mu().inv())]
    }

    /// A point `(a, b, z)` on the line.
    pub fn point(&self, z: Complex64) -> [Complex64; 3] {
        [Complex64::new(self.xcoord.value(), 0.0), Complex64::new(self.ycoord.value(), 0.0), z]
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: lambda = {}, mu = {}", self.family, self.lambda(), self.mu())
    }
}

/// Trace triple `(u + 1/u, v + 1/v, uv + 1/uv)` of a diagonal pair.
pub fn diagonal_trace(u: UnitRational, v: UnitRational) -> [Complex64; 3] {
    [u, v, u.mul(v)].map(|z| Complex64::new(z.trace_value(), 0.0))
}

/// Canonical representative `i` of `{i, d - i}` labelling `C_{zeta^i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComponentId {
    pub index: u64,
}

impl ComponentId {
    pub fn new(i: i64, d: i64) -> Self {
        let i = i.rem_euclid(d);
        ComponentId { index: i.min(d - i) as u64 }
    }

    /// All components for a given `d`, in matrix order: `C_1`, `C_-1` (even
    /// `d`), then `C_{zeta^i}` for increasing `i`.
    pub fn all(d: i64) -> Vec<ComponentId> {
        let mut v = vec![ComponentId { index: 0 }];
        if d % 2 == 0 {
            v.push(ComponentId { index: (d / 2) as u64 });
        }
        v.extend((1..=(d - 1) / 2).map(|i| ComponentId { index: i as u64 }));
        v
    }

    pub fn label(&self, d: i64) -> String {
        match self.index {
            0 => "C_1".into(),
            i if 2 * i as i64 == d => "C_-1".into(),
            i => format!("C_zeta^{i}"),
        }
    }
}

/// Component `C_{zeta^i}` containing the diagonal point `(u, v)`; `zeta^i = u^{m'} v^{-n'}`.
pub fn component_of(u: UnitRational, v: UnitRational, e: &Exponents) -> Result<ComponentId> {
    let z = u.pow(e.mp_signed()).mul(v.pow(-e.np_signed()));
    let i = z.index_in(e.d).ok_or_else(|| {
        Error::Invariant(format!("u^m' v^-n' = {z} is not a {}-th root of unity", e.d))
    })?;
    Ok(ComponentId::new(i, e.d))
}

/// The straight lines of the character variety, for `|m|`, `|n|`.
pub fn enumerate_lines(m: i64, n: i64) -> Result<Vec<Line>> {
    let e = Exponents::new(m, n)?;
    let (am, an) = (e.m.abs(), e.n.abs());
    // I1: lambda^m = 1, angle in (0, 1/2). I2: lambda^m = -1, angle (2p+1)/(2m) in (0, 1/2).
    let i1 = |k: i64| (1..).take_while(move |p| 2 * p < k).map(move |p| UnitRational::frac(p, k));
    let i2 = |k: i64| {
        (0..).take_while(move |p| 2 * p + 1 < k).map(move |p| UnitRational::frac(2 * p + 1, 2 * k))
    };
    let mut out = Vec::new();
    for (fam, xs, ys) in [
        (LineFamily::I1, i1(am).collect::<Vec<_>>(), i1(an).collect::<Vec<_>>()),
        (LineFamily::I2, i2(am).collect(), i2(an).collect()),
    ] {
        for x in &xs {
            for y in &ys {
                out.push(Line { xcoord: TraceCoord::new(*x), ycoord: TraceCoord::new(*y), family: fam });
            }
        }
    }
    Ok(out)
}

/// The two components met by `line` (equal when it meets one component twice).
pub fn line_components(line: &Line, m: i64, n: i64) -> Result<(ComponentId, ComponentId)> {
    let e = Exponents::new(m.abs(), n.abs())?;
    let [p, q] = line.candidate_points();
    Ok((component_of(p.0, p.1, &e)?, component_of(q.0, q.1, &e)?))
}
