use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The root of unity `e^{2 pi i p / q}`, stored as a reduced fraction in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitRational {
    p: i64,
    q: i64,
}

impl UnitRational {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroArgument("denominator"));
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        let p = p.rem_euclid(q);
        let g = p.gcd(&q);
        Ok(UnitRational { p: p / g, q: q / g })
    }

    /// Internal constructor for denominators known to be positive.
    pub(crate) fn frac(p: i64, q: i64) -> Self {
        Self::new(p, q).expect("positive denominator")
    }

    pub fn one() -> Self {
        UnitRational { p: 0, q: 1 }
    }

    pub fn minus_one() -> Self {
        UnitRational { p: 1, q: 2 }
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    /// Multiplicative order of the root of unity.
    pub fn order(&self) -> i64 {
        self.q
    }

    pub fn mul(self, o: Self) -> Self {
        let l = self.q.lcm(&o.q);
        Self::frac(self.p * (l / self.q) + o.p * (l / o.q), l)
    }

    pub fn inv(self) -> Self {
        Self::frac(-self.p, self.q)
    }

    pub fn pow(self, e: i64) -> Self {
        let p = ((self.p as i128 * e as i128).rem_euclid(self.q as i128)) as i64;
        Self::frac(p, self.q)
    }

    pub fn is_one(&self) -> bool {
        self.p == 0
    }

    pub fn is_minus_one(&self) -> bool {
        *self == Self::minus_one()
    }

    /// True when the point is `1` or `-1`.
    pub fn is_real(&self) -> bool {
        self.q <= 2
    }

    pub fn angle(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * self.angle())
    }

    /// `z + 1/z = 2 cos(2 pi p / q)`.
    pub fn trace_value(&self) -> f64 {
        2.0 * (std::f64::consts::TAU * self.angle()).cos()
    }

    /// `d * angle` as an integer, if it is one.
    pub fn index_in(&self, d: i64) -> Option<i64> {
        (d % self.q == 0).then(|| self.p * (d / self.q))
    }

    /// All `q`-th roots of unity, in increasing angle.
    pub fn roots_of_unity(q: i64) -> Vec<Self> {
        (0..q).map(|p| Self::frac(p, q)).collect()
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for UnitRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("'{s}': {e}")));
        Self::new(parse(p)?, parse(q)?)
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// The point `z + 1/z` of a root of unity, keyed by the representative of
/// `{z, 1/z}` with angle in `[0, 1/2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TraceCoord {
    angle: UnitRational,
}

impl TraceCoord {
    pub fn new(z: UnitRational) -> Self {
        let angle = if 2 * z.p > z.q { z.inv() } else { z };
        TraceCoord { angle }
    }

    pub fn angle(&self) -> UnitRational {
        self.angle
    }

    pub fn value(&self) -> f64 {
        self.angle.trace_value()
    }
}

impl From<UnitRational> for TraceCoord {
    fn from(z: UnitRational) -> Self {
        TraceCoord::new(z)
    }
}

impl fmt::Display for TraceCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2cos(2pi*{})", self.angle)
    }
}
