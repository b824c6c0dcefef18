//! Geometry of the character variety of `G = <x, y | x^m = y^n>`.
//!
//! With `d = gcd(m, n)`, `m = m'd`, `n = n'd`, the variety is the union of
//! straight lines `{X = a, Y = b}` and `floor(d/2) + 1` abelian curves
//! `C_{zeta^i}` (`zeta = e^{2 pi i / d}`). Points on the unit circle are
//! handled exactly as [`UnitRational`] angles, so incidences are decided
//! without floating-point comparison.

mod abelian;
mod angle;
mod identities;
mod ideals;
mod lines;
mod matrix;
mod mirror;
mod planar;
mod report;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

pub use abelian::{abelian_param, abelian_samples, line_samples};
pub use angle::{TraceCoord, UnitRational};
pub use identities::{
    certify_on_variety, even_even_identity, even_odd_identity, hm_d_identity, odd_even_identity,
    odd_odd_identity, sm_d_identity, telescoping_identity, verify_section3, IdentityCheck,
    Section3Report,
};
pub use ideals::{ideal_generators, IdealGenerators, DEFAULT_WINDOW};
pub use lines::{
    component_of, diagonal_trace, enumerate_lines, line_components, ComponentId, Line, LineFamily,
};
pub use matrix::{
    closed_form_matrix, count_components, enumerated_matrix, incidence_points, intersection_matrix,
    ComponentCounts, VarietyReport,
};
pub use mirror::{mirror_closed_form, mirror_intersection_count, mirror_intersection_points};
pub use planar::{char_map_m2, planar_model_m2};

/// `(m, n)` together with `d = gcd(|m|, |n|)` and `m' = |m|/d`, `n' = |n|/d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Exponents {
    pub m: i64,
    pub n: i64,
    pub d: i64,
    pub mp: i64,
    pub np: i64,
}

impl Exponents {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroArgument("m"));
        }
        if n == 0 {
            return Err(Error::ZeroArgument("n"));
        }
        let d = m.abs().gcd(&n.abs());
        Ok(Exponents { m, n, d, mp: m.abs() / d, np: n.abs() / d })
    }

    /// `m / d` with the sign of `m`.
    pub fn mp_signed(&self) -> i64 {
        self.m / self.d
    }

    /// `n / d` with the sign of `n`.
    pub fn np_signed(&self) -> i64 {
        self.n / self.d
    }
}
