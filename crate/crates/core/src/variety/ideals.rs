use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::Exponents;
use crate::error::Result;
use crate::tripoly::{poly_d, trace_ab, TriPoly};
use crate::unipoly::{fam_f, fam_s, fam_sigma};

/// Default number of extra indices around `max(|m|, |n|)` in the `J` window.
pub const DEFAULT_WINDOW: i64 = 2;

/// Generators of `J`, `I1`, `I2` and `I3 = J + <D>`.
#[derive(Clone, Debug, Serialize)]
pub struct IdealGenerators {
    pub m: i64,
    pub n: i64,
    pub window: i64,
    /// `F(m,n) - 2`, `F(m+1,n) - X`, `F(m,n-1) - Y`, then the window differences.
    pub j: Vec<TriPoly>,
    pub i1: Vec<TriPoly>,
    pub i2: Vec<TriPoly>,
    pub i3_extra: TriPoly,
}

impl IdealGenerators {
    pub fn j_core(&self) -> &[TriPoly] {
        &self.j[..3]
    }

    pub fn j_extra(&self) -> &[TriPoly] {
        &self.j[3..]
    }

    /// `J` generators followed by `D`.
    pub fn i3(&self) -> Vec<TriPoly> {
        let mut v = self.j.clone();
        v.push(self.i3_extra.clone());
        v
    }
}

/// Memo table for `F(a, b)`.
#[derive(Debug, Default)]
pub(crate) struct FTable {
    cache: HashMap<(i64, i64), TriPoly>,
}

impl FTable {
    pub(crate) fn get(&mut self, a: i64, b: i64) -> TriPoly {
        // F(-a,-b) = F(a,b)
        let key = if a < 0 || (a == 0 && b < 0) { (-a, -b) } else { (a, b) };
        self.cache.entry(key).or_insert_with(|| trace_ab(key.0, key.1)).clone()
    }
}

/// Generators for `(m, n)`. The extra `J` generators are the nonzero
/// differences `F(i,k) - F(j,l)` with `i - j = m`, `k - l = n` and
/// `|i|, |k| <= window + max(|m|, |n|)`, deduplicated up to sign.
pub fn ideal_generators(m: i64, n: i64, window: i64) -> Result<IdealGenerators> {
    Exponents::new(m, n)?;
    let window = window.max(0);
    let mut ft = FTable::default();
    let (x, y) = (TriPoly::x(), TriPoly::y());
    let mut j = vec![
        &ft.get(m, n) - &TriPoly::constant(2),
        &ft.get(m + 1, n) - &x,
        &ft.get(m, n - 1) - &y,
    ];
    let mut seen: HashSet<TriPoly> = HashSet::new();
    for g in &j {
        seen.insert(g.clone());
        seen.insert(-g);
    }
    let bound = window + m.abs().max(n.abs());
    for i in -bound..=bound {
        for k in -bound..=bound {
            let g = &ft.get(i, k) - &ft.get(i - m, k - n);
            if g.is_zero() || !seen.insert(g.clone()) {
                continue;
            }
            seen.insert(-&g);
            j.push(g);
        }
    }

    let i1 = vec![TriPoly::lift_x(&fam_s(m)), TriPoly::lift_y(&fam_s(n))];
    let side = |k: i64| if k % 2 == 0 { fam_f(k / 2) } else { fam_sigma(k) };
    let i2 = vec![TriPoly::lift_x(&side(m)), TriPoly::lift_y(&side(n))];
    Ok(IdealGenerators { m, n, window, j, i1, i2, i3_extra: poly_d() })
}
