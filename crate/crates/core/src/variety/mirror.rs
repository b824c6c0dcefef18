use std::collections::BTreeSet;

use super::angle::{TraceCoord, UnitRational};
use crate::error::{Error, Result};

/// Points `(u + 1/u, v + 1/v, uv + 1/uv)` with `u^m = v^n = 1` or `u^m = v^n = -1`,
/// i.e. the diagonal characters fixed by the mirror involution.
pub fn mirror_intersection_points(m: i64, n: i64) -> Result<BTreeSet<(TraceCoord, TraceCoord, TraceCoord)>> {
    if m <= 0 || n <= 0 {
        return Err(Error::InvalidArgument(format!("m and n must be positive, got ({m}, {n})")));
    }
    let us = UnitRational::roots_of_unity(2 * m);
    let vs = UnitRational::roots_of_unity(2 * n);
    let mut out = BTreeSet::new();
    for u in &us {
        let su = u.pow(m);
        for v in vs.iter().filter(|v| v.pow(n) == su) {
            out.insert((TraceCoord::new(*u), TraceCoord::new(*v), TraceCoord::new(u.mul(*v))));
        }
    }
    Ok(out)
}

/// Closed form for the fixed set: `mn + 1`, or `mn + 2` when `m` and `n` are
/// both even (then `u, v in {+-1}` gives four points instead of two).
pub fn mirror_closed_form(m: i64, n: i64) -> u64 {
    let extra = if m % 2 == 0 && n % 2 == 0 { 2 } else { 1 };
    (m * n + extra) as u64
}

/// Enumerated size of the fixed set, checked against [`mirror_closed_form`].
pub fn mirror_intersection_count(m: i64, n: i64) -> Result<u64> {
    let count = mirror_intersection_points(m, n)?.len() as u64;
    let closed = mirror_closed_form(m, n);
    if count != closed {
        return Err(Error::Invariant(format!("({m},{n}): enumerated {count} points, closed form {closed}")));
    }
    Ok(count)
}
