use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lines::{ComponentId, Line};
use super::Exponents;
use crate::error::{Error, Result};
use crate::unipoly::{fam_f, UniPoly};

fn trace_triple(u: Complex64, v: Complex64) -> [Complex64; 3] {
    let w = u * v;
    [u + u.inv(), v + v.inv(), w + w.inv()]
}

/// Random points of `C_{zeta^i}`: `v` uniform on `0.5 <= |v| <= 2` and `u`
/// a random root of `u^{m'} = zeta^i v^{n'}` (signed `m'`, `n'`).
pub fn abelian_samples(
    m: i64,
    n: i64,
    c: ComponentId,
    count: usize,
    seed: u64,
) -> Result<Vec<[Complex64; 3]>> {
    let e = Exponents::new(m, n)?;
    if c.index as i64 > e.d / 2 {
        return Err(Error::InvalidArgument(format!(
            "component index {} exceeds floor(d/2) = {}",
            c.index,
            e.d / 2
        )));
    }
    let (mp, np) = (e.mp_signed(), e.np_signed());
    let zeta_i = Complex64::from_polar(1.0, TAU * c.index as f64 / e.d as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let r = rng.gen_range(0.25f64..=4.0).sqrt();
            let v = Complex64::from_polar(r, rng.gen_range(0.0..TAU));
            let w = zeta_i * v.powi(np as i32);
            let k = rng.gen_range(0..mp.abs()) as f64;
            let u = ((w.ln() + Complex64::new(0.0, TAU * k)) / mp as f64).exp();
            trace_triple(u, v)
        })
        .collect())
}

/// Random points `(a, b, z)` of a line with `z` uniform in the square `|Re z|, |Im z| <= 2`.
pub fn line_samples(line: &Line, count: usize, seed: u64) -> Vec<[Complex64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| line.point(Complex64::new(rng.gen_range(-2.0..=2.0), rng.gen_range(-2.0..=2.0))))
        .collect()
}

/// `C_1` as the image of `t -> (f_{n'}(t), f_{m'}(t), f_{n'+m'}(t))`.
pub fn abelian_param(m: i64, n: i64) -> Result<(UniPoly, UniPoly, UniPoly)> {
    let e = Exponents::new(m, n)?;
    let (mp, np) = (e.mp_signed(), e.np_signed());
    Ok((fam_f(np), fam_f(mp), fam_f(np + mp)))
}
