use std::ops::Mul;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Gen, Word};
use crate::error::{Error, Result};

/// A 2x2 complex matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        let (o, l) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        Mat2::new(l, o, o, l)
    }

    pub fn diag(u: Complex64) -> Self {
        let o = Complex64::new(0.0, 0.0);
        Mat2::new(u, o, o, u.inv())
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Adjugate; the inverse for unit determinant.
    pub fn inverse(&self) -> Self {
        Mat2::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { *self };
        let mut e = e.unsigned_abs();
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        [self.a, self.b, self.c, self.d].iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, r: Mat2) -> Mat2 {
        Mat2::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }
}

fn draw(rng: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale))
}

/// Deterministic random element of `SL(2, C)` with entries of size about `scale`.
pub fn random_sl2(seed: u64, scale: f64) -> Result<Mat2> {
    if !(scale > 0.0 && scale <= 2.0) {
        return Err(Error::InvalidArgument(format!("scale must lie in (0, 2], got {scale}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let (a, b, c) = (draw(&mut rng, scale), draw(&mut rng, scale), draw(&mut rng, scale));
        if a.norm() < 0.5 * scale {
            continue;
        }
        let d = (Complex64::new(1.0, 0.0) + b * c) / a;
        if d.norm() > 2.0 * scale + 1.0 {
            continue;
        }
        return Ok(Mat2::new(a, b, c, d));
    }
}

/// Two independent matrices derived from one seed.
pub fn random_pair(seed: u64, scale: f64) -> Result<(Mat2, Mat2)> {
    let s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    Ok((random_sl2(s, scale)?, random_sl2(s ^ 0xD1B5_4A32_D192_ED03, scale)?))
}

/// `tr w(A, B)` by literal matrix multiplication.
pub fn eval_word(w: &Word, a: &Mat2, b: &Mat2) -> Complex64 {
    w.syllables()
        .iter()
        .fold(Mat2::identity(), |acc, &(g, e)| acc * if g == Gen::X { a.pow(e) } else { b.pow(e) })
        .trace()
}

/// `tr [A, B] = 2` up to `tol`, the test for a reducible pair.
pub fn is_reducible_pair(a: &Mat2, b: &Mat2, tol: f64) -> bool {
    let comm = *a * *b * a.inverse() * b.inverse();
    (comm.trace() - 2.0).norm() <= tol
}

/// `|p - q| / max(1, |p|, |q|)`.
pub fn relative_error(p: Complex64, q: Complex64) -> f64 {
    (p - q).norm() / 1f64.max(p.norm()).max(q.norm())
}
