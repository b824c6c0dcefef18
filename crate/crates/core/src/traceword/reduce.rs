use std::collections::HashMap;

use super::{Gen, Word};
use crate::tripoly::TriPoly;
use crate::unipoly::fam_f;

/// Rewrites `tr w(A, B)` as a polynomial in `tr A`, `tr B`, `tr AB`.
///
/// Results are cached on [`Word::canonical_key`], so one reducer should be
/// reused across related words. A reducer is not shared between threads;
/// give each thread its own.
#[derive(Debug, Default)]
pub struct TraceReducer {
    memo: HashMap<Word, TriPoly>,
}

impl TraceReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn trace(&mut self, w: &Word) -> TriPoly {
        let key = w.canonical_key();
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let p = self.compute(&key);
        self.memo.insert(key, p.clone());
        p
    }

    /// `w` is cyclically reduced.
    fn compute(&mut self, w: &Word) -> TriPoly {
        let s = w.syllables();
        match s.len() {
            0 => return TriPoly::constant(2),
            1 => {
                let (g, e) = s[0];
                let f = fam_f(e);
                return if g == Gen::X { TriPoly::lift_x(&f) } else { TriPoly::lift_y(&f) };
            }
            _ => {}
        }

        // Lower a large exponent with A^e = tr A * A^(e-1) - A^(e-2).
        if let Some(i) = s.iter().position(|(_, e)| e.abs() >= 2) {
            let w = w.rotated(i);
            let (g, e) = w.syllables()[0];
            let rest = &w.syllables()[1..];
            let step = e.signum();
            let with = |k: i64| Word::new(std::iter::once((g, k)).chain(rest.iter().copied()));
            let tg = self.trace(&Word::gen(g, 1));
            let near = self.trace(&with(e - step));
            let far = self.trace(&with(e - 2 * step));
            return &(&tg * &near) - &far;
        }

        // All exponents are +-1 and generators alternate.
        if s.len() == 2 {
            let (x, y, z) = (TriPoly::x(), TriPoly::y(), TriPoly::z());
            return if s[0].1 == s[1].1 { z } else { &(&x * &y) - &z };
        }

        // Split w = UV with tr UV = tr U tr V - tr UV^-1. Choose U = g P, V = g Q
        // for a repeated signed letter g; otherwise w = x^e y^f x^-e y^-f and
        // UV^-1 is conjugate to x^2e y^2f.
        let (i, j) = repeated_letter(s).unwrap_or((0, 2));
        let w = w.rotated(i);
        let (u_part, v_part) = w.syllables().split_at(j - i);
        let u = Word::new(u_part.iter().copied());
        let v = Word::new(v_part.iter().copied());
        let tu = self.trace(&u);
        let tv = self.trace(&v);
        let tuv = self.trace(&u.concat(&v.inverse()));
        &(&tu * &tv) - &tuv
    }
}

fn repeated_letter(s: &[(Gen, i64)]) -> Option<(usize, usize)> {
    (0..s.len()).find_map(|i| ((i + 1)..s.len()).find(|&j| s[j] == s[i]).map(|j| (i, j)))
}

/// Trace polynomial of `w` using a fresh [`TraceReducer`].
pub fn reduce_trace(w: &Word) -> TriPoly {
    TraceReducer::new().trace(w)
}
