//! Words in the free group on `x`, `y`, their trace polynomials, and a
//! double-precision matrix oracle.

mod mat2;
mod reduce;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use mat2::{eval_word, is_reducible_pair, random_pair, random_sl2, relative_error, Mat2};
pub use reduce::{reduce_trace, TraceReducer};

/// A generator of the free group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    X,
    Y,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::X => Gen::Y,
            Gen::Y => Gen::X,
        }
    }

    fn letter(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
        }
    }
}

/// A freely reduced word, stored as syllables `g^e` with `e != 0` and
/// adjacent syllables on different generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word {
    syllables: Vec<(Gen, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Build from arbitrary syllables, merging and cancelling as needed.
    pub fn new(syllables: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        for (g, e) in syllables {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { syllables: out }
    }

    pub fn gen(g: Gen, e: i64) -> Self {
        Word::new([(g, e)])
    }

    /// `x^a y^b`.
    pub fn xy(a: i64, b: i64) -> Self {
        Word::new([(Gen::X, a), (Gen::Y, b)])
    }

    /// `x^a y x^-1 y^-1`.
    pub fn power_commutator(a: i64) -> Self {
        Word::new([(Gen::X, a), (Gen::Y, 1), (Gen::X, -1), (Gen::Y, -1)])
    }

    pub fn syllables(&self) -> &[(Gen, i64)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, `sum |e|`.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        Word { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::new(self.syllables.iter().chain(other.syllables.iter()).copied())
    }

    /// Conjugate to a cyclically reduced word.
    pub fn cyclically_reduced(&self) -> Self {
        let mut s = self.syllables.clone();
        loop {
            if s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
                let (_, e) = s.pop().unwrap();
                s[0].1 += e;
                if s[0].1 == 0 {
                    s.remove(0);
                }
            } else {
                return Word { syllables: s };
            }
        }
    }

    /// Rotate syllables so that index `i` comes first (word must be cyclically reduced).
    pub(crate) fn rotated(&self, i: usize) -> Self {
        let mut s = self.syllables.clone();
        s.rotate_left(i);
        Word { syllables: s }
    }

    /// Lexicographically least cyclic rotation of the word or its inverse,
    /// after cyclic reduction. Conjugate or inverse words share a key.
    pub fn canonical_key(&self) -> Word {
        let w = self.cyclically_reduced();
        let inv = w.inverse();
        let n = w.syllables.len();
        (0..n.max(1))
            .flat_map(|i| [w.rotated(i), inv.rotated(i)])
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&(g, e)| if e == 1 { g.letter().to_string() } else { format!("{}^{e}", g.letter()) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Syntax: `x^3 y^-2 x y`; whitespace between syllables is optional and
    /// `1` denotes the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut syl = Vec::new();
        let err = |msg: String| Error::Parse(format!("word '{s}': {msg}"));
        if s.trim() == "1" {
            return Ok(Word::empty());
        }
        while i < chars.len() {
            let ch = chars[i];
            if ch.is_whitespace() || ch == '*' {
                i += 1;
                continue;
            }
            let g = match ch {
                'x' => Gen::X,
                'y' => Gen::Y,
                other => return Err(err(format!("unexpected character '{other}'"))),
            };
            i += 1;
            let mut e = 1i64;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                e = text.parse().map_err(|_| err(format!("bad exponent '{text}'")))?;
            }
            syl.push((g, e));
        }
        Ok(Word::new(syl))
    }
}
