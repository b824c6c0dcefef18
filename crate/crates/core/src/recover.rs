//! Recover `(m, n)` from an intersection matrix given up to a simultaneous
//! permutation of rows and columns.

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::variety::closed_form_matrix;

/// A symmetric square matrix of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<u64>>")]
pub struct MatrixInput {
    entries: Vec<Vec<u64>>,
}

impl TryFrom<Vec<Vec<i64>>> for MatrixInput {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        MatrixInput::new(rows)
    }
}

impl From<MatrixInput> for Vec<Vec<u64>> {
    fn from(m: MatrixInput) -> Self {
        m.entries
    }
}

impl MatrixInput {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidArgument("matrix must have at least one row".into()));
        }
        let mut entries = Vec::with_capacity(k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidArgument(format!("row {i} has {} entries, expected {k}", row.len())));
            }
            let mut r = Vec::with_capacity(k);
            for (j, &v) in row.iter().enumerate() {
                if v < 0 {
                    return Err(Error::InvalidArgument(format!("entry ({i},{j}) is negative")));
                }
                if v != rows[j][i] {
                    return Err(Error::InvalidArgument(format!("matrix is not symmetric at ({i},{j})")));
                }
                r.push(v as u64);
            }
            entries.push(r);
        }
        Ok(MatrixInput { entries })
    }

    pub fn from_u64(rows: Vec<Vec<u64>>) -> Result<Self> {
        Self::new(rows.into_iter().map(|r| r.into_iter().map(|v| v as i64).collect()).collect())
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        Self::new(rows)
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `P M P^T` for the permutation `perm` (new row `i` is old row `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let entries = perm.iter().map(|&i| perm.iter().map(|&j| self.entries[i][j]).collect()).collect();
        MatrixInput { entries }
    }

    fn diagonal(&self) -> Vec<u64> {
        (0..self.size()).map(|i| self.entries[i][i]).collect()
    }

    fn min_off_diagonal(&self) -> Option<u64> {
        let k = self.size();
        (0..k).flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| self.entries[i][j]).min()
    }

    /// Permutation-invariant summary: sorted `(diagonal, sorted off-diagonal row)` pairs.
    pub fn signature(&self) -> Vec<(u64, Vec<u64>)> {
        let mut sig: Vec<(u64, Vec<u64>)> = (0..self.size())
            .map(|i| {
                let mut row: Vec<u64> = (0..self.size()).filter(|&j| j != i).map(|j| self.entries[i][j]).collect();
                row.sort_unstable();
                (self.entries[i][i], row)
            })
            .collect();
        sig.sort();
        sig
    }
}

/// True when `b = P a P^T` for some permutation `P`.
pub fn permutation_equivalent(a: &MatrixInput, b: &MatrixInput) -> bool {
    if a.size() != b.size() || a.signature() != b.signature() {
        return false;
    }
    let k = a.size();
    let mut perm = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn search(a: &MatrixInput, b: &MatrixInput, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = perm.len();
        if i == a.size() {
            return true;
        }
        for c in 0..a.size() {
            if used[c] || a.entries[c][c] != b.entries[i][i] {
                continue;
            }
            if perm.iter().enumerate().all(|(j, &pj)| a.entries[c][pj] == b.entries[i][j]) {
                used[c] = true;
                perm.push(c);
                if search(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[c] = false;
            }
        }
        false
    }
    search(a, b, &mut perm, &mut used)
}

/// Outcome of [`recover`]. Pairs are reported with `m >= n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RecoveryResult {
    Unique { m: i64, n: i64 },
    Ambiguous { candidates: Vec<(i64, i64)> },
    Underdetermined { constraint: String, candidates: Vec<(i64, i64)> },
    Invalid { reason: String },
}

/// All `(m, n)` with `m >= n >= 2`, `gcd(m, n) = 1` and `(m-1)(n-1) = 2L`,
/// in increasing `n`.
pub fn candidates_from_line_count(lines: u64) -> Vec<(i64, i64)> {
    let target = 2 * lines as i64;
    if target == 0 {
        return Vec::new();
    }
    (1..=target.sqrt())
        .filter(|b| target % b == 0)
        .map(|b| (target / b + 1, b + 1))
        .filter(|&(m, n)| m >= n && m.gcd(&n) == 1)
        .collect()
}

/// Solve `m' + n' = sum`, `m' n' = prod` with integers `m' >= n' >= 1`.
fn solve_sum_product(sum: i64, prod: i64) -> Option<(i64, i64)> {
    let disc = sum * sum - 4 * prod;
    if disc < 0 {
        return None;
    }
    let r = disc.sqrt();
    if r * r != disc || (sum + r) % 2 != 0 {
        return None;
    }
    let (mp, np) = ((sum + r) / 2, (sum - r) / 2);
    (np >= 1).then_some((mp, np))
}

fn reconstructs(m: i64, n: i64, input: &MatrixInput) -> bool {
    closed_form_matrix(m, n)
        .ok()
        .and_then(|rows| MatrixInput::from_u64(rows).ok())
        .is_some_and(|forward| permutation_equivalent(&forward, input))
}

/// Candidate pairs proposed by the case analysis on `tr M`, the diagonal and
/// the smallest off-diagonal entry. `k >= 2`.
fn decision_tree(input: &MatrixInput) -> std::result::Result<Vec<(i64, i64)>, String> {
    let k = input.size() as i64;
    let diag = input.diagonal();
    let min_off = input.min_off_diagonal().ok_or("no off-diagonal entries")? as i64;
    if diag.iter().all(|&v| v == 0) {
        if k == 2 {
            let a12 = input.entries[0][1] as i64;
            return Ok(if a12 == 2 { vec![(3, 3), (4, 2)] } else { vec![(2 * a12, 2)] });
        }
        // m' = n' = 1; an entry 1 is the C_1 / C_-1 cell, present only for even d.
        let d = if min_off == 1 { 2 * k - 2 } else { 2 * k - 1 };
        return Ok(vec![(d, d)]);
    }
    let a = *diag.iter().min().expect("nonempty") as i64;
    let times = diag.iter().filter(|&&v| v as i64 == a).count();
    let (d, prod) = match times {
        1 if min_off % 2 == 0 => (2 * k - 1, min_off / 2),
        2 => (2 * k - 2, min_off),
        _ => return Err(format!("smallest diagonal entry {a} occurs {times} times")),
    };
    let (mp, np) = solve_sum_product(prod + 1 - 2 * a, prod)
        .ok_or_else(|| format!("no integers with m'n' = {prod} and (m'-1)(n'-1) = {}", 2 * a))?;
    if mp.gcd(&np) != 1 {
        return Err(format!("m' = {mp} and n' = {np} are not coprime"));
    }
    Ok(vec![(mp * d, np * d)])
}

/// Recover `(m, n)` from an intersection matrix. Every proposed pair is
/// checked by rebuilding its matrix and comparing up to permutation.
pub fn recover(input: &MatrixInput) -> RecoveryResult {
    if input.size() == 1 {
        let lines = input.entries[0][0];
        let candidates: Vec<(i64, i64)> =
            candidates_from_line_count(lines).into_iter().filter(|&(m, n)| reconstructs(m, n, input)).collect();
        return match candidates.len() {
            0 => RecoveryResult::Invalid { reason: format!("no coprime (m, n) with (m-1)(n-1) = {}", 2 * lines) },
            1 => RecoveryResult::Unique { m: candidates[0].0, n: candidates[0].1 },
            _ => RecoveryResult::Underdetermined { constraint: format!("(m-1)(n-1) = {}", 2 * lines), candidates },
        };
    }
    let proposed = match decision_tree(input) {
        Ok(p) => p,
        Err(reason) => return RecoveryResult::Invalid { reason },
    };
    let valid: Vec<(i64, i64)> = proposed.iter().copied().filter(|&(m, n)| reconstructs(m, n, input)).collect();
    match valid.len() {
        0 => RecoveryResult::Invalid {
            reason: format!("proposed {proposed:?} do not reproduce the matrix"),
        },
        1 => RecoveryResult::Unique { m: valid[0].0, n: valid[0].1 },
        _ => RecoveryResult::Ambiguous { candidates: valid },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> MatrixInput {
        MatrixInput::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn known_matrices() {
        assert_eq!(recover(&mat(&[&[1, 6], &[6, 1]])), RecoveryResult::Unique { m: 6, n: 4 });
        assert_eq!(
            recover(&mat(&[&[0, 2], &[2, 0]])),
            RecoveryResult::Ambiguous { candidates: vec![(3, 3), (4, 2)] }
        );
        match recover(&mat(&[&[18]])) {
            RecoveryResult::Underdetermined { candidates, .. } => {
                assert_eq!(candidates, vec![(37, 2), (19, 3), (13, 4)])
            }
            other => panic!("{other:?}"),
        }
        for p in [5, 11, 17, 23] {
            assert_eq!(recover(&mat(&[&[p]])), RecoveryResult::Unique { m: 2 * p + 1, n: 2 });
        }
    }

    #[test]
    fn line_count_candidates() {
        assert_eq!(candidates_from_line_count(18), vec![(37, 2), (19, 3), (13, 4)]);
        assert_eq!(candidates_from_line_count(1), vec![(3, 2)]);
        assert!(candidates_from_line_count(0).is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(MatrixInput::new(vec![vec![1, 2], vec![3, 1]]).is_err());
        assert!(MatrixInput::new(vec![vec![1, 2]]).is_err());
        assert!(MatrixInput::new(vec![vec![-1]]).is_err());
        assert!(MatrixInput::parse_json("[[1,").is_err());
        assert!(matches!(recover(&mat(&[&[0]])), RecoveryResult::Invalid { .. }));
        assert!(matches!(recover(&mat(&[&[5, 1], &[1, 5]])), RecoveryResult::Invalid { .. }));
    }

    #[test]
    fn permutation_check() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 5], &[3, 5, 6]]);
        assert!(permutation_equivalent(&a, &a.permuted(&[2, 0, 1])));
        let b = mat(&[&[1, 3, 2], &[3, 4, 5], &[2, 5, 6]]);
        assert!(!permutation_equivalent(&a, &b));
    }
}
