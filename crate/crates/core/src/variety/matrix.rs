use serde::{Deserialize, Serialize};

use super::lines::{enumerate_lines, line_components, ComponentId, Line};
use super::Exponents;
use crate::error::{Error, Result};

/// Number of straight lines, abelian curves, and their sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCounts {
    pub lines: u64,
    pub abelian: u64,
    pub total: u64,
}

/// Closed-form component counts of the character variety.
pub fn count_components(m: i64, n: i64) -> Result<ComponentCounts> {
    let e = Exponents::new(m, n)?;
    let prod = ((m.abs() - 1) * (n.abs() - 1)) as u64;
    let lines = if e.d % 2 == 1 { prod / 2 } else { (prod + 1) / 2 };
    let abelian = (e.d / 2 + 1) as u64;
    Ok(ComponentCounts { lines, abelian, total: lines + abelian })
}

/// Lines, components, incidences and the intersection matrix for `(m, n)`.
///
/// `matrix[r][c]` counts lines meeting exactly the components of rows `r`
/// and `c`; diagonal entries count lines meeting one component twice. Rows
/// follow [`ComponentId::all`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyReport {
    pub m: i64,
    pub n: i64,
    pub d: i64,
    pub mp: i64,
    pub np: i64,
    pub lines: Vec<Line>,
    pub components: Vec<ComponentId>,
    pub incidence: Vec<(ComponentId, ComponentId)>,
    pub matrix: Vec<Vec<u64>>,
    pub counts: ComponentCounts,
}

impl VarietyReport {
    pub fn row_of(&self, c: ComponentId) -> Option<usize> {
        self.components.iter().position(|&x| x == c)
    }
}

fn row_index(components: &[ComponentId], c: ComponentId) -> Result<usize> {
    components
        .iter()
        .position(|&x| x == c)
        .ok_or_else(|| Error::Invariant(format!("component index {} out of range", c.index)))
}

/// Matrix accumulated from line incidences.
pub fn enumerated_matrix(
    components: &[ComponentId],
    incidence: &[(ComponentId, ComponentId)],
) -> Result<Vec<Vec<u64>>> {
    let k = components.len();
    let mut mat = vec![vec![0u64; k]; k];
    for &(a, b) in incidence {
        let (r, c) = (row_index(components, a)?, row_index(components, b)?);
        mat[r][c] += 1;
        if r != c {
            mat[c][r] += 1;
        }
    }
    Ok(mat)
}

/// Closed-form matrix; `C_{+-1}` and `C_{zeta^i}` cells depend only on `m'`, `n'`.
pub fn closed_form_matrix(m: i64, n: i64) -> Result<Vec<Vec<u64>>> {
    let e = Exponents::new(m, n)?;
    let (mp, np) = (e.mp as u64, e.np as u64);
    let comps = ComponentId::all(e.d);
    let real = |c: &ComponentId| c.index == 0 || 2 * c.index as i64 == e.d;
    Ok(comps
        .iter()
        .map(|a| {
            comps
                .iter()
                .map(|b| match (a == b, real(a), real(b)) {
                    (true, true, _) => (mp - 1) * (np - 1) / 2,
                    (true, false, _) => (mp - 1) * np + mp * (np - 1),
                    (false, true, true) => mp * np,
                    (false, true, false) | (false, false, true) => 2 * mp * np,
                    (false, false, false) => 4 * mp * np,
                })
                .collect()
        })
        .collect())
}

/// Full report, built by enumeration and checked against the closed forms.
pub fn intersection_matrix(m: i64, n: i64) -> Result<VarietyReport> {
    let e = Exponents::new(m, n)?;
    let lines = enumerate_lines(m, n)?;
    let components = ComponentId::all(e.d);
    let incidence = lines
        .iter()
        .map(|l| line_components(l, m, n))
        .collect::<Result<Vec<_>>>()?;
    let matrix = enumerated_matrix(&components, &incidence)?;
    let closed = closed_form_matrix(m, n)?;
    if matrix != closed {
        return Err(Error::Invariant(format!(
            "({m},{n}): enumerated matrix {matrix:?} differs from closed form {closed:?}"
        )));
    }
    let counts = count_components(m, n)?;
    if counts.lines != lines.len() as u64 || counts.abelian != components.len() as u64 {
        return Err(Error::Invariant(format!(
            "({m},{n}): enumerated {} lines / {} curves, closed form {counts:?}",
            lines.len(),
            components.len()
        )));
    }
    Ok(VarietyReport { m, n, d: e.d, mp: e.mp, np: e.np, lines, components, incidence, matrix, counts })
}

/// Number of line-curve intersection points on each component, in row order,
/// counted directly from the candidate points of each line.
pub fn incidence_points(report: &VarietyReport) -> Result<Vec<u64>> {
    let mut out = vec![0u64; report.components.len()];
    for l in &report.lines {
        let (a, b) = line_components(l, report.m, report.n)?;
        out[row_index(&report.components, a)?] += 1;
        out[row_index(&report.components, b)?] += 1;
    }
    Ok(out)
}
