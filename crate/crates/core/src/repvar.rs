//! Irreducible components of the representation variety `R(G)`.
//!
//! Components are counted by closed forms and labelled by roots of unity:
//! abelian components by `d`-th roots up to inversion, and the closures of
//! reducible metabelian representations by pairs `(xi, eta)` with
//! `xi^m = eta^n = +-1`, `xi, eta != +-1`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::Result;
use crate::variety::{
    component_of, count_components, ComponentId, Exponents, Line, LineFamily, TraceCoord, UnitRational,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub irr: u32,
    pub ab: u32,
    pub metabelian: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepVarReport {
    pub m: i64,
    pub n: i64,
    pub d: i64,
    pub irr_components: u64,
    pub ab_components: u64,
    pub total: u64,
    pub metabelian_components: u64,
    pub metabelian_labels: Vec<(UnitRational, UnitRational)>,
    pub dimensions: Dimensions,
    /// `(alpha, beta)` with `alpha |m| - beta |n| = d`.
    pub bezout: (i64, i64),
}

/// Roots `xi` of `xi^k = sign` other than `+-1`.
fn theta(k: i64, negative: bool) -> Vec<UnitRational> {
    let k = k.abs();
    UnitRational::roots_of_unity(2 * k)
        .into_iter()
        .filter(|z| !z.is_real() && (z.pow(k).is_minus_one() == negative))
        .collect()
}

/// Labels of the metabelian components, `Theta+ x Upsilon+` then `Theta- x Upsilon-`.
pub fn metabelian_labels(m: i64, n: i64) -> Result<Vec<(UnitRational, UnitRational)>> {
    Exponents::new(m, n)?;
    let mut out = Vec::new();
    for negative in [false, true] {
        for xi in theta(m, negative) {
            for eta in theta(n, negative) {
                out.push((xi, eta));
            }
        }
    }
    Ok(out)
}

/// Closed-form metabelian count: `2(|m|-1)(|n|-1)` for odd `d`, `2((|m|-1)(|n|-1) + 1)` for even `d`.
pub fn metabelian_count(m: i64, n: i64) -> Result<u64> {
    let e = Exponents::new(m, n)?;
    let prod = ((m.abs() - 1) * (n.abs() - 1)) as u64;
    Ok(if e.d % 2 == 1 { 2 * prod } else { 2 * (prod + 1) })
}

pub fn count_repvar(m: i64, n: i64) -> Result<RepVarReport> {
    let e = Exponents::new(m, n)?;
    let cc = count_components(m, n)?;
    let labels = metabelian_labels(m, n)?;
    let g = m.abs().extended_gcd(&n.abs());
    Ok(RepVarReport {
        m,
        n,
        d: e.d,
        irr_components: cc.lines,
        ab_components: cc.abelian,
        total: cc.lines + cc.abelian,
        metabelian_components: metabelian_count(m, n)?,
        metabelian_labels: labels,
        dimensions: Dimensions { irr: 4, ab: 3, metabelian: 3 },
        bezout: (g.x, -g.y),
    })
}

/// Image of one metabelian component in the character variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetabelianImage {
    pub xi: UnitRational,
    pub eta: UnitRational,
    pub image: (TraceCoord, TraceCoord, TraceCoord),
    pub line: Line,
    pub component: ComponentId,
}

/// For each label, the point `(xi + 1/xi, eta + 1/eta, xi eta + 1/(xi eta))`,
/// the line through it, and the abelian curve containing it.
pub fn metabelian_images(m: i64, n: i64) -> Result<Vec<MetabelianImage>> {
    let e = Exponents::new(m.abs(), n.abs())?;
    metabelian_labels(m, n)?
        .into_iter()
        .map(|(xi, eta)| {
            let family = if xi.pow(e.m).is_one() { LineFamily::I1 } else { LineFamily::I2 };
            Ok(MetabelianImage {
                xi,
                eta,
                image: (TraceCoord::new(xi), TraceCoord::new(eta), TraceCoord::new(xi.mul(eta))),
                line: Line { xcoord: TraceCoord::new(xi), ycoord: TraceCoord::new(eta), family },
                component: component_of(xi, eta, &e)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::{enumerate_lines, line_components};

    #[test]
    fn small_reports() {
        let r = count_repvar(3, 2).unwrap();
        assert_eq!((r.irr_components, r.ab_components, r.total, r.metabelian_components), (1, 1, 2, 4));
        let r = count_repvar(4, 2).unwrap();
        assert_eq!((r.irr_components, r.ab_components, r.total, r.metabelian_components), (2, 2, 4, 8));
        let r = count_repvar(1, 5).unwrap();
        assert_eq!((r.irr_components, r.total), (0, r.ab_components));
        let (a, b) = count_repvar(6, 4).unwrap().bezout;
        assert_eq!(a * 6 - b * 4, 2);
    }

    #[test]
    fn images_collapse_two_to_one() {
        for (m, n) in [(3, 2), (6, 4), (9, 6), (5, 5)] {
            let imgs = metabelian_images(m, n).unwrap();
            assert_eq!(imgs.len() as u64, metabelian_count(m, n).unwrap());
            let mut distinct: Vec<_> = imgs.iter().map(|i| i.image).collect();
            distinct.sort();
            distinct.dedup();
            assert_eq!(2 * distinct.len(), imgs.len());
            let lines = enumerate_lines(m, n).unwrap();
            for im in &imgs {
                assert!(lines.contains(&im.line), "{im:?}");
                let (a, b) = line_components(&im.line, m, n).unwrap();
                assert!(im.component == a || im.component == b);
            }
        }
    }
}
