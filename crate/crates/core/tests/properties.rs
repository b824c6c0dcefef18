use std::collections::{BTreeSet, HashSet};

use charvar::recover::{recover, MatrixInput};
use charvar::repvar::count_repvar;
use charvar::traceword::{reduce_trace, Gen, TraceReducer, Word};
use charvar::tripoly::{poly_d, trace_ab, TriPoly};
use charvar::unipoly::{factor_family, fam_f, fam_h, fam_s, fam_sigma, FamilyKind, UniPoly};
use charvar::variety::{
    enumerate_lines, ideal_generators, incidence_points, intersection_matrix, telescoping_identity, LineFamily,
    TraceCoord, UnitRational,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), -4i64..=4), 0..12)
        .prop_map(|v| Word::new(v.into_iter().map(|(g, e)| (if g { Gen::X } else { Gen::Y }, e))))
}

fn tripoly_strategy() -> impl Strategy<Value = TriPoly> {
    prop::collection::vec(((0u32..5, 0u32..5, 0u32..5), -30i64..=30), 0..10)
        .prop_map(|v| TriPoly::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

#[test]
fn recursions() {
    let t = UniPoly::t();
    for k in 4..=60 {
        assert_eq!(fam_f(k), &(&t * &fam_f(k - 1)) - &fam_f(k - 2));
        assert_eq!(fam_h(k), &(&t * &fam_h(k - 1)) - &fam_h(k - 2));
        assert_eq!(fam_s(k), &(&t * &fam_s(k - 2)) - &fam_s(k - 4));
        assert_eq!(fam_sigma(k), &(&t * &fam_sigma(k - 2)) - &fam_sigma(k - 4));
    }
}

#[test]
fn factor_degree_accounting() {
    for k in (-60..=60i64).filter(|&k| k != 0) {
        let a = k.unsigned_abs() as usize;
        assert_eq!(factor_family(FamilyKind::F, k).unwrap().degree_sum(), a, "f_{k}");
        for kind in [FamilyKind::S, FamilyKind::Sigma] {
            assert_eq!(factor_family(kind, k).unwrap().degree_sum(), (a - 1) / 2, "{}_{k}", kind.name());
        }
    }
}

#[test]
fn trace_poly_recurrences() {
    for a in -10..=10 {
        for b in -10..=10 {
            assert_eq!(trace_ab(-a, -b), trace_ab(a, b));
            assert_eq!(trace_ab(a, b).swap_xy(), trace_ab(b, a));
        }
    }
    for a in -8..=8i64 {
        for b in -8..=8i64 {
            for k in -8..=8i64 {
                let lhs = &trace_ab(a, k) * &TriPoly::lift_x(&fam_f(b));
                assert_eq!(lhs, &trace_ab(a + b, k) + &trace_ab(a - b, k), "({a},{b},{k})");
                let (i, j) = (a, b);
                let rhs = &TriPoly::lift_x(&fam_s(i - j))
                    * &(&trace_ab((i + j + 2).div_euclid(2), k) - &trace_ab((i + j - 1).div_euclid(2), k));
                assert_eq!(&trace_ab(i, k) - &trace_ab(j, k), rhs, "telescoping ({i},{j},{k})");
                assert!(telescoping_identity(i, j, k).holds());
            }
        }
    }
}

#[test]
fn powers_reduce_to_family() {
    for k in -20..=20 {
        assert_eq!(reduce_trace(&Word::gen(Gen::X, k)), TriPoly::lift_x(&fam_f(k)));
        assert_eq!(reduce_trace(&Word::gen(Gen::Y, k)), TriPoly::lift_y(&fam_f(k)));
    }
}

#[test]
fn kappa_swaps_line_families_for_odd_exponents() {
    let neg = |c: TraceCoord| TraceCoord::new(c.angle().mul(UnitRational::minus_one()));
    for m in (1..=15).step_by(2) {
        for n in (1..=m).step_by(2) {
            let lines = enumerate_lines(m, n).unwrap();
            let pick = |f: LineFamily| -> BTreeSet<_> {
                lines.iter().filter(|l| l.family == f).map(|l| (l.xcoord, l.ycoord)).collect()
            };
            let (i1, i2) = (pick(LineFamily::I1), pick(LineFamily::I2));
            let image: BTreeSet<_> = i1.iter().map(|&(a, b)| (neg(a), neg(b))).collect();
            assert_eq!(image, i2, "({m},{n})");
        }
    }
}

#[test]
fn mirror_maps_j_window_to_mirror_window() {
    for m in (-6..=6i64).filter(|&v| v != 0) {
        for n in (-6..=6i64).filter(|&v| v != 0) {
            let g = ideal_generators(m, n, 2).unwrap();
            let target: HashSet<TriPoly> = ideal_generators(m, -n, 2).unwrap().j.into_iter().collect();
            for p in &g.j {
                let q = p.mirror();
                assert!(target.contains(&q) || target.contains(&-&q), "({m},{n}): {p}");
            }
        }
    }
}

#[test]
fn repvar_counts_match_lines() {
    for m in -12..=12i64 {
        for n in -12..=12i64 {
            if m == 0 || n == 0 {
                continue;
            }
            let r = count_repvar(m, n).unwrap();
            assert_eq!(r.irr_components, enumerate_lines(m, n).unwrap().len() as u64);
            assert_eq!(r.ab_components as i64, r.d / 2 + 1);
            assert_eq!(r.total, r.irr_components + r.ab_components);
            let (a, b) = r.bezout;
            assert_eq!(a * m.abs() - b * n.abs(), r.d);
        }
    }
}

proptest! {
    #[test]
    fn product_rule(i in -25i64..=25, j in -25i64..=25) {
        prop_assert_eq!(&fam_f(i) * &fam_f(j), &fam_f(i + j) + &fam_f(i - j));
    }

    #[test]
    fn negative_indices(k in -60i64..=60) {
        prop_assert_eq!(fam_f(-k), fam_f(k));
        prop_assert_eq!(fam_h(-k), -&fam_h(k));
        prop_assert_eq!(fam_s(-k), -&fam_s(k));
        let sign = if (k - 1).rem_euclid(2) == 0 { 1 } else { -1 };
        prop_assert_eq!(fam_sigma(-k), fam_sigma(k).scale_i64(sign));
    }

    #[test]
    fn kappa_on_trace_polys(a in -10i64..=10, b in -10i64..=10) {
        let f = trace_ab(a, b);
        let sign = if (a - b).rem_euclid(2) == 0 { 1 } else { -1 };
        prop_assert_eq!(f.kappa(), f.scale_i64(sign));
        prop_assert_eq!(f.mirror(), trace_ab(a, -b));
    }

    #[test]
    fn mirror_is_involution(p in tripoly_strategy()) {
        prop_assert_eq!(p.mirror().mirror(), p.clone());
        prop_assert_eq!(p.kappa().kappa(), p.clone());
        prop_assert_eq!((&p * &poly_d()).mirror(), &p.mirror() * &poly_d());
    }

    #[test]
    fn word_parse_roundtrip(w in word_strategy()) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn reduce_invariant_under_inverse_and_rotation(w in word_strategy(), cut in 0usize..12) {
        let mut r = TraceReducer::new();
        let t = r.trace(&w);
        prop_assert_eq!(r.trace(&w.inverse()), t.clone());
        let syl = w.syllables();
        let c = if syl.is_empty() { 0 } else { cut % syl.len() };
        let (head, tail) = (Word::new(syl[..c].to_vec()), Word::new(syl[c..].to_vec()));
        prop_assert_eq!(r.trace(&tail.concat(&head)), t.clone());
        prop_assert_eq!(reduce_trace(&w), t);
    }

    #[test]
    fn recover_permutation_invariant(m in 2i64..=16, n in 2i64..=16, seed in any::<u64>()) {
        let (m, n) = (m.max(n), m.min(n));
        let input = MatrixInput::from_u64(intersection_matrix(m, n).unwrap().matrix).unwrap();
        let k = input.size();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut s = seed;
        for i in (1..k).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(recover(&input.permuted(&perm)), recover(&input));
    }

    #[test]
    fn row_sums_count_incidences(m in -20i64..=20, n in -20i64..=20) {
        prop_assume!(m != 0 && n != 0);
        let r = intersection_matrix(m, n).unwrap();
        let pts = incidence_points(&r).unwrap();
        for (i, row) in r.matrix.iter().enumerate() {
            prop_assert_eq!(row[i] + row.iter().sum::<u64>(), pts[i]);
        }
        prop_assert_eq!(pts.iter().sum::<u64>(), 2 * r.lines.len() as u64);
    }

    #[test]
    fn unit_rational_text_roundtrip(p in -50i64..50, q in 1i64..50) {
        let u = UnitRational::new(p, q).unwrap();
        prop_assert_eq!(u.to_string().parse::<UnitRational>().unwrap(), u);
        prop_assert!(u.mul(u.inv()).is_one());
        prop_assert_eq!(u.pow(u.order()), UnitRational::one());
    }
}
