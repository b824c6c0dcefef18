use std::f64::consts::PI;

use charvar::traceword::{random_pair, random_sl2, relative_error, Mat2};
use charvar::tripoly::{poly_d, trace_ab, NumericPoly};
use charvar::unipoly::{fam_f, fam_h};
use charvar::variety::{abelian_param, diagonal_trace, enumerate_lines, ideal_generators, line_components, Exponents};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn traces(a: &Mat2, b: &Mat2) -> [Complex64; 3] {
    [a.trace(), b.trace(), (*a * *b).trace()]
}

#[test]
fn random_matrices_are_unimodular() {
    for seed in 0..200 {
        let a = random_sl2(seed, 1.0).unwrap();
        assert!((a.det() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }
    assert!(random_sl2(0, 0.0).is_err());
}

#[test]
fn d_is_commutator_trace_minus_two() {
    let d = NumericPoly::new(&poly_d());
    for seed in 0..100 {
        let (a, b) = random_pair(seed, 1.0).unwrap();
        let comm = (a * b * a.inverse() * b.inverse()).trace() - 2.0;
        assert!(relative_error(d.eval(traces(&a, &b)), comm) < 1e-10, "seed {seed}");
    }
}

#[test]
fn trace_polys_match_matrix_powers() {
    for seed in 0..20 {
        let (a, b) = random_pair(500 + seed, 1.0).unwrap();
        let pt = traces(&a, &b);
        for p in -6..=6 {
            for q in -6..=6 {
                let want = (a.pow(p) * b.pow(-q)).trace();
                let got = NumericPoly::new(&trace_ab(p, q)).eval(pt);
                assert!(relative_error(got, want) < 1e-9, "F({p},{q}) seed {seed}");
            }
        }
    }
}

#[test]
fn chebyshev_bridge() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..=20i64 {
        let (f, h) = (fam_f(k), fam_h(k));
        for _ in 0..20 {
            let theta: f64 = rng.gen_range(0.05..PI - 0.05);
            let x = 2.0 * theta.cos();
            assert!((f.eval_f64(x) - 2.0 * (k as f64 * theta).cos()).abs() < 1e-9, "f_{k}");
            assert!((h.eval_f64(x) - (k as f64 * theta).sin() / theta.sin()).abs() < 1e-9, "h_{k}");
        }
    }
}

/// Every line meets `V(I3)` in two distinct points, both zeros of `J`.
#[test]
fn lines_meet_abelian_curves_twice() {
    for m in 2..=10i64 {
        for n in 2..=m {
            let polys: Vec<NumericPoly> = ideal_generators(m, n, 1).unwrap().j.iter().map(NumericPoly::new).collect();
            let d = NumericPoly::new(&poly_d());
            for l in enumerate_lines(m, n).unwrap() {
                let [p, q] = l.candidate_points();
                let (zp, zq) = (diagonal_trace(p.0, p.1), diagonal_trace(q.0, q.1));
                assert!((zp[2] - zq[2]).norm() > 1e-9, "({m},{n}) {l:?}");
                for z in [zp, zq] {
                    assert!(d.vanishes_at(z, 1e-9));
                    assert!(polys.iter().all(|g| g.vanishes_at(z, 1e-8)), "({m},{n}) {l:?}");
                }
                line_components(&l, m, n).unwrap();
            }
        }
    }
}

#[test]
fn abelian_parametrization_lies_on_variety() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (m, n) in [(3, 2), (5, 3), (6, 4), (-5, 3), (4, -6), (7, 7)] {
        let e = Exponents::new(m, n).unwrap();
        let (a, b, c) = abelian_param(m, n).unwrap();
        let polys: Vec<NumericPoly> = ideal_generators(m, n, 1).unwrap().j.iter().map(NumericPoly::new).collect();
        let d = NumericPoly::new(&poly_d());
        for _ in 0..30 {
            let t = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let pt = [a.eval_complex(t), b.eval_complex(t), c.eval_complex(t)];
            assert!(d.vanishes_at(pt, 1e-9), "({m},{n}) d={}", e.d);
            assert!(polys.iter().all(|g| g.vanishes_at(pt, 1e-8)), "({m},{n})");
        }
    }
}
