//! Plane model of X(G_{m,2}) for odd m, checked on sampled points.

use charvar::tripoly::NumericPoly;
use charvar::variety::{abelian_samples, char_map_m2, enumerate_lines, line_samples, planar_model_m2, ComponentId};
use num_complex::Complex64;

fn main() -> charvar::Result<()> {
    for m in [3, 5, 7] {
        let curve = planar_model_m2(m)?;
        let (f, x) = char_map_m2(m)?;
        println!("m = {m}: {curve} = 0");
        let (curve, f, x) = (NumericPoly::new(&curve), NumericPoly::new(&f), NumericPoly::new(&x));
        let mut pts = abelian_samples(m, 2, ComponentId::new(0, 1), 50, 1)?;
        for l in enumerate_lines(m, 2)? {
            pts.extend(line_samples(&l, 50, 2));
        }
        let worst = pts
            .iter()
            .map(|p| {
                let (v, mag) = curve.eval_with_scale([f.eval(*p), x.eval(*p), Complex64::new(0.0, 0.0)]);
                v.norm() / mag.max(1.0)
            })
            .fold(0.0, f64::max);
        println!("  worst scaled residual over {} points: {worst:.1e}", pts.len());
    }
    Ok(())
}
