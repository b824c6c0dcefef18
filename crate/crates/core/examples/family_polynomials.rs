//! The families f, h, s, sigma and their factorizations into q_l.

use charvar::unipoly::{cyclotomic, factor_family, family, q_poly, FamilyKind};

fn main() -> charvar::Result<()> {
    for kind in [FamilyKind::F, FamilyKind::H, FamilyKind::S, FamilyKind::Sigma] {
        for k in 1..=6 {
            println!("{}_{k} = {}", kind.name(), family(kind, k));
        }
    }
    for l in [5, 8, 12] {
        println!("c_{l} = {}    q_{l} = {}", cyclotomic(l)?, q_poly(l)?);
    }
    let fac = factor_family(FamilyKind::S, 15)?;
    println!("s_15 has {} factors:", fac.factors.len());
    for (l, q) in &fac.factors {
        println!("  q_{l} = {q}");
    }
    assert_eq!(fac.reconstruct(), family(FamilyKind::S, 15));
    Ok(())
}
