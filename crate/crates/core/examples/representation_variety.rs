//! Components of R(G) and where the metabelian ones land in X(G).

use charvar::repvar::{count_repvar, metabelian_images};

fn main() -> charvar::Result<()> {
    let (m, n) = (6, 4);
    let r = count_repvar(m, n)?;
    println!(
        "R(G_({m},{n})): {} irreducible, {} abelian, {} metabelian components",
        r.irr_components, r.ab_components, r.metabelian_components
    );
    println!("Bezout: {} * {m} - {} * {n} = {}", r.bezout.0, r.bezout.1, r.d);
    for im in metabelian_images(m, n)?.iter().take(6) {
        println!("  ({}, {}) -> {}", im.xi, im.eta, im.component.label(r.d));
    }
    Ok(())
}
