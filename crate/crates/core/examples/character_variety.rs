//! Lines, abelian curves and the ideal generators of X(G) for one (m, n).

use charvar::variety::{count_components, enumerate_lines, ideal_generators, line_components};

fn main() -> charvar::Result<()> {
    let arg = |i: usize, default: i64| std::env::args().nth(i).map_or(default, |s| s.parse().expect("integer"));
    let (m, n) = (arg(1, 6), arg(2, 4));
    let c = count_components(m, n)?;
    println!("X(G_({m},{n})): {} lines and {} abelian curves", c.lines, c.abelian);
    let d = charvar::variety::Exponents::new(m, n)?.d;
    for l in enumerate_lines(m, n)? {
        let (a, b) = line_components(&l, m, n)?;
        println!(
            "  {:?} X = {:.4}, Y = {:.4} meets {} and {}",
            l.family,
            l.xcoord.value(),
            l.ycoord.value(),
            a.label(d),
            b.label(d)
        );
    }
    let g = ideal_generators(m, n, 1)?;
    println!("J has {} generators in window 1; core:", g.j.len());
    for p in g.j_core() {
        println!("  {p}");
    }
    Ok(())
}
