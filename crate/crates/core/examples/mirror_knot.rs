//! The mirror map (X, Y, Z) -> (X, Y, XY - Z) between X(G_{m,n}) and X(G_{m,-n}).

use charvar::tripoly::trace_ab;
use charvar::variety::{ideal_generators, mirror_intersection_count};

fn main() -> charvar::Result<()> {
    let (m, n) = (5, 3);
    let f = trace_ab(m, n);
    println!("F({m},{n})         = {f}");
    println!("mirror(F({m},{n})) = {}", f.mirror());
    assert_eq!(f.mirror(), trace_ab(m, -n));
    let ours = ideal_generators(m, n, 1)?;
    let theirs = ideal_generators(m, -n, 1)?;
    let mapped = ours.j.iter().filter(|p| theirs.j.contains(&p.mirror()) || theirs.j.contains(&-&p.mirror())).count();
    println!("{mapped} of {} J generators map onto generators for ({m}, {})", ours.j.len(), -n);
    for (a, b) in [(3, 2), (5, 3), (7, 4), (6, 4)] {
        println!("fixed points on V(I3) for ({a}, {b}): {}", mirror_intersection_count(a, b)?);
    }
    Ok(())
}
