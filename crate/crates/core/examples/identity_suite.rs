//! Exact polynomial identities behind the decomposition of X(G).

use charvar::traceword::TraceReducer;
use charvar::variety::{hm_d_identity, odd_even_identity, sm_d_identity, verify_section3};

fn main() -> charvar::Result<()> {
    let mut r = TraceReducer::new();
    for m in 1..=6 {
        let (a, b) = (hm_d_identity(m, &mut r), sm_d_identity(m, &mut r));
        println!("m = {m}: {} {}, {} {}", a.name, a.holds(), b.name, b.holds());
    }
    let c = odd_even_identity(5, 4)?;
    println!("{} at (5, 4): {}", c.name, c.holds());
    let rep = verify_section3(9, 6, 20, 0, 1e-8)?;
    for o in &rep.checks {
        println!("(9, 6) {}: exact {}, residual {:?}", o.name, o.exact, o.residual);
    }
    assert!(rep.all_passed());
    Ok(())
}
