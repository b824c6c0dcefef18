//! Intersection matrix and DOT graph of X(G_{m,n}).

use charvar::variety::{closed_form_matrix, intersection_matrix};

fn main() -> charvar::Result<()> {
    let r = intersection_matrix(12, 8)?;
    print!("{}", r.to_text());
    assert_eq!(r.matrix, closed_form_matrix(12, 8)?);
    println!();
    print!("{}", intersection_matrix(6, 4)?.to_dot());
    Ok(())
}
