//! Recover (m, n) from intersection matrices, including the ambiguous and
//! underdetermined cases.

use charvar::recover::{recover, MatrixInput};
use charvar::variety::intersection_matrix;

fn main() -> charvar::Result<()> {
    for (m, n) in [(6, 4), (15, 10), (9, 9), (4, 2)] {
        let input = MatrixInput::from_u64(intersection_matrix(m, n)?.matrix)?;
        let shuffled = input.permuted(&(0..input.size()).rev().collect::<Vec<_>>());
        println!("({m}, {n}) -> {:?}", recover(&shuffled));
    }
    for text in ["[[18]]", "[[11]]", "[[5,1],[1,5]]"] {
        println!("{text} -> {:?}", recover(&MatrixInput::parse_json(text)?));
    }
    Ok(())
}
