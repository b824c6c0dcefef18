//! Reduce traces of words to polynomials in X = tr A, Y = tr B, Z = tr AB and
//! compare with random matrices.

use charvar::traceword::{eval_word, random_pair, relative_error, TraceReducer, Word};
use charvar::tripoly::NumericPoly;

fn main() -> charvar::Result<()> {
    let mut r = TraceReducer::new();
    let (a, b) = random_pair(7, 1.0)?;
    let pt = [a.trace(), b.trace(), (a * b).trace()];
    for text in ["x y x^-1 y^-1", "x^3 y^-2", "x^2 y x^-1 y^2 x y^-1", "x y^2 x^-2 y"] {
        let w: Word = text.parse()?;
        let p = r.trace(&w);
        let err = relative_error(NumericPoly::new(&p).eval(pt), eval_word(&w, &a, &b));
        println!("tr({w}) = {p}");
        println!("    matrix check: relative error {err:.1e}");
    }
    println!("memo entries: {}", r.cache_len());
    Ok(())
}
