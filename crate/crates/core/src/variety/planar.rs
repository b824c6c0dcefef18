use crate::error::{Error, Result};
use crate::tripoly::{trace_ab, TriPoly};
use crate::unipoly::fam_sigma;

fn check_odd(m: i64) -> Result<()> {
    if m % 2 == 0 || m.abs() < 3 {
        return Err(Error::InvalidArgument(format!("m must be odd with |m| >= 3, got {m}")));
    }
    Ok(())
}

/// The plane curve `(X^2 - Y - 2) sigma_m(Y)` modelling `X(G_{m,2})`.
pub fn planar_model_m2(m: i64) -> Result<TriPoly> {
    check_odd(m)?;
    let quad = &(&TriPoly::x().pow(2) - &TriPoly::y()) - &TriPoly::constant(2);
    Ok(&quad * &TriPoly::lift_y(&fam_sigma(m)))
}

/// Map `X(G_{m,2}) -> C^2`, `(F((m+1)/2, 1), X)`.
pub fn char_map_m2(m: i64) -> Result<(TriPoly, TriPoly)> {
    check_odd(m)?;
    Ok((trace_ab((m + 1) / 2, 1), TriPoly::x()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m3_model() {
        let p = planar_model_m2(3).unwrap();
        let want = &(&(&TriPoly::x().pow(2) - &TriPoly::y()) - &TriPoly::constant(2))
            * &(&TriPoly::y() - &TriPoly::one());
        assert_eq!(p, want);
        let (f, x) = char_map_m2(3).unwrap();
        let img = (f.eval_i64(2, 2, 2), x.eval_i64(2, 2, 2));
        assert_eq!(p.eval_i64(i64::try_from(img.0).unwrap(), i64::try_from(img.1).unwrap(), 0), 0.into());
        assert!(planar_model_m2(4).is_err());
        assert!(char_map_m2(1).is_err());
    }
}
