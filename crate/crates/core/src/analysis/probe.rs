//! Extremal points of the Thue-Morse Cantor set's orbit.

use super::AnalysisError;
use crate::exact_geom::{Point, Rat};
use crate::words::{thue_morse, Word};
use num_bigint::BigInt;
use num_traits::One;

pub const MAX_PROBE_K: u32 = 10;

/// `0.a b^∞`.
fn eventually_periodic(a: &Word, b: &Word) -> Rat {
    let scale = Rat::from_integer(BigInt::one() << a.len());
    Rat::from_integer(a.value()) / &scale + b.periodic_value() / scale
}

/// For the Cantor set `{t_k, t̄_k}^*`, with `t_k` the Thue-Morse prefix of
/// length `2^k`: the least coordinate above `1/2` is `hi = 0.t̄_k t_k^∞` and
/// the greatest below `1/2` is `lo = 0.t_k t̄_k^∞`. Returns
/// `(lo, lo), (hi, lo), (lo, hi), (hi, hi)`.
pub fn pinfty_probe(k: u32) -> Result<Vec<Point>, AnalysisError> {
    if k == 0 || k > MAX_PROBE_K {
        return Err(AnalysisError::Resource(format!("k = {k} outside 1..={MAX_PROBE_K}")));
    }
    let t = thue_morse(k).expect("k within the Thue-Morse guard");
    let tb = t.complement();
    let lo = eventually_periodic(&t, &tb);
    let hi = eventually_periodic(&tb, &t);
    Ok(vec![
        Point::new(lo.clone(), lo.clone()),
        Point::new(hi.clone(), lo.clone()),
        Point::new(lo.clone(), hi.clone()),
        Point::new(hi.clone(), hi),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::rat;
    use crate::holes::tau;
    use num_traits::Signed;

    #[test]
    fn first_levels() {
        let p = pinfty_probe(1).unwrap();
        assert_eq!(p[1].x, rat(7, 12));
        assert_eq!(p[0].x, rat(5, 12));
        let p = pinfty_probe(2).unwrap();
        let expect = eventually_periodic(&Word::from_bits("1001"), &Word::from_bits("0110"));
        assert_eq!(p[1].x, expect);
        assert!(pinfty_probe(0).is_err() && pinfty_probe(11).is_err());
    }

    #[test]
    fn converges_to_thue_morse_corners() {
        let mut prev: Option<Rat> = None;
        for k in 1..=8 {
            let p = pinfty_probe(k).unwrap();
            let half = rat(1, 2);
            assert!(p[0].x < half && p[1].x > half);
            let err = (&p[1].x - (Rat::one() - tau(k).unwrap())).abs();
            if let Some(e) = &prev {
                assert!(err < *e, "k = {k}");
            }
            prev = Some(err);
        }
    }
}
