//! Forbidden-factor certificates.

use super::AnalysisError;
use crate::exact_geom::{classify_box, BoxClass};
use crate::holes::Hole;
use crate::symbolic::{cylinder_box, Window};
use crate::words::Word;
use serde::{Deserialize, Serialize};

/// `Strict`: the closed cylinder box lies in an open part, so no orbit can
/// contain the factor. `Essential`: it lies in a closed part; the factor is
/// then excluded for every survivor except orbits that meet the hole only on
/// its boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertMode {
    Strict,
    Essential,
}

pub fn certify_forbidden(w: &Window, h: &Hole, mode: CertMode) -> bool {
    let b = cylinder_box(w);
    h.parts().iter().filter(|p| !p.is_degenerate()).any(|p| {
        let class = classify_box(&b, p).expect("non-degenerate part");
        match mode {
            CertMode::Strict => class == BoxClass::InsideOpen,
            CertMode::Essential => class.inside_closed(),
        }
    })
}

/// The window `[0(w01)^m w0 · 1w(10w)^m 1]` for a palindrome `w`.
pub fn h_witness(w: &Word, m: usize) -> Result<Window, AnalysisError> {
    if w.reversed() != *w {
        return Err(AnalysisError::Domain(format!("`{w}` is not a palindrome")));
    }
    let zero = Word::bit(0);
    let one = Word::bit(1);
    let w01 = w.concat(&zero).concat(&one);
    let left = zero.concat(&w01.pow(m)).concat(w).concat(&zero);
    let ten_w = one.concat(&zero).concat(w);
    let right = one.concat(w).concat(&ten_w.pow(m)).concat(&one);
    Ok(Window::new(left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holes::{delta, h_script, p_k};

    fn win(s: &str) -> Window {
        s.parse().unwrap()
    }

    #[test]
    fn documented_certificates() {
        let d = Hole::convex("delta", delta());
        assert!(certify_forbidden(&win("11·00"), &d, CertMode::Essential));
        assert!(!certify_forbidden(&win("11·00"), &d, CertMode::Strict));
        let p1 = Hole::convex("p1", p_k(1).unwrap());
        assert!(certify_forbidden(&win("10·01110"), &p1, CertMode::Essential));
        assert!(certify_forbidden(&win("000·101"), &h_script(), CertMode::Essential));
        assert!(!certify_forbidden(&win("01·10"), &d, CertMode::Essential));
    }

    #[test]
    fn witness_assembly() {
        assert_eq!(h_witness(&Word::empty(), 0).unwrap(), win("00·11"));
        assert_eq!(h_witness(&Word::from_bits("0"), 0).unwrap(), win("000·101"));
        assert_eq!(h_witness(&Word::from_bits("0"), 1).unwrap(), win("0 001 00·1 0 100 1"));
        assert!(h_witness(&Word::from_bits("01"), 0).is_err());
    }
}
