//! Factor counts for the survivor language of `Δ`.
//!
//! A survivor sequence splits as `L · R`, where `L` has isolated ones and
//! zero-runs nonincreasing left to right, and `R` has isolated zeros and
//! one-runs nondecreasing left to right; either side may fill the whole
//! sequence.

use super::AnalysisError;
use crate::words::{partitions, Word};
use num_bigint::BigUint;
use rayon::prelude::*;

pub const MAX_OMEGA_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaCount {
    pub n: usize,
    pub count: BigUint,
    /// `(2n+1) n² p(2n)²`.
    pub bound: BigUint,
}

fn runs(bits: &[u8]) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &b in bits {
        match out.last_mut() {
            Some((c, k)) if *c == b => *k += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

/// Runs of `major` are monotone (`nonincreasing` or not), runs of the other
/// letter have length one. The first run is cut by the word's edge iff
/// `first_cut`, likewise the last.
fn side_ok(rs: &[(u8, usize)], major: u8, nonincreasing: bool, first_cut: bool, last_cut: bool) -> bool {
    if rs.iter().any(|&(b, k)| b != major && k != 1) {
        return false;
    }
    let last = rs.len() - 1;
    let full: Vec<(usize, usize)> = rs
        .iter()
        .enumerate()
        .filter(|&(i, &(b, _))| b == major && !(i == 0 && first_cut) && !(i == last && last_cut))
        .map(|(i, &(_, k))| (i, k))
        .collect();
    let ordered = |a: usize, b: usize| if nonincreasing { a >= b } else { a <= b };
    if full.windows(2).any(|p| !ordered(p[0].1, p[1].1)) {
        return false;
    }
    // A cut run may be extended outward only; that is free unless the order
    // caps it from the inside.
    if last > 0 {
        if nonincreasing && last_cut && rs[last].0 == major {
            if let Some(&(i, k)) = full.last() {
                if i + 2 == last && rs[last].1 > k {
                    return false;
                }
            }
        }
        if !nonincreasing && first_cut && rs[0].0 == major {
            if let Some(&(i, k)) = full.first() {
                if i == 2 && rs[0].1 > k {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `w` is a factor of some sequence whose orbit avoids `Δ`.
pub fn omega_member(w: &Word) -> bool {
    let bits = w.bits();
    if bits.is_empty() {
        return true;
    }
    let rs = runs(bits);
    if side_ok(&rs, 0, true, true, true) || side_ok(&rs, 1, false, true, true) {
        return true;
    }
    (0..rs.len() - 1).any(|i| {
        rs[i].0 == 0 && side_ok(&rs[..=i], 0, true, true, false) && side_ok(&rs[i + 1..], 1, false, false, true)
    })
}

/// `#Ω_n`: survivor factors of length `2n+1`, by exhaustive enumeration.
pub fn omega_count(n: usize) -> Result<OmegaCount, AnalysisError> {
    if n == 0 || n > MAX_OMEGA_N {
        return Err(AnalysisError::Resource(format!("n = {n} outside 1..={MAX_OMEGA_N}")));
    }
    let len = 2 * n + 1;
    let count: u64 = (0u64..1 << len)
        .into_par_iter()
        .filter(|&code| omega_member(&Word::new((0..len).rev().map(|i| ((code >> i) & 1) as u8).collect())))
        .count() as u64;
    let p = partitions(2 * n).expect("small argument");
    let bound = BigUint::from(len * n * n) * &p * &p;
    Ok(OmegaCount { n, count: BigUint::from(count), bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Nonincreasing sequences of positive parts with `Σ (a_i + 1) <= budget`.
    fn monotone(budget: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(acc.clone());
        for a in 1..=cap {
            if a < budget {
                acc.push(a);
                monotone(budget - a - 1, a, acc, out);
                acc.pop();
            }
        }
    }

    /// Length-`len` factors of `0^N 1 0^{a_l} … 1 0^{a_0} 1^{b_0} 0 … 1^{b_m} 0 1^N`.
    fn oracle(len: usize, core: usize) -> BTreeSet<Vec<u8>> {
        let mut seqs = Vec::new();
        monotone(core, core, &mut Vec::new(), &mut seqs);
        let mut out = BTreeSet::new();
        for a in &seqs {
            for b in &seqs {
                let mut s = vec![0u8; len];
                for &ai in a {
                    s.push(1);
                    s.extend(std::iter::repeat_n(0, ai));
                }
                for &bi in b.iter().rev() {
                    s.extend(std::iter::repeat_n(1, bi));
                    s.push(0);
                }
                s.extend(std::iter::repeat_n(1, len));
                for f in s.windows(len) {
                    out.insert(f.to_vec());
                }
            }
        }
        out
    }

    #[test]
    fn membership_matches_factor_oracle() {
        for n in 1..=3 {
            let len = 2 * n + 1;
            let expect = oracle(len, 3 * len);
            let got: BTreeSet<Vec<u8>> = (0u32..1 << len)
                .map(|c| (0..len).rev().map(|i| ((c >> i) & 1) as u8).collect::<Vec<u8>>())
                .filter(|v| omega_member(&Word::new(v.clone())))
                .collect();
            assert_eq!(got, expect, "n = {n}");
            assert_eq!(omega_count(n).unwrap().count, BigUint::from(expect.len()));
        }
    }

    #[test]
    fn bounded_and_monotone() {
        let mut prev = BigUint::from(0u32);
        for n in 1..=8 {
            let c = omega_count(n).unwrap();
            assert!(c.count <= c.bound, "n = {n}");
            assert!(c.count >= prev);
            prev = c.count;
        }
        assert_eq!(omega_count(1).unwrap().bound, BigUint::from(12u32));
        assert_eq!(omega_count(4).unwrap().bound, BigUint::from(9u32 * 16 * 22 * 22));
    }

    #[test]
    fn guard() {
        assert!(omega_count(0).is_err());
        assert!(omega_count(13).is_err());
    }
}
