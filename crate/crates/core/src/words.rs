//! Finite binary words: balance, extremal cyclically balanced words,
//! substitutions, Thue-Morse prefixes, Farey neighbours and partition counts.

use crate::exact_geom::Rat;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("not a binary word: `{0}`")]
    Parse(String),
}

/// Finite word over `{0, 1}`, stored one bit per byte.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    pub fn new(bits: Vec<u8>) -> Word {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Word { bits }
    }

    pub fn empty() -> Word {
        Word { bits: Vec::new() }
    }

    pub fn bit(b: u8) -> Word {
        Word { bits: vec![b] }
    }

    /// Parse a `0`/`1` string. Panics on other characters; use `FromStr`
    /// for fallible parsing.
    pub fn from_bits(s: &str) -> Word {
        s.parse().expect("binary literal")
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn reversed(&self) -> Word {
        Word { bits: self.bits.iter().rev().copied().collect() }
    }

    /// Bitwise complement.
    pub fn complement(&self) -> Word {
        Word { bits: self.bits.iter().map(|b| 1 - b).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Word { bits }
    }

    pub fn pow(&self, n: usize) -> Word {
        Word { bits: self.bits.repeat(n) }
    }

    /// Left rotation by `k` places.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let mut bits = self.bits.clone();
        bits.rotate_left(k % self.len());
        Word { bits }
    }

    pub fn rotations(&self) -> Vec<Word> {
        (0..self.len().max(1)).map(|k| self.rotate(k)).collect()
    }

    /// Least `p` with `w = u^(len/p)` for some `u` of length `p`.
    pub fn primitive_period(&self) -> usize {
        let n = self.len();
        (1..=n).find(|&p| n.is_multiple_of(p) && (p..n).all(|i| self.bits[i] == self.bits[i - p])).unwrap_or(0)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && self.primitive_period() == self.len()
    }

    /// Primitive root: the shortest `u` with `w = u^j`.
    pub fn root(&self) -> Word {
        Word { bits: self.bits[..self.primitive_period()].to_vec() }
    }

    /// Least rotation.
    pub fn least_rotation(&self) -> Word {
        self.rotations().into_iter().min().unwrap_or_default()
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word { bits: self.bits[from..to].to_vec() }
    }

    /// Binary value with the first letter most significant.
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::zero();
        for &b in &self.bits {
            v <<= 1;
            if b == 1 {
                v += 1;
            }
        }
        v
    }

    /// The binary fraction `0.w^∞` as an exact rational.
    pub fn periodic_value(&self) -> Rat {
        assert!(!self.is_empty(), "empty period");
        let den = (BigInt::one() << self.len()) - 1;
        Rat::new(self.value(), den)
    }

    pub fn is_factor_of(&self, other: &Word) -> bool {
        self.is_empty() || other.bits.windows(self.len()).any(|w| w == self.bits.as_slice())
    }
}

impl FromStr for Word {
    type Err = WordsError;
    fn from_str(s: &str) -> Result<Word, WordsError> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(WordsError::Parse(s.to_string())),
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(Word::new)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            f.write_str(if *b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Lexicographic comparison of the infinite periodic words `u^∞` and `v^∞`.
pub fn cmp_periodic(u: &Word, v: &Word) -> Ordering {
    assert!(!u.is_empty() && !v.is_empty(), "empty period");
    // Sequences with periods p and q that agree on p + q letters are equal.
    let n = u.len() + v.len();
    for i in 0..n {
        match u.bits[i % u.len()].cmp(&v.bits[i % v.len()]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Reduced fraction strictly inside `(0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    p: u64,
    q: u64,
}

impl Frac {
    pub fn new(p: u64, q: u64) -> Result<Frac, WordsError> {
        if p == 0 || p >= q {
            return Err(WordsError::Domain(format!("{p}/{q} is not in (0,1)")));
        }
        let g = p.gcd(&q);
        Ok(Frac { p: p / g, q: q / g })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn q(self) -> u64 {
        self.q
    }

    pub fn to_rat(self) -> Rat {
        Rat::new(BigInt::from(self.p), BigInt::from(self.q))
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Frac {
    type Err = WordsError;
    fn from_str(s: &str) -> Result<Frac, WordsError> {
        let bad = || WordsError::Parse(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        Frac::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?)
    }
}

/// Nonempty finite vector of slopes `(r_1, …, r_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RVector(Vec<Frac>);

impl RVector {
    pub fn new(entries: Vec<Frac>) -> Result<RVector, WordsError> {
        if entries.is_empty() {
            return Err(WordsError::Domain("empty slope vector".into()));
        }
        Ok(RVector(entries))
    }

    pub fn entries(&self) -> &[Frac] {
        &self.0
    }
}

/// Balance test; the cyclic variant tests `ww`.
pub fn is_balanced(w: &Word, cyclic: bool) -> bool {
    if cyclic {
        return is_balanced(&w.concat(w), false);
    }
    let b = w.bits();
    let mut prefix = vec![0usize; b.len() + 1];
    for (i, &x) in b.iter().enumerate() {
        prefix[i + 1] = prefix[i] + x as usize;
    }
    (1..=b.len()).all(|n| {
        let counts = (0..=b.len() - n).map(|i| prefix[i + n] - prefix[i]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        hi - lo <= 1
    })
}

/// Lower mechanical word of slope `p/q`, length `q`.
pub fn mechanical_word(r: Frac) -> Word {
    let (p, q) = (r.p as u128, r.q as u128);
    Word::new((0..q).map(|n| (((n + 1) * p) / q - (n * p) / q) as u8).collect())
}

/// `(0-max(r), 1-min(r))`: the largest rotation beginning with 0 and the
/// smallest beginning with 1 of the cyclically balanced word of slope `r`.
pub fn extremal_words(r: Frac) -> (Word, Word) {
    let rots = mechanical_word(r).rotations();
    let zero_max = rots.iter().filter(|w| w.bits()[0] == 0).max().expect("0 < r < 1").clone();
    let one_min = rots.iter().filter(|w| w.bits()[0] == 1).min().expect("0 < r < 1").clone();
    (zero_max, one_min)
}

/// `ρ_{r_1} ∘ … ∘ ρ_{r_n}` applied to a single symbol.
pub fn substitution_words(rv: &RVector, symbol: u8) -> Word {
    let mut w = Word::bit(symbol);
    for r in rv.entries().iter().rev() {
        let (z, o) = extremal_words(*r);
        let mut bits = Vec::new();
        for &b in w.bits() {
            bits.extend_from_slice(if b == 0 { z.bits() } else { o.bits() });
        }
        w = Word::new(bits);
    }
    w
}

pub const THUE_MORSE_MAX_K: u32 = 24;

/// Prefix `t_0 … t_{2^k − 1}` of the Thue-Morse word.
pub fn thue_morse(k: u32) -> Result<Word, WordsError> {
    if k > THUE_MORSE_MAX_K {
        return Err(WordsError::Resource(format!("thue_morse({k}) exceeds k = {THUE_MORSE_MAX_K}")));
    }
    Ok(Word::new((0u64..1 << k).map(|n| (n.count_ones() % 2) as u8).collect()))
}

/// The Farey neighbour `c_0/d_0` of `c/d` with `c_0/d_0 > c/d` and `d_0 < d`.
pub fn farey_parent(r: Frac) -> Result<Frac, WordsError> {
    let (c, d) = (r.p as i128, r.q as i128);
    // c·d_0 ≡ −1 (mod d)
    let inv = BigInt::from(c).extended_gcd(&BigInt::from(d)).x;
    let inv: i128 = (inv.mod_floor(&BigInt::from(d))).try_into().expect("fits");
    let d0 = (d - inv) % d;
    let c0 = (c * d0 + 1) / d;
    if d0 == 0 || c0 >= d0 {
        return Err(WordsError::Domain(format!("{r} has no Farey parent inside (0,1)")));
    }
    Frac::new(c0 as u64, d0 as u64)
}

/// `r_k`, with `r_0` the Farey parent and `r_k` the mediant of `r_{k−1}` and `r`.
pub fn farey_seq(r: Frac, k: u32) -> Result<Frac, WordsError> {
    let mut cur = farey_parent(r)?;
    for _ in 0..k {
        cur = Frac::new(cur.p + r.p, cur.q + r.q)?;
    }
    Ok(cur)
}

/// Check the word identities linking `r` with its Farey sequence, for
/// `i = 0..=k`:
///
/// * `0-max(r_k) = 0-max(r_i) · 0-max(r)^(k−i)`
/// * `1-min(r_k) = 1-min(r)^(k−i) · 1-min(r_i)`
///
/// together with the strict periodic chains
/// `0-max(r)^∞ ≺ 0-max(r_k)^∞ ≺ … ≺ 0-max(r_0)^∞` and likewise for 1-min.
pub fn farey_identities(r: Frac, k: u32) -> Result<bool, WordsError> {
    if k > 8 {
        return Err(WordsError::Resource("k > 8".into()));
    }
    if r.p * 2 >= r.q {
        return Err(WordsError::Domain(format!("{r} is not below 1/2")));
    }
    let (z, o) = extremal_words(r);
    let seq: Vec<(Word, Word)> = (0..=k).map(|j| farey_seq(r, j).map(extremal_words)).collect::<Result<_, _>>()?;
    let (zk, ok) = &seq[k as usize];
    for (i, (zi, oi)) in seq.iter().enumerate() {
        let e = (k as usize) - i;
        if *zk != zi.concat(&z.pow(e)) || *ok != o.pow(e).concat(oi) {
            return Ok(false);
        }
    }
    let chain_holds = |base: &Word, pick: &dyn Fn(&(Word, Word)) -> &Word| {
        let mut lower = base;
        for pair in seq.iter().rev() {
            let w = pick(pair);
            if cmp_periodic(lower, w) != Ordering::Less {
                return false;
            }
            lower = w;
        }
        true
    };
    Ok(chain_holds(&z, &|p| &p.0) && chain_holds(&o, &|p| &p.1))
}

pub const PARTITIONS_MAX_N: usize = 10_000;

/// Number of integer partitions `p(n)`, by the pentagonal-number recurrence.
pub fn partitions(n: usize) -> Result<BigUint, WordsError> {
    if n > PARTITIONS_MAX_N {
        return Err(WordsError::Resource(format!("partitions({n}) exceeds {PARTITIONS_MAX_N}")));
    }
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::one());
    for i in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let sign_pos = j % 2 == 1;
            let mut term = p[i - g1].clone();
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= i {
                term += &p[i - g2];
            }
            if sign_pos {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    Ok(p[n].magnitude().clone())
}

/// `(1/4) · ∏_{n=1}^{terms} (1 − 2^{−2^n})`.
pub fn doubling_constant(terms: u32) -> Result<Rat, WordsError> {
    if terms == 0 || terms > 16 {
        return Err(WordsError::Resource(format!("terms = {terms} outside 1..=16")));
    }
    let mut acc = Rat::new(BigInt::one(), BigInt::from(4));
    for n in 1..=terms {
        let den = BigInt::one() << (1usize << n);
        acc *= Rat::new(&den - 1, den);
    }
    debug_assert!(acc.is_positive());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::rat;

    fn w(s: &str) -> Word {
        Word::from_bits(s)
    }

    fn f(p: u64, q: u64) -> Frac {
        Frac::new(p, q).unwrap()
    }

    #[test]
    fn balance_examples() {
        assert!(is_balanced(&w("0110"), false));
        assert!(!is_balanced(&w("0011"), false));
        assert!(is_balanced(&w("01"), true));
        assert!(!is_balanced(&w("0110"), true));
        assert!(is_balanced(&Word::empty(), true));
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(extremal_words(f(1, 2)), (w("01"), w("10")));
        assert_eq!(extremal_words(f(1, 3)), (w("010"), w("100")));
        assert_eq!(extremal_words(f(3, 10)).0, w("0100100100"));
        assert_eq!(extremal_words(f(3, 10)).1, w("1000100100"));
        assert_eq!(extremal_words(f(4, 13)).0, w("0100100100100"));
    }

    #[test]
    fn substitution_examples() {
        let half = RVector::new(vec![f(1, 2)]).unwrap();
        assert_eq!(substitution_words(&half, 0), w("01"));
        let half2 = RVector::new(vec![f(1, 2), f(1, 2)]).unwrap();
        assert_eq!(substitution_words(&half2, 0), w("0110"));
        let third = RVector::new(vec![f(1, 3)]).unwrap();
        assert_eq!(substitution_words(&third, 0), w("010"));
        assert!(RVector::new(vec![]).is_err());
    }

    #[test]
    fn thue_morse_prefixes() {
        assert_eq!(thue_morse(0).unwrap(), w("0"));
        assert_eq!(thue_morse(2).unwrap(), w("0110"));
        assert_eq!(thue_morse(4).unwrap(), w("0110100110010110"));
        assert!(thue_morse(25).is_err());
    }

    #[test]
    fn farey_examples() {
        assert_eq!(farey_parent(f(3, 10)).unwrap(), f(1, 3));
        assert_eq!(farey_parent(f(1, 3)).unwrap(), f(1, 2));
        assert_eq!(farey_parent(f(4, 13)).unwrap(), f(1, 3));
        assert!(farey_parent(f(1, 2)).is_err());
        assert_eq!(farey_seq(f(3, 10), 1).unwrap(), f(4, 13));
        for k in 0..=6u64 {
            assert_eq!(farey_seq(f(3, 10), k as u32).unwrap(), f(1 + 3 * k, 3 + 10 * k));
        }
        assert_eq!(farey_seq(f(1, 3), 1).unwrap(), f(2, 5));
    }

    /// Brute-force Farey parent: scan all smaller denominators.
    #[test]
    fn farey_parent_matches_scan() {
        for q in 3..=30u64 {
            for p in 1..q {
                let Ok(r) = Frac::new(p, q) else { continue };
                if r.q != q {
                    continue;
                }
                let found =
                    (1..q).flat_map(|d0| (1..d0).map(move |c0| (c0, d0))).find(|&(c0, d0)| c0 * q == p * d0 + 1);
                match found {
                    Some((c0, d0)) => assert_eq!(farey_parent(r).unwrap(), f(c0, d0), "{r}"),
                    None => assert!(farey_parent(r).is_err(), "{r}"),
                }
            }
        }
    }

    #[test]
    fn lemma_identities() {
        assert!(farey_identities(f(3, 10), 2).unwrap());
        assert!(farey_identities(f(1, 3), 3).unwrap());
        assert!(farey_identities(f(2, 5), 2).unwrap());
        assert!(farey_identities(f(1, 2), 1).is_err());
    }

    /// The variant `0-max(r_k) = 0-max(r)^(k−i) 1-min(r_i)` fails at `i = k`.
    #[test]
    fn swapped_identity_fails() {
        let r = f(3, 10);
        let zk = extremal_words(farey_seq(r, 2).unwrap()).0;
        let ok = extremal_words(farey_seq(r, 2).unwrap()).1;
        assert_ne!(zk, ok);
    }

    #[test]
    fn partition_values() {
        assert_eq!(partitions(0).unwrap(), BigUint::from(1u32));
        assert_eq!(partitions(5).unwrap(), BigUint::from(7u32));
        assert_eq!(partitions(10).unwrap(), BigUint::from(42u32));
        assert_eq!(partitions(100).unwrap().to_string(), "190569292");
        assert!(partitions(10_001).is_err());
    }

    #[test]
    fn doubling_values() {
        assert_eq!(doubling_constant(1).unwrap(), rat(3, 16));
        assert_eq!(doubling_constant(2).unwrap(), rat(45, 256));
        let v = crate::exact_geom::approx(&doubling_constant(8).unwrap());
        // 0.17509193…, which rounds to six places as 0.175092
        assert_eq!(format!("{v:.6}"), "0.175092");
    }

    #[test]
    fn periodic_helpers() {
        assert_eq!(w("01").periodic_value(), rat(1, 3));
        assert_eq!(cmp_periodic(&w("01"), &w("0101")), Ordering::Equal);
        assert_eq!(cmp_periodic(&w("010"), &w("01")), Ordering::Less);
        assert_eq!(w("0101").root(), w("01"));
        assert!(!w("0101").is_primitive());
        assert_eq!(w("110").least_rotation(), w("011"));
    }
}
