//! Coding of the baker's map: eventually periodic bi-infinite sequences,
//! the conjugacy `π`, cylinders and periodic orbits.
//!
//! A sequence `… x_{-1} x_0 · x_1 x_2 …` codes the point with
//! `x = 0.x_1 x_2 …` and `y = 0.x_0 x_{-1} …`; the left shift is the
//! forward map.

use crate::exact_geom::{int, Point, Rat, Rect};
use crate::words::Word;
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolicError {
    #[error("itinerary undefined: {0} = 1/2")]
    UndefinedItinerary(&'static str),
    #[error("`{0}` is not a primitive word")]
    NotPrimitive(String),
    #[error("malformed window `{0}`")]
    BadWindow(String),
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("resource guard: {0}")]
    Resource(String),
}

/// One side of a bi-sequence, read outward from the origin.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Tail {
    transient: Word,
    period: Word,
}

impl Tail {
    fn new(transient: Word, period: Word) -> Result<Tail, SymbolicError> {
        if period.is_empty() {
            return Err(SymbolicError::EmptyPeriod);
        }
        let mut t = Tail { transient, period };
        t.canonicalize();
        Ok(t)
    }

    /// Primitive period, and no trailing letter of the transient that the
    /// period could absorb.
    fn canonicalize(&mut self) {
        self.period = self.period.root();
        let mut tb = self.transient.bits().to_vec();
        let mut pb = self.period.bits().to_vec();
        while let (Some(&t), Some(&p)) = (tb.last(), pb.last()) {
            if t != p {
                break;
            }
            tb.pop();
            pb.rotate_right(1);
        }
        self.transient = Word::new(tb);
        self.period = Word::new(pb);
    }

    fn digit(&self, i: usize) -> u8 {
        let t = self.transient.len();
        if i < t {
            self.transient.bits()[i]
        } else {
            self.period.bits()[(i - t) % self.period.len()]
        }
    }

    /// Remove the first letter.
    fn pop(&self) -> (u8, Tail) {
        let first = self.digit(0);
        let next = if self.transient.is_empty() {
            Tail { transient: Word::empty(), period: self.period.rotate(1) }
        } else {
            Tail { transient: self.transient.slice(1, self.transient.len()), period: self.period.clone() }
        };
        (first, next)
    }

    fn push(&self, b: u8) -> Tail {
        let mut t = Tail { transient: Word::bit(b).concat(&self.transient), period: self.period.clone() };
        t.canonicalize();
        t
    }

    /// `Σ_{i≥0} d_i 2^{-i-1}` in closed form.
    fn value(&self) -> Rat {
        let t = self.transient.len();
        let p = self.period.len();
        let two_t = BigInt::one() << t;
        let head = Rat::new(self.transient.value(), two_t.clone());
        let tail = Rat::new(self.period.value(), two_t * ((BigInt::one() << p) - 1));
        head + tail
    }
}

/// Eventually periodic bi-infinite binary sequence in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiSeq {
    left: Tail,
    right: Tail,
}

impl BiSeq {
    /// `x_0 x_{-1} … = left_transient · left_period^∞` and
    /// `x_1 x_2 … = right_transient · right_period^∞`.
    pub fn new(
        left_transient: Word,
        left_period: Word,
        right_transient: Word,
        right_period: Word,
    ) -> Result<BiSeq, SymbolicError> {
        Ok(BiSeq { left: Tail::new(left_transient, left_period)?, right: Tail::new(right_transient, right_period)? })
    }

    /// The purely periodic sequence with `x_1 x_2 … = u^∞`.
    pub fn periodic(u: &Word) -> Result<BiSeq, SymbolicError> {
        BiSeq::new(Word::empty(), u.reversed(), Word::empty(), u.clone())
    }

    pub fn left_transient(&self) -> &Word {
        &self.left.transient
    }

    pub fn left_period(&self) -> &Word {
        &self.left.period
    }

    pub fn right_transient(&self) -> &Word {
        &self.right.transient
    }

    pub fn right_period(&self) -> &Word {
        &self.right.period
    }

    /// `x_i` for any integer `i`.
    pub fn digit(&self, i: i64) -> u8 {
        if i >= 1 {
            self.right.digit((i - 1) as usize)
        } else {
            self.left.digit((-i) as usize)
        }
    }

    /// `σ^n`; positive `n` is the forward map.
    pub fn shift(&self, n: i64) -> BiSeq {
        let mut s = self.clone();
        for _ in 0..n.unsigned_abs() {
            s = if n > 0 {
                let (b, right) = s.right.pop();
                BiSeq { left: s.left.push(b), right }
            } else {
                let (b, left) = s.left.pop();
                BiSeq { left, right: s.right.push(b) }
            };
        }
        s
    }

    /// `π(s)`.
    pub fn pi_point(&self) -> Point {
        Point::new(self.right.value(), self.left.value())
    }

    /// The central window `[x_{-k+1} … x_0 · x_1 … x_m]`.
    pub fn window(&self, k: usize, m: usize) -> Window {
        let left = Word::new((0..k as i64).rev().map(|i| self.digit(-i)).collect());
        let right = Word::new((1..=m as i64).map(|i| self.digit(i)).collect());
        Window { left, right }
    }

    pub fn right_transient_len(&self) -> usize {
        self.right.transient.len()
    }

    pub fn left_transient_len(&self) -> usize {
        self.left.transient.len()
    }
}

impl fmt::Debug for BiSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})^∞{}·{}({})^∞",
            self.left.period.reversed(),
            self.left.transient.reversed(),
            self.right.transient,
            self.right.period
        )
    }
}

/// Cylinder `[u_{-k} … u_0 · u_1 … u_m]`, with `left` in written order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Window {
    pub left: Word,
    pub right: Word,
}

impl Window {
    pub fn new(left: Word, right: Word) -> Window {
        Window { left, right }
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Image under `(x, y) ↦ (1 − y, 1 − x)`.
    pub fn mirror(&self) -> Window {
        Window { left: self.right.complement().reversed(), right: self.left.complement().reversed() }
    }

    /// Image under `(x, y) ↦ (1 − x, 1 − y)`.
    pub fn rotate(&self) -> Window {
        Window { left: self.left.complement(), right: self.right.complement() }
    }

    pub fn matches(&self, s: &BiSeq) -> bool {
        let k = self.left.len() as i64;
        self.left.bits().iter().enumerate().all(|(j, &b)| s.digit(j as i64 - k + 1) == b)
            && self.right.bits().iter().enumerate().all(|(j, &b)| s.digit(j as i64 + 1) == b)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}", self.left, self.right)
    }
}

impl fmt::Debug for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Window {
    type Err = SymbolicError;
    /// `"u·v"` or `"u.v"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Window, SymbolicError> {
        let bad = || SymbolicError::BadWindow(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (l, r) = cleaned.split_once('·').or_else(|| cleaned.split_once('.')).ok_or_else(bad)?;
        Ok(Window { left: l.parse().map_err(|_| bad())?, right: r.parse().map_err(|_| bad())? })
    }
}

/// `π([u · v])` as a closed dyadic rectangle.
pub fn cylinder_box(w: &Window) -> Rect {
    let m = w.right.len();
    let k = w.left.len();
    let x_lo = Rat::new(w.right.value(), BigInt::one() << m);
    let y_lo = Rat::new(w.left.reversed().value(), BigInt::one() << k);
    let x_hi = &x_lo + Rat::new(BigInt::one(), BigInt::one() << m);
    let y_hi = &y_lo + Rat::new(BigInt::one(), BigInt::one() << k);
    Rect::new(x_lo, x_hi, y_lo, y_hi).expect("ordered bounds")
}

/// A periodic orbit, named by its least rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    word: Word,
}

impl Cycle {
    /// Cycle through `u^∞`; `u` must be primitive and is normalized to its
    /// least rotation.
    pub fn new(u: &Word) -> Result<Cycle, SymbolicError> {
        if !u.is_primitive() {
            return Err(SymbolicError::NotPrimitive(u.to_string()));
        }
        Ok(Cycle { word: u.least_rotation() })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn period(&self) -> usize {
        self.word.len()
    }

    /// The fixed points `0^∞` and `1^∞`.
    pub fn is_fixed(&self) -> bool {
        self.word.len() == 1
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^∞", self.word)
    }
}

pub const MAX_CYCLE_PERIOD: usize = 30;

/// Orbit points, `k`-th entry the image of the `0`-th under `B^k`.
pub fn cycle_orbit(c: &Cycle) -> Vec<Point> {
    word_orbit(&c.word)
}

/// Orbit of `u^∞` (any nonempty `u`, not necessarily primitive or least).
pub fn word_orbit(u: &Word) -> Vec<Point> {
    let p = u.len();
    let den: BigInt = (BigInt::one() << p) - 1;
    (0..p)
        .map(|k| {
            let r = u.rotate(k);
            Point::new(Rat::new(r.value(), den.clone()), Rat::new(r.reversed().value(), den.clone()))
        })
        .collect()
}

pub const MAX_LYNDON_LENGTH: usize = 24;

/// All Lyndon words of length `1..=max_p`, ordered by length then lexicographically.
pub fn lyndon_words(max_p: usize) -> Result<Vec<Cycle>, SymbolicError> {
    if max_p > MAX_LYNDON_LENGTH {
        return Err(SymbolicError::Resource(format!("max period {max_p} > {MAX_LYNDON_LENGTH}")));
    }
    let mut out = Vec::new();
    if max_p == 0 {
        return Ok(out);
    }
    // Duval / Fredricksen–Kessler–Maiorana generation.
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(Cycle { word: Word::new(w.clone()) });
        let n = w.len();
        let mut next: Vec<u8> = (0..max_p).map(|i| w[i % n]).collect();
        while next.last() == Some(&1) {
            next.pop();
        }
        match next.last_mut() {
            None => break,
            Some(last) => *last = 1,
        }
        w = next;
    }
    out.sort_by(|a, b| a.period().cmp(&b.period()).then_with(|| a.word.cmp(&b.word)));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// `B` or `B^{-1}` on an exact point.
pub fn baker_step(p: &Point, dir: Direction) -> Result<Point, SymbolicError> {
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let two = int(2);
    match dir {
        Direction::Forward => {
            if p.x == half {
                return Err(SymbolicError::UndefinedItinerary("x"));
            }
            Ok(if p.x < half {
                Point::new(&p.x * &two, &p.y / &two)
            } else {
                Point::new(&p.x * &two - int(1), (&p.y + int(1)) / &two)
            })
        }
        Direction::Backward => {
            if p.y == half {
                return Err(SymbolicError::UndefinedItinerary("y"));
            }
            Ok(if p.y < half {
                Point::new(&p.x / &two, &p.y * &two)
            } else {
                Point::new((&p.x + int(1)) / &two, &p.y * &two - int(1))
            })
        }
    }
}
