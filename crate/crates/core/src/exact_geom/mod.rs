//! Exact rational planar geometry.
//!
//! Every coordinate is a [`Rat`] (an arbitrary-precision rational kept in
//! lowest terms). There is no floating point in this module; the only place
//! an `f64` appears is [`approx`], which is used for human-readable output.

mod poly;
mod rect;
mod serial;

pub use poly::{ConvexPoly, HalfPlane, Symmetry};
pub use rect::{classify_box, union_area_boxes, BoxClass, Rect};
pub use serial::{parse_rat, rat_string, PolyJson};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("polygon is degenerate (fewer than three non-collinear vertices)")]
    Degenerate,
    #[error("vertex list is not convex")]
    NotConvex,
    #[error("invalid box: lower bound exceeds upper bound")]
    InvalidBox,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("malformed polygon json: {0}")]
    BadJson(String),
}

/// Open or closed reading of a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Open,
    Closed,
}

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `2^-k` exactly.
pub fn pow2_inv(k: usize) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << k)
}

/// Nearest `f64`, for display only.
pub fn approx(r: &Rat) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerators/denominators: shift both down to a common scale first.
    let n = r.numer();
    let d = r.denom();
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift = (nb.max(db) - 1000).max(0) as usize;
    let ns = (n.abs() >> shift).to_f64().unwrap_or(0.0);
    let ds = (d >> shift).to_f64().unwrap_or(1.0);
    let v = if ds == 0.0 { 0.0 } else { ns / ds };
    if n.is_negative() {
        -v
    } else {
        v
    }
}

/// Exact planar point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn from_ratios(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point::new(rat(xn, xd), rat(yn, yd))
    }

    pub fn origin() -> Self {
        Point::new(Rat::zero(), Rat::zero())
    }

    /// Sup-norm distance.
    pub fn sup_dist(&self, other: &Point) -> Rat {
        let dx = (&self.x - &other.x).abs();
        let dy = (&self.y - &other.y).abs();
        if dx > dy {
            dx
        } else {
            dy
        }
    }

    pub fn in_unit_square(&self) -> bool {
        let zero = Rat::zero();
        let one = Rat::one();
        self.x >= zero && self.x <= one && self.y >= zero && self.y <= one
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Twice the signed area of triangle `(o, a, b)`; positive for a left turn.
pub(crate) fn cross(o: &Point, a: &Point, b: &Point) -> Rat {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}
