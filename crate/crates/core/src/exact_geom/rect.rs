use super::{GeomError, Mode, Point, Rat};
use crate::exact_geom::ConvexPoly;
use num_traits::{Signed, Zero};
use std::fmt;

/// Closed axis-aligned rectangle `[x_lo, x_hi] × [y_lo, y_hi]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub x_lo: Rat,
    pub x_hi: Rat,
    pub y_lo: Rat,
    pub y_hi: Rat,
}

impl Rect {
    pub fn new(x_lo: Rat, x_hi: Rat, y_lo: Rat, y_hi: Rat) -> Result<Rect, GeomError> {
        if x_lo > x_hi || y_lo > y_hi {
            return Err(GeomError::InvalidBox);
        }
        Ok(Rect { x_lo, x_hi, y_lo, y_hi })
    }

    pub fn unit() -> Rect {
        Rect { x_lo: super::int(0), x_hi: super::int(1), y_lo: super::int(0), y_hi: super::int(1) }
    }

    pub fn width(&self) -> Rat {
        &self.x_hi - &self.x_lo
    }

    pub fn height(&self) -> Rat {
        &self.y_hi - &self.y_lo
    }

    pub fn area(&self) -> Rat {
        self.width() * self.height()
    }

    /// Corners in counter-clockwise order from `(x_lo, y_lo)`.
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x_lo.clone(), self.y_lo.clone()),
            Point::new(self.x_hi.clone(), self.y_lo.clone()),
            Point::new(self.x_hi.clone(), self.y_hi.clone()),
            Point::new(self.x_lo.clone(), self.y_hi.clone()),
        ]
    }

    pub fn contains(&self, p: &Point, mode: Mode) -> bool {
        match mode {
            Mode::Closed => p.x >= self.x_lo && p.x <= self.x_hi && p.y >= self.y_lo && p.y <= self.y_hi,
            Mode::Open => p.x > self.x_lo && p.x < self.x_hi && p.y > self.y_lo && p.y < self.y_hi,
        }
    }

    /// The rectangle as a polygon.
    pub fn to_poly(&self) -> ConvexPoly {
        ConvexPoly::hull(&self.corners())
    }

    /// True when the closed rectangles share at least one point.
    pub fn meets(&self, other: &Rect) -> bool {
        self.x_lo <= other.x_hi && other.x_lo <= self.x_hi && self.y_lo <= other.y_hi && other.y_lo <= self.y_hi
    }
}

impl fmt::Debug for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]×[{}, {}]", self.x_lo, self.x_hi, self.y_lo, self.y_hi)
    }
}

/// Position of a closed box relative to an open polygon and its closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoxClass {
    InsideOpen,
    InsideClosed,
    DisjointFromOpen,
    DisjointFromClosed,
    Straddles,
}

impl BoxClass {
    /// Box lies in the closed polygon.
    pub fn inside_closed(self) -> bool {
        matches!(self, BoxClass::InsideOpen | BoxClass::InsideClosed)
    }

    /// Box misses the open polygon.
    pub fn disjoint_from_open(self) -> bool {
        matches!(self, BoxClass::DisjointFromOpen | BoxClass::DisjointFromClosed)
    }
}

/// Classify a closed box against a non-degenerate convex polygon.
///
/// Containment is tested on corners. Disjointness uses separating axes
/// from the polygon's edge normals and the two coordinate axes, which is
/// complete for a pair of convex polygons.
pub fn classify_box(b: &Rect, poly: &ConvexPoly) -> Result<BoxClass, GeomError> {
    if poly.is_degenerate() {
        return Err(GeomError::Degenerate);
    }
    let corners = b.corners();
    let mut all_pos = true;
    let mut all_nonneg = true;
    for h in poly.planes() {
        for c in &corners {
            let f = h.eval(c);
            if f.is_negative() {
                all_nonneg = false;
                all_pos = false;
            } else if f.is_zero() {
                all_pos = false;
            }
        }
    }
    if all_pos {
        return Ok(BoxClass::InsideOpen);
    }
    if all_nonneg {
        return Ok(BoxClass::InsideClosed);
    }

    // `weak` separation: box and open polygon disjoint; `strict`: closed too.
    let mut weak = false;
    let (px_lo, px_hi, py_lo, py_hi) = poly.bounds().expect("non-degenerate polygon");
    for (lo, hi, plo, phi) in [(&b.x_lo, &b.x_hi, &px_lo, &px_hi), (&b.y_lo, &b.y_hi, &py_lo, &py_hi)] {
        if hi < plo || phi < lo {
            return Ok(BoxClass::DisjointFromClosed);
        }
        if hi == plo || phi == lo {
            weak = true;
        }
    }
    for h in poly.planes() {
        let vals: Vec<Rat> = corners.iter().map(|c| h.eval(c)).collect();
        let bmax = vals.iter().max().expect("four corners");
        let bmin = vals.iter().min().expect("four corners");
        if bmax.is_negative() {
            return Ok(BoxClass::DisjointFromClosed);
        }
        if bmax.is_zero() {
            weak = true;
        }
        let pmax = poly.vertices().iter().map(|v| h.eval(v)).max().expect("vertices");
        if *bmin > pmax {
            return Ok(BoxClass::DisjointFromClosed);
        }
        if *bmin == pmax {
            weak = true;
        }
    }
    Ok(if weak { BoxClass::DisjointFromOpen } else { BoxClass::Straddles })
}

/// Exact measure of a union of closed boxes, by an x-sweep over a segment
/// tree on the compressed y-coordinates.
pub fn union_area_boxes(boxes: &[Rect]) -> Rat {
    let mut ys: Vec<Rat> = boxes.iter().flat_map(|b| [b.y_lo.clone(), b.y_hi.clone()]).collect();
    ys.sort();
    ys.dedup();
    if ys.len() < 2 {
        return Rat::zero();
    }
    let idx = |v: &Rat| ys.binary_search(v).expect("compressed coordinate");
    let mut events: Vec<(Rat, i32, usize, usize)> = Vec::with_capacity(2 * boxes.len());
    for b in boxes {
        if b.x_lo == b.x_hi || b.y_lo == b.y_hi {
            continue;
        }
        let (lo, hi) = (idx(&b.y_lo), idx(&b.y_hi));
        events.push((b.x_lo.clone(), 1, lo, hi));
        events.push((b.x_hi.clone(), -1, lo, hi));
    }
    events.sort_by(|a, b| a.0.cmp(&b.0));
    let mut tree = CoverTree::new(&ys);
    let mut area = Rat::zero();
    let mut last_x: Option<Rat> = None;
    for (x, delta, lo, hi) in events {
        if let Some(lx) = &last_x {
            if x != *lx {
                area += tree.covered() * (&x - lx);
            }
        }
        tree.update(1, 0, ys.len() - 1, lo, hi, delta);
        last_x = Some(x);
    }
    area
}

/// Segment tree over elementary y-intervals `[ys[i], ys[i+1]]` tracking the
/// covered length.
struct CoverTree<'a> {
    ys: &'a [Rat],
    count: Vec<i32>,
    len: Vec<Rat>,
}

impl<'a> CoverTree<'a> {
    fn new(ys: &'a [Rat]) -> Self {
        let n = 4 * ys.len();
        CoverTree { ys, count: vec![0; n], len: vec![Rat::zero(); n] }
    }

    fn covered(&self) -> Rat {
        self.len[1].clone()
    }

    /// Node `node` spans coordinates `ys[l]..ys[r]`.
    fn update(&mut self, node: usize, l: usize, r: usize, lo: usize, hi: usize, delta: i32) {
        if hi <= l || r <= lo {
            return;
        }
        if lo <= l && r <= hi {
            self.count[node] += delta;
        } else {
            let m = (l + r) / 2;
            self.update(2 * node, l, m, lo, hi, delta);
            self.update(2 * node + 1, m, r, lo, hi, delta);
        }
        self.len[node] = if self.count[node] > 0 {
            &self.ys[r] - &self.ys[l]
        } else if r - l == 1 {
            Rat::zero()
        } else {
            &self.len[2 * node] + &self.len[2 * node + 1]
        };
    }
}
