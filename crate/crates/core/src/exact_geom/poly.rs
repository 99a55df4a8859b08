use super::{cross, int, GeomError, Mode, Point, Rat};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Closed half-plane `a·x + b·y + c ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HalfPlane {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        HalfPlane { a, b, c }
    }

    /// Half-plane to the left of the directed line `p → q`.
    pub fn left_of(p: &Point, q: &Point) -> Self {
        let a = &p.y - &q.y;
        let b = &q.x - &p.x;
        let c = -(&a * &p.x + &b * &p.y);
        HalfPlane { a, b, c }
    }

    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn eval_xy(&self, x: &Rat, y: &Rat) -> Rat {
        &self.a * x + &self.b * y + &self.c
    }
}

/// The four affine symmetries of the square used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Identity,
    /// `(x, y) ↦ (1 − y, 1 − x)`
    Mirror,
    /// `(x, y) ↦ (1 − x, 1 − y)`
    Rotation,
    /// `(x, y) ↦ (y, x)`
    Diagonal,
}

impl Symmetry {
    pub fn apply(self, p: &Point) -> Point {
        let one = Rat::one();
        match self {
            Symmetry::Identity => p.clone(),
            Symmetry::Mirror => Point::new(&one - &p.y, &one - &p.x),
            Symmetry::Rotation => Point::new(&one - &p.x, &one - &p.y),
            Symmetry::Diagonal => Point::new(p.y.clone(), p.x.clone()),
        }
    }
}

/// Exact convex polygon, stored counter-clockwise from its
/// lexicographically least vertex with no repeated or collinear vertices.
///
/// Fewer than three vertices is a degenerate polygon (a point or segment);
/// these only arise as intermediates of the trap search.
#[derive(Clone)]
pub struct ConvexPoly {
    vertices: Vec<Point>,
    planes: Vec<HalfPlane>,
}

impl ConvexPoly {
    /// Convex hull of an arbitrary point set (possibly degenerate).
    pub fn hull<'a, I>(points: I) -> ConvexPoly
    where
        I: IntoIterator<Item = &'a Point>,
    {
        let mut pts: Vec<Point> = points.into_iter().cloned().collect();
        pts.sort();
        pts.dedup();
        Self::from_hull_vertices(monotone_chain(pts))
    }

    /// Polygon from a convex vertex list in any rotation or orientation.
    pub fn from_vertices(vertices: Vec<Point>) -> Result<ConvexPoly, GeomError> {
        let poly = ConvexPoly::hull(&vertices);
        if poly.is_degenerate() {
            return Err(GeomError::Degenerate);
        }
        // every listed vertex must sit on the hull boundary
        for v in &vertices {
            if poly.planes.iter().all(|h| h.eval(v).is_positive()) {
                return Err(GeomError::NotConvex);
            }
        }
        Ok(poly)
    }

    /// Intersection of the unit square with closed half-planes.
    pub fn from_halfplanes(planes: &[HalfPlane]) -> ConvexPoly {
        let mut poly = ConvexPoly::unit_square();
        for h in planes {
            poly = poly.clip(h);
        }
        poly
    }

    pub fn unit_square() -> ConvexPoly {
        let (z, o) = (int(0), int(1));
        Self::from_hull_vertices(vec![
            Point::new(z.clone(), z.clone()),
            Point::new(o.clone(), z.clone()),
            Point::new(o.clone(), o.clone()),
            Point::new(z, o),
        ])
    }

    fn from_hull_vertices(vertices: Vec<Point>) -> ConvexPoly {
        let planes = if vertices.len() >= 3 {
            (0..vertices.len()).map(|i| HalfPlane::left_of(&vertices[i], &vertices[(i + 1) % vertices.len()])).collect()
        } else {
            Vec::new()
        };
        ConvexPoly { vertices, planes }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Edge half-planes (empty for degenerate polygons).
    pub fn planes(&self) -> &[HalfPlane] {
        &self.planes
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed edges in counter-clockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..if n >= 3 { n } else { 0 }).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Exact area; zero for degenerate polygons.
    pub fn area(&self) -> Rat {
        if self.is_degenerate() {
            return Rat::zero();
        }
        let o = &self.vertices[0];
        let mut twice = Rat::zero();
        for w in self.vertices[1..].windows(2) {
            twice += cross(o, &w[0], &w[1]);
        }
        twice / int(2)
    }

    pub fn contains(&self, p: &Point, mode: Mode) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => mode == Mode::Closed && self.vertices[0] == *p,
            2 => mode == Mode::Closed && on_segment(&self.vertices[0], &self.vertices[1], p),
            _ => match mode {
                Mode::Open => self.planes.iter().all(|h| h.eval(p).is_positive()),
                Mode::Closed => self.planes.iter().all(|h| !h.eval(p).is_negative()),
            },
        }
    }

    /// Closed containment of `other` in `self`.
    pub fn contains_poly(&self, other: &ConvexPoly) -> bool {
        other.vertices.iter().all(|v| self.contains(v, Mode::Closed))
    }

    pub fn transform(&self, s: Symmetry) -> ConvexPoly {
        let mapped: Vec<Point> = self.vertices.iter().map(|v| s.apply(v)).collect();
        ConvexPoly::hull(&mapped)
    }

    /// True when the polygon maps onto itself under `s`.
    pub fn is_invariant(&self, s: Symmetry) -> bool {
        self.transform(s) == *self
    }

    /// Part of the polygon inside the closed half-plane.
    pub fn clip(&self, h: &HalfPlane) -> ConvexPoly {
        let n = self.vertices.len();
        if n == 0 {
            return self.clone();
        }
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..n {
            let p = &self.vertices[i];
            let q = &self.vertices[(i + 1) % n];
            let fp = h.eval(p);
            let fq = h.eval(q);
            if !fp.is_negative() {
                out.push(p.clone());
            }
            if (fp.is_negative() && fq.is_positive()) || (fp.is_positive() && fq.is_negative()) {
                let t = &fp / (&fp - &fq);
                out.push(Point::new(&p.x + &t * (&q.x - &p.x), &p.y + &t * (&q.y - &p.y)));
            }
        }
        ConvexPoly::hull(&out)
    }

    /// Componentwise bounds `(x_min, x_max, y_min, y_max)`.
    pub fn bounds(&self) -> Option<(Rat, Rat, Rat, Rat)> {
        let first = self.vertices.first()?;
        let mut b = (first.x.clone(), first.x.clone(), first.y.clone(), first.y.clone());
        for v in &self.vertices[1..] {
            if v.x < b.0 {
                b.0 = v.x.clone();
            }
            if v.x > b.1 {
                b.1 = v.x.clone();
            }
            if v.y < b.2 {
                b.2 = v.y.clone();
            }
            if v.y > b.3 {
                b.3 = v.y.clone();
            }
        }
        Some(b)
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let (xl, xh) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (yl, yh) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    &p.x >= xl && &p.x <= xh && &p.y >= yl && &p.y <= yh
}

/// Andrew's monotone chain over sorted, deduplicated points. Collinear
/// points are dropped; the result starts at the least point and runs
/// counter-clockwise.
fn monotone_chain(pts: Vec<Point>) -> Vec<Point> {
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

impl PartialEq for ConvexPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for ConvexPoly {}

impl Hash for ConvexPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertices.hash(state)
    }
}

impl PartialOrd for ConvexPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConvexPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices.cmp(&other.vertices)
    }
}

impl fmt::Debug for ConvexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vertices.iter()).finish()
    }
}
