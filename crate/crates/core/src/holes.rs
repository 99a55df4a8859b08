//! Named holes as exact unions of convex polygons, the rational sandwich
//! around the Thue-Morse hexagon, and the non-convex complete traps `A_k`.

use crate::exact_geom::{
    int, rat, union_area_boxes, ConvexPoly, GeomError, HalfPlane, Mode, Point, PolyJson, Rat, Rect, Symmetry,
};
use crate::words::{extremal_words, thue_morse, Frac, Word, WordsError};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HoleError {
    #[error("unknown hole spec `{0}`")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

impl From<WordsError> for HoleError {
    fn from(e: WordsError) -> Self {
        match e {
            WordsError::Resource(m) => HoleError::Resource(m),
            other => HoleError::Domain(other.to_string()),
        }
    }
}

/// A hole: the open set is the union of the open parts, its closure the
/// union of the closed parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hole {
    pub name: String,
    parts: Vec<ConvexPoly>,
}

impl Hole {
    pub fn new(name: impl Into<String>, parts: Vec<ConvexPoly>) -> Hole {
        Hole { name: name.into(), parts }
    }

    pub fn convex(name: impl Into<String>, poly: ConvexPoly) -> Hole {
        Hole::new(name, vec![poly])
    }

    pub fn empty() -> Hole {
        Hole::new("empty", Vec::new())
    }

    pub fn parts(&self) -> &[ConvexPoly] {
        &self.parts
    }

    pub fn is_convex(&self) -> bool {
        self.parts.len() == 1
    }

    /// The single part of a convex hole.
    pub fn poly(&self) -> Option<&ConvexPoly> {
        if self.is_convex() {
            self.parts.first()
        } else {
            None
        }
    }

    pub fn contains(&self, p: &Point, mode: Mode) -> bool {
        self.parts.iter().any(|q| q.contains(p, mode))
    }

    /// Sum of part areas; parts of all constructed holes meet only on boundaries.
    pub fn area(&self) -> Rat {
        self.parts.iter().map(|p| p.area()).sum()
    }

    pub fn transform(&self, s: Symmetry) -> Hole {
        let mut parts: Vec<ConvexPoly> = self.parts.iter().map(|p| p.transform(s)).collect();
        parts.sort();
        Hole { name: self.name.clone(), parts }
    }

    /// Same set of parts under `s`.
    pub fn is_invariant(&self, s: Symmetry) -> bool {
        let mut mine = self.parts.clone();
        mine.sort();
        self.transform(s).parts == mine
    }
}

fn poly(pts: &[(i64, i64, i64, i64)]) -> ConvexPoly {
    ConvexPoly::from_vertices(pts.iter().map(|&(a, b, c, d)| Point::from_ratios(a, b, c, d)).collect())
        .expect("constant polygon is convex")
}

pub fn delta() -> ConvexPoly {
    poly(&[(0, 1, 1, 1), (1, 2, 1, 1), (1, 3, 2, 3), (0, 1, 1, 2)])
}

pub fn delta1() -> ConvexPoly {
    poly(&[(0, 1, 1, 2), (5, 24, 2, 3), (1, 2, 1, 1), (0, 1, 1, 1)])
}

pub fn delta2() -> ConvexPoly {
    poly(&[(0, 1, 1, 2), (1, 3, 19, 24), (1, 2, 1, 1), (0, 1, 1, 1)])
}

pub fn hull_dd() -> ConvexPoly {
    let pts: Vec<Point> = delta1().vertices().iter().chain(delta2().vertices()).cloned().collect();
    ConvexPoly::hull(&pts)
}

/// `{|x − y| > 1/2}` as two triangles.
pub fn h_script() -> Hole {
    Hole::new(
        "h-script",
        vec![poly(&[(0, 1, 1, 2), (1, 2, 1, 1), (0, 1, 1, 1)]), poly(&[(1, 2, 0, 1), (1, 1, 0, 1), (1, 1, 1, 2)])],
    )
}

/// Quadrilateral with vertices `(1/2,0), (a,2a), (1/2,1), (b,2b−1)`, where
/// `a = 0.(0-max r)^∞` and `b = 0.(1-min r)^∞`.
pub fn p_r(r: Frac) -> Result<ConvexPoly, HoleError> {
    if 2 * r.p() > r.q() {
        return Err(HoleError::Domain(format!("r = {r} exceeds 1/2")));
    }
    let (z, o) = extremal_words(r);
    let (a, b) = (z.periodic_value(), o.periodic_value());
    let two = int(2);
    let pts = vec![
        Point::new(rat(1, 2), int(0)),
        Point::new(a.clone(), &a * &two),
        Point::new(rat(1, 2), int(1)),
        Point::new(b.clone(), &b * &two - int(1)),
    ];
    Ok(ConvexPoly::from_vertices(pts)?)
}

/// `τ_k = 0.(t_0 … t_{2^k−1})^∞`.
pub fn tau(k: u32) -> Result<Rat, HoleError> {
    Ok(thue_morse(k)?.periodic_value())
}

/// `{2x−1 < y < 2x, 2−4x < y < 3−4x, t < x < 1−t}`.
pub fn hexagon(t: &Rat) -> ConvexPoly {
    let one = int(1);
    let planes = [
        HalfPlane::new(int(2), int(-1), int(0)),    // y ≤ 2x
        HalfPlane::new(int(-2), int(1), int(1)),    // y ≥ 2x − 1
        HalfPlane::new(int(4), int(1), int(-2)),    // y ≥ 2 − 4x
        HalfPlane::new(int(-4), int(-1), int(3)),   // y ≤ 3 − 4x
        HalfPlane::new(int(1), int(0), -t.clone()), // x ≥ t
        HalfPlane::new(int(-1), int(0), &one - t),  // x ≤ 1 − t
    ];
    ConvexPoly::from_halfplanes(&planes)
}

pub const MAX_PK: u32 = 16;

pub fn p_k(k: u32) -> Result<ConvexPoly, HoleError> {
    if k == 0 || k > MAX_PK {
        return Err(HoleError::Resource(format!("pk:{k} outside 1..={MAX_PK}")));
    }
    Ok(hexagon(&tau(k)?))
}

/// Rational bounds `lo < 𝔱 < hi` on the Thue-Morse constant:
/// `lo = 0.(t_k)^∞` and `hi = 0.t_k (t̄_k)^∞`, writing `t_k` for the first
/// `2^k` letters.
pub fn thue_morse_bounds(k: u32) -> Result<(Rat, Rat), HoleError> {
    let t = thue_morse(k)?;
    let lo = t.periodic_value();
    let n = t.len();
    let head = Rat::new(t.value(), BigInt::one() << n);
    let hi = head + t.complement().periodic_value() / Rat::from_integer(BigInt::one() << n);
    Ok((lo, hi))
}

/// `(inner, outer)` with `inner ⊆ P_∞ ⊆ outer`.
pub fn p_infty_bounds(k: u32) -> Result<(Hole, Hole), HoleError> {
    if !(2..=MAX_PK).contains(&k) {
        return Err(HoleError::Resource(format!("k = {k} outside 2..={MAX_PK}")));
    }
    let (lo, hi) = thue_morse_bounds(k)?;
    Ok((
        Hole::convex(format!("pinfty-inner:{k}"), hexagon(&hi)),
        Hole::convex(format!("pinfty-outer:{k}"), hexagon(&lo)),
    ))
}

/// Parse a hole description.
///
/// Accepted: `delta`, `delta1`, `delta2`, `hull-dd`, `p:<p>/<q>`, `pk:<k>`,
/// `h-script`, `trap:<k>`, `empty`, `box:<xlo>,<xhi>,<ylo>,<yhi>` and
/// `poly:<json>`.
pub fn named_hole(spec: &str) -> Result<Hole, HoleError> {
    let usage = || HoleError::Usage(spec.to_string());
    let spec = spec.trim();
    let hole = match spec {
        "delta" => Hole::convex(spec, delta()),
        "delta1" => Hole::convex(spec, delta1()),
        "delta2" => Hole::convex(spec, delta2()),
        "hull-dd" => Hole::convex(spec, hull_dd()),
        "h-script" => h_script(),
        "empty" => Hole::empty(),
        _ => {
            let (kind, arg) = spec.split_once(':').ok_or_else(usage)?;
            match kind {
                "p" => {
                    let (p, q) = arg.split_once('/').ok_or_else(usage)?;
                    let p: u64 = p.trim().parse().map_err(|_| usage())?;
                    let q: u64 = q.trim().parse().map_err(|_| usage())?;
                    let r = Frac::new(p, q).map_err(|e| HoleError::Domain(e.to_string()))?;
                    Hole::convex(spec, p_r(r)?)
                }
                "pk" => Hole::convex(spec, p_k(arg.trim().parse().map_err(|_| usage())?)?),
                "trap" => {
                    let k: u32 = arg.trim().parse().map_err(|_| usage())?;
                    let t = complete_trap(k)?;
                    Hole::new(spec, t.boxes.iter().map(|b| b.to_poly()).collect())
                }
                "box" => {
                    let v: Vec<Rat> = arg
                        .split(',')
                        .map(crate::exact_geom::parse_rat)
                        .collect::<Result<_, _>>()
                        .map_err(|_| usage())?;
                    if v.len() != 4 {
                        return Err(usage());
                    }
                    let r = Rect::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())?;
                    let p = r.to_poly();
                    if p.is_degenerate() {
                        return Err(GeomError::Degenerate.into());
                    }
                    Hole::convex(spec, p)
                }
                "poly" => Hole::convex(spec, PolyJson::parse(arg)?.to_poly()?),
                _ => return Err(usage()),
            }
        }
    };
    if hole.parts.iter().any(|p| p.vertices().iter().any(|v| !v.in_unit_square())) {
        return Err(HoleError::Domain(format!("`{spec}` leaves the unit square")));
    }
    Ok(hole)
}

/// Closed boxes of the complete trap `A_level`; `tile_level` is the cylinder
/// level `n` used in the last refinement step (0 for `A_1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrapBoxes {
    pub boxes: Vec<Rect>,
    pub level: u32,
    pub tile_level: u32,
    /// Number of leading boxes that are horizontal strips.
    pub horizontal: usize,
}

impl TrapBoxes {
    pub fn measure(&self) -> Rat {
        union_area_boxes(&self.boxes)
    }

    /// Membership in the open set: the union of the open boxes.
    pub fn contains_open(&self, p: &Point) -> bool {
        self.boxes.iter().any(|b| b.contains(p, Mode::Open))
    }
}

pub const MAX_TRAP_LEVEL: u32 = 3;

/// `A_1 = (1/2,1) × (0,1/2)` and `A_{j+1} = B^n(D_1) ∪ B^{−n}(D_2)`, where
/// the level-`n` cylinder squares tiling `A_j` are sorted by written label
/// and split into halves `D_1`, `D_2`.
pub fn complete_trap(k: u32) -> Result<TrapBoxes, HoleError> {
    if k == 0 {
        return Err(HoleError::Domain("trap level starts at 1".into()));
    }
    if k > MAX_TRAP_LEVEL {
        // A_4 would need ~9·10^8 level-16 squares.
        return Err(HoleError::Resource(format!("trap level {k} > {MAX_TRAP_LEVEL}")));
    }
    let mut cur = TrapBoxes {
        boxes: vec![Rect::new(rat(1, 2), int(1), int(0), rat(1, 2)).expect("ordered")],
        level: 1,
        tile_level: 0,
        horizontal: 0,
    };
    while cur.level < k {
        cur = refine(&cur);
    }
    Ok(cur)
}

/// Least `n` with every coordinate a multiple of `2^{-n}`.
fn dyadic_level(boxes: &[Rect]) -> u32 {
    let mut n = 0;
    for b in boxes {
        for v in [&b.x_lo, &b.x_hi, &b.y_lo, &b.y_hi] {
            let d = v.denom();
            assert!(d.magnitude().count_ones() == 1, "non-dyadic coordinate {v}");
            n = n.max(d.bits() as u32 - 1);
        }
    }
    n
}

fn grid_cells(boxes: &[Rect], n: u32) -> Vec<(u64, u64)> {
    let scale = Rat::from_integer(BigInt::one() << n);
    let idx = |v: &Rat| -> u64 { (v * &scale).to_integer().try_into().expect("grid index") };
    let mut cells = HashSet::new();
    for b in boxes {
        for i in idx(&b.x_lo)..idx(&b.x_hi) {
            for j in idx(&b.y_lo)..idx(&b.y_hi) {
                cells.insert((i, j));
            }
        }
    }
    cells.into_iter().collect()
}

fn bits_of(v: u64, n: u32) -> Word {
    Word::new((0..n).rev().map(|i| ((v >> i) & 1) as u8).collect())
}

fn refine(a: &TrapBoxes) -> TrapBoxes {
    let mut n = dyadic_level(&a.boxes).max(1);
    let mut cells = grid_cells(&a.boxes, n);
    if cells.len() % 2 == 1 {
        n += 1;
        cells = grid_cells(&a.boxes, n);
    }
    // Cell (i, j) is the cylinder [b_n … b_1 · a_1 … a_n] with a = bits(i)
    // and written left word b_n … b_1 = reverse(bits(j)).
    let mut labelled: Vec<(Word, Word)> =
        cells.iter().map(|&(i, j)| (bits_of(j, n).reversed(), bits_of(i, n))).collect();
    labelled.sort();
    let half = labelled.len() / 2;
    let strip = Rat::new(BigInt::one(), BigInt::one() << (2 * n));
    let mut boxes = Vec::with_capacity(labelled.len());
    for (idx, (left, right)) in labelled.iter().enumerate() {
        if idx < half {
            // B^n: the 2n known digits read as y = 0.a_n … a_1 b_1 … b_n
            let y = Rat::new(right.reversed().concat(&left.reversed()).value(), BigInt::one() << (2 * n));
            boxes.push(Rect::new(Rat::zero(), int(1), y.clone(), &y + &strip).expect("ordered"));
        } else {
            // B^{-n}: x = 0.b_n … b_1 a_1 … a_n
            let x = Rat::new(left.concat(right).value(), BigInt::one() << (2 * n));
            boxes.push(Rect::new(x.clone(), &x + &strip, Rat::zero(), int(1)).expect("ordered"));
        }
    }
    TrapBoxes { boxes, level: a.level + 1, tile_level: n, horizontal: half }
}
