//! Lower bounds on the area of convex dimension traps.
//!
//! Every dimension trap meets each Cantor set `{a b^n, a b^{n+1}}^*`, hence
//! comes within `ε` of the orbit `C(a, b)` of `…bbb·abbb…`. The search keeps
//! the minimal convex polygons that contain the anchors and one point of each
//! constraint set processed so far; any trap contains one of them up to `ε`.

use crate::exact_geom::{parse_rat, rat, ConvexPoly, Mode, Point, Rat, Rect, Symmetry};
use crate::symbolic::{word_orbit, BiSeq};
use crate::words::Word;
use num_traits::Signed;
use rayon::prelude::*;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
}

/// Points of `C(a, b)` farther than `ε` from the limit cycle `b^∞`, together
/// with the limit cycle's points standing in for the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSet {
    pub a: Word,
    pub b: Word,
    /// Sorted, limit points included.
    pub points: Vec<Point>,
    pub limit_points: Vec<Point>,
    pub epsilon: Rat,
}

/// The orbit of `…bbb·abbb…` with the `ε`-collapse onto `b^∞`, optionally
/// restricted to a closed region.
pub fn cantor_orbit(a: &Word, b: &Word, eps: &Rat, region: Option<&Rect>) -> Result<ConstraintSet, SearchError> {
    if a.is_empty() || b.is_empty() {
        return Err(SearchError::Domain("constraint words must be nonempty".into()));
    }
    if a.concat(b) == b.concat(a) {
        return Err(SearchError::Domain(format!("0.({a})^∞ = 0.({b})^∞")));
    }
    if !eps.is_positive() {
        return Err(SearchError::Domain("epsilon must be positive".into()));
    }
    let mut limit_points = word_orbit(b);
    limit_points.sort();
    limit_points.dedup();
    // Outside shifts `[-j, |a| + j]` the orbit is within `2^{-j} <= ε` of the cycle.
    let j = (0..).find(|&j| crate::exact_geom::pow2_inv(j) <= *eps).expect("ε > 0") as i64;
    let s = BiSeq::new(Word::empty(), b.reversed(), a.clone(), b.clone()).expect("nonempty period");
    let mut cur = s.shift(-j);
    let mut points = limit_points.clone();
    for _ in -j..=a.len() as i64 + j {
        let p = cur.pi_point();
        if limit_points.iter().all(|c| c.sup_dist(&p) > *eps) {
            points.push(p);
        }
        cur = cur.shift(1);
    }
    if let Some(r) = region {
        points.retain(|p| r.contains(p, Mode::Closed));
    }
    points.sort();
    points.dedup();
    Ok(ConstraintSet { a: a.clone(), b: b.clone(), points, limit_points, epsilon: eps.clone() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSymmetry {
    None,
    /// `(x, y) ↦ (1 − y, 1 − x)`.
    Mirror,
    /// `(x, y) ↦ (1 − x, 1 − y)`.
    Rotational,
}

impl SearchSymmetry {
    pub fn map(self) -> Option<Symmetry> {
        match self {
            SearchSymmetry::None => None,
            SearchSymmetry::Mirror => Some(Symmetry::Mirror),
            SearchSymmetry::Rotational => Some(Symmetry::Rotation),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SearchSymmetry::None => "none",
            SearchSymmetry::Mirror => "mirror",
            SearchSymmetry::Rotational => "rotational",
        }
    }

    fn orbit(self, p: &Point) -> Vec<Point> {
        match self.map() {
            None => vec![p.clone()],
            Some(s) => vec![p.clone(), s.apply(p)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub anchors: Vec<Point>,
    pub symmetry: SearchSymmetry,
    pub area_threshold: Rat,
    pub epsilon: Rat,
    pub max_word_len: usize,
    /// Explicit `(a, b)` list in processing order; empty means every pair
    /// with `|a|, |b| <= max_word_len`.
    pub constraints: Vec<(Word, Word)>,
    /// Regression value checked by the CLI.
    pub expect_min_area: Option<Rat>,
}

impl SearchConfig {
    /// `(1/2, 0), (1/2, 1)` with rotational symmetry and threshold `0.13`.
    pub fn rotational(max_word_len: usize) -> SearchConfig {
        SearchConfig {
            anchors: vec![Point::from_ratios(1, 2, 0, 1), Point::from_ratios(1, 2, 1, 1)],
            symmetry: SearchSymmetry::Rotational,
            area_threshold: rat(13, 100),
            epsilon: rat(1, 10_000_000_000),
            max_word_len,
            constraints: Vec::new(),
            expect_min_area: None,
        }
    }

    /// `(0, 1/2), (1/2, 1)` with mirror symmetry and threshold `0.1381`.
    pub fn mirror(max_word_len: usize) -> SearchConfig {
        SearchConfig {
            anchors: vec![Point::from_ratios(0, 1, 1, 2), Point::from_ratios(1, 2, 1, 1)],
            symmetry: SearchSymmetry::Mirror,
            area_threshold: rat(1381, 10_000),
            ..SearchConfig::rotational(max_word_len)
        }
    }

    pub fn constraint_pairs(&self) -> Vec<(Word, Word)> {
        if self.constraints.is_empty() {
            all_pairs(self.max_word_len)
        } else {
            self.constraints.clone()
        }
    }

    /// Parse `key = value` lines; `#` starts a comment.
    ///
    /// Keys: `anchors` (`x,y; x,y; …`), `symmetry` (`none|mirror|rotational`),
    /// `threshold`, `epsilon`, `word_length`, `constraint` (`a,b`, repeatable)
    /// and `expect_min_area`.
    pub fn parse(text: &str) -> Result<SearchConfig, SearchError> {
        let mut cfg = SearchConfig::rotational(1);
        let mut seen_anchors = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| SearchError::Config { line: i + 1, msg };
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value".into()))?;
            let value = value.trim();
            let num = |s: &str| parse_rat(s).map_err(|e| err(e.to_string()));
            match key.trim() {
                "anchors" => {
                    cfg.anchors = value
                        .split(';')
                        .map(|pt| {
                            let (x, y) = pt.split_once(',').ok_or_else(|| err(format!("bad point `{pt}`")))?;
                            Ok(Point::new(num(x)?, num(y)?))
                        })
                        .collect::<Result<_, SearchError>>()?;
                    seen_anchors = true;
                }
                "symmetry" => {
                    cfg.symmetry = match value {
                        "none" => SearchSymmetry::None,
                        "mirror" => SearchSymmetry::Mirror,
                        "rotational" => SearchSymmetry::Rotational,
                        other => return Err(err(format!("unknown symmetry `{other}`"))),
                    }
                }
                "threshold" => cfg.area_threshold = num(value)?,
                "epsilon" => cfg.epsilon = num(value)?,
                "word_length" => cfg.max_word_len = value.parse().map_err(|_| err(format!("bad length `{value}`")))?,
                "constraint" => {
                    let (a, b) = value.split_once(',').ok_or_else(|| err(format!("bad constraint `{value}`")))?;
                    let word = |s: &str| s.trim().parse::<Word>().map_err(|_| err(format!("bad word `{s}`")));
                    cfg.constraints.push((word(a)?, word(b)?));
                }
                "expect_min_area" => cfg.expect_min_area = Some(num(value)?),
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        let fail = |msg: &str| SearchError::Config { line: 0, msg: msg.into() };
        if !seen_anchors || cfg.anchors.is_empty() {
            return Err(fail("anchors are required"));
        }
        if !cfg.anchors.iter().all(Point::in_unit_square) {
            return Err(fail("anchors must lie in the unit square"));
        }
        if !(cfg.area_threshold.is_positive() && cfg.area_threshold <= rat(1, 1)) {
            return Err(fail("threshold must lie in (0, 1]"));
        }
        if !cfg.epsilon.is_positive() {
            return Err(fail("epsilon must be positive"));
        }
        if cfg.max_word_len == 0 && cfg.constraints.is_empty() {
            return Err(fail("word_length must be positive"));
        }
        Ok(cfg)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let pts: Vec<String> = self.anchors.iter().map(|p| format!("{},{}", p.x, p.y)).collect();
        writeln!(s, "anchors = {}", pts.join("; ")).unwrap();
        writeln!(s, "symmetry = {}", self.symmetry.name()).unwrap();
        writeln!(s, "threshold = {}", self.area_threshold).unwrap();
        writeln!(s, "epsilon = {}", self.epsilon).unwrap();
        writeln!(s, "word_length = {}", self.max_word_len).unwrap();
        for (a, b) in &self.constraints {
            writeln!(s, "constraint = {a},{b}").unwrap();
        }
        if let Some(m) = &self.expect_min_area {
            writeln!(s, "expect_min_area = {m}").unwrap();
        }
        s
    }
}

/// All binary words of length `1..=max_len`, by length then lexicographically.
fn words_up_to(max_len: usize) -> Vec<Word> {
    (1..=max_len)
        .flat_map(|n| (0u32..1 << n).map(move |c| Word::new((0..n).rev().map(|i| ((c >> i) & 1) as u8).collect())))
        .collect()
}

/// Pairs `(a, b)` with `|a|, |b| <= max_len` and `a^∞ ≠ b^∞`, ordered by
/// `max(|a|, |b|)`, then `|a| + |b|`, then lexicographically.
pub fn all_pairs(max_len: usize) -> Vec<(Word, Word)> {
    let words = words_up_to(max_len);
    let mut out: Vec<(Word, Word)> = words
        .iter()
        .flat_map(|a| words.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| a.concat(b) != b.concat(a))
        .collect();
    out.sort_by(|(a1, b1), (a2, b2)| {
        (a1.len().max(b1.len()), a1.len() + b1.len(), a1, b1).cmp(&(
            a2.len().max(b2.len()),
            a2.len() + b2.len(),
            a2,
            b2,
        ))
    });
    out
}

/// An antichain of convex polygons under inclusion, sorted by area then
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub polygons: Vec<ConvexPoly>,
}

impl Family {
    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }

    pub fn areas(&self) -> Vec<Rat> {
        self.polygons.iter().map(ConvexPoly::area).collect()
    }

    pub fn min_area(&self) -> Option<Rat> {
        self.areas().into_iter().min()
    }

    pub fn max_area(&self) -> Option<Rat> {
        self.areas().into_iter().max()
    }

    /// Keep the inclusion-minimal polygons.
    pub fn reduce(polys: Vec<ConvexPoly>) -> Family {
        let mut keyed: Vec<(Rat, ConvexPoly)> = polys.into_iter().map(|p| (p.area(), p)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.vertices().cmp(b.1.vertices())));
        keyed.dedup_by(|a, b| a.1 == b.1);
        // distinct convex sets ordered by area: a subset comes strictly earlier
        let keep: Vec<bool> = (0..keyed.len())
            .into_par_iter()
            .map(|i| !keyed[..i].iter().any(|(_, q)| keyed[i].1.contains_poly(q)))
            .collect();
        Family { polygons: keyed.into_iter().zip(keep).filter(|(_, k)| *k).map(|((_, p), _)| p).collect() }
    }
}

/// Per-constraint bookkeeping from a search run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageLog {
    pub a: Word,
    pub b: Word,
    /// Polygons that missed the constraint and were branched.
    pub branched: usize,
    pub family_size: usize,
}

/// Branch-and-prune over the constraint sets in order.
pub fn search(cfg: &SearchConfig, constraints: &[ConstraintSet]) -> Family {
    search_logged(cfg, constraints).0
}

pub fn search_logged(cfg: &SearchConfig, constraints: &[ConstraintSet]) -> (Family, Vec<StageLog>) {
    let start_pts: Vec<Point> = cfg.anchors.iter().flat_map(|p| cfg.symmetry.orbit(p)).collect();
    let start = ConvexPoly::hull(&start_pts);
    let mut family =
        if start.area() < cfg.area_threshold { Family { polygons: vec![start] } } else { Family { polygons: vec![] } };
    let mut log = Vec::new();
    for c in constraints {
        let branched = family.polygons.iter().filter(|p| !c.points.iter().any(|q| p.contains(q, Mode::Closed))).count();
        let next: Vec<ConvexPoly> = family
            .polygons
            .par_iter()
            .flat_map_iter(|poly| -> Vec<ConvexPoly> {
                if c.points.iter().any(|q| poly.contains(q, Mode::Closed)) {
                    return vec![poly.clone()];
                }
                c.points
                    .iter()
                    .filter_map(|p| {
                        let pts: Vec<Point> = poly.vertices().iter().cloned().chain(cfg.symmetry.orbit(p)).collect();
                        let q = ConvexPoly::hull(&pts);
                        (q.area() < cfg.area_threshold).then_some(q)
                    })
                    .collect()
            })
            .collect();
        family = Family::reduce(next);
        log.push(StageLog { a: c.a.clone(), b: c.b.clone(), branched, family_size: family.len() });
    }
    (family, log)
}

/// `min area − 4ε`.
pub fn lower_bound(f: &Family, eps: &Rat) -> Result<Rat, SearchError> {
    let m = f.min_area().ok_or_else(|| SearchError::Domain("empty family".into()))?;
    Ok(m - eps * rat(4, 1))
}

#[derive(Debug, Clone)]
pub struct CampaignResult {
    pub family: Family,
    pub log: Vec<StageLog>,
    /// `min(threshold, min area) − 4ε`: every trap meeting the restrictions
    /// has at least this area.
    pub certified: Rat,
}

impl CampaignResult {
    /// Constraint pairs that forced branching.
    pub fn contributing(&self) -> Vec<(Word, Word)> {
        self.log.iter().filter(|s| s.branched > 0).map(|s| (s.a.clone(), s.b.clone())).collect()
    }
}

pub fn constraint_sets(cfg: &SearchConfig) -> Result<Vec<ConstraintSet>, SearchError> {
    cfg.constraint_pairs().par_iter().map(|(a, b)| cantor_orbit(a, b, &cfg.epsilon, None)).collect()
}

pub fn run(cfg: &SearchConfig) -> Result<CampaignResult, SearchError> {
    let sets = constraint_sets(cfg)?;
    let (family, log) = search_logged(cfg, &sets);
    let floor = match family.min_area() {
        Some(m) if m < cfg.area_threshold => m,
        _ => cfg.area_threshold.clone(),
    };
    let certified = floor - &cfg.epsilon * rat(4, 1);
    Ok(CampaignResult { family, log, certified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::Point;

    fn w(s: &str) -> Word {
        Word::from_bits(s)
    }

    fn pt(a: i64, b: i64, c: i64, d: i64) -> Point {
        Point::from_ratios(a, b, c, d)
    }

    #[test]
    fn orbit_of_0_10() {
        let c = cantor_orbit(&w("0"), &w("10"), &rat(1, 1000), None).unwrap();
        for p in [pt(1, 3, 1, 3), pt(2, 3, 1, 6), pt(7, 12, 1, 3), pt(1, 3, 2, 3), pt(2, 3, 1, 3)] {
            assert!(c.points.contains(&p), "{p:?}");
        }
        assert_eq!(c.limit_points, vec![pt(1, 3, 2, 3), pt(2, 3, 1, 3)]);
        // displayed closed forms, n = 0..3, away from the cycle
        for n in 0..4u32 {
            let f = 4i64.pow(n);
            for p in [
                pt(1, 3, 2 * f - 1, 3 * f),
                pt(2, 3, 2 * f - 1, 6 * f),
                pt(2 * f - 1, 3 * f, 1, 3),
                pt(2 * f - 1, 6 * f, 2, 3),
            ] {
                assert!(c.points.contains(&p), "n={n} {p:?}");
            }
        }
    }

    #[test]
    fn orbit_of_01_10() {
        let c = cantor_orbit(&w("01"), &w("10"), &rat(1, 1000), None).unwrap();
        for p in [pt(5, 6, 1, 6), pt(29, 48, 1, 3), pt(5, 12, 1, 3)] {
            assert!(c.points.contains(&p), "{p:?}");
        }
    }

    #[test]
    fn orbit_points_are_shifts() {
        let (a, b) = (w("001"), w("10"));
        let eps = rat(1, 1 << 12);
        let c = cantor_orbit(&a, &b, &eps, None).unwrap();
        let s = BiSeq::new(Word::empty(), b.reversed(), a.clone(), b.clone()).unwrap();
        let orbit: Vec<Point> = (-40..40).map(|k| s.shift(k).pi_point()).collect();
        for p in &c.points {
            assert!(orbit.contains(p) || c.limit_points.contains(p));
        }
        for p in &orbit {
            let near = c.limit_points.iter().any(|q| q.sup_dist(p) <= eps);
            assert!(near || c.points.contains(p));
        }
    }

    #[test]
    fn orbit_preconditions() {
        assert!(cantor_orbit(&w("0"), &w("00"), &rat(1, 10), None).is_err());
        assert!(cantor_orbit(&w("01"), &w("0101"), &rat(1, 10), None).is_err());
        assert!(cantor_orbit(&w("0"), &w("1"), &rat(0, 1), None).is_err());
    }

    #[test]
    fn first_stage_quadrilateral() {
        let cfg = SearchConfig::rotational(1);
        let c = cantor_orbit(&w("0"), &w("10"), &cfg.epsilon, None).unwrap();
        let f = search(&cfg, &[c]);
        assert_eq!(f.len(), 1);
        let expect =
            ConvexPoly::from_vertices(vec![pt(5, 12, 2, 3), pt(1, 2, 0, 1), pt(7, 12, 1, 3), pt(1, 2, 1, 1)]).unwrap();
        assert_eq!(f.polygons[0], expect);
        assert_eq!(f.polygons[0].area(), rat(1, 12));
    }

    #[test]
    fn reduce_drops_supersets() {
        let small = ConvexPoly::from_vertices(vec![pt(0, 1, 0, 1), pt(1, 2, 0, 1), pt(0, 1, 1, 2)]).unwrap();
        let big = ConvexPoly::unit_square();
        let other = ConvexPoly::from_vertices(vec![pt(1, 1, 1, 1), pt(1, 2, 1, 1), pt(1, 1, 1, 2)]).unwrap();
        let f = Family::reduce(vec![big, small.clone(), other.clone(), small.clone()]);
        assert_eq!(f.polygons, vec![small, other]);
    }

    #[test]
    fn lower_bound_forms() {
        let sq = Family { polygons: vec![ConvexPoly::unit_square()] };
        assert_eq!(lower_bound(&sq, &rat(0, 1)).unwrap(), rat(1, 1));
        assert!(lower_bound(&Family { polygons: vec![] }, &rat(0, 1)).is_err());
    }

    #[test]
    fn pair_order() {
        let p = all_pairs(2);
        assert_eq!(p[0], (w("0"), w("1")));
        assert_eq!(p[1], (w("1"), w("0")));
        assert!(!p.contains(&(w("0"), w("00"))));
        assert!(p.contains(&(w("01"), w("10"))));
    }

    #[test]
    fn config_roundtrip() {
        let mut cfg = SearchConfig::mirror(3);
        cfg.constraints = vec![(w("0"), w("10"))];
        cfg.expect_min_area = Some(rat(1, 12));
        let back = SearchConfig::parse(&cfg.to_text()).unwrap();
        assert_eq!(back, cfg);
        let e = SearchConfig::parse("threshold = 1/2\nsymmetry = sideways\n").unwrap_err();
        assert!(matches!(e, SearchError::Config { line: 2, .. }));
        assert!(SearchConfig::parse("threshold = 1/2").is_err());
    }
}
