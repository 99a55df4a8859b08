use baker_core::analysis::{certify_forbidden, dim_bounds, CertMode};
use baker_core::exact_geom::{rat, ConvexPoly, Mode, Point, Rat, Symmetry};
use baker_core::holes::{complete_trap, named_hole, p_infty_bounds};
use baker_core::symbolic::{baker_step, cycle_orbit, cylinder_box, lyndon_words, BiSeq, Direction, Window};
use baker_core::trap_search::{self, SearchConfig};
use baker_core::words::Word;
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..2, 0..max).prop_map(Word::new)
}

fn bi_seq() -> impl Strategy<Value = BiSeq> {
    let period = || proptest::collection::vec(0u8..2, 1..5).prop_map(Word::new);
    (word(5), period(), word(5), period()).prop_map(|(lt, lp, rt, rp)| BiSeq::new(lt, lp, rt, rp).unwrap())
}

fn window() -> impl Strategy<Value = Window> {
    (word(7), word(7))
        .prop_filter("nonempty", |(u, v)| !u.is_empty() || !v.is_empty())
        .prop_map(|(u, v)| Window::new(u, v))
}

const HOLES: [&str; 8] = ["delta", "delta1", "delta2", "hull-dd", "h-script", "p:1/2", "pk:2", "box:1/4,3/4,1/8,5/8"];

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn shift_is_conjugate_to_baker_step(s in bi_seq()) {
        let start = s.pi_point();
        for (n, dir) in [(1i64, Direction::Forward), (-1, Direction::Backward)] {
            let mut p = Some(start.clone());
            for k in 1..=3i64 {
                p = p.and_then(|q| baker_step(&q, dir).ok());
                match &p {
                    Some(q) => prop_assert_eq!(&s.shift(n * k).pi_point(), q),
                    None => break,
                }
            }
        }
    }

    #[test]
    fn pi_lands_in_its_cylinder(s in bi_seq(), k in 0usize..8, m in 0usize..8) {
        let w = s.window(k, m);
        prop_assert!(w.matches(&s));
        let b = cylinder_box(&w);
        prop_assert_eq!(b.width(), rat(1, 1 << m));
        prop_assert_eq!(b.height(), rat(1, 1 << k));
        prop_assert!(b.contains(&s.pi_point(), Mode::Closed));
    }

    #[test]
    fn strict_implies_essential(w in window(), h in 0..HOLES.len()) {
        let hole = named_hole(HOLES[h]).unwrap();
        if certify_forbidden(&w, &hole, CertMode::Strict) {
            prop_assert!(certify_forbidden(&w, &hole, CertMode::Essential));
        }
    }
}

#[test]
fn cycle_orbits_are_forward_invariant() {
    for c in lyndon_words(9).unwrap() {
        let orbit: BTreeSet<Point> = cycle_orbit(&c).into_iter().collect();
        assert_eq!(orbit.len(), c.period());
        for p in &orbit {
            if p.x == rat(1, 2) {
                continue;
            }
            let q = baker_step(p, Direction::Forward).unwrap();
            assert!(orbit.contains(&q), "{c}: {q} left the orbit");
        }
    }
}

#[test]
fn lyndon_words_cover_all_words() {
    let cycles = lyndon_words(12).unwrap();
    for p in 1..=12usize {
        let mut seen = BTreeSet::new();
        for c in cycles.iter().filter(|c| p % c.period() == 0) {
            for r in c.word().pow(p / c.period()).rotations().into_iter().take(c.period()) {
                assert!(seen.insert(r), "rotation repeated for period {p}");
            }
        }
        assert_eq!(seen.len(), 1 << p);
    }
}

#[test]
fn named_hole_symmetries() {
    let d1 = named_hole("delta1").unwrap();
    let d2 = named_hole("delta2").unwrap();
    assert_eq!(d1.transform(Symmetry::Mirror).parts(), d2.parts());
    assert_eq!(named_hole("p:1/2").unwrap().parts(), named_hole("pk:1").unwrap().parts());
    for spec in ["p:1/2", "pk:1", "pk:3", "pk:6", "h-script"] {
        let h = named_hole(spec).unwrap();
        assert!(h.is_invariant(Symmetry::Rotation), "{spec}");
        for part in h.parts() {
            assert!(part.vertices().iter().all(|v| v.in_unit_square()), "{spec}");
        }
    }
}

#[test]
fn complete_traps_catch_every_cycle() {
    let cycles = lyndon_words(10).unwrap();
    for k in 1..=3 {
        let trap = complete_trap(k).unwrap();
        for c in cycles.iter().filter(|c| !c.is_fixed()) {
            assert!(cycle_orbit(c).iter().any(|p| trap.contains_open(p)), "A_{k} misses {c}");
        }
    }
}

#[test]
fn dimension_bounds_ordered_and_decreasing() {
    let box_hole = "box:3/8,5/8,3/8,5/8";
    for spec in ["delta", "pk:1", "hull-dd", box_hole] {
        let h = named_hole(spec).unwrap();
        let mut prev = f64::INFINITY;
        for l in [2, 4, 6] {
            let b = dim_bounds(&h, l, 4 * l).unwrap();
            assert!(b.lower <= b.upper, "{spec} L={l}");
            assert!(b.upper <= prev + 1e-12, "{spec} L={l}: {} > {prev}", b.upper);
            prev = b.upper;
        }
    }
}

fn rotational() -> &'static trap_search::CampaignResult {
    static R: OnceLock<trap_search::CampaignResult> = OnceLock::new();
    R.get_or_init(|| trap_search::run(&SearchConfig::rotational(3)).unwrap())
}

fn mirror() -> &'static trap_search::CampaignResult {
    static R: OnceLock<trap_search::CampaignResult> = OnceLock::new();
    R.get_or_init(|| trap_search::run(&SearchConfig::mirror(3)).unwrap())
}

fn check_family(cfg: &SearchConfig, r: &trap_search::CampaignResult) {
    let polys = &r.family.polygons;
    assert!(!polys.is_empty());
    let sym = cfg.symmetry.map().unwrap();
    let sets = trap_search::constraint_sets(cfg).unwrap();
    for p in polys {
        assert!(cfg.anchors.iter().all(|a| p.contains(a, Mode::Closed)));
        assert_eq!(&p.transform(sym), p);
        assert!(p.area() < cfg.area_threshold);
        for s in &sets {
            assert!(s.points.iter().any(|q| p.contains(q, Mode::Closed)), "({}, {}) unmet", s.a, s.b);
        }
    }
    for (i, p) in polys.iter().enumerate() {
        for (j, q) in polys.iter().enumerate() {
            if i != j {
                assert!(!p.contains_poly(q), "family is not an antichain");
            }
        }
    }
}

#[test]
fn rotational_family_invariants() {
    check_family(&SearchConfig::rotational(3), rotational());
}

#[test]
fn mirror_family_invariants() {
    check_family(&SearchConfig::mirror(3), mirror());
}

/// Some member whose vertices are each within `eps` (sup norm) of `region`.
fn some_member_inside(polys: &[ConvexPoly], region: &ConvexPoly, eps: &Rat) -> bool {
    let near = |v: &Point| {
        let offsets = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];
        offsets.iter().any(|&(dx, dy)| {
            let q = Point::new(&v.x + eps * rat(dx, 1), &v.y + eps * rat(dy, 1));
            region.contains(&q, Mode::Closed)
        })
    };
    polys.iter().any(|p| p.vertices().iter().all(near))
}

#[test]
fn known_traps_contain_a_member() {
    let (inner, _) = p_infty_bounds(8).unwrap();
    let r = rotational();
    assert!(some_member_inside(&r.family.polygons, inner.poly().unwrap(), &SearchConfig::rotational(3).epsilon));
    let hull = named_hole("hull-dd").unwrap();
    let m = mirror();
    assert!(some_member_inside(&m.family.polygons, hull.poly().unwrap(), &SearchConfig::mirror(3).epsilon));
}
