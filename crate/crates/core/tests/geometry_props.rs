use baker_core::exact_geom::{
    classify_box, rat, union_area_boxes, BoxClass, ConvexPoly, Mode, Point, Rat, Rect, Symmetry,
};
use num_traits::Zero;
use proptest::prelude::*;

const SYMMETRIES: [Symmetry; 4] = [Symmetry::Identity, Symmetry::Mirror, Symmetry::Rotation, Symmetry::Diagonal];

fn coord(den: i64) -> impl Strategy<Value = Rat> {
    (0..=den).prop_map(move |n| rat(n, den))
}

fn point() -> impl Strategy<Value = Point> {
    prop_oneof![Just(64i64), Just(16), Just(12), Just(7)]
        .prop_flat_map(|d| (coord(d), coord(d)).prop_map(|(x, y)| Point::new(x, y)))
}

fn polygon() -> impl Strategy<Value = ConvexPoly> {
    proptest::collection::vec(point(), 3..7)
        .prop_map(|pts| ConvexPoly::hull(pts.iter()))
        .prop_filter("non-degenerate", |p| !p.is_degenerate())
}

fn rect() -> impl Strategy<Value = Rect> {
    (0i64..64, 1i64..=64, 0i64..64, 1i64..=64).prop_map(|(x, w, y, h)| {
        let x_hi = (x + w).min(64);
        let y_hi = (y + h).min(64);
        Rect::new(rat(x, 64), rat(x_hi.max(x + 1), 64), rat(y, 64), rat(y_hi.max(y + 1), 64)).unwrap()
    })
}

/// Points of the closed box on a 9 × 9 grid, boundary included.
fn grid(b: &Rect) -> Vec<Point> {
    let n = 8;
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            let x = &b.x_lo + b.width() * rat(i, n);
            let y = &b.y_lo + b.height() * rat(j, n);
            out.push(Point::new(x, y));
        }
    }
    out
}

fn intersect(a: &Rect, b: &Rect) -> Option<Rect> {
    let x_lo = (&a.x_lo).max(&b.x_lo).clone();
    let x_hi = (&a.x_hi).min(&b.x_hi).clone();
    let y_lo = (&a.y_lo).max(&b.y_lo).clone();
    let y_hi = (&a.y_hi).min(&b.y_hi).clone();
    (x_lo < x_hi && y_lo < y_hi).then(|| Rect::new(x_lo, x_hi, y_lo, y_hi).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn symmetry_preserves_area_and_membership(poly in polygon(), probes in proptest::collection::vec(point(), 1..8)) {
        for s in SYMMETRIES {
            let image = poly.transform(s);
            prop_assert_eq!(image.area(), poly.area());
            prop_assert_eq!(image.transform(s), poly.clone());
            for p in &probes {
                for mode in [Mode::Open, Mode::Closed] {
                    prop_assert_eq!(image.contains(&s.apply(p), mode), poly.contains(p, mode));
                }
            }
        }
    }

    #[test]
    fn hull_of_vertices_reproduces_polygon(poly in polygon()) {
        prop_assert_eq!(ConvexPoly::hull(poly.vertices().iter()), poly.clone());
        let reversed: Vec<Point> = poly.vertices().iter().rev().cloned().collect();
        prop_assert_eq!(ConvexPoly::from_vertices(reversed).unwrap(), poly);
    }

    #[test]
    fn hull_contains_inputs(pts in proptest::collection::vec(point(), 1..10)) {
        let hull = ConvexPoly::hull(pts.iter());
        for p in &pts {
            prop_assert!(hull.contains(p, Mode::Closed));
        }
    }

    #[test]
    fn classify_matches_grid_oracle(b in rect(), poly in polygon()) {
        let class = classify_box(&b, &poly).unwrap();
        let samples = grid(&b);
        let open_hits = samples.iter().filter(|p| poly.contains(p, Mode::Open)).count();
        let closed_hits = samples.iter().filter(|p| poly.contains(p, Mode::Closed)).count();
        match class {
            BoxClass::InsideOpen => prop_assert_eq!(open_hits, samples.len()),
            BoxClass::InsideClosed => prop_assert_eq!(closed_hits, samples.len()),
            BoxClass::DisjointFromOpen => prop_assert_eq!(open_hits, 0),
            BoxClass::DisjointFromClosed => prop_assert_eq!(closed_hits, 0),
            BoxClass::Straddles => {}
        }
        if open_hits > 0 {
            prop_assert!(!class.disjoint_from_open());
        }
        if closed_hits < samples.len() {
            prop_assert!(!class.inside_closed());
        }
        if class == BoxClass::DisjointFromClosed {
            // Also no polygon vertex inside the closed box.
            prop_assert!(poly.vertices().iter().all(|v| !b.contains(v, Mode::Closed)));
        }
    }

    #[test]
    fn union_area_is_inclusion_exclusion(boxes in proptest::collection::vec(rect(), 0..=4)) {
        let n = boxes.len();
        let mut total = Rat::zero();
        for mask in 1u32..(1 << n) {
            let mut members = boxes.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, b)| b);
            let first = members.next().unwrap().clone();
            let area = members
                .try_fold(first, |acc, b| intersect(&acc, b))
                .map_or_else(Rat::zero, |r| r.area());
            if mask.count_ones() % 2 == 1 {
                total += area;
            } else {
                total -= area;
            }
        }
        prop_assert_eq!(union_area_boxes(&boxes), total);
    }
}
