//! Orbits of eventually periodic sequences against `𝓗 = {|x − y| > 1/2}`.

use crate::exact_geom::{pow2_inv, rat, Point, Rat};
use crate::symbolic::{word_orbit, BiSeq};
use num_traits::Signed;

fn gap(p: &Point) -> Rat {
    (&p.x - &p.y).abs()
}

/// Whether the whole orbit of `s` avoids the open hole `𝓗`.
///
/// Far from the origin the orbit shadows the two limit cycles. Periodic
/// points have odd denominators, so each cycle point has `|x − y| ≠ 1/2`;
/// once the shadowing error `2^{-j}` is below the cycles' margin to `1/2`
/// the remaining points inherit the cycles' verdict, and only the shifts in
/// between are checked directly.
pub fn balanced_survivor(s: &BiSeq) -> bool {
    let half = rat(1, 2);
    let cycles = [word_orbit(s.right_period()), word_orbit(&s.left_period().reversed())];
    let mut margin: Option<Rat> = None;
    for p in cycles.iter().flatten() {
        let g = gap(p);
        debug_assert!(g != half);
        if g > half {
            return false;
        }
        let d = &half - g;
        margin = Some(match margin {
            Some(m) if m <= d => m,
            _ => d,
        });
    }
    let margin = margin.expect("periods are nonempty");
    let j = (0..).find(|&j| pow2_inv(j) < margin).expect("margin is positive");
    let lo = -((s.left_transient_len() + j) as i64);
    let hi = (s.right_transient_len() + j) as i64;
    let mut cur = s.shift(lo);
    for _ in lo..=hi {
        if gap(&cur.pi_point()) > half {
            return false;
        }
        cur = cur.shift(1);
    }
    true
}
