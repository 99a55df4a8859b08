//! Finite sampling of Cantor-set orbits against a hole.
//!
//! The sets sampled here are infinite; a clean report is evidence of
//! disjointness up to the sampled length, never a proof.

use super::AnalysisError;
use crate::exact_geom::{Mode, Point};
use crate::holes::Hole;
use crate::symbolic::{BiSeq, Window};
use crate::words::Word;
use rayon::prelude::*;
use std::collections::BTreeSet;

pub const MAX_SAMPLE_WORD: usize = 16;
pub const MAX_SAMPLE_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// `w_1 · w_2`, the central block of `v^∞ w_1 · w_2 v^∞`.
    pub window: Window,
    pub point: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceReport {
    /// Distinct concatenations sampled.
    pub words: usize,
    /// Sequences whose `π`-point was tested.
    pub points: usize,
    pub violation: Option<Violation>,
}

fn concatenations(u: &Word, v: &Word, max_len: usize) -> Vec<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut frontier = vec![Word::empty()];
    while let Some(w) = frontier.pop() {
        for piece in [u, v] {
            let next = w.concat(piece);
            if next.len() <= max_len && seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Test `π(v^∞ w_1 · w_2 v^∞)` against the open hole for every
/// `{u, v}`-concatenation `w = w_1 w_2` with `|w| <= max_len` and every
/// split, returning the first hit in order of `|w|`, `w`, `|w_1|`.
pub fn avoidance_sample(u: &Word, v: &Word, h: &Hole, max_len: usize) -> Result<AvoidanceReport, AnalysisError> {
    if u.is_empty() || v.is_empty() || u.len() > MAX_SAMPLE_WORD || v.len() > MAX_SAMPLE_WORD {
        return Err(AnalysisError::Domain(format!("generator lengths must lie in 1..={MAX_SAMPLE_WORD}")));
    }
    if max_len > MAX_SAMPLE_LEN {
        return Err(AnalysisError::Resource(format!("length {max_len} > {MAX_SAMPLE_LEN}")));
    }
    let words = concatenations(u, v, max_len);
    let points = words.iter().map(|w| w.len() + 1).sum();
    let violation = words.par_iter().find_map_first(|w| {
        (0..=w.len()).find_map(|cut| {
            let (w1, w2) = (w.slice(0, cut), w.slice(cut, w.len()));
            let s = BiSeq::new(w1.reversed(), v.reversed(), w2.clone(), v.clone()).expect("nonempty periods");
            let p = s.pi_point();
            h.contains(&p, Mode::Open).then(|| Violation { window: Window::new(w1, w2), point: p })
        })
    });
    Ok(AvoidanceReport { words: words.len(), points, violation })
}
