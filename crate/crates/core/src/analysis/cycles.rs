//! Periodic orbits against a hole.

use super::AnalysisError;
use crate::exact_geom::Mode;
use crate::holes::Hole;
use crate::symbolic::{cycle_orbit, lyndon_words, Cycle};
use rayon::prelude::*;
use serde::Serialize;

pub const MAX_SCAN_PERIOD: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleStatus {
    /// Some orbit point lies in the open hole.
    HitsOpen,
    /// No point in the open hole, some on its boundary.
    OnBoundaryOnly,
    /// No point in the closed hole.
    AvoidsClosed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEntry {
    pub cycle: Cycle,
    pub status: CycleStatus,
    /// `0^∞` or `1^∞`, exempt from the cycle-trap verdict.
    pub fixed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub hole: String,
    pub max_p: usize,
    pub entries: Vec<CycleEntry>,
}

impl CycleReport {
    /// Nontrivial cycles missing the closed hole.
    pub fn closed_avoiders(&self) -> Vec<&Cycle> {
        self.entries.iter().filter(|e| !e.fixed && e.status == CycleStatus::AvoidsClosed).map(|e| &e.cycle).collect()
    }

    /// All cycles, fixed ones included, missing the open hole.
    pub fn open_avoiders(&self) -> Vec<&Cycle> {
        self.entries.iter().filter(|e| e.status != CycleStatus::HitsOpen).map(|e| &e.cycle).collect()
    }

    /// Every nontrivial cycle of period `<= max_p` meets the closed hole.
    pub fn is_cycle_trap(&self) -> bool {
        self.closed_avoiders().is_empty()
    }
}

pub fn cycle_status(c: &Cycle, h: &Hole) -> CycleStatus {
    let orbit = cycle_orbit(c);
    if orbit.iter().any(|p| h.contains(p, Mode::Open)) {
        CycleStatus::HitsOpen
    } else if orbit.iter().any(|p| h.contains(p, Mode::Closed)) {
        CycleStatus::OnBoundaryOnly
    } else {
        CycleStatus::AvoidsClosed
    }
}

/// Classify every Lyndon cycle of period `1..=max_p`.
pub fn scan_cycles(h: &Hole, max_p: usize) -> Result<CycleReport, AnalysisError> {
    if max_p > MAX_SCAN_PERIOD {
        return Err(AnalysisError::Resource(format!("max period {max_p} > {MAX_SCAN_PERIOD}")));
    }
    let cycles = lyndon_words(max_p).expect("period within the Lyndon guard");
    let entries = cycles
        .into_par_iter()
        .map(|cycle| {
            let status = cycle_status(&cycle, h);
            let fixed = cycle.is_fixed();
            CycleEntry { cycle, status, fixed }
        })
        .collect();
    Ok(CycleReport { hole: h.name.clone(), max_p, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holes::{delta, p_k};
    use crate::symbolic::{baker_step, Direction};
    use crate::words::Word;

    fn cyc(s: &str) -> Cycle {
        Cycle::new(&Word::from_bits(s)).unwrap()
    }

    #[test]
    fn p2_keeps_only_the_two_cycle() {
        let h = Hole::convex("p2", p_k(2).unwrap());
        let r = scan_cycles(&h, 12).unwrap();
        assert_eq!(r.closed_avoiders(), vec![&cyc("01")]);
        assert!(!r.is_cycle_trap());
    }

    #[test]
    fn delta_open_avoiders_are_simple() {
        let h = Hole::convex("delta", delta());
        let r = scan_cycles(&h, 10).unwrap();
        assert!(r.is_cycle_trap());
        for c in r.open_avoiders() {
            let bits = c.word().bits();
            assert!(
                bits.iter().filter(|&&b| b == 1).count() <= 1 || bits.iter().filter(|&&b| b == 0).count() <= 1,
                "{c}"
            );
        }
    }

    #[test]
    fn agrees_with_iterated_map() {
        let h = Hole::convex("p1", p_k(1).unwrap());
        let r = scan_cycles(&h, 8).unwrap();
        for e in &r.entries {
            let start = &cycle_orbit(&e.cycle)[0];
            let mut p = start.clone();
            let mut open = false;
            let mut closed = false;
            for _ in 0..e.cycle.period() {
                open |= h.contains(&p, Mode::Open);
                closed |= h.contains(&p, Mode::Closed);
                p = baker_step(&p, Direction::Forward).unwrap();
            }
            assert_eq!(&p, start);
            let expect = if open {
                CycleStatus::HitsOpen
            } else if closed {
                CycleStatus::OnBoundaryOnly
            } else {
                CycleStatus::AvoidsClosed
            };
            assert_eq!(e.status, expect, "{}", e.cycle);
        }
    }

    #[test]
    fn guard() {
        assert!(scan_cycles(&Hole::empty(), 21).is_err());
    }
}
