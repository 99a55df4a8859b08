//! `baker`: JSON-lines front end to `baker-core`.
//!
//! Exit codes: 0 success, 1 a checked regression failed, 2 usage or input
//! error.

use anyhow::{bail, Context, Result};
use baker_core::analysis::{
    self, balanced_survivor, certify_forbidden, dim_bounds_with, h_witness, scan_cycles, CertMode, CycleStatus,
    DimOptions,
};
use baker_core::exact_geom::{approx, rat_string, PolyJson, Rat};
use baker_core::holes::{named_hole, p_infty_bounds};
use baker_core::svg::Svg;
use baker_core::symbolic::{lyndon_words, BiSeq, Window};
use baker_core::trap_search::{self, SearchConfig};
use baker_core::words::{doubling_constant, is_balanced, Word};
use baker_core::ConvexPoly;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "baker", version, about = "Exact computations for holes in the baker's map")]
struct Cli {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = "BAKER_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Describe a named hole.
    Hole {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Certify a forbidden window, or check the built-in window families.
    Forbidden {
        #[arg(long, required_unless_present = "families")]
        window: Option<String>,
        #[arg(long, required_unless_present = "families")]
        hole: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Essential)]
        mode: ModeArg,
        /// Check every family instance with parameters up to this bound.
        #[arg(long)]
        families: Option<usize>,
    },
    /// Classify periodic orbits against a hole.
    Cycles {
        #[arg(long)]
        hole: String,
        #[arg(long)]
        max_period: usize,
        /// Print only cycles that avoid the open hole.
        #[arg(long)]
        avoiders_only: bool,
    },
    /// Dimension bounds from window transfer graphs.
    Dim {
        #[arg(long)]
        hole: String,
        #[arg(short = 'L', long = "half-len")]
        half_len: usize,
        /// Path length (default 4L).
        #[arg(short = 'm', long = "path-len")]
        path_len: Option<usize>,
        /// Drop only windows inside the open hole from the upper graph.
        #[arg(long)]
        strict_upper: bool,
    },
    /// Run a trap-area search campaign.
    Search {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Balanced-word and witness checks for the two-triangle hole.
    Appendix {
        #[arg(long, value_enum)]
        check: AppendixCheck,
        /// Longest word checked.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Largest witness exponent.
        #[arg(long, default_value_t = 2)]
        max_m: usize,
    },
    /// Print a named constant.
    Constants {
        #[arg(long, value_enum)]
        which: Constant,
        /// Product terms or sandwich level.
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Strict,
    Essential,
}

impl From<ModeArg> for CertMode {
    fn from(m: ModeArg) -> CertMode {
        match m {
            ModeArg::Strict => CertMode::Strict,
            ModeArg::Essential => CertMode::Essential,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AppendixCheck {
    Balanced,
    Witness,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Constant {
    Gs,
    PinftyArea,
}

fn rat_json(r: &Rat) -> Value {
    json!({ "exact": rat_string(r), "decimal": approx(r) })
}

fn poly_json(p: &ConvexPoly) -> Value {
    let verts: Vec<Value> = p.vertices().iter().map(|v| json!([rat_string(&v.x), rat_string(&v.y)])).collect();
    json!({ "vertices": verts, "area": rat_json(&p.area()) })
}

fn mode_name(m: CertMode) -> &'static str {
    match m {
        CertMode::Strict => "strict",
        CertMode::Essential => "essential",
    }
}

struct Out {
    lines: Vec<String>,
}

impl Out {
    fn emit(&mut self, v: Value) {
        self.lines.push(v.to_string());
    }
}

fn write_svg(path: &PathBuf, svg: &Svg) -> Result<()> {
    std::fs::write(path, svg.finish()).with_context(|| format!("writing {}", path.display()))
}

/// Returns `true` when every checked claim held.
fn run(cli: Cli, out: &mut Out) -> Result<bool> {
    match cli.verb {
        Verb::Hole { spec, svg } => {
            let h = named_hole(&spec)?;
            for p in h.parts() {
                out.emit(json!({ "record": "part", "hole": h.name, "polygon": poly_json(p), "json": PolyJson::from_poly(p) }));
            }
            out.emit(
                json!({ "record": "hole", "hole": h.name, "parts": h.parts().len(), "area": rat_json(&h.area()) }),
            );
            if let Some(path) = svg {
                let mut s = Svg::new();
                for p in h.parts() {
                    s.polygon(p, "steelblue", 0.6);
                }
                write_svg(&path, &s)?;
            }
            Ok(true)
        }
        Verb::Forbidden { window, hole, mode, families } => {
            let mode: CertMode = mode.into();
            if let Some(max) = families {
                let claims = analysis::families::all_claims(max);
                let bad = analysis::families::failures(&claims, mode);
                for c in &bad {
                    out.emit(json!({ "record": "failure", "item": c, "status": "uncertified", "certificate": mode_name(mode) }));
                }
                out.emit(json!({ "record": "summary", "mode": mode_name(mode), "claims": claims.len(), "failures": bad.len() }));
                return Ok(bad.is_empty());
            }
            let w: Window = window.expect("required").parse()?;
            if w.is_empty() {
                bail!("window must be nonempty");
            }
            let h = named_hole(&hole.expect("required"))?;
            let result = certify_forbidden(&w, &h, mode);
            let status = if result { "forbidden" } else { "uncertified" };
            out.emit(json!({ "item": w.to_string(), "hole": h.name, "status": status, "certificate": mode_name(mode), "result": result }));
            Ok(true)
        }
        Verb::Cycles { hole, max_period, avoiders_only } => {
            let h = named_hole(&hole)?;
            let r = scan_cycles(&h, max_period)?;
            for e in &r.entries {
                if avoiders_only && e.status == CycleStatus::HitsOpen {
                    continue;
                }
                out.emit(json!({ "record": "cycle", "item": e.cycle.to_string(), "period": e.cycle.period(), "status": e.status, "certificate": "exact orbit", "fixed": e.fixed }));
            }
            let avoiders: Vec<String> = r.closed_avoiders().iter().map(|c| c.to_string()).collect();
            let verdict = if r.is_cycle_trap() { "cycle trap" } else { "not a cycle trap" };
            out.emit(json!({ "record": "summary", "hole": h.name, "max_period": max_period, "cycles": r.entries.len(), "closed_avoiders": avoiders, "verdict": verdict }));
            Ok(true)
        }
        Verb::Dim { hole, half_len, path_len, strict_upper } => {
            let h = named_hole(&hole)?;
            let m = path_len.unwrap_or(4 * half_len);
            let opts = DimOptions { upper_mode: if strict_upper { CertMode::Strict } else { CertMode::Essential } };
            let b = dim_bounds_with(&h, half_len, m, opts)?;
            let cert = b.certificate.as_ref().map(|c| {
                json!({ "nodes": c.nodes.len(), "mu": format!("{}/{}", c.mu_num, c.mu_den), "verified": analysis::verify_certificate(&h, c) })
            });
            out.emit(json!({
                "hole": h.name, "L": half_len, "m": m, "lower": b.lower, "upper": b.upper,
                "upper_mode": mode_name(b.upper_mode), "upper_words": b.upper_words.to_string(),
                "upper_nodes": b.upper_nodes, "lower_nodes": b.lower_nodes, "certificate": cert,
            }));
            Ok(b.certificate.as_ref().is_none_or(|c| analysis::verify_certificate(&h, c)))
        }
        Verb::Search { config, svg } => {
            let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let cfg = SearchConfig::parse(&text)?;
            let r = trap_search::run(&cfg)?;
            for p in &r.family.polygons {
                out.emit(json!({ "record": "polygon", "polygon": poly_json(p) }));
            }
            let contributing: Vec<String> = r.contributing().iter().map(|(a, b)| format!("{a},{b}")).collect();
            out.emit(json!({
                "record": "summary", "count": r.family.len(), "symmetry": cfg.symmetry.name(),
                "threshold": rat_json(&cfg.area_threshold), "epsilon": rat_json(&cfg.epsilon),
                "constraint_sets": r.log.len(), "contributing": contributing,
                "min_area": r.family.min_area().map(|m| rat_json(&m)),
                "max_area": r.family.max_area().map(|m| rat_json(&m)),
                "lower_bound": rat_json(&r.certified),
            }));
            if let Some(path) = svg {
                let mut s = Svg::new();
                for p in &r.family.polygons {
                    s.polygon(p, "seagreen", 0.15);
                }
                for a in &cfg.anchors {
                    s.point(a, "crimson");
                }
                write_svg(&path, &s)?;
            }
            Ok(match &cfg.expect_min_area {
                Some(m) => r.family.min_area().as_ref() == Some(m),
                None => true,
            })
        }
        Verb::Appendix { check, max_len, max_m } => match check {
            AppendixCheck::Balanced => {
                let mut ok = true;
                let cycles = lyndon_words(max_len)?;
                for c in &cycles {
                    let survives = balanced_survivor(&BiSeq::periodic(c.word())?);
                    let balanced = is_balanced(c.word(), true);
                    ok &= survives == balanced;
                    out.emit(json!({ "record": "cycle", "cycle": c.to_string(), "balanced": balanced, "survives": survives }));
                }
                out.emit(json!({ "record": "summary", "check": "balanced", "cycles": cycles.len(), "agree": ok }));
                Ok(ok)
            }
            AppendixCheck::Witness => {
                let h = named_hole("h-script")?;
                let mut ok = true;
                for n in 0..=max_len {
                    for code in 0u64..1 << n {
                        let w = Word::new((0..n).rev().map(|i| ((code >> i) & 1) as u8).collect());
                        if w.reversed() != w {
                            continue;
                        }
                        for m in 0..=max_m {
                            let win = h_witness(&w, m)?;
                            let certified = certify_forbidden(&win, &h, CertMode::Essential);
                            ok &= certified;
                            out.emit(json!({ "record": "witness", "w": w.to_string(), "m": m, "window": win.to_string(), "certified": certified }));
                        }
                    }
                }
                out.emit(json!({ "record": "summary", "check": "witness", "all_certified": ok }));
                Ok(ok)
            }
        },
        Verb::Constants { which, k } => {
            match which {
                Constant::Gs => {
                    let terms = k.unwrap_or(8);
                    let c = doubling_constant(terms)?;
                    out.emit(json!({ "constant": "gs", "terms": terms, "value": rat_json(&c) }));
                }
                Constant::PinftyArea => {
                    let k = k.unwrap_or(8);
                    let (inner, outer) = p_infty_bounds(k)?;
                    out.emit(json!({ "constant": "pinfty-area", "k": k, "inner": rat_json(&inner.area()), "outer": rat_json(&outer.area()) }));
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = Out { lines: Vec::new() };
    let result = run(cli, &mut out);
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    for l in &out.lines {
        let _ = writeln!(lock, "{l}");
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
