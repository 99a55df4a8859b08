//! The window families behind the polygon trap theorems, instantiated up to
//! a parameter bound, each paired with the hole it is claimed to lie in.

use super::forbidden::{certify_forbidden, CertMode};
use crate::holes::{named_hole, Hole};
use crate::symbolic::Window;
use crate::words::Word;
use rayon::prelude::*;
use serde::Serialize;

/// One containment claim: `window ⊆ hole` (`hole` is a `named_hole` spec).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub family: &'static str,
    pub params: String,
    pub window: String,
    pub hole: String,
}

fn w(parts: &[(&str, usize)]) -> Word {
    let mut s = String::new();
    for (p, n) in parts {
        s.push_str(&p.repeat(*n));
    }
    Word::from_bits(&s)
}

fn claim(family: &'static str, params: String, window: Window, hole: &str) -> Claim {
    Claim { family, params, window: window.to_string(), hole: hole.to_string() }
}

/// Windows excluded from `J(Δ)`: `[11·00]`, `[1^{m+1}·01^m0]` and its mirror
/// `[10^m1·0^{m+1}]`.
pub fn delta_windows(max: usize) -> Vec<Claim> {
    let mut out = vec![claim("delta", String::new(), Window::new(w(&[("11", 1)]), w(&[("00", 1)])), "delta")];
    for m in 1..=max {
        let a = Window::new(w(&[("1", m + 1)]), w(&[("0", 1), ("1", m), ("0", 1)]));
        out.push(claim("delta", format!("m={m}"), a.clone(), "delta"));
        out.push(claim("delta-mirror", format!("m={m}"), a.mirror(), "delta"));
    }
    out
}

/// Windows excluded from `J(P_k)`, each with its complement (the image
/// under `(x, y) ↦ (1 − x, 1 − y)`).
pub fn pk_windows(max: usize) -> Vec<Claim> {
    let kmax = max.min(crate::holes::MAX_PK as usize);
    let mut out = Vec::new();
    let mut push = |family: &'static str, params: String, win: Window, ks: std::ops::RangeInclusive<usize>| {
        for k in ks {
            let hole = format!("pk:{k}");
            out.push(claim(family, params.clone(), win.clone(), &hole));
            out.push(claim(family, params.clone(), win.rotate(), &hole));
        }
    };
    // (a): [1 0^{ℓ−1} · 0 1^n 0]; (b), (c): [1 0^ℓ · 1 0^n 1].
    let a = |ell: usize, n: usize| Window::new(w(&[("1", 1), ("0", ell - 1)]), w(&[("0", 1), ("1", n), ("0", 1)]));
    let bc = |ell: usize, n: usize| Window::new(w(&[("1", 1), ("0", ell)]), w(&[("1", 1), ("0", n), ("1", 1)]));
    for n in 1..=max {
        for ell in 1..n {
            let p = format!("l={ell},n={n}");
            if ell >= 2 {
                push("a", p.clone(), a(ell, n), 1..=kmax);
            }
            push("b", p.clone(), bc(ell, n), 1..=1);
            if n >= 3 {
                push("c", p, bc(ell, n), 2..=kmax);
            }
        }
    }
    for n in 2..=max {
        let p = format!("n={n}");
        let d = Window::new(w(&[("1", n), ("0", n - 1)]), w(&[("0", 1), ("1", n), ("01", 1)]));
        let f = Window::new(w(&[("1", n), ("0", n)]), w(&[("1", 1), ("0", n), ("10", 1)]));
        push("d", p.clone(), d.clone(), 1..=2);
        push("f", p.clone(), f.clone(), 1..=2);
        if n >= 3 {
            push("e", p.clone(), d, 3..=kmax);
            push("g", p, f, 3..=kmax);
        }
    }
    out
}

/// Windows excluded from `J(Δ'')`.
pub fn delta2_windows(max: usize) -> Vec<Claim> {
    let h = "delta2";
    let mut out = vec![
        claim("dd-11.00", String::new(), Window::new(w(&[("11", 1)]), w(&[("00", 1)])), h),
        claim("dd-11011.010", String::new(), Window::new(w(&[("11011", 1)]), w(&[("010", 1)])), h),
    ];
    for k in 3..=max {
        for kp in 1..k {
            let win = Window::new(w(&[("110", 1), ("1", k)]), w(&[("0", 1), ("1", kp), ("0", 1)]));
            out.push(claim("dd-1101^k.01^k'0", format!("k={k},k'={kp}"), win, h));
            if kp + 1 < k {
                let win = Window::new(w(&[("10", 1), ("1", k)]), w(&[("0", 1), ("1", kp), ("0", 1)]));
                out.push(claim("dd-101^k.01^k'0", format!("k={k},k'={kp}"), win, h));
            }
        }
    }
    out
}

/// Windows excluded from `J(Δ')`.
pub fn delta1_windows(max: usize) -> Vec<Claim> {
    let h = "delta1";
    let mut out = vec![
        claim("d-11.00", String::new(), Window::new(w(&[("11", 1)]), w(&[("00", 1)])), h),
        claim("d-11011.010110", String::new(), Window::new(w(&[("11011", 1)]), w(&[("010110", 1)])), h),
    ];
    let mut add =
        |family: &'static str, params: String, l: Word, r: Word| out.push(claim(family, params, Window::new(l, r), h));
    for k in 1..=max {
        let p = format!("k={k}");
        add("d-1^{k+2}.01^k0", p.clone(), w(&[("1", k + 2)]), w(&[("0", 1), ("1", k), ("0", 1)]));
        add("d-11101^{k+1}.01^k0", p.clone(), w(&[("1110", 1), ("1", k + 1)]), w(&[("0", 1), ("1", k), ("0", 1)]));
        add("d-10^k1.0^{k+2}", p.clone(), w(&[("1", 1), ("0", k), ("1", 1)]), w(&[("0", k + 2)]));
        add("d-10^k1.0^{k+1}100", p, w(&[("1", 1), ("0", k), ("1", 1)]), w(&[("0", k + 1), ("100", 1)]));
    }
    for n in 1..=max {
        let p = format!("n={n}");
        add("d-111(011)^n.010", p.clone(), w(&[("111", 1), ("011", n)]), w(&[("010", 1)]));
        add("d-111(011)^n0111.0110", p, w(&[("111", 1), ("011", n), ("0111", 1)]), w(&[("0110", 1)]));
    }
    for n in 0..=max {
        for m in 0..=max {
            let p = format!("n={n},m={m}");
            add(
                "d-110(10)^n11.0(10)^m100",
                p.clone(),
                w(&[("110", 1), ("10", n), ("11", 1)]),
                w(&[("0", 1), ("10", m), ("100", 1)]),
            );
            add(
                "d-110(10)^n1.00(10)^m100",
                p.clone(),
                w(&[("110", 1), ("10", n), ("1", 1)]),
                w(&[("00", 1), ("10", m), ("100", 1)]),
            );
            if m >= 2 {
                add(
                    "d-110(10)^n11.0(10)^m110",
                    p.clone(),
                    w(&[("110", 1), ("10", n), ("11", 1)]),
                    w(&[("0", 1), ("10", m), ("110", 1)]),
                );
            }
            if m >= 1 || n == 0 {
                add(
                    "d-110(10)^n1.00(10)^m110",
                    p.clone(),
                    w(&[("110", 1), ("10", n), ("1", 1)]),
                    w(&[("00", 1), ("10", m), ("110", 1)]),
                );
            }
            if n >= 1 {
                add(
                    "d-100(10)^n1.00(10)^m100",
                    p,
                    w(&[("100", 1), ("10", n), ("1", 1)]),
                    w(&[("00", 1), ("10", m), ("100", 1)]),
                );
            }
        }
    }
    out
}

pub fn all_claims(max: usize) -> Vec<Claim> {
    let mut out = delta_windows(max);
    out.extend(pk_windows(max));
    out.extend(delta1_windows(max));
    out.extend(delta2_windows(max));
    out
}

/// The claims that fail to certify in `mode`, in input order.
pub fn failures(claims: &[Claim], mode: CertMode) -> Vec<Claim> {
    let holes: std::collections::BTreeMap<String, Hole> = claims
        .iter()
        .map(|c| c.hole.clone())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(|s| {
            let h = named_hole(&s).expect("family hole specs are valid");
            (s, h)
        })
        .collect();
    claims
        .par_iter()
        .filter(|c| {
            let win: Window = c.window.parse().expect("family windows parse");
            !certify_forbidden(&win, &holes[&c.hole], mode)
        })
        .cloned()
        .collect()
}
