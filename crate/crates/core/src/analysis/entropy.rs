//! Dimension bounds from window transfer graphs.
//!
//! Nodes are the cylinders `[x_{-L+1} … x_0 · x_1 … x_L]`, encoded as the
//! `2L`-bit integer `x_{-L+1} … x_L`; the shift sends `id` to
//! `((id << 1) | c) & mask`. The upper graph drops windows certified inside
//! the hole and over-approximates the survivors; the lower graph keeps only
//! windows certified disjoint from the open hole, so its bi-infinite paths
//! are survivors. Dimension is twice the entropy.

use super::forbidden::CertMode;
use super::AnalysisError;
use crate::exact_geom::{classify_box, BoxClass, ConvexPoly, Rat, Rect};
use crate::holes::Hole;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use std::ops::{Add, Mul};

pub const MAX_DIM_L: usize = 14;
/// Above this path length the counts leave `u128` range.
const NATIVE_PATH_LEN: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimOptions {
    /// `Essential` drops windows inside the closed hole, `Strict` only those
    /// inside the open hole.
    pub upper_mode: CertMode,
}

impl Default for DimOptions {
    fn default() -> Self {
        DimOptions { upper_mode: CertMode::Essential }
    }
}

/// A strongly connected set of lower-graph windows and the Collatz–Wielandt
/// ratio `μ = min_i (A x)_i / x_i` with `x = Σ_{j<=m} A^j 1`, so that
/// `ρ(A) >= μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccCertificate {
    pub half_len: usize,
    pub path_len: usize,
    /// Sorted node ids.
    pub nodes: Vec<u64>,
    pub mu_num: BigUint,
    pub mu_den: BigUint,
}

impl SccCertificate {
    /// `2 log₂ μ`.
    pub fn lower(&self) -> f64 {
        2.0 * (log2_big(&self.mu_num) - log2_big(&self.mu_den))
    }

    pub fn window(&self, id: u64) -> crate::symbolic::Window {
        window_of(id, self.half_len)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimBounds {
    pub lower: f64,
    pub upper: f64,
    pub half_len: usize,
    pub path_len: usize,
    pub upper_mode: CertMode,
    /// Words of length `path_len` in the trimmed upper graph.
    pub upper_words: BigUint,
    pub upper_nodes: usize,
    pub lower_nodes: usize,
    pub certificate: Option<SccCertificate>,
}

fn log2_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return n.to_f64().expect("fits").log2();
    }
    let shift = bits - 64;
    (n >> shift).to_f64().expect("fits").log2() + shift as f64
}

fn window_of(id: u64, half_len: usize) -> crate::symbolic::Window {
    let bits: Vec<u8> = (0..2 * half_len).rev().map(|i| ((id >> i) & 1) as u8).collect();
    crate::symbolic::Window::new(
        crate::words::Word::new(bits[..half_len].to_vec()),
        crate::words::Word::new(bits[half_len..].to_vec()),
    )
}

fn reverse_bits(v: u64, len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        v.reverse_bits() >> (64 - len)
    }
}

/// Grid cell `(X, Y)` at scale `2^L`: the box `[X, X+1] × [Y, Y+1] / 2^L`.
fn cell(id: u64, half_len: usize) -> (u64, u64) {
    let mask = (1u64 << half_len) - 1;
    (id & mask, reverse_bits(id >> half_len, half_len))
}

/// A rational `q` stored as `(⌊q⌋, q ∈ ℤ)`, compared against integers.
#[derive(Clone, Copy)]
struct Cut(i128, bool);

impl Cut {
    fn new(q: &Rat) -> Option<Cut> {
        let fl = q.floor().to_integer().to_i128()?;
        Some(Cut(fl, q.is_integer()))
    }
    fn gt(self, v: i128) -> bool {
        v > self.0
    }
    fn lt(self, v: i128) -> bool {
        if self.1 {
            v < self.0
        } else {
            v <= self.0
        }
    }
    fn eq(self, v: i128) -> bool {
        self.1 && v == self.0
    }
}

/// Integer form of `classify_box` for boxes of one grid scale.
struct FastPoly {
    planes: Vec<([i128; 3], Cut)>,
    x: (Cut, Cut),
    y: (Cut, Cut),
}

const FAST_BITS: u64 = 100;

impl FastPoly {
    fn new(poly: &ConvexPoly, half_len: usize) -> Option<FastPoly> {
        let scale = Rat::from_integer(BigInt::one() << half_len);
        let mut planes = Vec::new();
        for h in poly.planes() {
            let d = [&h.a, &h.b, &h.c].iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let dr = Rat::from_integer(d.clone());
            let coef = |r: &Rat, s: &Rat| -> Option<i128> {
                let v = (r * &dr * s).to_integer();
                (v.bits() <= FAST_BITS).then(|| v.to_i128()).flatten()
            };
            let one = Rat::one();
            let a = coef(&h.a, &one)?;
            let b = coef(&h.b, &one)?;
            let c = coef(&h.c, &scale)?;
            let pmax = poly.vertices().iter().map(|v| h.eval(v)).max().expect("vertices");
            let cut = Cut::new(&(pmax * &dr * &scale))?;
            if cut.0.unsigned_abs() >> FAST_BITS != 0 {
                return None;
            }
            planes.push(([a, b, c], cut));
        }
        let (xl, xh, yl, yh) = poly.bounds()?;
        Some(FastPoly {
            planes,
            x: (Cut::new(&(xl * &scale))?, Cut::new(&(xh * &scale))?),
            y: (Cut::new(&(yl * &scale))?, Cut::new(&(yh * &scale))?),
        })
    }

    fn classify(&self, xi: u64, yi: u64) -> BoxClass {
        let (x0, y0) = (xi as i128, yi as i128);
        let corners = [(x0, y0), (x0 + 1, y0), (x0 + 1, y0 + 1), (x0, y0 + 1)];
        let mut all_pos = true;
        let mut all_nonneg = true;
        for ([a, b, c], _) in &self.planes {
            for &(x, y) in &corners {
                let f = a * x + b * y + c;
                if f < 0 {
                    all_nonneg = false;
                    all_pos = false;
                } else if f == 0 {
                    all_pos = false;
                }
            }
        }
        if all_pos {
            return BoxClass::InsideOpen;
        }
        if all_nonneg {
            return BoxClass::InsideClosed;
        }
        let mut weak = false;
        for (lo, (plo, phi)) in [(x0, self.x), (y0, self.y)] {
            let hi = lo + 1;
            if plo.lt(hi) || phi.gt(lo) {
                return BoxClass::DisjointFromClosed;
            }
            if plo.eq(hi) || phi.eq(lo) {
                weak = true;
            }
        }
        for ([a, b, c], pmax) in &self.planes {
            let vals = corners.map(|(x, y)| a * x + b * y + c);
            let bmax = *vals.iter().max().expect("four corners");
            let bmin = *vals.iter().min().expect("four corners");
            if bmax < 0 {
                return BoxClass::DisjointFromClosed;
            }
            if bmax == 0 {
                weak = true;
            }
            if pmax.gt(bmin) {
                return BoxClass::DisjointFromClosed;
            }
            if pmax.eq(bmin) {
                weak = true;
            }
        }
        if weak {
            BoxClass::DisjointFromOpen
        } else {
            BoxClass::Straddles
        }
    }
}

enum PartTest {
    Fast(FastPoly),
    Exact(ConvexPoly),
}

fn exact_box(xi: u64, yi: u64, half_len: usize) -> Rect {
    let d = BigInt::one() << half_len;
    let r = |v: u64| Rat::new(BigInt::from(v), d.clone());
    Rect::new(r(xi), r(xi + 1), r(yi), r(yi + 1)).expect("ordered")
}

impl PartTest {
    fn classify(&self, xi: u64, yi: u64, half_len: usize) -> BoxClass {
        match self {
            PartTest::Fast(f) => f.classify(xi, yi),
            PartTest::Exact(p) => classify_box(&exact_box(xi, yi, half_len), p).expect("non-degenerate part"),
        }
    }
}

fn part_tests(h: &Hole, half_len: usize) -> Vec<PartTest> {
    h.parts()
        .iter()
        .filter(|p| !p.is_degenerate())
        .map(|p| match FastPoly::new(p, half_len) {
            Some(f) => PartTest::Fast(f),
            None => PartTest::Exact(p.clone()),
        })
        .collect()
}

struct Graph {
    half_len: usize,
    mask: u64,
}

impl Graph {
    fn succ(&self, id: usize) -> [usize; 2] {
        let s = ((id as u64) << 1) & self.mask;
        [s as usize, (s | 1) as usize]
    }

    fn pred(&self, id: usize) -> [usize; 2] {
        let p = (id as u64) >> 1;
        [p as usize, (p | (1 << (2 * self.half_len - 1))) as usize]
    }

    fn len(&self) -> usize {
        (self.mask + 1) as usize
    }

    /// Restrict `alive` to nodes lying on bi-infinite paths.
    fn trim(&self, alive: &mut [bool]) {
        let n = self.len();
        let mut out_deg: Vec<u8> = (0..n).map(|i| self.succ(i).iter().filter(|&&s| alive[s]).count() as u8).collect();
        let mut in_deg: Vec<u8> = (0..n).map(|i| self.pred(i).iter().filter(|&&p| alive[p]).count() as u8).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&i| alive[i] && (out_deg[i] == 0 || in_deg[i] == 0)).collect();
        while let Some(v) = queue.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for s in self.succ(v) {
                if alive[s] {
                    in_deg[s] -= 1;
                    if in_deg[s] == 0 {
                        queue.push(s);
                    }
                }
            }
            for p in self.pred(v) {
                if alive[p] {
                    out_deg[p] -= 1;
                    if out_deg[p] == 0 {
                        queue.push(p);
                    }
                }
            }
        }
    }

    /// Tarjan's algorithm without recursion; `u32::MAX` marks dead nodes.
    fn components(&self, alive: &[bool]) -> (Vec<u32>, u32) {
        const UNSET: u32 = u32::MAX;
        let n = self.len();
        let mut index = vec![UNSET; n];
        let mut low = vec![0u32; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![UNSET; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut counter = 0u32;
        let mut ncomp = 0u32;
        for root in 0..n {
            if !alive[root] || index[root] != UNSET {
                continue;
            }
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            call.push((root, 0));
            while let Some(top) = call.len().checked_sub(1) {
                let (v, ci) = call[top];
                if ci < 2 {
                    call[top].1 += 1;
                    let w = self.succ(v)[ci];
                    if !alive[w] {
                        continue;
                    }
                    if index[w] == UNSET {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(u, _)) = call.last() {
                        low[u] = low[u].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().expect("v is on the stack");
                            on_stack[w] = false;
                            comp[w] = ncomp;
                            if w == v {
                                break;
                            }
                        }
                        ncomp += 1;
                    }
                }
            }
        }
        (comp, ncomp)
    }
}

trait Count: Clone + Zero + One + Ord + Send + Sync + Add<Output = Self> + Mul<Output = Self> {
    fn to_big(&self) -> BigUint;
}

impl Count for u128 {
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for BigUint {
    fn to_big(&self) -> BigUint {
        self.clone()
    }
}

/// Number of walks with `steps` edges inside `alive`.
fn walk_count<T: Count>(g: &Graph, alive: &[bool], steps: usize) -> BigUint {
    let n = g.len();
    let mut cur: Vec<T> = (0..n).map(|i| if alive[i] { T::one() } else { T::zero() }).collect();
    for _ in 0..steps {
        cur = (0..n)
            .into_par_iter()
            .map(|i| {
                if !alive[i] {
                    return T::zero();
                }
                g.succ(i).iter().fold(T::zero(), |acc, &s| acc + cur[s].clone())
            })
            .collect();
    }
    cur.iter().fold(BigUint::zero(), |acc, c| acc + c.to_big())
}

/// Per component: `min_i (A x)_i / x_i` over edges internal to the component.
fn collatz_wielandt<T: Count>(g: &Graph, comp: &[u32], ncomp: u32, path_len: usize) -> Vec<Option<(T, T)>> {
    let n = g.len();
    let inner = |i: usize, v: &[T]| -> T {
        g.succ(i).iter().filter(|&&s| comp[s] == comp[i]).fold(T::zero(), |acc, &s| acc + v[s].clone())
    };
    let live = |i: usize| comp[i] != u32::MAX;
    let mut cur: Vec<T> = (0..n).map(|i| if live(i) { T::one() } else { T::zero() }).collect();
    let mut acc = cur.clone();
    for _ in 0..path_len {
        cur = (0..n).into_par_iter().map(|i| if live(i) { inner(i, &cur) } else { T::zero() }).collect();
        acc = acc.into_par_iter().zip(cur.par_iter()).map(|(a, c)| a + c.clone()).collect();
    }
    let mut best: Vec<Option<(T, T)>> = vec![None; ncomp as usize];
    let mut internal = vec![false; ncomp as usize];
    for i in (0..n).filter(|&i| live(i)) {
        let c = comp[i] as usize;
        if g.succ(i).iter().any(|&s| comp[s] == comp[i]) {
            internal[c] = true;
        }
        let num = inner(i, &acc);
        let den = acc[i].clone();
        let replace = match &best[c] {
            None => true,
            Some((bn, bd)) => num.clone() * bd.clone() < bn.clone() * den.clone(),
        };
        if replace {
            best[c] = Some((num, den));
        }
    }
    best.into_iter().zip(internal).map(|(b, keep)| b.filter(|_| keep)).collect()
}

fn reduce(num: BigUint, den: BigUint) -> (BigUint, BigUint) {
    let g = num.gcd(&den);
    (num / &g, den / g)
}

/// `dim_bounds_with` using the default options.
pub fn dim_bounds(h: &Hole, half_len: usize, path_len: usize) -> Result<DimBounds, AnalysisError> {
    dim_bounds_with(h, half_len, path_len, DimOptions::default())
}

/// Certified `(lower, upper)` bounds on the dimension of the survivor set,
/// from windows of half-length `half_len` and words of length `path_len`.
pub fn dim_bounds_with(
    h: &Hole,
    half_len: usize,
    path_len: usize,
    opts: DimOptions,
) -> Result<DimBounds, AnalysisError> {
    if half_len == 0 || half_len > MAX_DIM_L {
        return Err(AnalysisError::Resource(format!("L = {half_len} outside 1..={MAX_DIM_L}")));
    }
    if path_len < 2 * half_len {
        return Err(AnalysisError::Domain(format!("path length {path_len} below window length {}", 2 * half_len)));
    }
    let g = Graph { half_len, mask: (1u64 << (2 * half_len)) - 1 };
    let tests = part_tests(h, half_len);
    let flags: Vec<(bool, bool)> = (0..g.len())
        .into_par_iter()
        .map(|id| {
            let (xi, yi) = cell(id as u64, half_len);
            let mut upper = true;
            let mut lower = true;
            for t in &tests {
                let class = t.classify(xi, yi, half_len);
                upper &= match opts.upper_mode {
                    CertMode::Essential => !class.inside_closed(),
                    CertMode::Strict => class != BoxClass::InsideOpen,
                };
                lower &= class.disjoint_from_open();
            }
            (upper, lower)
        })
        .collect();
    let mut up: Vec<bool> = flags.iter().map(|f| f.0).collect();
    let mut low: Vec<bool> = flags.iter().map(|f| f.1).collect();
    drop(flags);
    g.trim(&mut up);
    g.trim(&mut low);

    let steps = path_len - 2 * half_len;
    let upper_words = if path_len <= NATIVE_PATH_LEN {
        walk_count::<u128>(&g, &up, steps)
    } else {
        walk_count::<BigUint>(&g, &up, steps)
    };
    let upper = if upper_words.is_zero() { 0.0 } else { 2.0 * log2_big(&upper_words) / path_len as f64 };

    let (comp, ncomp) = g.components(&low);
    let ratios: Vec<Option<(BigUint, BigUint)>> = if path_len <= NATIVE_PATH_LEN {
        collatz_wielandt::<u128>(&g, &comp, ncomp, path_len)
            .into_iter()
            .map(|r| r.map(|(a, b)| (BigUint::from(a), BigUint::from(b))))
            .collect()
    } else {
        collatz_wielandt::<BigUint>(&g, &comp, ncomp, path_len)
    };
    let mut best: Option<(u32, BigUint, BigUint)> = None;
    for (c, r) in ratios.into_iter().enumerate() {
        if let Some((num, den)) = r {
            let better = match &best {
                None => true,
                Some((_, bn, bd)) => &num * bd > bn * &den,
            };
            if better {
                best = Some((c as u32, num, den));
            }
        }
    }
    let certificate = best.map(|(c, num, den)| {
        let (mu_num, mu_den) = reduce(num, den);
        let nodes = (0..g.len()).filter(|&i| comp[i] == c).map(|i| i as u64).collect();
        SccCertificate { half_len, path_len, nodes, mu_num, mu_den }
    });
    let lower = certificate.as_ref().map_or(0.0, |c| c.lower().max(0.0));
    Ok(DimBounds {
        lower,
        upper,
        half_len,
        path_len,
        upper_mode: opts.upper_mode,
        upper_words,
        upper_nodes: up.iter().filter(|&&b| b).count(),
        lower_nodes: low.iter().filter(|&&b| b).count(),
        certificate,
    })
}

/// Re-check a certificate from scratch with exact rational geometry: every
/// window box is disjoint from the open hole, the node set is strongly
/// connected, and `μ` recomputes to the stated value.
pub fn verify_certificate(h: &Hole, cert: &SccCertificate) -> bool {
    let l = cert.half_len;
    if l == 0 || l > MAX_DIM_L || cert.nodes.is_empty() {
        return false;
    }
    let mask = (1u64 << (2 * l)) - 1;
    let set: std::collections::BTreeMap<u64, usize> = cert.nodes.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    if set.len() != cert.nodes.len() || cert.nodes.iter().any(|&id| id > mask) {
        return false;
    }
    let parts: Vec<&ConvexPoly> = h.parts().iter().filter(|p| !p.is_degenerate()).collect();
    let boxes_ok = cert.nodes.par_iter().all(|&id| {
        let b = crate::symbolic::cylinder_box(&window_of(id, l));
        parts.iter().all(|p| classify_box(&b, p).expect("non-degenerate").disjoint_from_open())
    });
    if !boxes_ok {
        return false;
    }
    let succ: Vec<Vec<usize>> = cert
        .nodes
        .iter()
        .map(|&id| {
            let s = (id << 1) & mask;
            [s, s | 1].iter().filter_map(|t| set.get(t).copied()).collect()
        })
        .collect();
    let reach = |adj: &[Vec<usize>]| {
        let mut seen = vec![false; adj.len()];
        let mut todo = vec![0usize];
        seen[0] = true;
        while let Some(v) = todo.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    let mut pred = vec![Vec::new(); succ.len()];
    for (v, ws) in succ.iter().enumerate() {
        for &w in ws {
            pred[w].push(v);
        }
    }
    if succ.iter().all(|s| s.is_empty()) || !reach(&succ) || !reach(&pred) {
        return false;
    }
    let step = |v: &[BigUint]| -> Vec<BigUint> {
        succ.iter().map(|ws| ws.iter().fold(BigUint::zero(), |a, &w| a + &v[w])).collect()
    };
    let mut cur = vec![BigUint::one(); succ.len()];
    let mut acc = cur.clone();
    for _ in 0..cert.path_len {
        cur = step(&cur);
        acc = acc.iter().zip(&cur).map(|(a, c)| a + c).collect();
    }
    let ax = step(&acc);
    let (mut bn, mut bd) = (ax[0].clone(), acc[0].clone());
    for (n, d) in ax.iter().zip(&acc) {
        if n * &bd < &bn * d {
            bn = n.clone();
            bd = d.clone();
        }
    }
    reduce(bn, bd) == (cert.mu_num.clone(), cert.mu_den.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holes::{delta, named_hole, p_k};
    use crate::symbolic::cylinder_box;

    #[test]
    fn full_shift() {
        let b = dim_bounds(&Hole::empty(), 2, 16).unwrap();
        assert_eq!((b.lower, b.upper), (2.0, 2.0));
        assert_eq!(b.upper_words, BigUint::one() << 16);
        let c = b.certificate.unwrap();
        assert_eq!((c.mu_num, c.mu_den), (BigUint::from(2u32), BigUint::one()));
    }

    #[test]
    fn cells_match_cylinders() {
        let l = 3;
        for id in 0..64u64 {
            let (xi, yi) = cell(id, l);
            assert_eq!(exact_box(xi, yi, l), cylinder_box(&window_of(id, l)));
        }
    }

    #[test]
    fn fast_classifier_agrees_with_exact() {
        let holes = [
            Hole::convex("delta", delta()),
            Hole::convex("p1", p_k(1).unwrap()),
            named_hole("hull-dd").unwrap(),
            named_hole("box:0.3,0.7,0.3,0.7").unwrap(),
            named_hole("h-script").unwrap(),
        ];
        for h in &holes {
            for l in 1..=4 {
                for p in h.parts() {
                    let f = FastPoly::new(p, l).expect("small coefficients");
                    for id in 0..1u64 << (2 * l) {
                        let (xi, yi) = cell(id, l);
                        let exact = classify_box(&exact_box(xi, yi, l), p).unwrap();
                        assert_eq!(f.classify(xi, yi), exact, "{} L={l} id={id}", h.name);
                    }
                }
            }
        }
    }

    #[test]
    fn bounds_ordered_and_certified() {
        for name in ["delta", "pk:1", "box:1/4,3/4,1/4,3/4", "h-script"] {
            let h = named_hole(name).unwrap();
            for l in [2, 3, 4] {
                let b = dim_bounds(&h, l, 4 * l).unwrap();
                assert!(0.0 <= b.lower && b.lower <= b.upper && b.upper <= 2.0, "{name} {b:?}");
                if let Some(c) = &b.certificate {
                    assert!(verify_certificate(&h, c), "{name} L={l}");
                }
            }
        }
    }

    #[test]
    fn upper_is_monotone_in_window_length() {
        let h = Hole::convex("delta", delta());
        let m = 16;
        let mut prev = f64::INFINITY;
        for l in [2, 4, 6, 8] {
            let b = dim_bounds(&h, l, m).unwrap();
            assert!(b.upper <= prev, "L = {l}");
            prev = b.upper;
        }
    }

    #[test]
    fn strict_upper_dominates_essential() {
        let h = Hole::convex("delta", delta());
        let e = dim_bounds(&h, 4, 16).unwrap();
        let s = dim_bounds_with(&h, 4, 16, DimOptions { upper_mode: CertMode::Strict }).unwrap();
        assert!(s.upper >= e.upper);
    }

    #[test]
    fn tampered_certificate_rejected() {
        let h = named_hole("box:0.3,0.7,0.3,0.7").unwrap();
        let mut c = dim_bounds(&h, 3, 12).unwrap().certificate.unwrap();
        assert!(verify_certificate(&h, &c));
        c.mu_num += 1u32;
        assert!(!verify_certificate(&h, &c));
    }

    #[test]
    fn guards() {
        assert!(dim_bounds(&Hole::empty(), 15, 60).is_err());
        assert!(dim_bounds(&Hole::empty(), 4, 7).is_err());
    }
}
