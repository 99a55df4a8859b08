use baker_core::analysis::{certify_forbidden, dim_bounds, omega_count, scan_cycles, CertMode};
use baker_core::exact_geom::{classify_box, rat, Rect};
use baker_core::holes::{delta, named_hole};
use baker_core::symbolic::Window;
use baker_core::trap_search::{self, cantor_orbit, SearchConfig};
use baker_core::words::Word;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn geometry(c: &mut Criterion) {
    let poly = delta();
    let boxes: Vec<Rect> = (0..16)
        .flat_map(|i| (0..16).map(move |j| Rect::new(rat(i, 16), rat(i + 1, 16), rat(j, 16), rat(j + 1, 16)).unwrap()))
        .collect();
    c.bench_function("classify_box 16x16 grid vs delta", |b| {
        b.iter(|| boxes.iter().filter(|r| classify_box(black_box(r), &poly).unwrap().inside_closed()).count())
    });
}

fn analysis(c: &mut Criterion) {
    let h = named_hole("delta1").unwrap();
    let w: Window = "1110111·011110".parse().unwrap();
    c.bench_function("certify_forbidden delta1", |b| {
        b.iter(|| certify_forbidden(black_box(&w), &h, CertMode::Essential))
    });
    let p1 = named_hole("p:1/2").unwrap();
    c.bench_function("scan_cycles p:1/2 period 10", |b| b.iter(|| scan_cycles(black_box(&p1), 10).unwrap()));
    let d = named_hole("delta").unwrap();
    c.bench_function("dim_bounds delta L=6", |b| b.iter(|| dim_bounds(black_box(&d), 6, 24).unwrap()));
    c.bench_function("omega_count n=5", |b| b.iter(|| omega_count(black_box(5)).unwrap()));
}

fn search(c: &mut Criterion) {
    let cfg = SearchConfig::rotational(3);
    let (a, bw) = (Word::from_bits("001"), Word::from_bits("110"));
    c.bench_function("cantor_orbit 001,110", |b| {
        b.iter(|| cantor_orbit(black_box(&a), &bw, &cfg.epsilon, None).unwrap())
    });
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("rotational length 3", |b| b.iter(|| trap_search::run(black_box(&cfg)).unwrap()));
    group.finish();
}

criterion_group!(benches, geometry, analysis, search);
criterion_main!(benches);
