//! Parallel scans against the same scans on a single-thread pool.
//!
//! `cargo bench` compares the global rayon pool with a one-thread pool;
//! `cargo bench --no-default-features` runs the sequential build.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use quandle::constructions::{builtin_corpus, burnside_family};
use quandle::homology::{homology, Complex};
use quandle::identities::{enumerate_words, satisfies, scan, Word, WordFilter};
use quandle::shell::harness;
use quandle::QuandleTable;

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let threads = rayon::current_num_threads();
    let build = |n| rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool");
    vec![("sequential", build(1)), ("parallel", build(threads))]
}

fn bench_word_scan(c: &mut Criterion) {
    let corpus: Vec<QuandleTable> = builtin_corpus().into_iter().map(|n| n.table).collect();
    let words = enumerate_words(7, 2, WordFilter::NontrivialCandidates);
    let mut group = c.benchmark_group("length7_scan");
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(scan(&corpus, &words))))
        });
    }
    group.finish();
}

fn bench_satisfies(c: &mut Criterion) {
    let q = burnside_family(2, 3, 5).expect("order 625");
    let w = Word::cyclic_repetition(2, 3);
    let mut group = c.benchmark_group("satisfies_order625");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(satisfies(&q, &w).satisfied)))
        });
    }
    group.finish();
}

fn bench_cycle_check(c: &mut Criterion) {
    let corpus = builtin_corpus();
    let mut group = c.benchmark_group("cycle_check");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(harness::cycle_check(&corpus))))
        });
    }
    group.finish();
}

fn bench_homology(c: &mut Criterion) {
    let q = quandle::constructions::alexander_zn(5, 2).expect("unit");
    let mut group = c.benchmark_group("rack_homology_h3");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(homology(&q, &Complex::Rack, 3).expect("within guard"))))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_word_scan, bench_satisfies, bench_cycle_check, bench_homology);
criterion_main!(benches);
