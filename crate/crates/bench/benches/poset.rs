//! Poset construction and whole-diagram statistics across orders.

use bgposet::oracle::maximal_chain_total;
use bgposet::{beta_general, count_maximal_chains, sperner_decomposition, HassePoset};
use bgposet_bench::random_words;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bench_poset(c: &mut Criterion) {
    let mut group = c.benchmark_group("hasse_build");
    for n in [8usize, 16, 32] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| black_box(HassePoset::build(n).unwrap()))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("whole_diagram");
    for n in [8usize, 12] {
        let poset = HassePoset::build(n).unwrap();
        group.bench_with_input(BenchmarkId::new("butterflies", n), &poset, |b, poset| {
            b.iter(|| black_box(poset.butterflies().len()))
        });
        group.bench_with_input(
            BenchmarkId::new("maximal_chain_dp", n),
            &poset,
            |b, poset| b.iter(|| black_box(maximal_chain_total(poset))),
        );
        group.bench_with_input(BenchmarkId::new("maximal_chain_formula", n), &n, |b, &n| {
            b.iter(|| black_box(count_maximal_chains(n).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("sperner_paths", n), &n, |b, &n| {
            b.iter(|| black_box(sperner_decomposition(n).unwrap().len()))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("displacement_beta");
    for n in [16usize, 64] {
        let words = random_words(n, 128, 0xd15b);
        group.bench_with_input(BenchmarkId::from_parameter(n), &words, |b, words| {
            b.iter(|| {
                for p in words {
                    black_box(beta_general(p));
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_poset);
criterion_main!(benches);
