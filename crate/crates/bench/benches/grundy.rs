use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use wythoff_core::formulas::formula_p_wk;
use wythoff_core::{grundy_table, Ruleset};

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("grundy_table");
    group.sample_size(10);
    for rs in [Ruleset::Wythoff, Ruleset::Wk { k: 3 }, Ruleset::Tk { k: 1 }, Ruleset::Wkl { k: 1, l: 4 }] {
        for n in [100, 200] {
            group.bench_with_input(BenchmarkId::new(rs.to_string(), n), &n, |b, &n| {
                b.iter(|| grundy_table(black_box(rs), n).unwrap())
            });
        }
    }
    group.finish();
}

fn formulas(c: &mut Criterion) {
    c.bench_function("formula_p_wk/k=5,N=100000", |b| {
        b.iter(|| formula_p_wk(black_box(5), 100_000))
    });
}

criterion_group!(benches, tables, formulas);
criterion_main!(benches);
