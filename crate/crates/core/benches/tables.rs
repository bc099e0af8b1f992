use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use vhp::benchmarks::{figure_data, run_table, FigureId, TableId};
use vhp::oracle::{auto_grid, bracket_scan};
use vhp::{Execution, PotentialForm, PotentialParams, QuantumNumbers};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_table");
    group.sample_size(10);
    for id in [TableId::Hellmann, TableId::Yukawa] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, id), &id, |b, &id| {
                b.iter(|| run_table(id, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn figures(c: &mut Criterion) {
    let mut group = c.benchmark_group("figure_data");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "potential"), |b| {
            b.iter(|| figure_data(FigureId::Potential, exec).unwrap())
        });
    }
    group.finish();
}

fn scan(c: &mut Criterion) {
    let params = PotentialParams::hellmann(2.0, -1.0, 0.01).unwrap();
    let grid = auto_grid(&params, QuantumNumbers::new(3, 0), -0.1).unwrap();
    let mut group = c.benchmark_group("bracket_scan");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                bracket_scan(
                    &params,
                    0,
                    PotentialForm::Full,
                    &grid,
                    (-2.5, -0.01),
                    200,
                    exec,
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, tables, figures, scan);
criterion_main!(benches);
