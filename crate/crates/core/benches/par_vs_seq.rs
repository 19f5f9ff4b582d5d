use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use congruent::footprints::verify_tables;
use congruent::{fermat, recurrence, suite, trinity, Exec};

const MODES: [(&str, Exec); 2] = [("seq", Exec::Sequential), ("par", Exec::Parallel)];

fn footprint_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("footprint_tables");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| black_box(verify_tables(None, e)))
        });
    }
    g.finish();
}

fn derivative_identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("derivative_identities");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| black_box(trinity::verify_derivative_identities(3, 3, e)))
        });
    }
    g.finish();
}

fn fermat_nodes(c: &mut Criterion) {
    let tree = fermat::enumerate(6).expect("depth 6 tree");
    let mut g = c.benchmark_group("fermat_nodes");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| b.iter(|| black_box(tree.verify(e))));
    }
    g.finish();
}

fn recurrence_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("recurrence_table");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| black_box(recurrence::table_check(e)))
        });
    }
    g.finish();
}

fn property_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("property_suite");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| b.iter(|| black_box(suite::run(2, e))));
    }
    g.finish();
}

criterion_group!(benches, footprint_tables, derivative_identities, fermat_nodes, recurrence_table, property_suite);
criterion_main!(benches);
