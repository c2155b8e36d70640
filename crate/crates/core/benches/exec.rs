use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use vbridge_core::algebra::{enumerate_endos, make_dihedral};
use vbridge_core::coloring::enumerate_colorings_with;
use vbridge_core::diagram::{builtin_knots, pretzel, torus_2n};
use vbridge_core::enhance::column_group_multiset_with;
use vbridge_core::exec::Exec;
use vbridge_core::quiver::build_quiver_with;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn colorings(c: &mut Criterion) {
    let d = pretzel(&[9, 2, 9]).unwrap();
    let y = make_dihedral(27).unwrap().into_biquandle();
    let mut g = c.benchmark_group("enumerate_colorings");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "P(9,2,9)/R27"), |b| {
            b.iter(|| enumerate_colorings_with(black_box(&d), &y, exec))
        });
    }
    g.finish();
}

fn quivers(c: &mut Criterion) {
    let d = torus_2n(6).unwrap();
    let y = make_dihedral(12).unwrap().into_biquandle();
    let s = enumerate_endos(&y);
    let mut g = c.benchmark_group("build_quiver");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "T(2,6)/R12/all"), |b| {
            b.iter(|| build_quiver_with(black_box(&d), &y, &s, exec).unwrap())
        });
    }
    g.finish();
}

fn column_groups(c: &mut Criterion) {
    let d = builtin_knots().get("9_24").unwrap().diagram.clone();
    let q = make_dihedral(15).unwrap();
    let mut g = c.benchmark_group("column_groups");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "9_24/R15"), |b| {
            b.iter(|| column_group_multiset_with(black_box(&d), &q, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, colorings, quivers, column_groups);
criterion_main!(benches);
