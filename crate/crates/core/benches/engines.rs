use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use whittaker::klpoly::KlTable;
use whittaker::par::{self, Exec};
use whittaker::rootdata::build_algebra;
use whittaker::verify;
use whittaker::{AlgebraKind, WeylSubgroup};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn kl_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("kl_table");
    g.sample_size(10);
    for (name, group) in [("A4", WeylSubgroup::type_a(4)), ("C3", WeylSubgroup::type_c(3))] {
        for (mode, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(mode, name), &group, |b, grp| b.iter(|| KlTable::with_exec(grp, exec)));
        }
    }
    g.finish();
}

fn gl12_grid(c: &mut Criterion) {
    let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
    // one slice of the acceptance grid
    let cells: Vec<_> = verify::gl12_grid().into_iter().take(441).collect();
    let mut g = c.benchmark_group("gl12_cross_engine");
    g.sample_size(10);
    for (mode, exec) in MODES {
        g.bench_function(mode, |b| b.iter(|| par::map(exec, &cells, |l| verify::gl12_cell(&rs, l, true).unwrap())));
    }
    g.finish();
}

criterion_group!(benches, kl_tables, gl12_grid);
criterion_main!(benches);
