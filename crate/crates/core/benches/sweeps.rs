//! Sequential vs rayon-parallel execution of the two heavy sweeps: the
//! lattice polygon search and a dense Clifford-bound sweep.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tiltstab_core::chern::Variety;
use tiltstab_core::clifford::{clifford_bound, clifford_bound_bruteforce, rational_samples};
use tiltstab_core::par::Exec;
use tiltstab_core::s;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bruteforce(c: &mut Criterion) {
    let geom = Variety::Triple.geometry();
    let t = s("3/8");
    let mut g = c.benchmark_group("bruteforce_grid32");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| clifford_bound_bruteforce(black_box(&t), &geom, 32, exec).unwrap())
        });
    }
    g.finish();
}

fn clifford_sweep(c: &mut Criterion) {
    let geom = Variety::Double.geometry();
    let ts = rational_samples(&s("3/2"), &s("2"), 200);
    let mut g = c.benchmark_group("clifford_sweep_200");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| exec.map(black_box(&ts), |t| clifford_bound(t, &geom).unwrap().bound))
        });
    }
    g.finish();
}

criterion_group!(benches, bruteforce, clifford_sweep);
criterion_main!(benches);
