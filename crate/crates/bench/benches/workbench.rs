use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use clustergrade::cluster::mutate_seed;
use clustergrade::explore::{enumerate, Limits};
use clustergrade::frieze::{fan_slice, knit_strip, label_diagonals};
use clustergrade::roots::{bipartite_seed, positive_roots};
use clustergrade::zlinalg::{hermite_normal_form, kernel_basis, IntMatrix};
use clustergrade_bench::walked_seed;

fn bench_hnf(c: &mut Criterion) {
    // Entries from a fixed linear-congruential stream: deterministic and
    // dependency-free.
    let mut state = 0x2545f4914f6cdd1du64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % 19) as i64 - 9
    };
    let m = IntMatrix::from_fn(12, 12, |_, _| next().into());
    c.bench_function("hnf_12x12", |b| {
        b.iter(|| hermite_normal_form(black_box(&m)))
    });
    c.bench_function("kernel_basis_12x12", |b| {
        b.iter(|| kernel_basis(black_box(&m)))
    });
}

fn bench_mutation(c: &mut Criterion) {
    let deep = walked_seed("A9", &[0, 2, 4, 6, 8, 1, 3, 5, 7, 0, 2, 4]);
    c.bench_function("mutate_deep_a9", |b| {
        b.iter_batched(
            || deep.clone(),
            |seed| mutate_seed(black_box(&seed), 4).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("d5", |b| {
        b.iter(|| enumerate(black_box(&bipartite_seed("D5".parse().unwrap())), &limits))
    });
    group.bench_function("a7", |b| {
        b.iter(|| enumerate(black_box(&bipartite_seed("A7".parse().unwrap())), &limits))
    });
    group.finish();
}

fn bench_roots(c: &mut Criterion) {
    c.bench_function("positive_roots_e8", |b| {
        b.iter(|| positive_roots(black_box("E8".parse().unwrap())))
    });
}

fn bench_frieze(c: &mut Criterion) {
    let t = "A5".parse().unwrap();
    let seed = bipartite_seed(t);
    c.bench_function("label_diagonals_a5", |b| {
        b.iter(|| label_diagonals(t, black_box(&seed)).unwrap())
    });
    let labels = label_diagonals(t, &seed).unwrap();
    let slice = fan_slice(t, &labels).unwrap();
    c.bench_function("knit_a5_six_periods", |b| {
        b.iter(|| knit_strip(t, black_box(&slice), 0..48).unwrap())
    });
}

criterion_group!(
    benches,
    bench_hnf,
    bench_mutation,
    bench_enumerate,
    bench_roots,
    bench_frieze
);
criterion_main!(benches);
