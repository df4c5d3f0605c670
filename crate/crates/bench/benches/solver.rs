use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sieve_sparing::generate::{cycle, path, random_connected};
use sieve_sparing::oracle::sparing_number_bruteforce_sets;
use sieve_sparing::sieve::k_sieve;
use sieve_sparing::sparing::{sparing_number, DEFAULT_BUDGET};

fn solver(c: &mut Criterion) {
    let c50 = k_sieve(&cycle(50).unwrap(), 4).unwrap();
    c.bench_function("sparing C50 4-sieve", |b| {
        b.iter(|| sparing_number(black_box(&c50), DEFAULT_BUDGET).unwrap())
    });

    let p24 = k_sieve(&path(24).unwrap(), 6).unwrap();
    c.bench_function("sparing P24 6-sieve", |b| {
        b.iter(|| sparing_number(black_box(&p24), DEFAULT_BUDGET).unwrap())
    });

    let g = random_connected(16, 0.3, 11).unwrap();
    c.bench_function("sparing G(16, 0.3)", |b| {
        b.iter(|| sparing_number(black_box(&g), DEFAULT_BUDGET).unwrap())
    });
    c.bench_function("set oracle G(16, 0.3)", |b| {
        b.iter(|| sparing_number_bruteforce_sets(black_box(&g)).unwrap())
    });
}

fn sieve(c: &mut Criterion) {
    let g = random_connected(200, 0.02, 3).unwrap();
    c.bench_function("k_sieve G(200, 0.02) k=3", |b| {
        b.iter(|| k_sieve(black_box(&g), 3).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = solver, sieve
}
criterion_main!(benches);
