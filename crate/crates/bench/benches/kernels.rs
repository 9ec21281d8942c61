use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use tauspin::catalog::builtin_octet;
use tauspin::clifford_cpt::{double_conjugation_sign, gamma_basis};
use tauspin::mass_model::{gmo_fit, search_rep, FitOptions};
use tauspin::rep_core::{check_ladder_relations, product_operators};
use tauspin::rwe::lambda3_generalized;
use tauspin::{CliffordSignature, HalfInt, OctetName, RepLabel};

fn clifford(c: &mut Criterion) {
    for (p, q) in [(1, 3), (4, 4), (6, 6)] {
        let sig = CliffordSignature::new(p, q);
        c.bench_function(&format!("gamma_basis Cl{p},{q}"), |b| b.iter(|| gamma_basis(black_box(sig)).unwrap()));
    }
    c.bench_function("double_conjugation Cl2,6", |b| {
        b.iter(|| double_conjugation_sign(black_box(CliffordSignature::new(2, 6))).unwrap())
    });
}

fn representations(c: &mut Criterion) {
    c.bench_function("lambda3 proton", |b| {
        b.iter(|| lambda3_generalized(black_box(HalfInt::from_twice(59)), black_box(HalfInt::from_twice(58))))
    });
    let ops = product_operators(RepLabel::from_twice(20, 19));
    c.bench_function("ladder relations (10, 19/2)", |b| b.iter(|| check_ladder_relations(black_box(&ops))));
    c.bench_function("search_rep 1800", |b| b.iter(|| search_rep(black_box(1800.0), HalfInt::HALF, 10).unwrap()));
}

fn fits(c: &mut Criterion) {
    let obs = builtin_octet(OctetName::F12).observations();
    let opts = FitOptions::default();
    c.bench_function("gmo_fit F12", |b| b.iter(|| gmo_fit(black_box(&obs), &opts).unwrap()));
}

criterion_group!(benches, clifford, representations, fits);
criterion_main!(benches);
