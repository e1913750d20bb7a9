use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use superq::centralizer::{enumerate_basis, Centralizer};
use superq::double::{r_coefficient, r_multiplicative};
use superq::hopf::Hopf;
use superq::rep::{c_matrix, RepContext};
use superq::{AlgebraSpec, Element, Gen};

fn pbw_products(c: &mut Criterion) {
    let u = AlgebraSpec::ubar(5).unwrap();
    let x = Element::word(u, &[(Gen::E1, 2), (Gen::E3, 1), (Gen::K1, 1)]).unwrap();
    let y = Element::word(u, &[(Gen::F2, 1), (Gen::F1, 3), (Gen::E2, 1)]).unwrap();
    c.bench_function("pbw product d=5", |b| b.iter(|| black_box(&x).try_mul(black_box(&y)).unwrap()));
}

fn coproduct(c: &mut Criterion) {
    let u = AlgebraSpec::ubar(5).unwrap();
    let hopf = Hopf::get(u).unwrap();
    let x = Element::word(u, &[(Gen::E1, 2), (Gen::E2, 1), (Gen::F1, 1)]).unwrap();
    c.bench_function("coproduct d=5", |b| b.iter(|| hopf.coproduct(black_box(&x)).unwrap()));
}

fn rmatrix(c: &mut Criterion) {
    let mut g = c.benchmark_group("rmatrix d=3");
    g.sample_size(10);
    g.bench_function("mult", |b| b.iter(|| r_multiplicative(3).unwrap()));
    g.bench_function("coeff", |b| b.iter(|| r_coefficient(3).unwrap()));
    g.finish();
}

fn braiding(c: &mut Criterion) {
    let rc = RepContext::new(7, 2).unwrap();
    c.bench_function("c matrix d=7", |b| b.iter(|| c_matrix(black_box(&rc)).unwrap()));
}

fn centralizer(c: &mut Criterion) {
    let mut g = c.benchmark_group("centralizer d=5 mu=1");
    g.sample_size(10);
    g.bench_function("basis n=3", |b| {
        b.iter(|| {
            let cz = Centralizer::new(5, 1, 3).unwrap();
            enumerate_basis(&cz).unwrap().len()
        })
    });
    g.bench_function("commutant n=3", |b| {
        b.iter(|| Centralizer::new(5, 1, 3).unwrap().commutant_dimension().unwrap().dim)
    });
    g.finish();
}

criterion_group!(benches, pbw_products, coproduct, rmatrix, braiding, centralizer);
criterion_main!(benches);
