//! Benchmarks for the rewriting kernel and the operations built on it.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use coadq_bench::{random_poly, random_word, rng};
use coadq_core::uh::{pbw_normal_form, RewriteStrategy};
use coadq_core::{
    CasimirShift, HPoly, LieAlgebra, Monomial, Orbit, QuantizedOrbitAlgebra, Rational,
    StarOrdering, StarProduct, SymCache, UhElement,
};

fn bench_pbw_rewriting(c: &mut Criterion) {
    let sl2 = LieAlgebra::sl2();
    let sl3 = LieAlgebra::sl3();
    let mut r = rng(11);
    let sl2_words: Vec<Vec<usize>> = (0..64).map(|_| random_word(&mut r, 3, 8)).collect();
    let sl3_words: Vec<Vec<usize>> = (0..64).map(|_| random_word(&mut r, 8, 6)).collect();
    c.bench_function("pbw_normal_form/sl2_len8", |b| {
        b.iter(|| {
            for w in &sl2_words {
                black_box(pbw_normal_form(
                    vec![(w.clone(), HPoly::one())],
                    &sl2,
                    RewriteStrategy::LeftmostFirst,
                ));
            }
        })
    });
    c.bench_function("pbw_normal_form/sl3_len6", |b| {
        b.iter(|| {
            for w in &sl3_words {
                black_box(pbw_normal_form(
                    vec![(w.clone(), HPoly::one())],
                    &sl3,
                    RewriteStrategy::LeftmostFirst,
                ));
            }
        })
    });
}

fn bench_symmetrize(c: &mut Criterion) {
    let l = LieAlgebra::sl2();
    let mut r = rng(23);
    let polys: Vec<_> = (0..16).map(|_| random_poly(&mut r, 3, 5, 4)).collect();
    c.bench_function("symmetrize/sl2_deg5_cold", |b| {
        b.iter(|| {
            let cache = SymCache::new();
            for p in &polys {
                black_box(coadq_core::symmetrize(p, &l, &cache));
            }
        })
    });
}

fn bench_star_products(c: &mut Criterion) {
    let l = LieAlgebra::sl2();
    let mut r = rng(37);
    let pairs: Vec<_> = (0..16)
        .map(|_| {
            (
                random_poly(&mut r, 3, 3, 3).set_h_zero(),
                random_poly(&mut r, 3, 3, 3).set_h_zero(),
            )
        })
        .collect();
    for ordering in [StarOrdering::Pbw, StarOrdering::Sym] {
        let sp = StarProduct::new(l.clone(), ordering);
        c.bench_function(&format!("star/sl2_deg3_{}", ordering.label()), |b| {
            b.iter(|| {
                for (a, bq) in &pairs {
                    black_box(sp.star(a, bq).unwrap());
                }
            })
        });
    }
}

fn bench_ideal_reduce(c: &mut Criterion) {
    let l = LieAlgebra::sl2();
    let cc = Rational::one();
    let orbit = Orbit::new(
        l,
        vec![cc.clone()],
        vec![Rational::zero(), Rational::one(), cc.clone()],
    )
    .unwrap();
    let q = QuantizedOrbitAlgebra::new(
        orbit,
        CasimirShift::new(
            vec![HPoly::from_coeffs(vec![cc.clone(), Rational::one()])],
            &[cc],
        )
        .unwrap(),
    )
    .unwrap();
    let word = UhElement::from_term(Monomial(vec![6, 3, 3]), HPoly::one(), 3);
    c.bench_function("ideal_reduce/sl2_H6X3Y3", |b| {
        b.iter(|| black_box(q.ideal_reduce(&word).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_pbw_rewriting,
    bench_symmetrize,
    bench_star_products,
    bench_ideal_reduce
);
criterion_main!(benches);
