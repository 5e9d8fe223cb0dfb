use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use darboux_core::arith::rat_frac;
use darboux_core::certify::{build_structure, orbit_product};
use darboux_core::darboux::{general_cofactor_search, monomial_cofactor_search};
use darboux_core::deriv::{detect_cyclotomic_partition, gen_jouanolou};
use darboux_core::linalg::{determinant, nullspace, RationalMatrix};
use darboux_core::poly::groebner::{groebner_basis, TermOrder};
use darboux_core::poly::parse_polynomial;
use darboux_core::{DarbouxPair, SearchOptions, VariableContext};

/// Dense 12x12 Hilbert-like matrix with a rank drop in the last row.
fn test_matrix() -> RationalMatrix {
    let n = 12;
    let mut rows: Vec<Vec<_>> = (0..n - 1)
        .map(|i| (0..n).map(|j| rat_frac(1, (i + j + 1) as i64)).collect())
        .collect();
    let last = rows[0].iter().zip(&rows[1]).map(|(a, b)| a + b).collect();
    rows.push(last);
    RationalMatrix::from_rows(rows).unwrap()
}

fn linear_algebra(c: &mut Criterion) {
    let m = test_matrix();
    c.bench_function("determinant 12x12", |b| b.iter(|| determinant(black_box(&m)).unwrap()));
    c.bench_function("nullspace 12x12", |b| b.iter(|| nullspace(black_box(&m))));
}

fn search(c: &mut Criterion) {
    let j22 = gen_jouanolou(2, 2).unwrap();
    let j32 = gen_jouanolou(3, 2).unwrap();
    let opts = SearchOptions::default();
    c.bench_function("general search J(2,2) m=2", |b| {
        b.iter(|| general_cofactor_search(black_box(&j22), 2, &opts).unwrap())
    });
    c.bench_function("general search J(3,2) m=2", |b| {
        b.iter(|| general_cofactor_search(black_box(&j32), 2, &opts).unwrap())
    });
    c.bench_function("monomial-cofactor search J(3,2) m=3", |b| {
        b.iter(|| monomial_cofactor_search(black_box(&j32), 3).unwrap())
    });
}

fn orbit(c: &mut Criterion) {
    let d = gen_jouanolou(2, 2).unwrap();
    let ctx = d.context().clone();
    let st = build_structure(&d, &detect_cyclotomic_partition(&d).unwrap()).unwrap();
    let pair = DarbouxPair {
        f: parse_polynomial(&ctx, "(x1 - x2)^2*(x1^2 + x1*x2 + x2^2)").unwrap(),
        cofactor: parse_polynomial(&ctx, "-x1 - x2").unwrap(),
    };
    c.bench_function("orbit product J(2,2) deg 4", |b| {
        b.iter(|| orbit_product(black_box(&d), &st, &pair).unwrap())
    });
}

fn groebner(c: &mut Criterion) {
    let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
    let gens: Vec<_> = ["x^2 + y^2 + z^2 - 1", "x*y - z", "y^2 - x*z + 1"]
        .iter()
        .map(|t| parse_polynomial(&ctx, t).unwrap())
        .collect();
    c.bench_function("groebner grevlex 3 vars", |b| {
        b.iter(|| groebner_basis(black_box(&gens), TermOrder::Grevlex, 2_000_000).unwrap())
    });
    c.bench_function("groebner lex 3 vars", |b| {
        b.iter(|| groebner_basis(black_box(&gens), TermOrder::Lex, 2_000_000).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = linear_algebra, search, orbit, groebner
}
criterion_main!(benches);
