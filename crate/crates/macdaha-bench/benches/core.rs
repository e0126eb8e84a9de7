use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use macdaha::coeffdomain::rat;
use macdaha::daha::Daha;
use macdaha::macdonald::MacdonaldTable;
use macdaha::modular::ModularData;
use macdaha::{Params, RootSystem};

fn rational(label: &str) -> (Arc<RootSystem>, Params<macdaha::SpecPair>) {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let s: Vec<_> = (0..rs.num_classes()).map(|c| rat(5 + 2 * c as i64, 3)).collect();
    let p = Params::rational(&rs, rat(3, 7), &s).unwrap();
    (rs, p)
}

fn relations(c: &mut Criterion) {
    for label in ["A2", "B2"] {
        let rs = Arc::new(RootSystem::from_label(label).unwrap());
        let d = Daha::new(rs.clone(), Params::symbolic(&rs));
        c.bench_function(&format!("relations {label} cap 1"), |b| b.iter(|| black_box(d.verify_defining_relations(1))));
    }
}

fn polynomials(c: &mut Criterion) {
    for (label, w) in [("A2", vec![-2, -1]), ("B2", vec![-1, -1]), ("G2", vec![-1, 0])] {
        let (rs, p) = rational(label);
        c.bench_function(&format!("p_b {label} {w:?}"), |b| {
            b.iter(|| {
                let mut tb = MacdonaldTable::new(Daha::new(rs.clone(), p.clone()));
                black_box(tb.poly(&w).unwrap())
            })
        });
    }
    let rs = Arc::new(RootSystem::from_label("A2").unwrap());
    c.bench_function("p_b A2 [-1,-1] symbolic", |b| {
        b.iter(|| {
            let mut tb = MacdonaldTable::new(Daha::new(rs.clone(), Params::symbolic(&rs)));
            black_box(tb.poly(&[-1, -1]).unwrap())
        })
    });
}

fn duality(c: &mut Criterion) {
    let (rs, p) = rational("B2");
    let mut tb = MacdonaldTable::new(Daha::new(rs, p));
    c.bench_function("duality B2 (-1,0) (0,-1)", |b| b.iter(|| black_box(tb.duality_pair(&[-1, 0], &[0, -1]).unwrap())));
}

fn modular(c: &mut Criterion) {
    let mut g = c.benchmark_group("modular");
    g.sample_size(10);
    for (label, n) in [("A1", 8), ("A2", 4)] {
        let rs = Arc::new(RootSystem::from_label(label).unwrap());
        let k = vec![1; rs.num_classes()];
        g.bench_function(format!("build+verify {label} N={n}"), |b| {
            b.iter(|| {
                let md = ModularData::build(rs.clone(), n, &k).unwrap();
                black_box(md.verify(7).unwrap())
            })
        });
    }
    g.finish();
}

criterion_group!(benches, relations, polynomials, duality, modular);
criterion_main!(benches);
