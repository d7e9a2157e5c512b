use criterion::{black_box, criterion_group, criterion_main, Criterion};
use euclid_frieze::transjective::integer_frieze;
use euclid_frieze::{Engine, EuclideanType, Evaluator, Lambda, LaurentPoly, ObjectSpec, RegularIndex, ZQPoint};
use euclid_frieze_bench::{homogeneous_mouth, model};

fn characters(c: &mut Criterion) {
    let e6 = model(EuclideanType::E6);
    let mut g = c.benchmark_group("character");
    g.sample_size(10);
    g.bench_function("E6 homogeneous, mesh", |b| {
        b.iter(|| Evaluator::new(&e6).with_engine(Engine::Mesh).character(black_box(&homogeneous_mouth())).unwrap())
    });
    g.bench_function("E6 rank-3 tube, quasi-length 2", |b| {
        let obj = ObjectSpec::Regular(RegularIndex::new(Lambda::One, 1, 2));
        b.iter(|| Evaluator::new(&e6).character(black_box(&obj)).unwrap())
    });
    let e7 = model(EuclideanType::E7);
    g.bench_function("E7 homogeneous, modular", |b| {
        b.iter(|| Evaluator::new(&e7).with_engine(Engine::Modular).character(black_box(&homogeneous_mouth())).unwrap())
    });
    g.finish();
}

fn integers(c: &mut Criterion) {
    let e8 = model(EuclideanType::E8);
    c.bench_function("E8 integer frieze to slice 40", |b| {
        b.iter(|| {
            let mut f = integer_frieze(&e8);
            (0..e8.n()).map(|i| f.value(ZQPoint::new(40, i)).unwrap()).count()
        })
    });
    c.bench_function("E8 Euler characteristic, homogeneous", |b| {
        b.iter(|| Evaluator::new(&e8).integer_value(black_box(&homogeneous_mouth())).unwrap())
    });
}

fn division(c: &mut Criterion) {
    let e6 = model(EuclideanType::E6);
    let x = Evaluator::new(&e6).character(&homogeneous_mouth()).unwrap();
    let y = x.add_constant(1);
    let p = x.mul(&y);
    c.bench_function("exact division, 322-term divisor", |b| {
        b.iter(|| black_box(&p).exact_div(black_box(&y)).unwrap())
    });
    let names = e6.var_names();
    let text = p.render(&names);
    c.bench_function("parse a rendered product", |b| b.iter(|| LaurentPoly::parse(black_box(&text), &names).unwrap()));
}

criterion_group!(benches, characters, integers, division);
criterion_main!(benches);
