use criterion::{criterion_group, criterion_main, Criterion};
use delcat_core::delannoy::check_deletion_injectivity;
use delcat_core::exactnum::Cyclotomic;
use delcat_core::ofrob::{check_axioms, ordered_model};
use delcat_core::symfunc::{complete, elementary, plethysm};

fn cyclotomic_mul(c: &mut Criterion) {
    let a = Cyclotomic::root_of_unity(21, 1) + Cyclotomic::root_of_unity(21, 5);
    let b = Cyclotomic::root_of_unity(21, 2) + Cyclotomic::root_of_unity(21, 16);
    c.bench_function("cyclotomic mul order 21", |bench| {
        bench.iter(|| std::hint::black_box(&a).mul_ref(std::hint::black_box(&b)))
    });
}

fn plethysm_sym2_sym2(c: &mut Criterion) {
    c.bench_function("plethysm sym2 of sym2", |bench| {
        bench.iter(|| {
            let h2 = complete(2, 6).unwrap();
            plethysm(&h2, &h2, 6).unwrap()
        })
    });
}

fn deletion_injectivity(c: &mut Criterion) {
    c.bench_function("deletion injectivity length 10", |bench| {
        bench.iter(|| check_deletion_injectivity(std::hint::black_box(10)))
    });
}

fn ordered_model_axioms(c: &mut Criterion) {
    c.bench_function("ordered model axioms n=5", |bench| {
        bench.iter(|| check_axioms(&ordered_model(std::hint::black_box(5))))
    });
}

fn elementary_expansion(c: &mut Criterion) {
    c.bench_function("elementary e6 expansion", |bench| {
        bench.iter(|| elementary(std::hint::black_box(6), 6).unwrap())
    });
}

criterion_group!(
    benches,
    cyclotomic_mul,
    plethysm_sym2_sym2,
    deletion_injectivity,
    ordered_model_axioms,
    elementary_expansion
);
criterion_main!(benches);
