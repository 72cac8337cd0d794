use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use vpq_core::homlie::{central_coefficient, hom_jacobi_residual};
use vpq_core::oscillator::verify_bracket;
use vpq_core::{pq_int, AlgebraElement, GuardSpec, HopfAlgebra, Mode, Oscillator, Relations};

fn reversed_l_word(k: i64) -> AlgebraElement {
    (1..=k)
        .rev()
        .map(AlgebraElement::l)
        .fold(AlgebraElement::one(), |acc, x| acc.concat(&x))
}

fn field(c: &mut Criterion) {
    c.bench_function("pq_int product", |b| {
        b.iter(|| &pq_int(black_box(7)) * &pq_int(black_box(-5)))
    });
    let mut g = c.benchmark_group("central_coefficient");
    for n in [2i64, 6, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| central_coefficient(black_box(n)))
        });
    }
    g.finish();
}

fn rewriting(c: &mut Criterion) {
    let mut g = c.benchmark_group("normalize reversed L word");
    for k in [3i64, 5, 7] {
        let x = reversed_l_word(k);
        g.bench_with_input(BenchmarkId::from_parameter(k), &x, |b, x| {
            // A fresh relation set each time so the memo does not hide the work.
            b.iter(|| Relations::default().normalize(x))
        });
    }
    g.finish();
}

fn hopf(c: &mut Criterion) {
    let h = HopfAlgebra::default();
    let x = AlgebraElement::l(2)
        .concat(&AlgebraElement::l(-1))
        .concat(&AlgebraElement::t());
    c.bench_function("coproduct of L2 L-1 T", |b| {
        b.iter(|| h.coproduct(black_box(&x)))
    });
    c.bench_function("hom-Jacobi residual", |b| {
        b.iter(|| hom_jacobi_residual(black_box(3), black_box(-1), black_box(-2)))
    });
}

fn fock(c: &mut Criterion) {
    let mut g = c.benchmark_group("Fock bracket");
    for dim in [12usize, 24] {
        let osc = Oscillator::new(dim, Mode::TwoParam).unwrap();
        let guard = GuardSpec::new(dim, 2, 3).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(dim), &osc, |b, osc| {
            b.iter(|| verify_bracket(3, -1, osc, &guard).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, field, rewriting, hopf, fock);
criterion_main!(benches);
