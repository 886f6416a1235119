use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use bicat_bench::{arrow_functors, cylinder_bases, validation_inputs};
use bicat_core::corpus;
use bicat_core::cylinder::lax_cylinder;
use bicat_core::enumerate::enumerate_icons;
use bicat_core::nerve::two_nerve;
use bicat_core::validate_bicategory;

fn validation(c: &mut Criterion) {
    let mut g = c.benchmark_group("validate_bicategory");
    for b in validation_inputs() {
        g.bench_with_input(BenchmarkId::from_parameter(b.name()), &b, |bench, b| {
            bench.iter(|| validate_bicategory(black_box(b)).unwrap())
        });
    }
    g.finish();
}

fn cylinders(c: &mut Criterion) {
    let mut g = c.benchmark_group("lax_cylinder");
    for base in cylinder_bases() {
        let name = base.bicategory().name().to_string();
        g.bench_function(BenchmarkId::from_parameter(name), |bench| {
            bench.iter(|| lax_cylinder(black_box(&base)).unwrap())
        });
    }
    g.finish();
}

fn nerves(c: &mut Criterion) {
    let mut g = c.benchmark_group("two_nerve");
    g.sample_size(10);
    let b = corpus::walking_two_cell();
    for t in 1..=3 {
        g.bench_with_input(BenchmarkId::from_parameter(t), &t, |bench, &t| {
            bench.iter(|| two_nerve(black_box(&b), t).unwrap())
        });
    }
    g.finish();
}

fn icons(c: &mut Criterion) {
    let functors = arrow_functors();
    c.bench_function("enumerate_icons/arrow_to_thickened", |bench| {
        bench.iter(|| {
            let mut n = 0;
            for f in &functors {
                for g in &functors {
                    n += enumerate_icons(f, g, None).len();
                }
            }
            n
        })
    });
}

criterion_group!(benches, validation, cylinders, nerves, icons);
criterion_main!(benches);
