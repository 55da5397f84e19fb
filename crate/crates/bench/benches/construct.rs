use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use franklin_core::{generate_most_perfect, GeneratorConfig};

fn construct(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate_most_perfect");
    group.sample_size(10);
    for (p, r) in [(2usize, 3u32), (2, 5), (3, 3), (3, 4), (5, 3)] {
        let n = p.pow(r);
        group.bench_with_input(
            BenchmarkId::new(format!("p{p}"), n),
            &(p, r),
            |b, &(p, r)| b.iter(|| generate_most_perfect(&GeneratorConfig::new(p, r, 0)).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, construct);
criterion_main!(benches);
