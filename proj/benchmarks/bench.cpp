#include <benchmark/benchmark.h>

#include <l2hodge/matrix.hpp>
#include <l2hodge/monodromy.hpp>
#include <l2hodge/polynomial.hpp>
#include <l2hodge/spectral.hpp>
#include <l2hodge/table_verify.hpp>
#include <l2hodge/weight_filtration.hpp>

using namespace l2hodge;

namespace {

Matrix unipotent_block(int n) {
    Matrix m = Matrix::identity(n);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    return m;
}

void bm_char_poly_4x4(benchmark::State& state) {
    const Matrix m = Matrix::companion(cyclotomic(5));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(bm_char_poly_4x4);

void bm_quasi_unipotency_order(benchmark::State& state) {
    const Matrix m = Matrix::companion(cyclotomic(12));
    for (auto _ : state) benchmark::DoNotOptimize(quasi_unipotency_order(m));
}
BENCHMARK(bm_quasi_unipotency_order);

void bm_classify_mum(benchmark::State& state) {
    const Matrix m = unipotent_block(4);
    for (auto _ : state) benchmark::DoNotOptimize(classify(m, 3));
}
BENCHMARK(bm_classify_mum);

void bm_classify_strict(benchmark::State& state) {
    const Matrix m = Matrix::companion(cyclotomic(3) * cyclotomic(3));
    for (auto _ : state) benchmark::DoNotOptimize(classify(m, 3));
}
BENCHMARK(bm_classify_strict);

void bm_weight_filtration_6(benchmark::State& state) {
    Matrix n(6);
    for (int i = 0; i + 1 < 6; ++i) n.at(i, i + 1) = 1;
    // dense conjugate, fixed so runs are comparable
    Matrix p = Matrix::identity(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) p.at(i, j) = Rational(1 + (i * 7 + j * 3) % 5, 1 + (i + j) % 3);
    if (p.det() == 0) p.at(0, 0) += 1;
    const Matrix conjugated = conjugate(n, p);
    for (auto _ : state) benchmark::DoNotOptimize(weight_filtration(conjugated));
}
BENCHMARK(bm_weight_filtration_6);

void bm_table_audit(benchmark::State& state) {
    const auto rows = parse_table(default_table_json());
    for (auto _ : state) benchmark::DoNotOptimize(audit_all(rows, 5));
}
BENCHMARK(bm_table_audit);

} // namespace

BENCHMARK_MAIN();
