#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "agtrellis/curves.hpp"
#include "agtrellis/report.hpp"
#include "agtrellis/trellis.hpp"

namespace {

using agtrellis::Field;
using agtrellis::FieldPtr;
using agtrellis::LinearCode;
using agtrellis::Matrix;

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, f->order() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, static_cast<std::uint16_t>(dist(rng)));
    return m;
}

void BM_field_mul(benchmark::State& state) {
    FieldPtr f = Field::create(2, 8);
    std::uint16_t acc = 1;
    for (auto _ : state) {
        for (std::uint32_t a = 1; a < f->order(); ++a)
            acc = f->mul(acc, static_cast<std::uint16_t>(a));
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (f->order() - 1));
}
BENCHMARK(BM_field_mul);

void BM_rref(benchmark::State& state) {
    FieldPtr f = Field::create(5, 1);
    Matrix m = random_matrix(f, 40, 80, 7);
    for (auto _ : state) {
        auto r = agtrellis::rref(m);
        benchmark::DoNotOptimize(r.pivots.data());
    }
}
BENCHMARK(BM_rref);

void BM_state_profile_hermitian(benchmark::State& state) {
    static const LinearCode code = agtrellis::hermitian_code(5, 66);
    for (auto _ : state) {
        auto p = agtrellis::state_profile(code);
        benchmark::DoNotOptimize(p.s.data());
    }
}
BENCHMARK(BM_state_profile_hermitian);

void BM_minimal_span_form(benchmark::State& state) {
    FieldPtr f = Field::create(2, 1);
    LinearCode code = LinearCode::from_matrix(random_matrix(f, 12, 24, 11));
    for (auto _ : state) {
        Matrix m = agtrellis::minimal_span_form(code.generator());
        benchmark::DoNotOptimize(m.at(0, 0));
    }
}
BENCHMARK(BM_minimal_span_form);

void BM_trellis_build(benchmark::State& state) {
    FieldPtr f = Field::create(2, 1);
    LinearCode code = LinearCode::from_matrix(random_matrix(f, 8, 16, 13));
    for (auto _ : state) {
        auto t = agtrellis::Trellis::build(code);
        benchmark::DoNotOptimize(t.depth());
    }
}
BENCHMARK(BM_trellis_build);

void BM_viterbi(benchmark::State& state) {
    FieldPtr f = Field::create(2, 1);
    static const LinearCode code = LinearCode::from_matrix(random_matrix(f, 8, 16, 13));
    static const agtrellis::Trellis trellis = agtrellis::Trellis::build(code);
    std::vector<std::uint16_t> received(16, 1);
    for (auto _ : state) {
        auto d = agtrellis::viterbi_decode(trellis, received);
        benchmark::DoNotOptimize(d.distance);
    }
}
BENCHMARK(BM_viterbi);

void BM_hermitian_table(benchmark::State& state) {
    for (auto _ : state) {
        auto doc = agtrellis::build_hermitian_table();
        benchmark::DoNotOptimize(doc.size());
    }
}
BENCHMARK(BM_hermitian_table);

}  // namespace

BENCHMARK_MAIN();
