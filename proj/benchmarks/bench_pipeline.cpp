#include <benchmark/benchmark.h>

#include "maxseg/cdp.hpp"
#include "maxseg/contour.hpp"
#include "maxseg/dss.hpp"
#include "maxseg/estimators.hpp"
#include "maxseg/pattern.hpp"
#include "maxseg/shape.hpp"

using namespace maxseg;

namespace {

Contour disk_contour(Int m) {
    return trace_contour(digitize_rows(ShapeSpec::disk(Rational(1)), m));
}

void BM_digitize(benchmark::State& state) {
    const Int m = state.range(0);
    for (auto _ : state) {
        auto rows = digitize_rows(ShapeSpec::disk(Rational(1), Rational(1, 3)), m);
        benchmark::DoNotOptimize(rows.point_count());
    }
}
BENCHMARK(BM_digitize)->Arg(100)->Arg(1000)->Arg(10000);

void BM_trace_contour(benchmark::State& state) {
    const Int m = state.range(0);
    auto rows = digitize_rows(ShapeSpec::disk(Rational(1)), m);
    for (auto _ : state) {
        auto c = trace_contour(rows);
        benchmark::DoNotOptimize(c.size());
    }
    state.SetItemsProcessed(state.iterations() * 8 * m);
}
BENCHMARK(BM_trace_contour)->Arg(100)->Arg(1000)->Arg(10000);

void BM_recognizer_extend(benchmark::State& state) {
    auto c = disk_contour(1000);
    for (auto _ : state) {
        DssRecognizer rec(c.point(0));
        Int accepted = 1;
        for (Int i = 1; i < c.size(); ++i) {
            if (!rec.extend_front(c.point(i))) {
                rec = DssRecognizer(c.point(i - 1));
                rec.extend_front(c.point(i));
            }
            ++accepted;
        }
        benchmark::DoNotOptimize(accepted);
    }
    state.SetItemsProcessed(state.iterations() * disk_contour(1000).size());
}
BENCHMARK(BM_recognizer_extend);

void BM_maximal_segments(benchmark::State& state) {
    const Int m = state.range(0);
    auto c = disk_contour(m);
    for (auto _ : state) {
        auto segs = maximal_segments(c);
        benchmark::DoNotOptimize(segs.size());
    }
    state.SetItemsProcessed(state.iterations() * c.size());
}
BENCHMARK(BM_maximal_segments)->Arg(100)->Arg(1000)->Arg(5000);

void BM_curvature_sweep(benchmark::State& state) {
    const Int m = state.range(0);
    auto c = disk_contour(m);
    auto table = front_back_table(c, maximal_segments(c));
    for (auto _ : state) {
        double sum = 0;
        for (Int i = 0; i < c.size(); ++i)
            sum += curvature_circumcircle(c, table, i, m).kappa_hat;
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * c.size());
}
BENCHMARK(BM_curvature_sweep)->Arg(100)->Arg(1000);

void BM_pattern_word(benchmark::State& state) {
    for (auto _ : state) {
        std::size_t total = 0;
        for (Int b = 2; b <= 60; ++b)
            for (Int a = 1; a < b; ++a)
                if (gcd_nonneg(a, b) == 1) total += pattern_word(cf_decompose(a, b)).word.size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_pattern_word);

}  // namespace

BENCHMARK_MAIN();
