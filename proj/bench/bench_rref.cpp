// Serial vs OpenMP row reduction: random sparse systems over Q, and the
// ideal slices I_d of skew polynomial rings (the workload rref sees in
// practice) over Q and Q(t).
#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "nakayama/linalg.hpp"
#include "nakayama/presentation.hpp"

using namespace nakayama;
using linalg::SparseVec;

namespace {

std::vector<SparseVec> random_rows(std::size_t n, std::size_t per_row, unsigned seed) {
  const Field f = Field::rationals();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint64_t> col(0, n - 1);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<SparseVec> rows;
  for (std::size_t r = 0; r < n; ++r) {
    std::map<std::uint64_t, Scalar> entries;
    for (std::size_t k = 0; k < per_row; ++k)
      if (long c = coef(rng); c != 0) entries[col(rng)] = Scalar::integer(f, c);
    rows.emplace_back(entries.begin(), entries.end());
  }
  return rows;
}

// u * r * v for every relation r and words u, v with |u| + |v| = d - 2.
std::vector<SparseVec> ideal_rows(const Field& f, int n, int d) {
  linalg::Matrix p(n, n, Scalar::one(f));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar v = f.has_t() ? Scalar::t(f).pow(j - i) : Scalar::integer(f, j - i + 1);
      p(i, j) = v;
      p(j, i) = v.inverse();
    }
  GradedPresentation P = skew_tools(p, f).presentation;
  std::vector<SparseVec> rows;
  for (const auto& r : P.relations())
    for (int left = 0; left <= d - 2; ++left) {
      const int right = d - 2 - left;
      for (std::uint64_t a = 0; a < slice_size(n, left); ++a)
        for (std::uint64_t b = 0; b < slice_size(n, right); ++b) {
          NCPoly u = NCPoly::monomial(n, f, word_from_index(a, n, left), Scalar::one(f));
          NCPoly v = NCPoly::monomial(n, f, word_from_index(b, n, right), Scalar::one(f));
          rows.push_back((u * r * v).to_sparse(d));
        }
    }
  return rows;
}

template <bool Parallel>
void run(benchmark::State& state, const std::vector<SparseVec>& rows) {
  for (auto _ : state) {
    auto e = Parallel ? linalg::rref_parallel(rows) : linalg::rref_serial(rows);
    benchmark::DoNotOptimize(e);
  }
  state.counters["rows"] = static_cast<double>(rows.size());
}

template <bool Parallel>
void BM_Random(benchmark::State& s) {
  run<Parallel>(s, random_rows(static_cast<std::size_t>(s.range(0)), 6, 42));
}
template <bool Parallel>
void BM_IdealQ(benchmark::State& s) {
  run<Parallel>(s, ideal_rows(Field::rationals(), 4, static_cast<int>(s.range(0))));
}
template <bool Parallel>
void BM_IdealQt(benchmark::State& s) {
  run<Parallel>(s, ideal_rows(Field::rational_functions(), 3, static_cast<int>(s.range(0))));
}

}  // namespace

BENCHMARK(BM_Random<false>)->Name("random_Q/serial")->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Random<true>)->Name("random_Q/parallel")->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealQ<false>)->Name("ideal_Q/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealQ<true>)->Name("ideal_Q/parallel")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealQt<false>)->Name("ideal_Qt/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealQt<true>)->Name("ideal_Qt/parallel")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
