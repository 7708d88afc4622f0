#include <benchmark/benchmark.h>

#include "linrel/generator.hpp"
#include "linrel/hermitian.hpp"
#include "linrel/norms.hpp"
#include "linrel/relation.hpp"
#include "linrel/relbound.hpp"
#include "linrel/rng.hpp"
#include "linrel/subspace.hpp"

using namespace linrel;

namespace {

constexpr std::uint64_t kSeed = 0xbe9cULL;

// Pin the structure so timings are comparable across sizes: graph dimension
// n out of the ambient 2n, with a quarter of it multivalued.
LinearRelation draw(Index n, std::uint64_t salt) {
  Rng rng(kSeed + salt);
  GenOptions opts;
  opts.n = n;
  opts.m = n;
  opts.graph_dim = n;
  opts.mulpart_dim = n / 4;
  return gen_relation(rng, opts);
}

}  // namespace

static void BM_Span(benchmark::State& state) {
  const Index n = state.range(0);
  Rng rng(kSeed);
  const Matrix g = rng.gaussian_matrix(n, n, Field::complex);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Subspace::span(g, n, Field::complex));
  }
}
BENCHMARK(BM_Span)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_ArensDecompose(benchmark::State& state) {
  const LinearRelation t = draw(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arens_decompose(t));
  }
}
BENCHMARK(BM_ArensDecompose)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_RelationSum(benchmark::State& state) {
  const LinearRelation t = draw(state.range(0), 2);
  const LinearRelation s = draw(state.range(0), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relation_sum(t, s));
  }
}
BENCHMARK(BM_RelationSum)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_Product(benchmark::State& state) {
  const LinearRelation t = draw(state.range(0), 4);
  const LinearRelation s = draw(state.range(0), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(product(s, t));
  }
}
BENCHMARK(BM_Product)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_PointNorm(benchmark::State& state) {
  const Index n = state.range(0);
  const LinearRelation t = draw(n, 6);
  Rng rng(kSeed + 7);
  const Subspace dom = domain(t);
  Vector x = Vector::Zero(n);
  if (dom.dim() > 0) {
    x = dom.basis() * rng.unit_vector(dom.dim(), Field::complex);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(point_norm(t, x));
  }
}
BENCHMARK(BM_PointNorm)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_RelationNorm(benchmark::State& state) {
  const LinearRelation t = draw(state.range(0), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relation_norm(t));
  }
}
BENCHMARK(BM_RelationNorm)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

// Numerical radius drives c_constant: a 64 point angle sweep with a golden
// section polish around every local peak, one Hermitian eigensolve per angle.
static void BM_CConstant(benchmark::State& state) {
  const Index n = state.range(0);
  Rng rng(kSeed + 9);
  GenOptions opts;
  opts.n = n;
  opts.m = n;
  opts.mulpart_dim = 0;
  opts.domain_dim = n;
  const LinearRelation t = gen_relation(rng, opts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_constant(t));
  }
}
BENCHMARK(BM_CConstant)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_HermitianReport(benchmark::State& state) {
  const Index n = state.range(0);
  Rng rng(kSeed + 10);
  GenOptions opts;
  opts.n = n;
  opts.m = n;
  opts.hermitian = true;
  opts.domain_dim = n / 2;
  opts.mulpart_dim = n / 4;
  const LinearRelation t = gen_relation(rng, opts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_report(t));
  }
}
BENCHMARK(BM_HermitianReport)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

// The sphere maximization dominates the relative bound checks; measure one
// feasibility query with the default sampling budget.
static void BM_TBoundFeasible(benchmark::State& state) {
  const Index n = state.range(0);
  Rng rng(kSeed + 11);
  GenOptions opts;
  opts.n = n;
  opts.m = n;
  const LinearRelation t = gen_relation(rng, opts);
  RelatedOptions rel;
  rel.domain = DomainLink::superset;
  const LinearRelation s = gen_related(rng, t, rel);
  const double a = relation_norm(s).value;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_bound_feasible(t, s, a, 0.0));
  }
}
BENCHMARK(BM_TBoundFeasible)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
