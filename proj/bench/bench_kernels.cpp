// Serial reference vs OpenMP kernels: trace-probe word enumeration and the
// per-generator orthogonality check behind certify_quasi_arithmetic.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lorentzkit/lattice.hpp"
#include "lorentzkit/lorentz.hpp"

namespace {

using namespace lorentzkit;

const FieldDescriptor kField = FieldDescriptor::quadratic(2);

QuadraticForm ambient_form() {
  const QuadFieldElem one(kField, 1);
  return form_from_diagonal(kField, {QuadFieldElem(kField, 0, -1), one, one, one});
}

// Reflections in the coordinate hyperplanes and a few tilted ones.
GeneratorSet sample_generators(std::size_t count) {
  const QuadraticForm f = ambient_form();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::vector<GroupElement> elems;
  std::vector<std::string> labels;
  while (elems.size() < count) {
    Vector v;
    for (std::size_t i = 0; i < f.dim(); ++i)
      v.emplace_back(kField, Rational(coord(rng)), Rational(coord(rng), 2));
    if (sign_at(evaluate(f, v), Embedding::Identity) <= 0) continue;
    elems.push_back(reflection_matrix(Hyperplane(f, v)));
    labels.push_back("r" + std::to_string(elems.size()));
  }
  return GeneratorSet(std::move(elems), std::move(labels));
}

void BM_TraceProbe(benchmark::State& state, Execution exec) {
  const GeneratorSet gens = sample_generators(3);
  const auto length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = trace_field_probe(gens, length, 1'000'000, exec);
    benchmark::DoNotOptimize(r.words_enumerated);
  }
}

void BM_CertifyQA(benchmark::State& state, Execution exec) {
  const GeneratorSet gens = sample_generators(static_cast<std::size_t>(state.range(0)));
  const QuadraticForm f = gens.form();
  for (auto _ : state) {
    auto cert = certify_quasi_arithmetic(f, gens, exec);
    benchmark::DoNotOptimize(cert.verdict);
  }
}

BENCHMARK_CAPTURE(BM_TraceProbe, serial, Execution::Serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceProbe, openmp, Execution::Parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CertifyQA, serial, Execution::Serial)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CertifyQA, openmp, Execution::Parallel)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
