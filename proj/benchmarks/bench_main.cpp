#include <benchmark/benchmark.h>

#include <random>

#include "semenc/demos.hpp"
#include "semenc/encoding.hpp"
#include "semenc/penalty.hpp"
#include "semenc/program.hpp"
#include "semenc/stochastic.hpp"
#include "semenc/translate.hpp"

using namespace semenc;

namespace {

net::CandidateNetwork ring_net(int n) {
  net::CandidateNetwork::Builder b;
  for (int i = 0; i < n; ++i)
    b.add_neuron({"n" + std::to_string(i), net::TransferFn::heaviside(), -0.5,
                  {0.0, 1.0}, true});
  for (int i = 0; i < n; ++i)
    b.weight("n" + std::to_string(i), "n" + std::to_string((i + 1) % n), 1.0);
  return b.build();
}

logic::LogicProgram random_horn(std::mt19937_64& rng, int atoms, int clauses) {
  std::uniform_int_distribution<int> head(0, atoms - 1);
  std::uniform_int_distribution<int> body_len(0, 3);
  logic::LogicProgram p;
  for (int c = 0; c < clauses; ++c) {
    logic::Clause clause;
    int h = head(rng);
    clause.head = "a" + std::to_string(h);
    if (h > 0) {
      std::uniform_int_distribution<int> body_atom(0, h - 1);
      int k = body_len(rng);
      for (int i = 0; i < k; ++i)
        clause.body.push_back({"a" + std::to_string(body_atom(rng)), false});
    }
    p.clauses.push_back(clause);
  }
  return p;
}

void bm_compute_x_inf(benchmark::State& state) {
  auto net = ring_net(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = net::compute_x_inf(net);
    benchmark::DoNotOptimize(report.x_inf.size());
  }
}
BENCHMARK(bm_compute_x_inf)->Arg(8)->Arg(12)->Arg(16);

void bm_models_of(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<std::string> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back("a" + std::to_string(i));
  auto u = logic::make_universe(atoms);
  logic::Formula f = logic::Formula::atom(atoms[0]);
  for (int i = 1; i < n; ++i)
    f = f || (logic::Formula::atom(atoms[static_cast<std::size_t>(i)]) &&
              !logic::Formula::atom(atoms[static_cast<std::size_t>(i - 1)]));
  for (auto _ : state) {
    auto ms = logic::models_of({f}, u);
    benchmark::DoNotOptimize(ms.cubes().size());
  }
}
BENCHMARK(bm_models_of)->Arg(10)->Arg(14)->Arg(18);

void bm_tp_fixpoint(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto p = random_horn(rng, static_cast<int>(state.range(0)), 40);
  auto u = p.universe();
  for (auto _ : state) {
    auto res = logic::tp_fixpoint(p, logic::Interpretation{}, *u);
    benchmark::DoNotOptimize(res.iterations);
  }
}
BENCHMARK(bm_tp_fixpoint)->Arg(16)->Arg(32);

void bm_kbann_compile(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto p = random_horn(rng, 8, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = translate::kbann_compile(p);
    benchmark::DoNotOptimize(result.certificate.pass);
  }
}
BENCHMARK(bm_kbann_compile)->Arg(5)->Arg(10);

void bm_penalty_to_hopfield(benchmark::State& state) {
  auto kb = demos::disjunction_penalty_kb(1.0, 2.0);
  kb.sentences.push_back(
      {0.5, logic::Formula::atom("a") && logic::Formula::atom("c") &&
                logic::Formula::atom("d")});
  for (auto _ : state) {
    auto result = translate::penalty_to_hopfield(kb);
    benchmark::DoNotOptimize(result.certificate.pass);
  }
}
BENCHMARK(bm_penalty_to_hopfield);

void bm_limiting_distribution(benchmark::State& state) {
  auto chain = stochastic::embed_deterministic(ring_net(static_cast<int>(state.range(0))));
  // Blend with the uniform kernel so power iteration has real work to do.
  const std::size_t n = chain.states.size();
  for (auto& row : chain.rows)
    for (auto& entry : row) entry = 0.9 * entry + 0.1 / static_cast<double>(n);
  for (auto _ : state) {
    auto dist = stochastic::limiting_distribution(chain, 1e-10);
    benchmark::DoNotOptimize(dist.probabilities[0]);
  }
}
BENCHMARK(bm_limiting_distribution)->Arg(6)->Arg(8);

void bm_models_of_network(benchmark::State& state) {
  auto net = demos::selector_grid();
  auto enc = demos::selector_grid_encoding();
  for (auto _ : state) {
    auto m_n = encoding::models_of_network(net, enc, encoding::Agg::Intersection);
    benchmark::DoNotOptimize(m_n.cubes().size());
  }
}
BENCHMARK(bm_models_of_network);

}  // namespace

BENCHMARK_MAIN();
