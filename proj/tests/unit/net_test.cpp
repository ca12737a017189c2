#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semenc/demos.hpp"
#include "semenc/dot.hpp"
#include "semenc/net.hpp"

using namespace semenc;
using net::CandidateNetwork;
using net::NetState;
using net::TransferFn;

TEST_CASE("heaviside threshold is inclusive at zero") {
  CHECK(TransferFn::heaviside()(0.0) == 1.0);
  CHECK(TransferFn::heaviside()(-1e-9) == 0.0);
  CHECK(TransferFn::sign()(0.0) == 1.0);
  CHECK(TransferFn::sign()(-0.1) == -1.0);
  CHECK(TransferFn::identity()(0.25) == 0.25);
}

TEST_CASE("lookup transfer is total or an error") {
  auto fn = TransferFn::lookup({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(fn(0.0) == 1.0);
  CHECK(fn(1.0) == 0.0);
  CHECK_THROWS_AS(fn(0.5), ValidationError);
  CHECK_THROWS_AS(TransferFn::lookup({{0.0, 1.0}, {0.0, 0.0}}), ValidationError);
}

TEST_CASE("construction validation") {
  SUBCASE("visible set must be nonempty") {
    CandidateNetwork::Builder b;
    b.add_neuron({"a", TransferFn::heaviside(), 0.0, {0.0, 1.0}, false});
    CHECK_THROWS_AS(b.build(), ValidationError);
  }
  SUBCASE("t_c must be positive") {
    CandidateNetwork::Builder b;
    b.add_neuron({"a", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
    b.t_c(0);
    CHECK_THROWS_AS(b.build(), ValidationError);
  }
  SUBCASE("domain closure is checked over reachable inputs") {
    // identity unit fed 0/1 with bias 0.25 escapes {0,1}.
    CandidateNetwork::Builder b;
    b.add_neuron({"a", TransferFn::heaviside(), 0.5, {0.0, 1.0}, true});
    b.add_neuron({"x", TransferFn::identity(), 0.25, {0.0, 1.0}, true});
    b.weight("a", "x", 1.0);
    CHECK_THROWS_AS(b.build(), ValidationError);
  }
  SUBCASE("lookup tables must cover every reachable input") {
    CandidateNetwork::Builder b;
    b.add_neuron({"a", TransferFn::heaviside(), 0.5, {0.0, 1.0}, true});
    b.add_neuron(
        {"x", TransferFn::lookup({{0.0, 0.0}}), 0.0, {0.0, 1.0}, true});
    b.weight("a", "x", 1.0);  // reachable inputs {0, 1}; 1 unmapped
    CHECK_THROWS_AS(b.build(), ValidationError);
  }
  SUBCASE("duplicate edges are rejected") {
    CandidateNetwork::Builder b;
    b.add_neuron({"a", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
    b.add_neuron({"b", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
    b.weight("a", "b", 1.0).weight("a", "b", 2.0);
    CHECK_THROWS_AS(b.build(), ValidationError);
  }
}

TEST_CASE("feed-forward chain trajectory") {
  auto net = demos::feedforward_or_chain();
  NetState s{0, 1, 0, 1};
  s = net.step(s);
  CHECK(net.states_equal(s, {1, 0, 1, 0}));
  s = net.step(s);
  CHECK(net.states_equal(s, {1, 0, 1, 1}));
  CHECK(net.states_equal(net.step(s), s));
}

TEST_CASE("zero weights and biases step to all ones under heaviside") {
  CandidateNetwork::Builder b;
  for (const char* n : {"a", "b", "c"})
    b.add_neuron({n, TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
  auto net = b.build();
  for (const auto& s : net.enumerate_states())
    CHECK(net.states_equal(net.step(s), {1, 1, 1}));
}

TEST_CASE("flip-flop pair steps match the dense-arithmetic oracle") {
  auto net = demos::flip_flop_pair();
  std::vector<std::vector<double>> w{{-1.0, -1.5}, {-1.5, -1.0}};
  std::vector<double> bias{2.0, 2.0};
  std::vector<char> kind{'h', 'h'};
  for (const auto& s : net.enumerate_states()) {
    auto expected = oracle::dense_step(w, bias, kind, s);
    CHECK(net.states_equal(net.step(s), expected));
  }
  // Frozen oracle values; in particular (0,1) -> (1,1).
  CHECK(net.states_equal(net.step({0, 1}), {1, 1}));
  CHECK(net.states_equal(net.step({1, 1}), {0, 0}));
  CHECK(net.states_equal(net.step({0, 0}), {1, 1}));
  CHECK(net.states_equal(net.step({1, 0}), {1, 1}));
}

TEST_CASE("rotation net updates") {
  for (const auto& s : demos::three_cycle_rotation(1).enumerate_states())
    CHECK(demos::three_cycle_rotation(1).update(s) ==
          NetState{s[2], s[0], s[1]});
  for (const auto& s : demos::three_cycle_rotation(2).enumerate_states())
    CHECK(demos::three_cycle_rotation(2).update(s) ==
          NetState{s[1], s[2], s[0]});
  for (const auto& s : demos::three_cycle_rotation(3).enumerate_states())
    CHECK(demos::three_cycle_rotation(3).update(s) == s);
}

TEST_CASE("invalid states are rejected") {
  auto net = demos::flip_flop_pair();
  CHECK_THROWS_AS(net.step({0.5, 0.0}), ValidationError);
  CHECK_THROWS_AS(net.step({0.0}), ValidationError);
}

TEST_CASE("x_inf of the flip-flop pair is the two-cycle") {
  auto net = demos::flip_flop_pair();
  auto report = net::compute_x_inf(net);
  REQUIRE(report.x_inf.size() == 2);
  CHECK(report.states[report.x_inf[0]] == NetState{0, 0});
  CHECK(report.states[report.x_inf[1]] == NetState{1, 1});
  REQUIRE(report.cycles.size() == 1);
  CHECK(report.cycles[0].size() == 2);
}

TEST_CASE("x_inf of the selector grid has the four stated states") {
  auto report = net::compute_x_inf(demos::selector_grid());
  std::set<NetState> got;
  for (std::size_t s : report.x_inf) got.insert(report.states[s]);
  CHECK(got == std::set<NetState>{{0, 0, 0, 0}, {0, 1, 1, 1}, {1, 0, 1, 1},
                                  {1, 1, 1, 1}});
  // All four are fixed points.
  CHECK(report.cycles.size() == 4);
}

TEST_CASE("a k-layer feed-forward net reaches a fixed point within k updates") {
  // 3-layer chain with clamped biases.
  CandidateNetwork::Builder b;
  b.add_neuron({"i", TransferFn::heaviside(), 0.5, {0.0, 1.0}, true});
  b.add_neuron({"m", TransferFn::heaviside(), -0.5, {0.0, 1.0}, true});
  b.add_neuron({"o", TransferFn::heaviside(), -0.5, {0.0, 1.0}, true});
  b.weight("i", "m", 1.0).weight("m", "o", 1.0);
  auto net = b.build();
  auto report = net::compute_x_inf(net);
  for (const auto& s : report.states) {
    NetState cur = s;
    for (int k = 0; k < 3; ++k) cur = net.update(cur);
    CHECK(net.states_equal(net.update(cur), cur));
  }
  CHECK(report.x_inf.size() == 1);
}

TEST_CASE("every trajectory enters x_inf within the state-space size") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  std::uniform_int_distribution<int> halves(-3, 3);
  for (int round = 0; round < 25; ++round) {
    CandidateNetwork::Builder b;
    int n = 3 + (round % 3);
    for (int i = 0; i < n; ++i)
      b.add_neuron({"n" + std::to_string(i), TransferFn::heaviside(),
                    halves(rng) * 0.5, {0.0, 1.0}, true});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (weight(rng) > 0.4)
          b.weight("n" + std::to_string(i), "n" + std::to_string(j),
                   halves(rng) * 0.5);
    auto net = b.build();
    auto report = net::compute_x_inf(net);
    for (std::size_t s = 0; s < report.states.size(); ++s) {
      std::size_t cur = s;
      bool entered = false;
      for (std::size_t steps = 0; steps <= report.states.size(); ++steps) {
        if (report.recurrent[cur]) {
          entered = true;
          break;
        }
        cur = report.successor[cur];
      }
      CHECK(entered);
    }
  }
}

TEST_CASE("state-space cap") {
  CandidateNetwork::Builder b;
  for (int i = 0; i < 8; ++i)
    b.add_neuron({"n" + std::to_string(i), TransferFn::heaviside(), 0.0,
                  {0.0, 1.0}, true});
  auto net = b.build();
  CHECK_THROWS_AS(net::compute_x_inf(net, 100), CapExceeded);
  CHECK(net::compute_x_inf(net, 256).states.size() == 256);
}

namespace {

CandidateNetwork random_hopfield(std::mt19937_64& rng, int n,
                                 net::UpdateMode mode) {
  std::uniform_int_distribution<int> halves(-4, 4);
  CandidateNetwork::Builder b;
  for (int i = 0; i < n; ++i)
    b.add_neuron({"n" + std::to_string(i), TransferFn::heaviside(),
                  halves(rng) * 0.5, {0.0, 1.0}, true});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double w = halves(rng) * 0.5;
      if (w == 0.0) continue;
      b.weight("n" + std::to_string(i), "n" + std::to_string(j), w);
      b.weight("n" + std::to_string(j), "n" + std::to_string(i), w);
    }
  b.update_mode(mode);
  return b.build();
}

}  // namespace

TEST_CASE("hopfield energy on the worked two-neuron net") {
  CandidateNetwork::Builder b;
  b.add_neuron({"x1", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
  b.add_neuron({"x2", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
  b.weight("x1", "x2", 1.0).weight("x2", "x1", 1.0);
  auto net = b.build();
  CHECK(net::hopfield_energy(net, {1, 1}) == -1.0);
  CHECK(net::hopfield_energy(net, {0, 0}) == 0.0);
  CHECK(net::hopfield_energy(net, {1, 0}) == 0.0);
  CHECK(net::hopfield_energy(net, {0, 1}) == 0.0);
}

TEST_CASE("hopfield energy of the zero net vanishes everywhere") {
  CandidateNetwork::Builder b;
  b.add_neuron({"a", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
  b.add_neuron({"b", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
  auto net = b.build();
  for (const auto& s : net.enumerate_states())
    CHECK(net::hopfield_energy(net, s) == 0.0);
}

TEST_CASE("hopfield energy rejects invalid structure") {
  CandidateNetwork::Builder b;
  b.add_neuron({"a", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
  b.add_neuron({"b", TransferFn::heaviside(), 0.0, {0.0, 1.0}, true});
  b.weight("a", "b", 1.0);  // asymmetric
  auto net = b.build();
  CHECK_THROWS_AS(net::hopfield_energy(net, {0, 0}), ValidationError);
}

TEST_CASE("asynchronous sweeps never increase the energy") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 40; ++round) {
    auto net = random_hopfield(rng, 4 + round % 3, net::UpdateMode::async_sweep());
    for (const auto& s : net.enumerate_states()) {
      double before = net::hopfield_energy(net, s);
      double after = net::hopfield_energy(net, net.step(s));
      CHECK(after <= before + 1e-12);
    }
  }
}

TEST_CASE("asynchronous x_inf contains only local minima of the energy") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 25; ++round) {
    auto net = random_hopfield(rng, 4, net::UpdateMode::async_sweep());
    auto report = net::compute_x_inf(net);
    for (std::size_t idx : report.x_inf) {
      const auto& s = report.states[idx];
      double e = net::hopfield_energy(net, s);
      for (std::size_t i = 0; i < net.size(); ++i) {
        NetState flipped = s;
        flipped[i] = 1.0 - flipped[i];
        CHECK(net::hopfield_energy(net, flipped) >= e - 1e-12);
      }
    }
  }
}

TEST_CASE("seeded random sweep order is deterministic") {
  std::mt19937_64 rng(29);
  auto net1 = random_hopfield(rng, 5, net::UpdateMode::async_random(42));
  std::mt19937_64 rng2(29);
  auto net2 = random_hopfield(rng2, 5, net::UpdateMode::async_random(42));
  CHECK(net1.sweep_order() == net2.sweep_order());
  for (const auto& s : net1.enumerate_states())
    CHECK(net1.step(s) == net2.step(s));
}

TEST_CASE("dot export is deterministic and marks recurring states") {
  auto net = demos::flip_flop_pair();
  auto report = net::compute_x_inf(net);
  std::string dot1 = net::to_dot(net, report);
  std::string dot2 = net::to_dot(net, net::compute_x_inf(net));
  CHECK(dot1 == dot2);
  CHECK(dot1.find("digraph transitions") != std::string::npos);
  CHECK(dot1.find("\"(0,0)\" [style=filled, fillcolor=gold]") != std::string::npos);
  CHECK(dot1.find("\"(0,1)\" [style=filled") == std::string::npos);
  CHECK(dot1.find("\"(0,0)\" -> \"(1,1)\"") != std::string::npos);
}
