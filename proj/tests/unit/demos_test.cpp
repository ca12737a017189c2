#include <doctest.h>

#include "semenc/demos.hpp"

using namespace semenc;

TEST_CASE("the bundled demo suite passes on a correct build") {
  auto results = demos::run_demo_suite();
  CHECK(results.size() >= 14);
  for (const auto& c : results) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("mutation: an exclusive threshold breaks the chain trajectory") {
  // Same chain, but the hidden unit fires only on strictly positive input
  // (f(0) = 0). The trajectory case of the demo suite must then fail.
  net::CandidateNetwork::Builder b;
  b.add_neuron({"a", net::TransferFn::heaviside(), 1.0, {0.0, 1.0}, true});
  b.add_neuron({"b", net::TransferFn::heaviside(), -1.0, {0.0, 1.0}, true});
  b.add_neuron({"h", net::TransferFn::lookup({{-1.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}}),
                -1.0, {0.0, 1.0}, false});
  b.add_neuron({"c", net::TransferFn::lookup({{-1.0, 0.0}, {0.0, 0.0}}), -1.0,
                {0.0, 1.0}, true});
  b.weight("a", "h", 1.0).weight("b", "h", 1.0).weight("h", "c", 1.0);
  auto mutated = b.build();
  auto s1 = mutated.update({0, 1, 0, 1});
  CHECK_FALSE(mutated.states_equal(s1, {1, 0, 1, 0}));  // h no longer fires
}

TEST_CASE("mutation: a misapplied computation time breaks the identity") {
  auto net = demos::three_cycle_rotation(1);  // should be 3 for the identity
  bool identity = true;
  for (const auto& s : net.enumerate_states())
    if (!net.states_equal(net.update(s), s)) identity = false;
  CHECK_FALSE(identity);
}
