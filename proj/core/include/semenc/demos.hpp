#pragma once

#include <string>
#include <vector>

#include "semenc/encoding.hpp"
#include "semenc/fuzzy.hpp"
#include "semenc/logic.hpp"
#include "semenc/net.hpp"
#include "semenc/penalty.hpp"
#include "semenc/program.hpp"
#include "semenc/stochastic.hpp"

// Small canonical systems used by the demo suite, the test fixtures and the
// bundled example files.
namespace semenc::demos {

/// Feed-forward chain: inputs a (bias 1) and b (bias -1) feed a hidden unit h
/// which feeds output c; encodes the program {c <- a; c <- b; a <-}.
net::CandidateNetwork feedforward_or_chain();
logic::LogicProgram or_chain_program();

/// Three binary neurons in a directed cycle with biases -0.5; a single step
/// rotates the state, three steps are the identity.
net::CandidateNetwork three_cycle_rotation(std::size_t t_c);

/// Two mutually inhibiting neurons (bias 2, self -1, cross -1.5) oscillating
/// between (0,0) and (1,1).
net::CandidateNetwork flip_flop_pair();
std::vector<logic::Formula> flip_flop_kb();
encoding::EncodingNat flip_flop_encoding();

/// Two linear selector neurons holding their value and two threshold units
/// computing their disjunction; carries the distributed encoding of
/// r1/r2 over constants a..d.
net::CandidateNetwork selector_grid();
encoding::EncodingDat selector_grid_encoding();
std::vector<logic::Formula> selector_grid_kb();

/// Interval-labelled knowledge-base {[0.75,1]: a|b, [0.5,1]: ~a|~b}.
fuzzy::FuzzyKB interval_fidelity_kb();

/// One binary input (uniform) driving two conditionally independent binary
/// units y1, y2.
stochastic::LayeredStochasticNet stochastic_pair();
encoding::EncodingNat stochastic_pair_encoding();
/// The knowledge-base whose models are the equal-output states.
std::vector<logic::Formula> stochastic_pair_kb();
/// The exclusive-or knowledge-base over the same outputs.
std::vector<logic::Formula> stochastic_pair_xor_kb();

/// {c1 : a|b, c2 : ~b}.
logic::PenaltyKB disjunction_penalty_kb(double c1, double c2);

struct DemoCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The bundled regression suite over all demo systems; every case must pass
/// on a correct build.
std::vector<DemoCase> run_demo_suite();

}  // namespace semenc::demos
