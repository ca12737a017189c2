#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semenc/encoding.hpp"
#include "semenc/logic.hpp"
#include "semenc/net.hpp"
#include "semenc/report.hpp"

namespace semenc::stochastic {

/// Feed-forward stochastic network: a finite input distribution followed by a
/// layer of conditionally independent binary units, each with a probability
/// table keyed on the input state. Inputs are hidden, output units visible.
struct LayeredStochasticNet {
  std::vector<std::string> input_names;
  std::vector<std::pair<net::NetState, double>> input_dist;  // support, sums to 1
  struct Unit {
    std::string name;
    // P(unit = 1 | input state); must be total over the input support.
    std::vector<std::pair<net::NetState, double>> table;
  };
  std::vector<Unit> units;

  void validate() const;
  double p_unit(std::size_t unit, const net::NetState& input) const;
  /// Probability vector of the output layer for one input state.
  std::vector<double> p_vector(const net::NetState& input) const;
};

/// Explicit finite Markov chain over an enumerated state space. Rows sum to 1
/// within 1e-12. An empty initial distribution means uniform.
struct MarkovChain {
  std::vector<std::string> neuron_names;
  std::vector<std::string> visible_names;
  std::vector<net::NetState> states;
  std::vector<std::vector<double>> rows;
  std::vector<double> initial;

  void validate() const;
};

using StochasticNetwork = std::variant<LayeredStochasticNet, MarkovChain>;

/// Zero-weight network mirroring the stochastic network's neurons, domains
/// and visibility; used to validate and evaluate encodings on its states.
net::CandidateNetwork skeleton_network(const StochasticNetwork& snet);

/// Full joint state list of a stochastic network (layered: input support x
/// output combinations, inputs first).
std::vector<net::NetState> enumerate_states(const StochasticNetwork& snet);

struct LimitingDistribution {
  std::vector<net::NetState> states;
  std::vector<double> probabilities;
  double epsilon = 1e-9;
  /// Infinitely recurring states: the union of recurrent classes reachable
  /// from the initial support (exact graph computation); when the chain
  /// converges this coincides with {x : limiting mass > epsilon}.
  std::vector<std::size_t> x_p_inf;
  bool converged = false;
  std::size_t iterations = 0;
  double residual = 0.0;
};

/// Limiting distribution with stationarity residual ||pT - p||_1 <= tol.
/// Layered networks are evaluated in closed form. Periodic chains are
/// reported as non-convergent (X_{P,inf} is still computed exactly).
LimitingDistribution limiting_distribution(const StochasticNetwork& snet,
                                           double tol = 1e-12,
                                           std::size_t max_iter = 100000,
                                           double epsilon = 1e-9);

/// The deterministic network as a stochastic process: successor probability 1
/// under the t_c-update, uniform initial distribution.
MarkovChain embed_deterministic(const net::CandidateNetwork& net,
                                std::size_t cap = kDefaultStateCap);

/// Fid_prob: total limiting mass of states whose interpretation entails the
/// knowledge-base. Defined for union aggregation only. For chains without a
/// limiting distribution the Cesaro (time-average) limit is used and noted in
/// the report.
FidelityReport fid_prob(const StochasticNetwork& snet,
                        const encoding::Encoding& enc,
                        const std::vector<logic::Formula>& kb,
                        encoding::Agg agg = encoding::Agg::Union,
                        double tol = 1e-12, std::size_t max_iter = 100000);

struct SemanticLossResult {
  double loss = 0.0;                // -log satisfaction probability
  double satisfaction_probability = 0.0;
  bool infinite = false;            // satisfaction probability was zero
};

/// Semantic loss of a propositional knowledge-base against independent
/// per-atom truth probabilities, by exact model enumeration.
SemanticLossResult semantic_loss(const std::vector<logic::Formula>& kb,
                                 const logic::Universe& universe,
                                 const std::vector<double>& p,
                                 std::size_t atom_cap = kDefaultAtomCap);

}  // namespace semenc::stochastic
