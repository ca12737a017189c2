#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semenc/common.hpp"

namespace semenc::net {

/// Per-neuron activation function. The heaviside threshold is inclusive at
/// zero: heaviside(0) = 1. (Many libraries use f(0) = 0; everything here
/// depends on the inclusive convention.) Lookup tables must be total over the
/// neuron's reachable input set, which is verified at network construction.
class TransferFn {
 public:
  enum class Kind : std::uint8_t { Heaviside, Identity, Sign, Lookup };

  TransferFn() : kind_(Kind::Heaviside) {}
  static TransferFn heaviside() { return TransferFn(Kind::Heaviside); }
  static TransferFn identity() { return TransferFn(Kind::Identity); }
  static TransferFn sign() { return TransferFn(Kind::Sign); }
  static TransferFn lookup(std::vector<std::pair<double, double>> table);

  Kind kind() const { return kind_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

  /// Evaluate; throws on an unmapped lookup input.
  double operator()(double input) const;

 private:
  explicit TransferFn(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<std::pair<double, double>> table_;  // sorted by input
};

using NetState = std::vector<double>;

std::string to_string(const NetState& s);

struct UpdateMode {
  enum class Kind : std::uint8_t { Synchronous, AsyncSweep, AsyncRandom };
  Kind kind = Kind::Synchronous;
  std::vector<std::size_t> order;  // AsyncSweep: explicit visitation order
  std::uint64_t seed = 0;          // AsyncRandom: order drawn once from seed

  static UpdateMode synchronous() { return {}; }
  static UpdateMode async_sweep(std::vector<std::size_t> order = {}) {
    return {Kind::AsyncSweep, std::move(order), 0};
  }
  static UpdateMode async_random(std::uint64_t seed) {
    return {Kind::AsyncRandom, {}, seed};
  }
};

struct NeuronSpec {
  std::string name;
  TransferFn transfer;
  double bias = 0.0;
  std::vector<double> domain = {0.0, 1.0};
  bool visible = true;
};

/// A finite-state neural network with a visible/hidden partition and a
/// computation time t_c. One update applies the one-step map t_c times.
/// Immutable after construction; construction verifies that every reachable
/// step output lands back in the per-neuron domain (closure) and that lookup
/// tables are total over reachable inputs.
class CandidateNetwork {
 public:
  class Builder {
   public:
    Builder& add_neuron(NeuronSpec spec);
    Builder& weight(const std::string& from, const std::string& to, double w);
    Builder& t_c(std::size_t t);
    Builder& update_mode(UpdateMode m);
    /// Validates and freezes. `closure_cap` bounds the per-neuron fan-in
    /// enumeration used for domain-closure and lookup-totality checks.
    CandidateNetwork build(std::size_t closure_cap = kDefaultStateCap) const;

   private:
    friend class CandidateNetwork;
    std::vector<NeuronSpec> neurons_;
    std::vector<std::pair<std::pair<std::string, std::string>, double>> weights_;
    std::size_t t_c_ = 1;
    UpdateMode mode_;
  };

  std::size_t size() const { return neurons_.size(); }
  const NeuronSpec& neuron(std::size_t i) const { return neurons_[i]; }
  const std::string& name(std::size_t i) const { return neurons_[i].name; }
  std::size_t index_of(const std::string& name) const;
  double weight(std::size_t from, std::size_t to) const {
    return weights_[from * neurons_.size() + to];
  }
  double bias(std::size_t i) const { return neurons_[i].bias; }
  const std::vector<double>& domain(std::size_t i) const {
    return neurons_[i].domain;
  }
  std::size_t t_c() const { return t_c_; }
  const UpdateMode& update_mode() const { return mode_; }
  /// Effective asynchronous visitation order (ascending for synchronous).
  const std::vector<std::size_t>& sweep_order() const { return order_; }
  const std::vector<std::size_t>& visible() const { return visible_; }
  const std::vector<std::size_t>& hidden() const { return hidden_; }
  /// In-neighbors (j with weight(j,i) != 0) of neuron i.
  const std::vector<std::size_t>& inputs(std::size_t i) const {
    return inputs_[i];
  }

  bool valid_state(const NetState& s) const;
  void require_valid_state(const NetState& s) const;
  /// Nearest domain value within tolerance, if any.
  std::optional<double> snap_to_domain(std::size_t i, double v) const;

  /// Size of the full product state space; throws CapExceeded beyond `cap`.
  std::size_t state_space_size(std::size_t cap = kDefaultStateCap) const;
  /// All states in mixed-radix order (neuron 0 most significant).
  std::vector<NetState> enumerate_states(std::size_t cap = kDefaultStateCap) const;
  std::size_t state_index(const NetState& s) const;

  /// One application of x' = g(Wx + b) (synchronous) or one full sweep in the
  /// effective order (asynchronous).
  NetState step(const NetState& s) const;
  /// step applied t_c times: the update map N(x).
  NetState update(const NetState& s) const;

  /// Weighted input to neuron i given the current state.
  double input_to(std::size_t i, const NetState& s) const;

  bool states_equal(const NetState& a, const NetState& b) const;
  bool visibly_equal(const NetState& a, const NetState& b) const;

  /// No directed cycle through nonzero weights.
  bool is_feed_forward() const;
  /// Symmetric weights, zero diagonal, binary {0,1} heaviside neurons.
  /// On failure, returns false and explains in `why` when given.
  bool is_hopfield(std::string* why = nullptr) const;

 private:
  CandidateNetwork() = default;
  std::vector<NeuronSpec> neurons_;
  std::vector<double> weights_;  // row-major [from][to]
  std::size_t t_c_ = 1;
  UpdateMode mode_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> visible_;
  std::vector<std::size_t> hidden_;
  std::vector<std::vector<std::size_t>> inputs_;
  std::map<std::string, std::size_t> index_;
};

/// Exhaustive decomposition of the update map's transition graph.
struct TransitionReport {
  std::vector<NetState> states;           // full enumeration
  std::vector<std::size_t> successor;     // under update() (t_c steps)
  std::vector<std::size_t> x_inf;         // sorted; states on cycles
  std::vector<std::vector<std::size_t>> cycles;  // fixed points are 1-cycles
  std::vector<bool> recurrent;            // per state

  bool in_x_inf(std::size_t state_index) const { return recurrent[state_index]; }
};

/// Enumerate the state space, compute successors under the t_c-update, and
/// extract the infinitely recurring states (exactly the states on cycles of
/// the successor map; on finite spaces this is X_inf).
TransitionReport compute_x_inf(const CandidateNetwork& net,
                               std::size_t cap = kDefaultStateCap);

/// Hopfield energy E(s) = -sum_{i<j} w_ij s_i s_j - sum_i b_i s_i.
/// Requires a valid Hopfield structure.
double hopfield_energy(const CandidateNetwork& net, const NetState& s);

}  // namespace semenc::net
