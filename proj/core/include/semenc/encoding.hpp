#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semenc/logic.hpp"
#include "semenc/net.hpp"

namespace semenc::encoding {

enum class Agg : std::uint8_t { Union, Intersection };

std::string to_string(Agg agg);

/// Finite value -> truth-value table (the map g). Total on each mapped
/// neuron's domain, which validate_encoding verifies.
struct TruthMap {
  std::vector<std::pair<double, bool>> rows;

  std::optional<bool> lookup(double value) const;
  static TruthMap binary() { return {{{0.0, false}, {1.0, true}}}; }
};

/// Neurons-as-atoms map: a bijection between housed atoms and the visible
/// neurons, plus a value->truth table.
struct EncodingNat {
  logic::UniversePtr universe;  // full atom universe (>= housed atoms)
  std::vector<std::pair<std::string, std::string>> atom_neuron;  // atom -> neuron name
  TruthMap g = TruthMap::binary();
};

/// Distributed-atoms map. Selector neurons choose which atoms the state
/// talks about; for each representation family j and housed atom Q,
/// o_j(Q) is a subset of the selectors, h_j(Q) the selector values under
/// which Q is addressed, and r_j(Q) the value neuron carrying Q's truth.
struct EncodingDat {
  struct Row {
    std::string atom;
    std::vector<std::string> selectors;    // o_j(Q)
    std::vector<double> selector_values;   // h_j(Q), aligned with selectors
    std::string value_neuron;              // r_j(Q)
  };
  struct Triple {
    std::vector<Row> rows;  // one per housed atom
  };

  logic::UniversePtr universe;
  std::vector<std::string> selector_neurons;  // the k selectors (visible)
  std::vector<Triple> triples;                // j = 1..l
  TruthMap g = TruthMap::binary();
};

/// Explicit visible-pattern -> model-set table (the representation used for
/// transported encodings i o f).
struct EncodingTable {
  logic::UniversePtr universe;
  std::vector<std::pair<net::NetState, logic::ModelSet>> entries;  // keyed on visible part
};

using Encoding = std::variant<EncodingNat, EncodingDat, EncodingTable>;

const logic::UniversePtr& universe_of(const Encoding& enc);

struct Diagnostics {
  struct Issue {
    std::string condition;  // which definitional bullet failed
    std::string detail;
  };
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Check the definitional conditions of the encoding against the network's
/// visible partition. Returns every violated condition.
Diagnostics validate_encoding(const Encoding& enc, const net::CandidateNetwork& net);

void require_valid_encoding(const Encoding& enc, const net::CandidateNetwork& net);

/// The set of interpretations represented by a state: a cube constraining
/// exactly the atoms the state determines. States equal on the visible
/// neurons yield equal results. A DAT state whose matched constraints
/// contradict yields the empty set.
logic::ModelSet interpret_state(const net::CandidateNetwork& net,
                                const Encoding& enc, const net::NetState& s);

/// M_N = Agg({ i(x) | x in X_inf }).
logic::ModelSet models_of_network(const net::CandidateNetwork& net,
                                  const Encoding& enc, Agg agg,
                                  std::size_t cap = kDefaultStateCap);

struct EncodingReport {
  logic::ModelSet m_n;
  logic::ModelSet m_l;
  bool is_neural_model = false;       // {} < M_N subseteq M_L
  bool is_semantic_encoding = false;  // neural model and M_N == M_L
  std::optional<net::NetState> witness_state;           // x in X_inf, i(x) !<= M_L
  std::optional<logic::Interpretation> witness_model;   // model separating M_N / M_L
  std::string witness_note;

  std::string to_string(const net::CandidateNetwork& net) const;
};

/// Decide the neural-model condition {} < M_N subseteq M_L and the
/// semantic-encoding condition M_N == M_L against a precomputed model set.
EncodingReport analyze_encoding(const net::CandidateNetwork& net,
                                const Encoding& enc, Agg agg,
                                const logic::ModelSet& m_l,
                                std::size_t cap = kDefaultStateCap);

/// Same, with M_L computed from a classical formula knowledge-base.
EncodingReport analyze_encoding(const net::CandidateNetwork& net,
                                const Encoding& enc, Agg agg,
                                const std::vector<logic::Formula>& kb,
                                std::size_t cap = kDefaultStateCap);

bool check_neural_model(const net::CandidateNetwork& net, const Encoding& enc,
                        Agg agg, const std::vector<logic::Formula>& kb,
                        std::size_t cap = kDefaultStateCap);
bool check_semantic_encoding(const net::CandidateNetwork& net, const Encoding& enc,
                             Agg agg, const std::vector<logic::Formula>& kb,
                             std::size_t cap = kDefaultStateCap);

// --- logical classifiers -----------------------------------------------------

/// g_in / g_out tables for a feed-forward classifier network. Input patterns
/// are value tuples over `input_neurons` (which must cover the whole product
/// of their domains); output patterns likewise over `output_neurons`.
struct ClassifierTables {
  std::vector<std::string> input_neurons;
  std::vector<std::string> output_neurons;
  std::vector<std::pair<net::NetState, logic::Interpretation>> g_in;
  std::vector<std::pair<net::NetState, bool>> g_out;
};

/// Decides whether the network implements the logical classifier of `phi`:
/// for every input pattern, the propagated output classifies exactly the
/// models of phi. The equivalent semantic-encoding condition for alpha <-> phi
/// is computed independently and the two routes are required to agree.
/// g_in must be surjective onto the interpretations of `universe`.
bool check_logical_classifier(const net::CandidateNetwork& net,
                              const ClassifierTables& tables,
                              const logic::Formula& phi,
                              logic::UniversePtr universe);

// --- encoding transport ------------------------------------------------------

/// State bijection given as an explicit table of (state of net1, state of net2).
struct StateBijection {
  std::vector<std::pair<net::NetState, net::NetState>> pairs;
};

class TransportError : public Error {
 public:
  TransportError(const std::string& what, net::NetState witness)
      : Error(what), witness(std::move(witness)) {}
  net::NetState witness;
};

/// Pull enc2 back along f: the table-backed encoding i o f for net1. Verifies
/// that f is a bijection of the full state spaces and that it conjugates the
/// update maps (f(N1(x)) = N2(f(x))) by exhaustive enumeration; on failure
/// throws TransportError carrying a witness state of net1.
EncodingTable transport_encoding(const net::CandidateNetwork& net1,
                                 const net::CandidateNetwork& net2,
                                 const StateBijection& f, const Encoding& enc2,
                                 std::size_t cap = kDefaultStateCap);

}  // namespace semenc::encoding
