#pragma once

#include <map>
#include <string>
#include <vector>

#include "semenc/encoding.hpp"
#include "semenc/logic.hpp"
#include "semenc/report.hpp"

namespace semenc::fuzzy {

/// Interval-labelled sentence [lo, hi] : body. An unlabelled sentence is
/// [1, 1].
struct FuzzySentence {
  double lo = 1.0;
  double hi = 1.0;
  logic::Formula body;
};

struct FuzzyKB {
  std::vector<FuzzySentence> sentences;

  std::vector<std::string> atom_names() const;
  void validate() const;  // 0 <= lo <= hi <= 1
};

/// Atom -> degree in [0,1].
using FuzzyValuation = std::map<std::string, double>;

/// Goedel/Kleene semantics: ~x = 1-x, | = max, & = min, -> = max(1-x, y),
/// <-> = min of both implications. Constants true/false evaluate to 1/0.
/// Boolean-valued inputs reproduce the classical truth tables.
double eval_formula(const FuzzyValuation& v, const logic::Formula& f);

/// Distance from x to the interval [lo, hi]; zero iff x lies inside.
double interval_distance(double x, double lo, double hi);

enum class SatAggKind : std::uint8_t { Min, Mean };

/// SatAgg over the per-sentence scores 1 - d(value, [lo,hi]).
double sat_agg(const FuzzyValuation& v, const FuzzyKB& kb, SatAggKind agg);

/// Fid_fuzzy: the infimum over the given valuations of the aggregated
/// sentence scores. Equals 1 exactly when every valuation satisfies every
/// sentence. The valuation set must be nonempty.
FidelityReport fid_fuzzy(const std::vector<FuzzyValuation>& valuations,
                         const FuzzyKB& kb, SatAggKind agg = SatAggKind::Min);

/// The model set's interpretations as 0/1 valuations, deduplicated on the
/// knowledge-base's atoms.
std::vector<FuzzyValuation> valuations_of(const logic::ModelSet& models,
                                          const FuzzyKB& kb,
                                          std::size_t atom_cap = kDefaultAtomCap);

/// Fid_fuzzy of M_N = Agg({i(x) | x in X_inf}) against the fuzzy
/// knowledge-base.
FidelityReport fid_fuzzy_of_network(const net::CandidateNetwork& net,
                                    const encoding::Encoding& enc,
                                    encoding::Agg agg, const FuzzyKB& kb,
                                    SatAggKind satagg = SatAggKind::Min,
                                    std::size_t cap = kDefaultStateCap);

/// Table-backed grounding of predicates over a finite constant domain; the
/// fuzzy analogue of an interpretation for ground first-order use.
struct PartialGrounding {
  std::vector<std::string> constants;
  struct Predicate {
    std::string name;
    std::size_t arity = 1;
    /// Value per argument tuple; must be total over constants^arity.
    std::vector<std::pair<std::vector<std::string>, double>> table;
  };
  std::vector<Predicate> predicates;

  /// Valuation over the propositionalized atoms pred(c1,...,ck).
  FuzzyValuation to_valuation() const;
  std::vector<std::string> ground_atoms() const;
};

/// Expansion of a universally quantified scheme over a finite constant list:
/// the conjunction of the instances (the Goedel universal quantifier min).
logic::Formula forall(const std::vector<std::string>& constants,
                      const std::function<logic::Formula(const std::string&)>& scheme);

}  // namespace semenc::fuzzy
