#pragma once

#include <limits>
#include <string>
#include <vector>

#include "semenc/logic.hpp"

namespace semenc::logic {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Weighted sentence c : formula with confidence c in [0, inf]. Infinite
/// confidence marks a hard constraint.
struct PenaltySentence {
  double confidence = 1.0;
  Formula body;
};

struct PenaltyKB {
  std::vector<PenaltySentence> sentences;

  std::vector<std::string> atom_names() const;  // sorted
  UniversePtr universe() const { return make_universe(atom_names()); }
  void validate() const;  // confidences >= 0
};

/// Sum of the confidences of sentences false in m (saturating at infinity).
double penalty(const PenaltyKB& kb, const Interpretation& m, const Universe& u);

struct PenaltyModelsResult {
  ModelSet models;
  double min_penalty = 0.0;
  /// Hard constraints were jointly unsatisfiable; `models` is the argmin over
  /// the finite-confidence sentences only.
  bool hard_constraints_unsat = false;
  /// Penalty per interpretation, indexed by Interpretation::bits.
  std::vector<double> penalties;
};

/// The full argmin-by-penalty interpretation set (ties all returned).
PenaltyModelsResult penalty_models(const PenaltyKB& kb, UniversePtr u,
                                   std::size_t atom_cap = kDefaultAtomCap);

}  // namespace semenc::logic
