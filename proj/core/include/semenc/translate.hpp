#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semenc/encoding.hpp"
#include "semenc/net.hpp"
#include "semenc/penalty.hpp"
#include "semenc/program.hpp"

namespace semenc::translate {

/// Record of the verification run performed on a compiled instance. A check
/// may be skipped when its hypothesis is unmet (recorded with the reason);
/// `pass` is the conjunction of the non-skipped checks.
struct Certificate {
  struct Check {
    enum class Status : std::uint8_t { Passed, Failed, Skipped };
    std::string name;
    Status status = Status::Passed;
    std::string detail;
  };
  std::vector<Check> checks;
  bool pass = true;

  void add(const std::string& name, bool ok, std::string detail = "");
  void skip(const std::string& name, std::string detail);
  const Check* find(const std::string& name) const;
  std::string to_string() const;
};

struct CompilationResult {
  net::CandidateNetwork net;
  encoding::EncodingNat enc;
  Certificate certificate;
  /// For the penalty<->energy correspondences: the constant relating the
  /// (hidden-minimized) energy to the penalty function.
  std::optional<double> energy_offset;
};

/// Acyclic Horn programs into feed-forward step networks: one visible neuron
/// per atom, one hidden AND gate per non-fact clause (weights 1, bias
/// -(k-0.5)), gates OR-ed into their head (bias -0.5), facts as a +0.5 head
/// bias, t_c = 2. The certificate verifies i(N(x)) = T_P(i(x)) on every state
/// and that the unique fixed point carries the program's unique model.
CompilationResult kbann_compile(const logic::LogicProgram& p);

struct ExtractionResult {
  logic::LogicProgram program;
  Certificate certificate;
};

/// Rule extraction from a feed-forward net with nonnegative weights and
/// binary heaviside units: for every neuron and every firing combination of
/// its inputs, a clause head <- active-inputs (subsumed clauses dropped).
/// The certificate re-verifies T_P(i(x)) = i(step(x)) exhaustively.
ExtractionResult horn_extract(const net::CandidateNetwork& net,
                              std::size_t fan_in_cap = kDefaultStateCap);

/// General ground programs into single-hidden-layer cyclic networks
/// (input neurons per atom, one hidden gate per clause, output neurons fed
/// back into the inputs, t_c = 3). Negated body literals enter with weight
/// -1. The certificate checks the T_P identity on every state and, when T_P
/// converges from every start, that the result is a semantic encoding of the
/// program under union.
CompilationResult cilp_compile(const logic::LogicProgram& p);

struct HopfieldPenaltyResult {
  logic::PenaltyKB kb;
  encoding::EncodingNat enc;
  double offset = 0.0;  // p_L(i0(x)) = E(x) + offset on every state
  Certificate certificate;
};

/// Hopfield network into penalty logic: w_ij > 0 gives (w_ij : Xi & Xj),
/// w_ij < 0 gives (-w_ij : ~(Xi & Xj)), biases likewise on single atoms.
/// Certified affine correspondence over all 2^n states.
HopfieldPenaltyResult hopfield_to_penalty(const net::CandidateNetwork& net,
                                          std::size_t state_cap = kDefaultStateCap);

/// Penalty knowledge-base (finite confidences, sentences over at most
/// `kMaxSentenceAtoms` atoms) into a Hopfield network whose hidden-minimized
/// energy is affine to the penalty function. Degree->=3 monomials of the
/// violation polynomial are quadratized by iterated pair substitution, one
/// hidden unit per substitution, gadget weight 2|c|+1.
inline constexpr std::size_t kMaxSentenceAtoms = 6;
CompilationResult penalty_to_hopfield(const logic::PenaltyKB& kb,
                                      logic::UniversePtr universe = nullptr,
                                      std::size_t state_cap = kDefaultStateCap);

}  // namespace semenc::translate
