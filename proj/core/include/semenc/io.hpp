#pragma once

#include <string>
#include <vector>

#include "semenc/encoding.hpp"
#include "semenc/fuzzy.hpp"
#include "semenc/net.hpp"
#include "semenc/penalty.hpp"
#include "semenc/program.hpp"
#include "semenc/stochastic.hpp"
#include "semenc/translate.hpp"

namespace semenc::io {

/// Propositional formula text: atoms (identifiers, optionally with ground
/// argument tuples like r1(a)), connectives ~ & | -> <->, parentheses, and
/// the constants true / false.
logic::Formula parse_formula(const std::string& text);

/// A parsed knowledge-base file: one sentence per line. Plain lines are
/// classical formulas, `c : formula` penalty sentences (c a number or inf),
/// `[a,b] : formula` fuzzy sentences, and lines ending in `.` program
/// clauses (`head <- b1 & ~b2.`; facts `head.` or `head <-.`). Directives:
/// `atoms: A B C` extends the universe, `constants: c d` declares the
/// grounding domain. In clause arguments an uppercase-initial identifier is
/// a variable. Lines starting with # are comments.
struct KnowledgeBaseFile {
  std::vector<logic::Formula> formulas;
  logic::PenaltyKB penalty;
  fuzzy::FuzzyKB fuzzy_kb;
  logic::FoProgram program;
  std::vector<std::string> declared_atoms;
  std::vector<std::string> constants;

  bool has_formulas() const { return !formulas.empty(); }
  bool has_penalty() const { return !penalty.sentences.empty(); }
  bool has_fuzzy() const { return !fuzzy_kb.sentences.empty(); }
  bool has_program() const { return !program.clauses.empty(); }

  /// Clauses grounded over the declared constants.
  logic::LogicProgram ground_program() const;
  /// Atoms of the classical formulas plus any declared atoms, sorted.
  logic::UniversePtr formula_universe() const;
};

KnowledgeBaseFile parse_kb(const std::string& text);
KnowledgeBaseFile load_kb(const std::string& path);

std::string to_text(const logic::PenaltyKB& kb);
std::string to_text(const logic::LogicProgram& p);

/// Valuation file: one valuation per line, `atom=value` pairs separated by
/// whitespace.
std::vector<fuzzy::FuzzyValuation> parse_valuations(const std::string& text);
std::vector<fuzzy::FuzzyValuation> load_valuations(const std::string& path);

// Structured (JSON) formats; schemas in docs/.
net::CandidateNetwork parse_network(const std::string& json_text);
net::CandidateNetwork load_network(const std::string& path);
std::string to_json(const net::CandidateNetwork& net);

encoding::Encoding parse_encoding(const std::string& json_text);
encoding::Encoding load_encoding(const std::string& path);
std::string to_json(const encoding::Encoding& enc);

stochastic::StochasticNetwork parse_snet(const std::string& json_text);
stochastic::StochasticNetwork load_snet(const std::string& path);
std::string to_json(const stochastic::StochasticNetwork& snet);

std::string to_json(const translate::Certificate& cert);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace semenc::io
