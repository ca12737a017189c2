#include "semenc/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semenc/program.hpp"

namespace semenc::fuzzy {

using logic::Formula;

std::vector<std::string> FuzzyKB::atom_names() const {
  std::set<std::string> names;
  for (const auto& s : sentences) s.body.collect_atoms(names);
  return {names.begin(), names.end()};
}

void FuzzyKB::validate() const {
  for (const auto& s : sentences) {
    if (std::isnan(s.lo) || std::isnan(s.hi) || s.lo < 0.0 || s.hi > 1.0 ||
        s.lo > s.hi)
      throw ValidationError("fuzzy label must satisfy 0 <= lo <= hi <= 1");
  }
}

double eval_formula(const FuzzyValuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True: return 1.0;
    case Formula::Kind::False: return 0.0;
    case Formula::Kind::Atom: {
      auto it = v.find(f.atom_name());
      if (it == v.end())
        throw ValidationError("unvalued atom: " + f.atom_name());
      if (it->second < 0.0 || it->second > 1.0)
        throw ValidationError("valuation outside [0,1] for atom " + f.atom_name());
      return it->second;
    }
    case Formula::Kind::Not: return 1.0 - eval_formula(v, f.lhs());
    case Formula::Kind::And:
      return std::min(eval_formula(v, f.lhs()), eval_formula(v, f.rhs()));
    case Formula::Kind::Or:
      return std::max(eval_formula(v, f.lhs()), eval_formula(v, f.rhs()));
    case Formula::Kind::Implies:
      return std::max(1.0 - eval_formula(v, f.lhs()), eval_formula(v, f.rhs()));
    case Formula::Kind::Iff: {
      double a = eval_formula(v, f.lhs());
      double b = eval_formula(v, f.rhs());
      return std::min(std::max(1.0 - a, b), std::max(1.0 - b, a));
    }
  }
  throw Error("unreachable formula kind");
}

double interval_distance(double x, double lo, double hi) {
  return std::max({lo - x, x - hi, 0.0});
}

double sat_agg(const FuzzyValuation& v, const FuzzyKB& kb, SatAggKind agg) {
  kb.validate();
  if (kb.sentences.empty()) return 1.0;  // vacuous satisfaction
  double acc = agg == SatAggKind::Min ? 1.0 : 0.0;
  for (const auto& s : kb.sentences) {
    double score = 1.0 - interval_distance(eval_formula(v, s.body), s.lo, s.hi);
    if (agg == SatAggKind::Min)
      acc = std::min(acc, score);
    else
      acc += score;
  }
  if (agg == SatAggKind::Mean) acc /= static_cast<double>(kb.sentences.size());
  return acc;
}

namespace {

std::string valuation_label(const FuzzyValuation& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [atom, value] : v) {
    if (!first) out += ", ";
    first = false;
    out += atom + "=" + format_real(value);
  }
  return out + "}";
}

}  // namespace

FidelityReport fid_fuzzy(const std::vector<FuzzyValuation>& valuations,
                         const FuzzyKB& kb, SatAggKind agg) {
  kb.validate();
  if (valuations.empty())
    throw ValidationError("fid_fuzzy needs a nonempty valuation set");
  FidelityReport report;
  report.measure = "fid_fuzzy";
  double inf = 1.0;
  for (const auto& v : valuations) {
    double score = sat_agg(v, kb, agg);
    inf = std::min(inf, score);
    report.breakdown.push_back({valuation_label(v), score, score == 1.0});
  }
  report.value = inf;
  return report;
}

std::vector<FuzzyValuation> valuations_of(const logic::ModelSet& models,
                                          const FuzzyKB& kb,
                                          std::size_t atom_cap) {
  const auto& u = *models.universe();
  for (const auto& name : kb.atom_names())
    if (!u.contains(name))
      throw ValidationError("fuzzy sentence atom not in the model universe: " +
                            name);
  std::set<std::vector<double>> seen;  // restriction to kb atoms
  auto kb_atoms = kb.atom_names();
  std::vector<FuzzyValuation> out;
  for (const auto& m : models.expand(atom_cap)) {
    std::vector<double> key;
    for (const auto& name : kb_atoms)
      key.push_back(m.value(u.index_of(name)) ? 1.0 : 0.0);
    if (!seen.insert(key).second) continue;
    FuzzyValuation v;
    for (std::size_t a = 0; a < kb_atoms.size(); ++a) v[kb_atoms[a]] = key[a];
    out.push_back(std::move(v));
  }
  return out;
}

FidelityReport fid_fuzzy_of_network(const net::CandidateNetwork& net,
                                    const encoding::Encoding& enc,
                                    encoding::Agg agg, const FuzzyKB& kb,
                                    SatAggKind satagg, std::size_t cap) {
  logic::ModelSet m_n = encoding::models_of_network(net, enc, agg, cap);
  if (m_n.empty())
    throw ValidationError("fid_fuzzy is undefined for an empty M_N");
  return fid_fuzzy(valuations_of(m_n, kb), kb, satagg);
}

FuzzyValuation PartialGrounding::to_valuation() const {
  FuzzyValuation out;
  for (const auto& pred : predicates) {
    // Totality over constants^arity.
    std::size_t expected = 1;
    for (std::size_t i = 0; i < pred.arity; ++i) expected *= constants.size();
    if (pred.table.size() != expected)
      throw ValidationError("grounding of " + pred.name +
                            " is not total over the constant domain");
    for (const auto& [args, value] : pred.table) {
      if (args.size() != pred.arity)
        throw ValidationError("arity mismatch in grounding of " + pred.name);
      for (const auto& c : args)
        if (std::find(constants.begin(), constants.end(), c) == constants.end())
          throw ValidationError("grounding argument not a declared constant: " + c);
      if (value < 0.0 || value > 1.0)
        throw ValidationError("grounding value outside [0,1]");
      out[logic::ground_atom_name(pred.name, args)] = value;
    }
  }
  return out;
}

std::vector<std::string> PartialGrounding::ground_atoms() const {
  std::vector<std::string> out;
  for (const auto& [atom, value] : to_valuation()) {
    (void)value;
    out.push_back(atom);
  }
  return out;
}

Formula forall(const std::vector<std::string>& constants,
               const std::function<Formula(const std::string&)>& scheme) {
  if (constants.empty())
    throw ValidationError("universal quantification over an empty domain");
  Formula acc = scheme(constants.front());
  for (std::size_t i = 1; i < constants.size(); ++i)
    acc = acc && scheme(constants[i]);
  return acc;
}

}  // namespace semenc::fuzzy
