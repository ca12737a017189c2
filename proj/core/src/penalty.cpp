#include "semenc/penalty.hpp"

#include <cmath>
#include <set>

namespace semenc::logic {

std::vector<std::string> PenaltyKB::atom_names() const {
  std::set<std::string> names;
  for (const auto& s : sentences) s.body.collect_atoms(names);
  return {names.begin(), names.end()};
}

void PenaltyKB::validate() const {
  for (const auto& s : sentences) {
    if (std::isnan(s.confidence) || s.confidence < 0)
      throw ValidationError("penalty confidence must be >= 0");
  }
}

double penalty(const PenaltyKB& kb, const Interpretation& m, const Universe& u) {
  kb.validate();
  double total = 0.0;
  for (const auto& s : kb.sentences)
    if (!s.body.eval(m, u)) total += s.confidence;  // += inf saturates
  return total;
}

PenaltyModelsResult penalty_models(const PenaltyKB& kb, UniversePtr u,
                                   std::size_t atom_cap) {
  kb.validate();
  if (u->size() > atom_cap)
    throw CapExceeded("penalty enumeration over " + std::to_string(u->size()) +
                      " atoms exceeds cap of " + std::to_string(atom_cap));
  for (const auto& name : kb.atom_names())
    if (!u->contains(name))
      throw ValidationError("penalty sentence atom not in universe: " + name);

  auto argmin_set = [&](const PenaltyKB& effective, std::vector<double>* out_pen,
                        double* out_min) {
    std::uint64_t total = std::uint64_t{1} << u->size();
    out_pen->assign(total, 0.0);
    double best = kInfinity;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      double p = penalty(effective, Interpretation{bits}, *u);
      (*out_pen)[bits] = p;
      if (p < best) best = p;
    }
    ModelSet models(u);
    for (std::uint64_t bits = 0; bits < total; ++bits)
      if ((*out_pen)[bits] == best)
        models.add(ModelSet::of_interpretation(u, Interpretation{bits})
                       .cubes()
                       .front());
    models.compress();
    *out_min = best;
    return models;
  };

  PenaltyModelsResult res{ModelSet::none(u)};
  res.models = argmin_set(kb, &res.penalties, &res.min_penalty);
  if (std::isinf(res.min_penalty)) {
    // Hard constraints jointly unsatisfiable: fall back to the finite part.
    PenaltyKB finite;
    for (const auto& s : kb.sentences)
      if (!std::isinf(s.confidence)) finite.sentences.push_back(s);
    std::vector<double> finite_pen;
    res.models = argmin_set(finite, &finite_pen, &res.min_penalty);
    res.hard_constraints_unsat = true;
  }
  return res;
}

}  // namespace semenc::logic
