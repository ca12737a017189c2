#pragma once

// Independent reference implementations used as test oracles. These must not
// share code paths with the library machinery they check.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "semenc/logic.hpp"
#include "semenc/net.hpp"
#include "semenc/program.hpp"

namespace oracle {

// Straight matrix arithmetic for one synchronous step of a binary heaviside /
// identity network: out_i = g(sum_j w[j][i] x_j + b_i).
inline std::vector<double> dense_step(
    const std::vector<std::vector<double>>& w, const std::vector<double>& bias,
    const std::vector<char>& kind,  // 'h' heaviside, 'i' identity
    const std::vector<double>& x) {
  const std::size_t n = bias.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = bias[i];
    for (std::size_t j = 0; j < n; ++j) sum += w[j][i] * x[j];
    out[i] = kind[i] == 'h' ? (sum >= 0.0 ? 1.0 : 0.0) : sum;
  }
  return out;
}

// Set of interpretations (bitmasks) denoted by a cube list, by direct
// membership arithmetic over every assignment.
inline std::set<std::uint64_t> expand_cubes(
    const std::vector<semenc::logic::Cube>& cubes, std::size_t n_atoms) {
  std::set<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n_atoms); ++bits) {
    for (const auto& c : cubes) {
      if (((bits ^ c.values) & c.mask) == 0) {
        out.insert(bits);
        break;
      }
    }
  }
  return out;
}

inline std::set<std::uint64_t> expand(const semenc::logic::ModelSet& ms) {
  return expand_cubes(ms.cubes(), ms.universe()->size());
}

// One immediate-consequence step over string sets, by literal reading of the
// definition.
inline std::set<std::string> tp_once(const semenc::logic::LogicProgram& p,
                                     const std::set<std::string>& truths) {
  std::set<std::string> out;
  for (const auto& c : p.clauses) {
    bool fires = true;
    for (const auto& l : c.body) {
      bool holds = truths.count(l.atom) != 0;
      if (l.negated == holds) {
        fires = false;
        break;
      }
    }
    if (fires) out.insert(c.head);
  }
  return out;
}

inline std::set<std::string> interp_to_set(const semenc::logic::Interpretation& m,
                                           const semenc::logic::Universe& u) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (m.value(i)) out.insert(u.name(i));
  return out;
}

}  // namespace oracle
