#include "semenc/program.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace semenc::logic {

bool LogicProgram::is_horn() const {
  for (const auto& c : clauses)
    for (const auto& l : c.body)
      if (l.negated) return false;
  return true;
}

std::vector<std::string> LogicProgram::atom_names() const {
  std::set<std::string> names;
  for (const auto& c : clauses) {
    names.insert(c.head);
    for (const auto& l : c.body) names.insert(l.atom);
  }
  return {names.begin(), names.end()};
}

std::string LogicProgram::to_string() const {
  std::string out;
  for (const auto& c : clauses) {
    out += c.head;
    out += " <-";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      out += i ? " & " : " ";
      if (c.body[i].negated) out += "~";
      out += c.body[i].atom;
    }
    out += ".\n";
  }
  return out;
}

bool is_acyclic(const LogicProgram& p) {
  auto names = p.atom_names();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  std::vector<std::vector<std::size_t>> out_edges(names.size());
  for (const auto& c : p.clauses) {
    std::size_t head = index[c.head];
    for (const auto& l : c.body) out_edges[index[l.atom]].push_back(head);
  }
  // Iterative 3-color DFS.
  enum : char { White, Grey, Black };
  std::vector<char> color(names.size(), White);
  for (std::size_t start = 0; start < names.size(); ++start) {
    if (color[start] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
    color[start] = Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < out_edges[node].size()) {
        std::size_t child = out_edges[node][next++];
        if (color[child] == Grey) return false;
        if (color[child] == White) {
          color[child] = Grey;
          stack.emplace_back(child, 0);
        }
      } else {
        color[node] = Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

Interpretation tp_step(const LogicProgram& p, const Interpretation& m,
                       const Universe& u) {
  Interpretation out;
  for (const auto& c : p.clauses) {
    bool fires = true;
    for (const auto& l : c.body) {
      bool v = m.value(u.index_of(l.atom));
      if (l.negated ? v : !v) {
        fires = false;
        break;
      }
    }
    if (fires) out.set(u.index_of(c.head), true);
  }
  return out;
}

TpResult tp_fixpoint(const LogicProgram& p, const Interpretation& m0,
                     const Universe& u, std::size_t max_iters) {
  if (max_iters < 1) throw ValidationError("tp_fixpoint needs max_iters >= 1");
  TpResult res;
  std::map<std::uint64_t, std::size_t> seen;  // state -> step index
  std::vector<Interpretation> trail{m0};
  seen[m0.bits] = 0;
  Interpretation cur = m0;
  for (std::size_t step = 1; step <= max_iters; ++step) {
    Interpretation next = tp_step(p, cur, u);
    res.iterations = step;
    if (next == cur) {
      res.status = TpResult::Status::FixedPoint;
      res.fixpoint = cur;
      res.iterations = step - 1;
      return res;
    }
    auto it = seen.find(next.bits);
    if (it != seen.end()) {
      res.status = TpResult::Status::Cycle;
      res.cycle.assign(trail.begin() + static_cast<std::ptrdiff_t>(it->second),
                       trail.end());
      return res;
    }
    seen[next.bits] = step;
    trail.push_back(next);
    cur = next;
  }
  res.status = TpResult::Status::Exhausted;
  return res;
}

std::vector<Formula> completion_formulas(const LogicProgram& p,
                                         const Universe& u) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::string& atom = u.name(i);
    Formula disjunction = Formula::constant(false);
    bool any = false;
    for (const auto& c : p.clauses) {
      if (c.head != atom) continue;
      Formula body = Formula::constant(true);
      bool body_any = false;
      for (const auto& l : c.body) {
        Formula lit = Formula::atom(l.atom);
        if (l.negated) lit = !lit;
        body = body_any ? (body && lit) : lit;
        body_any = true;
      }
      disjunction = any ? (disjunction || body) : body;
      any = true;
    }
    out.push_back(Formula::iff(Formula::atom(atom), disjunction));
  }
  return out;
}

ModelSet program_models(const LogicProgram& p, UniversePtr u,
                        std::size_t atom_cap) {
  auto formulas = completion_formulas(p, *u);
  return models_of(formulas, std::move(u), atom_cap);
}

std::string ground_atom_name(const std::string& predicate,
                             const std::vector<std::string>& constants) {
  if (constants.empty()) return predicate;
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < constants.size(); ++i) {
    if (i) out += ",";
    out += constants[i];
  }
  return out + ")";
}

namespace {

std::vector<std::string> clause_variables(const FoClause& c,
                                          const std::set<std::string>& constants) {
  std::set<std::string> vars;
  auto scan = [&](const FoAtom& a) {
    for (const auto& t : a.args) {
      if (t.is_variable) {
        vars.insert(t.name);
      } else if (!constants.count(t.name)) {
        throw ValidationError("clause mentions constant '" + t.name +
                              "' not in the constant list");
      }
    }
  };
  scan(c.head);
  for (const auto& l : c.body) scan(l.atom);
  return {vars.begin(), vars.end()};
}

std::string instantiate(const FoAtom& a,
                        const std::map<std::string, std::string>& subst) {
  std::vector<std::string> args;
  args.reserve(a.args.size());
  for (const auto& t : a.args)
    args.push_back(t.is_variable ? subst.at(t.name) : t.name);
  return ground_atom_name(a.predicate, args);
}

}  // namespace

LogicProgram ground(const FoProgram& p, const std::vector<std::string>& constants) {
  std::set<std::string> cset(constants.begin(), constants.end());
  std::set<Clause> out;
  for (const auto& c : p.clauses) {
    auto vars = clause_variables(c, cset);
    if (!vars.empty() && constants.empty())
      throw ValidationError("clause has variables but the constant list is empty");
    // Enumerate substitutions in mixed radix over the constant list.
    std::vector<std::size_t> digits(vars.size(), 0);
    while (true) {
      std::map<std::string, std::string> subst;
      for (std::size_t i = 0; i < vars.size(); ++i)
        subst[vars[i]] = constants[digits[i]];
      Clause g;
      g.head = instantiate(c.head, subst);
      for (const auto& l : c.body)
        g.body.push_back(Literal{instantiate(l.atom, subst), l.negated});
      out.insert(g);
      // advance
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        if (++digits[i] < constants.size()) break;
        digits[i] = 0;
      }
      if (i == digits.size()) break;
      if (vars.empty()) break;
    }
  }
  LogicProgram result;
  result.clauses.assign(out.begin(), out.end());
  return result;
}

}  // namespace semenc::logic
