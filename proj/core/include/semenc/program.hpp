#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semenc/logic.hpp"

namespace semenc::logic {

struct Literal {
  std::string atom;
  bool negated = false;
  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

/// Ground clause head <- b1 & ... & bk. An empty body is a fact.
struct Clause {
  std::string head;
  std::vector<Literal> body;
  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause&) const = default;
};

struct LogicProgram {
  std::vector<Clause> clauses;

  bool is_horn() const;        // no negated body literals
  bool is_fact(std::size_t i) const { return clauses[i].body.empty(); }
  std::vector<std::string> atom_names() const;  // sorted, deduplicated
  UniversePtr universe() const { return make_universe(atom_names()); }
  std::string to_string() const;
};

/// Directed dependency graph body-atom -> head-atom has no cycle.
bool is_acyclic(const LogicProgram& p);

/// One application of the immediate-consequence operator: atoms whose bodies
/// are satisfied by m; everything else (including atoms heading no clause)
/// comes out false. Negated body literals are satisfied when their atom is
/// false in m.
Interpretation tp_step(const LogicProgram& p, const Interpretation& m,
                       const Universe& u);

struct TpResult {
  enum class Status { FixedPoint, Cycle, Exhausted };
  Status status = Status::Exhausted;
  Interpretation fixpoint;                // valid when FixedPoint
  std::vector<Interpretation> cycle;      // valid when Cycle; period >= 2
  std::size_t iterations = 0;             // steps taken before repetition

  bool converged() const { return status == Status::FixedPoint; }
};

/// Iterate tp_step from m0 until a state repeats.
TpResult tp_fixpoint(const LogicProgram& p, const Interpretation& m0,
                     const Universe& u, std::size_t max_iters = 10000);

/// Clark-completion formulas A <-> (body1 | body2 | ...), one per universe
/// atom (empty disjunction = false). Their classical models are exactly the
/// program's models under the supported-model reading.
std::vector<Formula> completion_formulas(const LogicProgram& p,
                                         const Universe& u);

/// The program's model set (supported models) by exact enumeration.
ModelSet program_models(const LogicProgram& p, UniversePtr u,
                        std::size_t atom_cap = kDefaultAtomCap);

// --- first-order fragment: variables over finite constant lists -------------

struct Term {
  std::string name;
  bool is_variable = false;
  bool operator==(const Term&) const = default;
};

struct FoAtom {
  std::string predicate;
  std::vector<Term> args;
  bool operator==(const FoAtom&) const = default;
};

struct FoLiteral {
  FoAtom atom;
  bool negated = false;
};

struct FoClause {
  FoAtom head;
  std::vector<FoLiteral> body;
};

struct FoProgram {
  std::vector<FoClause> clauses;
};

/// Propositional atom name for a ground first-order atom: "pred(c,d)".
std::string ground_atom_name(const std::string& predicate,
                             const std::vector<std::string>& constants);

/// All substitutions of variables by constants, deduplicated. A constant
/// argument outside `constants` is an error.
LogicProgram ground(const FoProgram& p, const std::vector<std::string>& constants);

}  // namespace semenc::logic
