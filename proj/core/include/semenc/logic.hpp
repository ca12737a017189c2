#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semenc/common.hpp"

namespace semenc::logic {

/// An ordered, immutable set of atom names. Interpretations, cubes and model
/// sets are all expressed relative to one universe; atoms are addressed by
/// index into it. At most 64 atoms (bitmask representation).
class Universe {
 public:
  explicit Universe(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::string& name(std::size_t i) const { return atoms_[i]; }
  const std::vector<std::string>& names() const { return atoms_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws if absent
  bool contains(const std::string& name) const { return find(name).has_value(); }

  bool operator==(const Universe& other) const { return atoms_ == other.atoms_; }

 private:
  std::vector<std::string> atoms_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> atoms);

/// Total truth assignment over a universe, packed as a bitmask (bit i set
/// means atom i is true).
struct Interpretation {
  std::uint64_t bits = 0;

  bool value(std::size_t atom) const { return (bits >> atom) & 1u; }
  void set(std::size_t atom, bool v) {
    if (v)
      bits |= (std::uint64_t{1} << atom);
    else
      bits &= ~(std::uint64_t{1} << atom);
  }
  bool operator==(const Interpretation&) const = default;
  auto operator<=>(const Interpretation&) const = default;
};

std::string to_string(const Interpretation& m, const Universe& u);

/// Partial truth assignment: atoms in `mask` are constrained to the
/// corresponding bit of `values`; the rest are free. Denotes the set of all
/// total interpretations extending it (never empty).
struct Cube {
  std::uint64_t mask = 0;
  std::uint64_t values = 0;  // meaningful only on mask bits

  bool constrains(std::size_t atom) const { return (mask >> atom) & 1u; }
  std::optional<bool> value(std::size_t atom) const {
    if (!constrains(atom)) return std::nullopt;
    return (values >> atom) & 1u;
  }
  void assign(std::size_t atom, bool v) {
    mask |= (std::uint64_t{1} << atom);
    if (v)
      values |= (std::uint64_t{1} << atom);
    else
      values &= ~(std::uint64_t{1} << atom);
  }
  bool contains(const Interpretation& m) const {
    return ((m.bits ^ values) & mask) == 0;
  }
  /// Greatest lower bound; nullopt when the assignments contradict.
  static std::optional<Cube> meet(const Cube& a, const Cube& b);
  /// b covers a as interpretation sets (b's constraints are a subset of a's).
  static bool covers(const Cube& b, const Cube& a) {
    return (b.mask & ~a.mask) == 0 && ((a.values ^ b.values) & b.mask) == 0;
  }
  bool operator==(const Cube&) const = default;
  auto operator<=>(const Cube&) const = default;
};

std::string to_string(const Cube& c, const Universe& u);

/// A finite union of cubes over a shared universe. Set semantics: two model
/// sets are equal iff they denote the same interpretation set; equality and
/// containment are decided exactly by a recursive cube-cover procedure.
class ModelSet {
 public:
  explicit ModelSet(UniversePtr universe) : universe_(std::move(universe)) {}

  static ModelSet none(UniversePtr u) { return ModelSet(std::move(u)); }
  static ModelSet all(UniversePtr u) {
    ModelSet s(std::move(u));
    s.cubes_.push_back(Cube{});
    return s;
  }
  static ModelSet of(UniversePtr u, Cube c) {
    ModelSet s(std::move(u));
    s.cubes_.push_back(c);
    return s;
  }
  static ModelSet of_interpretation(UniversePtr u, const Interpretation& m);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  bool empty() const { return cubes_.empty(); }

  void add(const Cube& c);

  ModelSet unite(const ModelSet& other) const;
  ModelSet intersect(const ModelSet& other) const;
  bool subset_of(const ModelSet& other) const;
  bool same_models(const ModelSet& other) const;
  bool contains(const Interpretation& m) const;

  /// Remove cubes covered by other cubes and merge cube pairs differing in a
  /// single constrained atom. Purely cosmetic; semantics are unchanged.
  void compress();

  /// All interpretations denoted, in increasing bit order. Throws CapExceeded
  /// when the universe is larger than `atom_cap`.
  std::vector<Interpretation> expand(std::size_t atom_cap = kDefaultAtomCap) const;

  std::string to_string() const;

 private:
  void require_same_universe(const ModelSet& other) const;

  UniversePtr universe_;
  std::vector<Cube> cubes_;
};

/// Propositional formula AST over named atoms. Immutable value type.
class Formula {
 public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Iff };

  Formula() : Formula(constant(true)) {}

  static Formula constant(bool value);
  static Formula atom(std::string name);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->atom; }
  Formula lhs() const { return Formula(node_->l); }
  Formula rhs() const { return Formula(node_->r); }

  friend Formula operator!(const Formula& f);
  friend Formula operator&&(const Formula& a, const Formula& b);
  friend Formula operator||(const Formula& a, const Formula& b);
  static Formula implies(const Formula& a, const Formula& b);
  static Formula iff(const Formula& a, const Formula& b);

  bool eval(const std::function<bool(const std::string&)>& atom_value) const;
  bool eval(const Interpretation& m, const Universe& u) const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string atom;
    std::shared_ptr<const Node> l;
    std::shared_ptr<const Node> r;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Universe of exactly the atoms mentioned by the formulas, sorted by name.
UniversePtr mentioned_universe(const std::vector<Formula>& kb);

/// Exact model enumeration: the set of total interpretations over `universe`
/// satisfying every formula, in cube-compressed form. Universe size is
/// limited by `atom_cap`.
ModelSet models_of(const std::vector<Formula>& kb, UniversePtr universe,
                   std::size_t atom_cap = kDefaultAtomCap);

}  // namespace semenc::logic
