#include "semenc/logic.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace semenc::logic {

Universe::Universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() > kMaxUniverseAtoms)
    throw CapExceeded("universe has " + std::to_string(atoms_.size()) +
                      " atoms; at most " + std::to_string(kMaxUniverseAtoms) +
                      " are supported");
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms_) {
    if (a.empty()) throw ValidationError("empty atom name in universe");
    if (!seen.insert(a).second)
      throw ValidationError("duplicate atom name in universe: " + a);
  }
}

std::optional<std::size_t> Universe::find(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return i;
  return std::nullopt;
}

std::size_t Universe::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw ValidationError("atom not in universe: " + name);
  return *i;
}

UniversePtr make_universe(std::vector<std::string> atoms) {
  return std::make_shared<const Universe>(std::move(atoms));
}

std::string to_string(const Interpretation& m, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!first) out += ", ";
    first = false;
    out += u.name(i);
    out += m.value(i) ? "=T" : "=F";
  }
  return out + "}";
}

std::optional<Cube> Cube::meet(const Cube& a, const Cube& b) {
  std::uint64_t both = a.mask & b.mask;
  if ((a.values ^ b.values) & both) return std::nullopt;
  Cube r;
  r.mask = a.mask | b.mask;
  r.values = (a.values & a.mask) | (b.values & b.mask);
  return r;
}

std::string to_string(const Cube& c, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!c.constrains(i)) continue;
    if (!first) out += ", ";
    first = false;
    out += u.name(i);
    out += *c.value(i) ? "=T" : "=F";
  }
  if (first) return "{*}";  // fully unconstrained
  return out + "}";
}

ModelSet ModelSet::of_interpretation(UniversePtr u, const Interpretation& m) {
  Cube c;
  c.mask = u->size() == 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << u->size()) - 1;
  c.values = m.bits & c.mask;
  return ModelSet::of(std::move(u), c);
}

void ModelSet::add(const Cube& c) {
  cubes_.push_back(Cube{c.mask, c.values & c.mask});
}

void ModelSet::require_same_universe(const ModelSet& other) const {
  if (!(*universe_ == *other.universe_))
    throw ValidationError("model sets are over different universes");
}

ModelSet ModelSet::unite(const ModelSet& other) const {
  require_same_universe(other);
  ModelSet out(universe_);
  out.cubes_ = cubes_;
  out.cubes_.insert(out.cubes_.end(), other.cubes_.begin(), other.cubes_.end());
  return out;
}

ModelSet ModelSet::intersect(const ModelSet& other) const {
  require_same_universe(other);
  ModelSet out(universe_);
  for (const auto& a : cubes_)
    for (const auto& b : other.cubes_)
      if (auto m = Cube::meet(a, b)) out.cubes_.push_back(*m);
  out.compress();
  return out;
}

namespace {

// Is cube `a` contained in the union of `cover`? Recursive splitting on atoms
// constrained by candidate cubes but not yet by `a`. Exact on any universe.
bool covered_by(const Cube& a, const std::vector<Cube>& cover) {
  std::vector<Cube> compatible;
  compatible.reserve(cover.size());
  for (const auto& b : cover) {
    std::uint64_t both = a.mask & b.mask;
    if ((a.values ^ b.values) & both) continue;  // disjoint from a
    if (Cube::covers(b, a)) return true;
    compatible.push_back(b);
  }
  if (compatible.empty()) return false;
  // Pick an atom some compatible cube constrains beyond a and split.
  std::uint64_t extra = 0;
  for (const auto& b : compatible) extra |= b.mask & ~a.mask;
  std::size_t atom = static_cast<std::size_t>(std::countr_zero(extra));
  Cube a0 = a, a1 = a;
  a0.assign(atom, false);
  a1.assign(atom, true);
  return covered_by(a0, compatible) && covered_by(a1, compatible);
}

}  // namespace

bool ModelSet::subset_of(const ModelSet& other) const {
  require_same_universe(other);
  for (const auto& a : cubes_)
    if (!covered_by(a, other.cubes_)) return false;
  return true;
}

bool ModelSet::same_models(const ModelSet& other) const {
  return subset_of(other) && other.subset_of(*this);
}

bool ModelSet::contains(const Interpretation& m) const {
  for (const auto& c : cubes_)
    if (c.contains(m)) return true;
  return false;
}

void ModelSet::compress() {
  // Compression is cosmetic (equality and containment are decided by the
  // cover check); skip the quadratic passes on very large cube lists.
  if (cubes_.size() > 4096) {
    std::sort(cubes_.begin(), cubes_.end());
    cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
    return;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // Drop cubes covered by a single other cube.
    for (std::size_t i = 0; i < cubes_.size(); ++i) {
      for (std::size_t j = 0; j < cubes_.size(); ++j) {
        if (i == j) continue;
        if (Cube::covers(cubes_[j], cubes_[i])) {
          cubes_.erase(cubes_.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          --i;
          break;
        }
      }
    }
    // Merge pairs identical except for one constrained atom's value.
    for (std::size_t i = 0; i < cubes_.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cubes_.size(); ++j) {
        if (cubes_[i].mask != cubes_[j].mask) continue;
        std::uint64_t diff =
            (cubes_[i].values ^ cubes_[j].values) & cubes_[i].mask;
        if (std::popcount(diff) != 1) continue;
        cubes_[i].mask &= ~diff;
        cubes_[i].values &= cubes_[i].mask;
        cubes_.erase(cubes_.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
  }
  std::sort(cubes_.begin(), cubes_.end());
}

std::vector<Interpretation> ModelSet::expand(std::size_t atom_cap) const {
  if (universe_->size() > atom_cap)
    throw CapExceeded("expansion over " + std::to_string(universe_->size()) +
                      " atoms exceeds cap of " + std::to_string(atom_cap));
  std::vector<Interpretation> out;
  std::uint64_t total = std::uint64_t{1} << universe_->size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Interpretation m{bits};
    if (contains(m)) out.push_back(m);
  }
  return out;
}

std::string ModelSet::to_string() const {
  if (cubes_.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (i) out += " ∪ ";
    out += logic::to_string(cubes_[i], *universe_);
  }
  return out;
}

Formula Formula::constant(bool value) {
  static const auto true_node =
      std::make_shared<const Node>(Node{Kind::True, "", nullptr, nullptr});
  static const auto false_node =
      std::make_shared<const Node>(Node{Kind::False, "", nullptr, nullptr});
  return Formula(value ? true_node : false_node);
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Formula operator!(const Formula& f) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::Not, "", f.node_, nullptr}));
}

Formula operator&&(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::And, "", a.node_, b.node_}));
}

Formula operator||(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::Or, "", a.node_, b.node_}));
}

Formula Formula::implies(const Formula& a, const Formula& b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, "", a.node_, b.node_}));
}

Formula Formula::iff(const Formula& a, const Formula& b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Iff, "", a.node_, b.node_}));
}

bool Formula::eval(const std::function<bool(const std::string&)>& atom_value) const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return atom_value(atom_name());
    case Kind::Not: return !lhs().eval(atom_value);
    case Kind::And: return lhs().eval(atom_value) && rhs().eval(atom_value);
    case Kind::Or: return lhs().eval(atom_value) || rhs().eval(atom_value);
    case Kind::Implies: return !lhs().eval(atom_value) || rhs().eval(atom_value);
    case Kind::Iff: return lhs().eval(atom_value) == rhs().eval(atom_value);
  }
  throw Error("unreachable formula kind");
}

bool Formula::eval(const Interpretation& m, const Universe& u) const {
  return eval([&](const std::string& name) { return m.value(u.index_of(name)); });
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False:
      return;
    case Kind::Atom:
      out.insert(atom_name());
      return;
    case Kind::Not:
      lhs().collect_atoms(out);
      return;
    default:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
  }
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return atom_name();
    case Kind::Not: return "~" + lhs().to_string();
    case Kind::And: return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
    case Kind::Or: return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
    case Kind::Implies:
      return "(" + lhs().to_string() + " -> " + rhs().to_string() + ")";
    case Kind::Iff:
      return "(" + lhs().to_string() + " <-> " + rhs().to_string() + ")";
  }
  throw Error("unreachable formula kind");
}

UniversePtr mentioned_universe(const std::vector<Formula>& kb) {
  std::set<std::string> names;
  for (const auto& f : kb) f.collect_atoms(names);
  return make_universe(std::vector<std::string>(names.begin(), names.end()));
}

namespace {

// Kleene three-valued evaluation under a partial assignment: nullopt means
// the value is not yet determined by the assigned atoms.
std::optional<bool> eval_partial(const Formula& f, const Cube& assignment,
                                 const Universe& u) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return assignment.value(u.index_of(f.atom_name()));
    case K::Not: {
      auto v = eval_partial(f.lhs(), assignment, u);
      if (!v) return std::nullopt;
      return !*v;
    }
    case K::And: {
      auto a = eval_partial(f.lhs(), assignment, u);
      auto b = eval_partial(f.rhs(), assignment, u);
      if ((a && !*a) || (b && !*b)) return false;
      if (a && b) return true;
      return std::nullopt;
    }
    case K::Or: {
      auto a = eval_partial(f.lhs(), assignment, u);
      auto b = eval_partial(f.rhs(), assignment, u);
      if ((a && *a) || (b && *b)) return true;
      if (a && b) return false;
      return std::nullopt;
    }
    case K::Implies: {
      auto a = eval_partial(f.lhs(), assignment, u);
      auto b = eval_partial(f.rhs(), assignment, u);
      if ((a && !*a) || (b && *b)) return true;
      if (a && b) return *b || !*a;
      return std::nullopt;
    }
    case K::Iff: {
      auto a = eval_partial(f.lhs(), assignment, u);
      auto b = eval_partial(f.rhs(), assignment, u);
      if (a && b) return *a == *b;
      return std::nullopt;
    }
  }
  throw Error("unreachable formula kind");
}

// Shannon splitting on undetermined atoms; emits a compact cube cover of the
// satisfying assignments without enumerating rows.
void collect_models(const std::vector<Formula>& kb, const Universe& u,
                    const Cube& assignment, std::size_t next_atom,
                    std::vector<Cube>& out) {
  bool all_true = true;
  for (const auto& f : kb) {
    auto v = eval_partial(f, assignment, u);
    if (v && !*v) return;  // some completion is impossible: prune
    if (!v) all_true = false;
  }
  if (all_true) {
    out.push_back(assignment);
    return;
  }
  std::size_t atom = next_atom;
  while (atom < u.size() && assignment.constrains(atom)) ++atom;
  if (atom >= u.size()) throw Error("internal: undetermined formula with all atoms set");
  Cube c0 = assignment, c1 = assignment;
  c0.assign(atom, false);
  c1.assign(atom, true);
  collect_models(kb, u, c0, atom + 1, out);
  collect_models(kb, u, c1, atom + 1, out);
}

}  // namespace

ModelSet models_of(const std::vector<Formula>& kb, UniversePtr universe,
                   std::size_t atom_cap) {
  if (universe->size() > atom_cap)
    throw CapExceeded("model enumeration over " +
                      std::to_string(universe->size()) +
                      " atoms exceeds cap of " + std::to_string(atom_cap));
  for (const auto& f : kb)
    for (const auto& a : f.atoms())
      if (!universe->contains(a))
        throw ValidationError("formula atom not in universe: " + a);

  ModelSet out(universe);
  std::vector<Cube> cubes;
  collect_models(kb, *universe, Cube{}, 0, cubes);
  for (const auto& c : cubes) out.add(c);
  out.compress();
  return out;
}

}  // namespace semenc::logic
