#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semenc/logic.hpp"

using namespace semenc;
using logic::Cube;
using logic::Formula;
using logic::Interpretation;
using logic::ModelSet;

TEST_CASE("universe rejects duplicates and enforces the size limit") {
  CHECK_THROWS_AS(logic::Universe({"a", "a"}), ValidationError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(logic::Universe{many}, CapExceeded);
  logic::Universe u({"a", "b"});
  CHECK(u.index_of("b") == 1);
  CHECK_THROWS_AS(u.index_of("z"), ValidationError);
}

TEST_CASE("formula evaluation matches the classical truth tables") {
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  auto u = logic::make_universe({"a", "b"});
  auto val = [&](bool va, bool vb) {
    Interpretation m;
    m.set(0, va);
    m.set(1, vb);
    return m;
  };
  CHECK((a && b).eval(val(true, true), *u));
  CHECK_FALSE((a && b).eval(val(true, false), *u));
  CHECK((a || b).eval(val(false, true), *u));
  CHECK_FALSE((a || b).eval(val(false, false), *u));
  CHECK(Formula::implies(a, b).eval(val(false, false), *u));
  CHECK_FALSE(Formula::implies(a, b).eval(val(true, false), *u));
  CHECK(Formula::iff(a, b).eval(val(false, false), *u));
  CHECK_FALSE(Formula::iff(a, b).eval(val(false, true), *u));
  CHECK((!a).eval(val(false, true), *u));
  CHECK(Formula::constant(true).eval(val(false, false), *u));
  CHECK_FALSE(Formula::constant(false).eval(val(true, true), *u));
}

TEST_CASE("cube meet detects contradictions") {
  Cube c1, c2;
  c1.assign(0, true);
  c2.assign(0, false);
  CHECK_FALSE(Cube::meet(c1, c2).has_value());
  c2 = Cube{};
  c2.assign(1, true);
  auto m = Cube::meet(c1, c2);
  REQUIRE(m.has_value());
  CHECK(*m->value(0));
  CHECK(*m->value(1));
}

TEST_CASE("models_of: equivalence knowledge-base") {
  // Models are exactly a=b=true and a=b=false.
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  auto u = logic::make_universe({"a", "b"});
  ModelSet ms = logic::models_of({(a && b) || (!a && !b)}, u);
  CHECK(oracle::expand(ms) == std::set<std::uint64_t>{0b00, 0b11});
}

TEST_CASE("models_of: empty knowledge-base is vacuously satisfied") {
  auto u = logic::make_universe({"a"});
  ModelSet ms = logic::models_of({}, u);
  CHECK(oracle::expand(ms) == std::set<std::uint64_t>{0, 1});
}

TEST_CASE("models_of: exclusive disjunction (4-row table oracle)") {
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  auto u = logic::make_universe({"a", "b"});
  ModelSet ms = logic::models_of({a || b, !(a && b)}, u);
  // Oracle: rows 01 and 10 of the 4-row truth table.
  CHECK(oracle::expand(ms) == std::set<std::uint64_t>{0b01, 0b10});
}

TEST_CASE("models_of enforces the atom cap") {
  std::vector<std::string> atoms;
  for (int i = 0; i < 21; ++i) atoms.push_back("a" + std::to_string(i));
  auto u = logic::make_universe(atoms);
  CHECK_THROWS_AS(logic::models_of({}, u), CapExceeded);
}

TEST_CASE("model-set algebra on the worked cubes") {
  auto u = logic::make_universe({"a", "b"});
  Cube tt, ff;
  tt.assign(0, true);
  tt.assign(1, true);
  ff.assign(0, false);
  ff.assign(1, false);
  ModelSet both = ModelSet::of(u, tt).unite(ModelSet::of(u, ff));
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  CHECK(both.same_models(logic::models_of({(a && b) || (!a && !b)}, u)));

  SUBCASE("identities with the empty set") {
    ModelSet none = ModelSet::none(u);
    CHECK(both.intersect(none).empty());
    CHECK(both.unite(none).same_models(both));
  }
  SUBCASE("universe mismatch is rejected") {
    auto u2 = logic::make_universe({"a", "c"});
    CHECK_THROWS_AS(both.unite(ModelSet::none(u2)), ValidationError);
  }
}

TEST_CASE("intersection of the four selector cubes is a single interpretation") {
  // Cubes {r1(d)=F,r2(d)=F}, {r1(c)=T,r2(c)=T}, {r1(b)=T,r2(b)=T},
  // {r1(a)=T,r2(a)=T} over the 8-atom universe.
  std::vector<std::string> atoms = {"r1(a)", "r1(b)", "r1(c)", "r1(d)",
                                    "r2(a)", "r2(b)", "r2(c)", "r2(d)"};
  auto u = logic::make_universe(atoms);
  auto cube_for = [&](const std::string& constant, bool truth) {
    Cube c;
    c.assign(u->index_of("r1(" + constant + ")"), truth);
    c.assign(u->index_of("r2(" + constant + ")"), truth);
    return ModelSet::of(u, c);
  };
  ModelSet acc = cube_for("d", false);
  acc = acc.intersect(cube_for("c", true));
  acc = acc.intersect(cube_for("b", true));
  acc = acc.intersect(cube_for("a", true));
  auto interps = acc.expand();
  REQUIRE(interps.size() == 1);
  for (const char* atom : {"r1(a)", "r1(b)", "r1(c)", "r2(a)", "r2(b)", "r2(c)"})
    CHECK(interps[0].value(u->index_of(atom)));
  CHECK_FALSE(interps[0].value(u->index_of("r1(d)")));
  CHECK_FALSE(interps[0].value(u->index_of("r2(d)")));
}

namespace {

ModelSet random_modelset(std::mt19937_64& rng, const logic::UniversePtr& u) {
  std::uniform_int_distribution<int> n_cubes(0, 4);
  std::uniform_int_distribution<std::uint64_t> bits(
      0, (std::uint64_t{1} << u->size()) - 1);
  ModelSet ms(u);
  int k = n_cubes(rng);
  for (int i = 0; i < k; ++i) {
    Cube c;
    c.mask = bits(rng);
    c.values = bits(rng) & c.mask;
    ms.add(c);
  }
  return ms;
}

}  // namespace

TEST_CASE("cube algebra agrees with the expansion oracle on random pairs") {
  std::mt19937_64 rng(20240811);
  for (std::size_t n_atoms : {1u, 3u, 7u, 12u}) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n_atoms; ++i) atoms.push_back("a" + std::to_string(i));
    auto u = logic::make_universe(atoms);
    for (int round = 0; round < 60; ++round) {
      ModelSet a = random_modelset(rng, u);
      ModelSet b = random_modelset(rng, u);
      auto ea = oracle::expand(a);
      auto eb = oracle::expand(b);

      auto eu = ea;
      eu.insert(eb.begin(), eb.end());
      CHECK(oracle::expand(a.unite(b)) == eu);

      std::set<std::uint64_t> ei;
      for (auto x : ea)
        if (eb.count(x)) ei.insert(x);
      CHECK(oracle::expand(a.intersect(b)) == ei);

      bool subset = true;
      for (auto x : ea)
        if (!eb.count(x)) subset = false;
      CHECK(a.subset_of(b) == subset);
      CHECK(a.same_models(b) == (ea == eb));
      CHECK(a.empty() == ea.empty());

      ModelSet c = a;
      c.compress();
      CHECK(oracle::expand(c) == ea);
    }
  }
}

TEST_CASE("interpretation and cube rendering") {
  auto u = logic::make_universe({"a", "b"});
  Interpretation m;
  m.set(0, true);
  CHECK(logic::to_string(m, *u) == "{a=T, b=F}");
  Cube c;
  CHECK(logic::to_string(c, *u) == "{*}");
  c.assign(1, false);
  CHECK(logic::to_string(c, *u) == "{b=F}");
}
