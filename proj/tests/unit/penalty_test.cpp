#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semenc/penalty.hpp"

using namespace semenc;
using logic::Formula;
using logic::Interpretation;
using logic::PenaltyKB;

namespace {

Interpretation interp(const logic::Universe& u,
                      std::initializer_list<std::pair<const char*, bool>> vals) {
  Interpretation m;
  for (const auto& [name, v] : vals) m.set(u.index_of(name), v);
  return m;
}

}  // namespace

TEST_CASE("penalty sums the confidences of violated sentences") {
  PenaltyKB kb;
  kb.sentences.push_back({1.5, Formula::atom("a") || Formula::atom("b")});
  kb.sentences.push_back({2.5, !Formula::atom("b")});
  auto u = kb.universe();
  CHECK(logic::penalty(kb, interp(*u, {{"a", false}, {"b", false}}), *u) == 1.5);
  CHECK(logic::penalty(kb, interp(*u, {{"a", true}, {"b", false}}), *u) == 0.0);
  CHECK(logic::penalty(kb, interp(*u, {{"a", true}, {"b", true}}), *u) == 2.5);
  CHECK(logic::penalty(kb, interp(*u, {{"a", false}, {"b", true}}), *u) == 2.5);
}

TEST_CASE("penalty of the empty knowledge-base is zero") {
  PenaltyKB kb;
  auto u = logic::make_universe({"a"});
  CHECK(logic::penalty(kb, Interpretation{}, *u) == 0.0);
  auto res = logic::penalty_models(kb, u);
  CHECK(res.models.expand().size() == 2);
}

TEST_CASE("contradictory weighted atoms") {
  PenaltyKB kb;
  kb.sentences.push_back({2.0, Formula::atom("a")});
  kb.sentences.push_back({3.0, !Formula::atom("a")});
  auto u = kb.universe();
  CHECK(logic::penalty(kb, interp(*u, {{"a", true}}), *u) == 3.0);
  CHECK(logic::penalty(kb, interp(*u, {{"a", false}}), *u) == 2.0);
  auto res = logic::penalty_models(kb, u);
  auto models = res.models.expand();
  REQUIRE(models.size() == 1);
  CHECK_FALSE(models[0].value(0));  // the cheaper violation wins
}

TEST_CASE("penalty_models returns the full argmin set on ties") {
  PenaltyKB kb;
  kb.sentences.push_back({1.0, Formula::atom("a")});
  kb.sentences.push_back({1.0, !Formula::atom("a")});
  auto res = logic::penalty_models(kb, kb.universe());
  CHECK(res.models.expand().size() == 2);
  CHECK(res.min_penalty == 1.0);
}

TEST_CASE("infinite confidences saturate and mark hard constraints") {
  PenaltyKB kb;
  kb.sentences.push_back({logic::kInfinity, Formula::atom("a")});
  kb.sentences.push_back({logic::kInfinity, !Formula::atom("a")});
  kb.sentences.push_back({1.0, Formula::atom("b")});
  auto u = kb.universe();
  CHECK(std::isinf(logic::penalty(kb, Interpretation{}, *u)));
  auto res = logic::penalty_models(kb, u);
  CHECK(res.hard_constraints_unsat);
  // Fallback argmin over the finite part: b must hold.
  for (const auto& m : res.models.expand()) CHECK(m.value(u->index_of("b")));
}

TEST_CASE("negative confidences are rejected") {
  PenaltyKB kb;
  kb.sentences.push_back({-1.0, Formula::atom("a")});
  CHECK_THROWS_AS(logic::penalty(kb, Interpretation{}, *kb.universe()),
                  ValidationError);
}

TEST_CASE("scaling all confidences leaves the argmin set unchanged") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> conf(0.1, 5.0);
  std::uniform_int_distribution<int> n_sent(1, 4);
  std::uniform_int_distribution<int> atom(0, 3);
  std::uniform_int_distribution<int> flip(0, 1);
  for (int round = 0; round < 100; ++round) {
    PenaltyKB kb;
    int k = n_sent(rng);
    for (int s = 0; s < k; ++s) {
      Formula f = Formula::atom("a" + std::to_string(atom(rng)));
      if (flip(rng)) f = !f;
      Formula g = Formula::atom("a" + std::to_string(atom(rng)));
      if (flip(rng)) f = f || g;
      kb.sentences.push_back({conf(rng), f});
    }
    auto u = kb.universe();
    auto base = logic::penalty_models(kb, u);
    PenaltyKB scaled = kb;
    double factor = conf(rng);
    for (auto& s : scaled.sentences) s.confidence *= factor;
    auto res = logic::penalty_models(scaled, u);
    CHECK(res.models.same_models(base.models));
  }
}
