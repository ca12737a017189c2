#include <doctest.h>

#include <random>

#include "semenc/demos.hpp"
#include "semenc/fuzzy.hpp"

using namespace semenc;
using fuzzy::FuzzyKB;
using fuzzy::FuzzySentence;
using fuzzy::FuzzyValuation;
using fuzzy::SatAggKind;
using logic::Formula;

TEST_CASE("fuzzy connectives: worked values") {
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  FuzzyValuation v{{"a", 0.05}, {"b", 0.45}};
  CHECK(fuzzy::eval_formula(v, a || b) == doctest::Approx(0.45));
  CHECK(fuzzy::eval_formula({{"a", 0.3}}, !a) == doctest::Approx(0.7));
  CHECK(fuzzy::eval_formula(v, a && b) == doctest::Approx(0.05));
  CHECK(fuzzy::eval_formula(v, Formula::implies(a, b)) == doctest::Approx(0.95));
  CHECK_THROWS_AS(fuzzy::eval_formula(v, Formula::atom("zz")), ValidationError);
}

TEST_CASE("boolean-valued valuations reproduce the classical tables") {
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  auto u = logic::make_universe({"a", "b"});
  for (int bits = 0; bits < 4; ++bits) {
    FuzzyValuation v{{"a", (bits & 1) ? 1.0 : 0.0},
                     {"b", (bits & 2) ? 1.0 : 0.0}};
    logic::Interpretation m{static_cast<std::uint64_t>(bits)};
    for (const Formula& f : {a && b, a || b, !a, Formula::implies(a, b),
                             Formula::iff(a, b)}) {
      double fv = fuzzy::eval_formula(v, f);
      CHECK(fv == (f.eval(m, *u) ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("interval distance: zero inside, 1-Lipschitz outside") {
  CHECK(fuzzy::interval_distance(0.5, 0.25, 0.75) == 0.0);
  CHECK(fuzzy::interval_distance(0.25, 0.25, 0.75) == 0.0);
  CHECK(fuzzy::interval_distance(0.1, 0.25, 0.75) == doctest::Approx(0.15));
  CHECK(fuzzy::interval_distance(0.9, 0.25, 0.75) == doctest::Approx(0.15));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double lo = unit(rng), hi = unit(rng);
    if (lo > hi) std::swap(lo, hi);
    double x = unit(rng), y = unit(rng);
    double dx = fuzzy::interval_distance(x, lo, hi);
    double dy = fuzzy::interval_distance(y, lo, hi);
    CHECK(std::abs(dx - dy) <= std::abs(x - y) + 1e-12);
    CHECK((dx == 0.0) == (x >= lo && x <= hi));
  }
}

TEST_CASE("fid_fuzzy on the flip-flop model set is 0.25 under min") {
  auto report = fuzzy::fid_fuzzy_of_network(
      demos::flip_flop_pair(), demos::flip_flop_encoding(), encoding::Agg::Union,
      demos::interval_fidelity_kb(), SatAggKind::Min);
  CHECK(report.value == doctest::Approx(0.25).epsilon(1e-12));
  // Per-valuation scores 0.5 (both true) and 0.25 (both false).
  REQUIRE(report.breakdown.size() == 2);
}

TEST_CASE("fid_fuzzy with mean aggregation is 0.625") {
  auto report = fuzzy::fid_fuzzy_of_network(
      demos::flip_flop_pair(), demos::flip_flop_encoding(), encoding::Agg::Union,
      demos::interval_fidelity_kb(), SatAggKind::Mean);
  CHECK(report.value == doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("fid_fuzzy is 1 when every valuation hits every interval") {
  FuzzyKB kb;
  kb.sentences.push_back({0.0, 1.0, Formula::atom("a")});
  auto report = fuzzy::fid_fuzzy({{{"a", 0.3}}, {{"a", 0.9}}}, kb);
  CHECK(report.value == 1.0);
}

TEST_CASE("fid_fuzzy rejects an empty valuation set") {
  CHECK_THROWS_AS(fuzzy::fid_fuzzy({}, demos::interval_fidelity_kb()),
                  ValidationError);
}

TEST_CASE("SatAgg axioms: at most 1, and 1 iff all scores are 1") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto agg : {SatAggKind::Min, SatAggKind::Mean}) {
    for (int round = 0; round < 200; ++round) {
      FuzzyKB kb;
      int k = 1 + round % 4;
      FuzzyValuation v;
      bool all_inside = true;
      for (int s = 0; s < k; ++s) {
        std::string atom = "a" + std::to_string(s);
        double value = unit(rng);
        v[atom] = value;
        double lo = unit(rng), hi = unit(rng);
        if (lo > hi) std::swap(lo, hi);
        if (round % 3 == 0) {  // force satisfaction on some rounds
          lo = std::max(0.0, value - 0.1);
          hi = std::min(1.0, value + 0.1);
        }
        kb.sentences.push_back({lo, hi, Formula::atom(atom)});
        if (fuzzy::interval_distance(value, lo, hi) > 0) all_inside = false;
      }
      double score = fuzzy::sat_agg(v, kb, agg);
      CHECK(score <= 1.0 + 1e-12);
      CHECK((score == 1.0) == all_inside);
    }
  }
}

TEST_CASE("fidelity is 1 exactly on neural models of the fuzzy system") {
  // Lemma-style property in both directions over random finite instances.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int ones = 0, lows = 0;
  for (int round = 0; round < 300; ++round) {
    FuzzyKB kb;
    int n_sent = 1 + round % 3;
    for (int s = 0; s < n_sent; ++s) {
      double lo = unit(rng), hi = unit(rng);
      if (lo > hi) std::swap(lo, hi);
      Formula f = Formula::atom("a");
      if (round % 2) f = f || Formula::atom("b");
      kb.sentences.push_back({lo, hi, f});
    }
    std::vector<FuzzyValuation> vals;
    int n_val = 1 + round % 3;
    for (int i = 0; i < n_val; ++i)
      vals.push_back({{"a", unit(rng)}, {"b", unit(rng)}});
    auto report = fuzzy::fid_fuzzy(vals, kb, SatAggKind::Min);
    bool every = true;
    for (const auto& v : vals)
      for (const auto& s : kb.sentences)
        if (fuzzy::interval_distance(fuzzy::eval_formula(v, s.body), s.lo, s.hi) > 0)
          every = false;
    CHECK((report.value == 1.0) == every);
    every ? ++ones : ++lows;
  }
  CHECK(ones > 0);
  CHECK(lows > 0);
}

TEST_CASE("classical reduction: [1,1] labels recover models_of") {
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  auto u = logic::make_universe({"a", "b"});
  std::vector<Formula> classical{(a && b) || (!a && !b)};
  FuzzyKB kb;
  for (const auto& f : classical) kb.sentences.push_back({1.0, 1.0, f});
  auto m_l = logic::models_of(classical, u);
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    logic::Interpretation m{bits};
    FuzzyValuation v{{"a", m.value(0) ? 1.0 : 0.0}, {"b", m.value(1) ? 1.0 : 0.0}};
    auto report = fuzzy::fid_fuzzy({v}, kb, SatAggKind::Min);
    CHECK((report.value == 1.0) == m_l.contains(m));
  }
}

TEST_CASE("partial groundings propositionalize to valuations") {
  fuzzy::PartialGrounding g;
  g.constants = {"a", "b"};
  g.predicates.push_back(
      {"r", 1, {{{"a"}, 0.9}, {{"b"}, 0.2}}});
  auto v = g.to_valuation();
  CHECK(v.at("r(a)") == doctest::Approx(0.9));
  CHECK(v.at("r(b)") == doctest::Approx(0.2));

  // Universal quantification over the finite domain is the min.
  Formula all = fuzzy::forall(g.constants, [](const std::string& c) {
    return Formula::atom("r(" + c + ")");
  });
  CHECK(fuzzy::eval_formula(v, all) == doctest::Approx(0.2));

  SUBCASE("non-total tables are rejected") {
    g.predicates[0].table.pop_back();
    CHECK_THROWS_AS(g.to_valuation(), ValidationError);
  }
}

TEST_CASE("fuzzy labels are validated") {
  FuzzyKB kb;
  kb.sentences.push_back({0.8, 0.2, Formula::atom("a")});
  CHECK_THROWS_AS(kb.validate(), ValidationError);
}
