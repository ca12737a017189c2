#include "semenc/demos.hpp"

#include <cmath>
#include <functional>

namespace semenc::demos {

using encoding::Agg;
using logic::Formula;
using net::CandidateNetwork;
using net::NetState;
using net::TransferFn;

CandidateNetwork feedforward_or_chain() {
  CandidateNetwork::Builder b;
  b.add_neuron({"a", TransferFn::heaviside(), 1.0, {0.0, 1.0}, true});
  b.add_neuron({"b", TransferFn::heaviside(), -1.0, {0.0, 1.0}, true});
  b.add_neuron({"h", TransferFn::heaviside(), -1.0, {0.0, 1.0}, false});
  b.add_neuron({"c", TransferFn::heaviside(), -1.0, {0.0, 1.0}, true});
  b.weight("a", "h", 1.0).weight("b", "h", 1.0).weight("h", "c", 1.0);
  return b.build();
}

logic::LogicProgram or_chain_program() {
  logic::LogicProgram p;
  p.clauses.push_back({"c", {{"a", false}}});
  p.clauses.push_back({"c", {{"b", false}}});
  p.clauses.push_back({"a", {}});
  return p;
}

CandidateNetwork three_cycle_rotation(std::size_t t_c) {
  CandidateNetwork::Builder b;
  for (const char* name : {"x1", "x2", "x3"})
    b.add_neuron({name, TransferFn::heaviside(), -0.5, {0.0, 1.0}, true});
  b.weight("x1", "x2", 1.0).weight("x2", "x3", 1.0).weight("x3", "x1", 1.0);
  b.t_c(t_c);
  return b.build();
}

CandidateNetwork flip_flop_pair() {
  CandidateNetwork::Builder b;
  b.add_neuron({"a", TransferFn::heaviside(), 2.0, {0.0, 1.0}, true});
  b.add_neuron({"b", TransferFn::heaviside(), 2.0, {0.0, 1.0}, true});
  b.weight("a", "a", -1.0).weight("b", "b", -1.0);
  b.weight("a", "b", -1.5).weight("b", "a", -1.5);
  return b.build();
}

std::vector<Formula> flip_flop_kb() {
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  return {(a && b) || (!a && !b)};
}

encoding::EncodingNat flip_flop_encoding() {
  encoding::EncodingNat enc;
  enc.universe = logic::make_universe({"a", "b"});
  enc.atom_neuron = {{"a", "a"}, {"b", "b"}};
  return enc;
}

CandidateNetwork selector_grid() {
  CandidateNetwork::Builder b;
  b.add_neuron({"x1", TransferFn::identity(), 0.0, {0.0, 1.0}, true});
  b.add_neuron({"x2", TransferFn::identity(), 0.0, {0.0, 1.0}, true});
  b.add_neuron({"y1", TransferFn::heaviside(), -0.5, {0.0, 1.0}, true});
  b.add_neuron({"y2", TransferFn::heaviside(), -0.5, {0.0, 1.0}, true});
  b.weight("x1", "x1", 1.0).weight("x2", "x2", 1.0);
  b.weight("x1", "y1", 1.0).weight("x1", "y2", 1.0);
  b.weight("x2", "y1", 1.0).weight("x2", "y2", 1.0);
  return b.build();
}

namespace {

const std::vector<std::pair<std::string, std::vector<double>>>& constant_codes() {
  // The selector pattern addressing each constant.
  static const std::vector<std::pair<std::string, std::vector<double>>> codes = {
      {"a", {1.0, 1.0}}, {"b", {1.0, 0.0}}, {"c", {0.0, 1.0}}, {"d", {0.0, 0.0}}};
  return codes;
}

}  // namespace

encoding::EncodingDat selector_grid_encoding() {
  encoding::EncodingDat enc;
  std::vector<std::string> atoms;
  for (const char* pred : {"r1", "r2"})
    for (const auto& [constant, code] : constant_codes()) {
      (void)code;
      atoms.push_back(std::string(pred) + "(" + constant + ")");
    }
  enc.universe = logic::make_universe(atoms);
  enc.selector_neurons = {"x1", "x2"};
  encoding::EncodingDat::Triple triple;
  for (const char* pred : {"r1", "r2"})
    for (const auto& [constant, code] : constant_codes()) {
      encoding::EncodingDat::Row row;
      row.atom = std::string(pred) + "(" + constant + ")";
      row.selectors = {"x1", "x2"};
      row.selector_values = code;
      row.value_neuron = std::string(pred) == "r1" ? "y1" : "y2";
      triple.rows.push_back(std::move(row));
    }
  enc.triples.push_back(std::move(triple));
  return enc;
}

std::vector<Formula> selector_grid_kb() {
  std::vector<Formula> kb;
  kb.push_back(fuzzy::forall(
      {"a", "b", "c", "d"}, [](const std::string& z) {
        return Formula::iff(Formula::atom("r1(" + z + ")"),
                            Formula::atom("r2(" + z + ")"));
      }));
  kb.push_back(Formula::atom("r1(a)"));
  kb.push_back(Formula::atom("r1(b)"));
  kb.push_back(Formula::atom("r1(c)"));
  kb.push_back(!Formula::atom("r1(d)"));
  return kb;
}

fuzzy::FuzzyKB interval_fidelity_kb() {
  fuzzy::FuzzyKB kb;
  Formula a = Formula::atom("a");
  Formula b = Formula::atom("b");
  kb.sentences.push_back({0.75, 1.0, a || b});
  kb.sentences.push_back({0.5, 1.0, !a || !b});
  return kb;
}

stochastic::LayeredStochasticNet stochastic_pair() {
  stochastic::LayeredStochasticNet snet;
  snet.input_names = {"x"};
  snet.input_dist = {{{1.0}, 0.5}, {{0.0}, 0.5}};
  snet.units.push_back({"y1", {{{1.0}, 0.4}, {{0.0}, 1.0}}});
  snet.units.push_back({"y2", {{{1.0}, 0.3}, {{0.0}, 0.2}}});
  return snet;
}

encoding::EncodingNat stochastic_pair_encoding() {
  encoding::EncodingNat enc;
  enc.universe = logic::make_universe({"Y1", "Y2"});
  enc.atom_neuron = {{"Y1", "y1"}, {"Y2", "y2"}};
  return enc;
}

std::vector<Formula> stochastic_pair_kb() {
  return {Formula::iff(Formula::atom("Y1"), Formula::atom("Y2"))};
}

std::vector<Formula> stochastic_pair_xor_kb() {
  Formula y1 = Formula::atom("Y1");
  Formula y2 = Formula::atom("Y2");
  return {y1 || y2, !(y1 && y2)};
}

logic::PenaltyKB disjunction_penalty_kb(double c1, double c2) {
  logic::PenaltyKB kb;
  kb.sentences.push_back({c1, Formula::atom("a") || Formula::atom("b")});
  kb.sentences.push_back({c2, !Formula::atom("b")});
  return kb;
}

namespace {

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

void run_case(std::vector<DemoCase>& out, const std::string& name,
              const std::function<void()>& body) {
  DemoCase c{name, true, ""};
  try {
    body();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  out.push_back(c);
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

}  // namespace

std::vector<DemoCase> run_demo_suite() {
  std::vector<DemoCase> results;

  run_case(results, "feed-forward chain settles in two updates", [] {
    auto net = feedforward_or_chain();
    NetState s{0, 1, 0, 1};
    NetState s1 = net.update(s);
    expect(net.states_equal(s1, {1, 0, 1, 0}), "first update");
    NetState s2 = net.update(s1);
    expect(net.states_equal(s2, {1, 0, 1, 1}), "second update");
    expect(net.states_equal(net.update(s2), s2), "stable state");
  });

  run_case(results, "rotation net: one step rotates the state", [] {
    auto net = three_cycle_rotation(1);
    for (const auto& s : net.enumerate_states()) {
      NetState expected{s[2], s[0], s[1]};
      expect(net.states_equal(net.update(s), expected), "rotation");
    }
  });

  run_case(results, "rotation net: two steps rotate twice", [] {
    auto net = three_cycle_rotation(2);
    for (const auto& s : net.enumerate_states()) {
      NetState expected{s[1], s[2], s[0]};
      expect(net.states_equal(net.update(s), expected), "double rotation");
    }
  });

  run_case(results, "rotation net: three steps are the identity", [] {
    auto net = three_cycle_rotation(3);
    for (const auto& s : net.enumerate_states())
      expect(net.states_equal(net.update(s), s), "identity");
  });

  run_case(results, "flip-flop pair: recurring set is the two-state cycle", [] {
    auto net = flip_flop_pair();
    auto report = net::compute_x_inf(net);
    expect(report.x_inf.size() == 2, "two recurring states");
    expect(report.cycles.size() == 1 && report.cycles[0].size() == 2,
           "one cycle of length two");
    expect(net.states_equal(report.states[report.x_inf[0]], {0, 0}) &&
               net.states_equal(report.states[report.x_inf[1]], {1, 1}),
           "cycle states");
  });

  run_case(results, "flip-flop pair semantically encodes a<->b (union)", [] {
    auto report = encoding::analyze_encoding(
        flip_flop_pair(), flip_flop_encoding(), Agg::Union, flip_flop_kb());
    expect(report.is_neural_model, "neural model");
    expect(report.is_semantic_encoding, "semantic encoding");
  });

  run_case(results, "selector grid: four recurring states", [] {
    auto report = net::compute_x_inf(selector_grid());
    expect(report.x_inf.size() == 4, "four recurring states");
    for (const auto& expected :
         {NetState{0, 0, 0, 0}, NetState{0, 1, 1, 1}, NetState{1, 0, 1, 1},
          NetState{1, 1, 1, 1}}) {
      bool found = false;
      for (std::size_t s : report.x_inf)
        if (report.states[s] == expected) found = true;
      expect(found, "recurring state " + net::to_string(expected));
    }
  });

  run_case(results, "selector grid tables form a valid distributed map", [] {
    auto diag = encoding::validate_encoding(selector_grid_encoding(), selector_grid());
    expect(diag.ok(), diag.to_string());
  });

  run_case(results,
           "selector grid semantically encodes its knowledge-base (intersection)",
           [] {
             auto report = encoding::analyze_encoding(
                 selector_grid(), selector_grid_encoding(), Agg::Intersection,
                 selector_grid_kb());
             expect(report.is_semantic_encoding, "semantic encoding");
             expect(report.m_n.expand().size() == 1, "single model");
           });

  run_case(results, "interval semantics: max/min connectives and entailment", [] {
    fuzzy::FuzzyValuation v{{"a", 0.05}, {"b", 0.45}};
    Formula a = Formula::atom("a");
    Formula b = Formula::atom("b");
    expect(close(fuzzy::eval_formula(v, a || b), 0.45), "disjunction is max");
    expect(close(fuzzy::eval_formula({{"a", 0.3}}, !a), 0.7), "negation is 1-x");
    // A valuation satisfying [0,0.1]: a and [0.4,0.5]: a|b must put b in [0.4,0.5].
    double vb = fuzzy::eval_formula(v, b);
    expect(fuzzy::interval_distance(fuzzy::eval_formula(v, a), 0.0, 0.1) == 0 &&
               fuzzy::interval_distance(fuzzy::eval_formula(v, a || b), 0.4, 0.5) == 0,
           "premises hold");
    expect(fuzzy::interval_distance(vb, 0.4, 0.5) == 0, "entailed label for b");
  });

  run_case(results, "interval fidelity of the flip-flop pair is 0.25", [] {
    auto report = fuzzy::fid_fuzzy_of_network(
        flip_flop_pair(), flip_flop_encoding(), Agg::Union, interval_fidelity_kb(),
        fuzzy::SatAggKind::Min);
    expect(close(report.value, 0.25), "value " + format_real(report.value));
  });

  run_case(results, "interval fidelity with mean aggregation is 0.625", [] {
    auto report = fuzzy::fid_fuzzy_of_network(
        flip_flop_pair(), flip_flop_encoding(), Agg::Union, interval_fidelity_kb(),
        fuzzy::SatAggKind::Mean);
    expect(close(report.value, 0.625), "value " + format_real(report.value));
  });

  run_case(results, "stochastic pair: fidelity 0.37 with masses 0.16 and 0.21", [] {
    auto report = stochastic::fid_prob(stochastic_pair(), stochastic_pair_encoding(),
                                       stochastic_pair_kb());
    expect(close(report.value, 0.37), "value " + format_real(report.value));
    bool saw16 = false, saw21 = false;
    for (const auto& e : report.breakdown) {
      if (e.satisfied && close(e.value, 0.16)) saw16 = true;
      if (e.satisfied && close(e.value, 0.21)) saw21 = true;
    }
    expect(saw16 && saw21, "component masses");
  });

  run_case(results, "penalty table (c1, c2, 0, c2) and its minimal model", [] {
    for (auto [c1, c2] : {std::pair<double, double>{1, 1}, {3, 2}}) {
      auto kb = disjunction_penalty_kb(c1, c2);
      auto u = kb.universe();
      auto value = [&](bool a, bool b) {
        logic::Interpretation m;
        m.set(u->index_of("a"), a);
        m.set(u->index_of("b"), b);
        return logic::penalty(kb, m, *u);
      };
      expect(close(value(false, false), c1), "penalty of (~a,~b)");
      expect(close(value(false, true), c2), "penalty of (~a,b)");
      expect(close(value(true, false), 0.0), "penalty of (a,~b)");
      expect(close(value(true, true), c2), "penalty of (a,b)");
      auto pm = logic::penalty_models(kb, u);
      auto models = pm.models.expand();
      logic::Interpretation expected;
      expected.set(u->index_of("a"), true);
      expect(models.size() == 1 && models[0] == expected, "unique minimal model");
    }
  });

  run_case(results, "immediate-consequence fixed point of the chain program", [] {
    auto p = or_chain_program();
    auto u = p.universe();
    auto res = logic::tp_fixpoint(p, logic::Interpretation{}, *u);
    expect(res.converged(), "converges");
    logic::Interpretation expected;
    expected.set(u->index_of("a"), true);
    expected.set(u->index_of("c"), true);
    expect(res.fixpoint == expected, "fixed point {a, c}");
  });

  return results;
}

}  // namespace semenc::demos
