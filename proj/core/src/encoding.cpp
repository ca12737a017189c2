#include "semenc/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace semenc::encoding {

using logic::Cube;
using logic::Interpretation;
using logic::ModelSet;
using net::CandidateNetwork;
using net::NetState;

std::string to_string(Agg agg) {
  return agg == Agg::Union ? "union" : "intersection";
}

std::optional<bool> TruthMap::lookup(double value) const {
  for (const auto& [v, t] : rows)
    if (std::abs(v - value) <= kValueTolerance) return t;
  return std::nullopt;
}

const logic::UniversePtr& universe_of(const Encoding& enc) {
  return std::visit([](const auto& e) -> const logic::UniversePtr& { return e.universe; },
                    enc);
}

std::string Diagnostics::to_string() const {
  if (issues.empty()) return "valid";
  std::string out;
  for (const auto& i : issues) {
    out += "violated: " + i.condition;
    if (!i.detail.empty()) out += " (" + i.detail + ")";
    out += "\n";
  }
  return out;
}

namespace {

void check_truth_map_total(const TruthMap& g, const CandidateNetwork& net,
                           std::size_t neuron, Diagnostics& diag) {
  for (double v : net.domain(neuron)) {
    if (!g.lookup(v))
      diag.issues.push_back(
          {"g total on mapped neuron domains",
           "neuron " + net.name(neuron) + " value " + format_real(v) +
               " has no truth-value"});
  }
}

bool is_visible(const CandidateNetwork& net, std::size_t i) {
  const auto& vis = net.visible();
  return std::find(vis.begin(), vis.end(), i) != vis.end();
}

void validate_nat(const EncodingNat& enc, const CandidateNetwork& net,
                  Diagnostics& diag) {
  if (!enc.universe) {
    diag.issues.push_back({"universe present", ""});
    return;
  }
  std::set<std::string> atoms_seen;
  std::set<std::size_t> neurons_seen;
  for (const auto& [atom, neuron_name] : enc.atom_neuron) {
    if (!enc.universe->contains(atom))
      diag.issues.push_back({"housed atoms within universe", "atom " + atom});
    if (!atoms_seen.insert(atom).second)
      diag.issues.push_back({"r bijective", "atom " + atom + " housed twice"});
    std::size_t idx;
    try {
      idx = net.index_of(neuron_name);
    } catch (const ValidationError&) {
      diag.issues.push_back({"r maps into the network", "no neuron " + neuron_name});
      continue;
    }
    if (!is_visible(net, idx))
      diag.issues.push_back(
          {"r maps onto visible neurons", neuron_name + " is hidden"});
    if (!neurons_seen.insert(idx).second)
      diag.issues.push_back(
          {"r bijective", "neuron " + neuron_name + " houses two atoms"});
    else
      check_truth_map_total(enc.g, net, idx, diag);
  }
  for (std::size_t v : net.visible()) {
    if (!neurons_seen.count(v))
      diag.issues.push_back(
          {"r bijective onto the visible neurons", "neuron " + net.name(v) + " unhoused"});
  }
}

void validate_dat(const EncodingDat& enc, const CandidateNetwork& net,
                  Diagnostics& diag) {
  if (!enc.universe) {
    diag.issues.push_back({"universe present", ""});
    return;
  }
  std::set<std::size_t> selector_set;
  for (const auto& name : enc.selector_neurons) {
    std::size_t idx;
    try {
      idx = net.index_of(name);
    } catch (const ValidationError&) {
      diag.issues.push_back({"selectors exist", "no neuron " + name});
      continue;
    }
    if (!is_visible(net, idx))
      diag.issues.push_back({"selectors visible", name + " is hidden"});
    selector_set.insert(idx);
  }
  std::set<std::size_t> value_neurons;  // visible non-selectors
  for (std::size_t v : net.visible())
    if (!selector_set.count(v)) value_neurons.insert(v);

  if (enc.triples.empty())
    diag.issues.push_back({"at least one (o,h,r) family", ""});

  // The housed atom set A' is fixed by the first family; every family must
  // define the same atoms.
  std::set<std::string> housed;
  if (!enc.triples.empty())
    for (const auto& row : enc.triples.front().rows) housed.insert(row.atom);

  std::set<std::size_t> hit_value_neurons;
  for (std::size_t j = 0; j < enc.triples.size(); ++j) {
    const auto& triple = enc.triples[j];
    std::set<std::string> atoms_here;
    for (const auto& row : triple.rows) {
      if (!enc.universe->contains(row.atom))
        diag.issues.push_back({"housed atoms within universe", "atom " + row.atom});
      if (!atoms_here.insert(row.atom).second)
        diag.issues.push_back({"one row per atom per family",
                               "atom " + row.atom + " duplicated in family " +
                                   std::to_string(j + 1)});
      if (row.selectors.size() != row.selector_values.size())
        diag.issues.push_back({"h values aligned with o neurons", "atom " + row.atom});
      for (const auto& name : row.selectors) {
        std::size_t idx;
        try {
          idx = net.index_of(name);
        } catch (const ValidationError&) {
          diag.issues.push_back({"o maps into the selectors", "no neuron " + name});
          continue;
        }
        if (!selector_set.count(idx))
          diag.issues.push_back(
              {"o maps into the selectors", name + " is not a selector"});
      }
      std::size_t ridx;
      try {
        ridx = net.index_of(row.value_neuron);
      } catch (const ValidationError&) {
        diag.issues.push_back(
            {"r maps into the value neurons", "no neuron " + row.value_neuron});
        continue;
      }
      if (!value_neurons.count(ridx))
        diag.issues.push_back({"r maps into the value neurons",
                               row.value_neuron + " is not a visible non-selector"});
      else {
        hit_value_neurons.insert(ridx);
        check_truth_map_total(enc.g, net, ridx, diag);
      }
    }
    if (atoms_here != housed)
      diag.issues.push_back({"every family defines the same housed atoms",
                             "family " + std::to_string(j + 1)});
    // Distinct atoms must differ in (h_j, r_j) within every family.
    for (std::size_t a = 0; a < triple.rows.size(); ++a) {
      for (std::size_t b = a + 1; b < triple.rows.size(); ++b) {
        const auto& ra = triple.rows[a];
        const auto& rb = triple.rows[b];
        if (ra.atom == rb.atom) continue;
        bool same_h = ra.selectors == rb.selectors &&
                      ra.selector_values.size() == rb.selector_values.size();
        if (same_h) {
          for (std::size_t k = 0; k < ra.selector_values.size(); ++k)
            if (std::abs(ra.selector_values[k] - rb.selector_values[k]) >
                kValueTolerance) {
              same_h = false;
              break;
            }
        }
        if (same_h && ra.value_neuron == rb.value_neuron)
          diag.issues.push_back(
              {"distinct atoms differ in (h,r) in every family",
               ra.atom + " and " + rb.atom + " collide in family " +
                   std::to_string(j + 1)});
      }
    }
  }
  // Every visible non-selector neuron must carry some atom's truth value.
  for (std::size_t v : value_neurons) {
    if (!hit_value_neurons.count(v))
      diag.issues.push_back({"every value neuron hit by some r",
                             "neuron " + net.name(v) + " carries no atom"});
  }
}

void validate_table(const EncodingTable& enc, const CandidateNetwork& net,
                    Diagnostics& diag) {
  if (!enc.universe) {
    diag.issues.push_back({"universe present", ""});
    return;
  }
  for (const auto& [pattern, models] : enc.entries) {
    if (pattern.size() != net.visible().size())
      diag.issues.push_back({"table keyed on visible patterns",
                             "pattern arity " + std::to_string(pattern.size())});
    if (!(*models.universe() == *enc.universe))
      diag.issues.push_back({"entries share the encoding universe", ""});
  }
}

NetState visible_projection(const CandidateNetwork& net, const NetState& s) {
  NetState out;
  out.reserve(net.visible().size());
  for (std::size_t v : net.visible()) out.push_back(s[v]);
  return out;
}

}  // namespace

Diagnostics validate_encoding(const Encoding& enc, const CandidateNetwork& net) {
  Diagnostics diag;
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, EncodingNat>) validate_nat(e, net, diag);
        else if constexpr (std::is_same_v<T, EncodingDat>) validate_dat(e, net, diag);
        else validate_table(e, net, diag);
      },
      enc);
  return diag;
}

void require_valid_encoding(const Encoding& enc, const CandidateNetwork& net) {
  auto diag = validate_encoding(enc, net);
  if (!diag.ok())
    throw ValidationError("invalid encoding:\n" + diag.to_string());
}

ModelSet interpret_state(const CandidateNetwork& net, const Encoding& enc,
                         const NetState& s) {
  net.require_valid_state(s);
  const auto& universe = universe_of(enc);

  if (const auto* nat = std::get_if<EncodingNat>(&enc)) {
    Cube cube;
    for (const auto& [atom, neuron_name] : nat->atom_neuron) {
      std::size_t idx = net.index_of(neuron_name);
      auto truth = nat->g.lookup(s[idx]);
      if (!truth)
        throw ValidationError("no truth-value for neuron " + neuron_name +
                              " at value " + format_real(s[idx]));
      cube.assign(universe->index_of(atom), *truth);
    }
    return ModelSet::of(universe, cube);
  }

  if (const auto* dat = std::get_if<EncodingDat>(&enc)) {
    Cube cube;
    for (const auto& triple : dat->triples) {
      for (const auto& row : triple.rows) {
        bool matched = true;
        for (std::size_t k = 0; k < row.selectors.size(); ++k) {
          std::size_t idx = net.index_of(row.selectors[k]);
          if (std::abs(s[idx] - row.selector_values[k]) > kValueTolerance) {
            matched = false;
            break;
          }
        }
        if (!matched) continue;
        std::size_t vidx = net.index_of(row.value_neuron);
        auto truth = dat->g.lookup(s[vidx]);
        if (!truth)
          throw ValidationError("no truth-value for neuron " + row.value_neuron +
                                " at value " + format_real(s[vidx]));
        std::size_t atom = universe->index_of(row.atom);
        auto existing = cube.value(atom);
        if (existing && *existing != *truth)
          return ModelSet::none(universe);  // contradictory constraints
        cube.assign(atom, *truth);
      }
    }
    return ModelSet::of(universe, cube);
  }

  const auto& table = std::get<EncodingTable>(enc);
  NetState key = visible_projection(net, s);
  for (const auto& [pattern, models] : table.entries) {
    bool match = pattern.size() == key.size();
    for (std::size_t k = 0; match && k < key.size(); ++k)
      if (std::abs(pattern[k] - key[k]) > kValueTolerance) match = false;
    if (match) return models;
  }
  throw ValidationError("table encoding has no entry for visible pattern " +
                        net::to_string(key));
}

ModelSet models_of_network(const CandidateNetwork& net, const Encoding& enc,
                           Agg agg, std::size_t cap) {
  require_valid_encoding(enc, net);
  auto report = compute_x_inf(net, cap);
  const auto& universe = universe_of(enc);
  bool first = true;
  ModelSet acc = ModelSet::none(universe);
  for (std::size_t s : report.x_inf) {
    ModelSet part = interpret_state(net, enc, report.states[s]);
    if (first) {
      acc = std::move(part);
      first = false;
    } else {
      acc = agg == Agg::Union ? acc.unite(part) : acc.intersect(part);
    }
  }
  acc.compress();
  return acc;
}

namespace {

// First interpretation in a \ b, if any (exact; splits cubes of a against b).
std::optional<Interpretation> separating_model(const ModelSet& a, const ModelSet& b) {
  std::size_t n = a.universe()->size();
  std::uint64_t total_mask =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // Depth-first search over completions of each cube of a.
  struct Frame {
    Cube cube;
  };
  for (const auto& start : a.cubes()) {
    std::vector<Cube> stack{start};
    while (!stack.empty()) {
      Cube c = stack.back();
      stack.pop_back();
      // covered entirely by b? then nothing to find below c.
      ModelSet probe = ModelSet::of(a.universe(), c);
      if (probe.subset_of(b)) continue;
      if ((c.mask & total_mask) == total_mask)
        return Interpretation{c.values & total_mask};
      // split on the lowest unconstrained atom
      std::size_t atom = 0;
      while (c.constrains(atom)) ++atom;
      Cube c0 = c, c1 = c;
      c0.assign(atom, false);
      c1.assign(atom, true);
      stack.push_back(c0);
      stack.push_back(c1);
    }
  }
  return std::nullopt;
}

}  // namespace

EncodingReport analyze_encoding(const CandidateNetwork& net, const Encoding& enc,
                                Agg agg, const ModelSet& m_l, std::size_t cap) {
  require_valid_encoding(enc, net);
  const auto& universe = universe_of(enc);
  if (!(*m_l.universe() == *universe))
    throw ValidationError(
        "knowledge-base model set and encoding use different universes");

  EncodingReport report{ModelSet::none(universe), m_l};
  report.m_n = models_of_network(net, enc, agg, cap);

  bool nonempty = !report.m_n.empty();
  bool contained = report.m_n.subset_of(m_l);
  report.is_neural_model = nonempty && contained;
  report.is_semantic_encoding =
      report.is_neural_model && m_l.subset_of(report.m_n);

  if (!report.is_neural_model) {
    if (!nonempty) {
      report.witness_note = "M_N is empty (the network holds no beliefs)";
    } else if (agg == Agg::Union) {
      // Attribute the containment failure to a recurring state.
      auto x = compute_x_inf(net, cap);
      for (std::size_t s : x.x_inf) {
        ModelSet part = interpret_state(net, enc, x.states[s]);
        if (!part.subset_of(m_l)) {
          report.witness_state = x.states[s];
          report.witness_note =
              "recurring state whose image is not contained in M_L";
          break;
        }
      }
    }
    if (!report.witness_state && nonempty) {
      report.witness_model = separating_model(report.m_n, m_l);
      if (report.witness_model)
        report.witness_note = "interpretation in M_N but not a model of L";
    }
  } else if (!report.is_semantic_encoding) {
    report.witness_model = separating_model(m_l, report.m_n);
    report.witness_note = "model of L not represented in M_N";
  }
  return report;
}

EncodingReport analyze_encoding(const CandidateNetwork& net, const Encoding& enc,
                                Agg agg, const std::vector<logic::Formula>& kb,
                                std::size_t cap) {
  const auto& universe = universe_of(enc);
  for (const auto& f : kb)
    for (const auto& a : f.atoms())
      if (!universe->contains(a))
        throw ValidationError("knowledge-base atom not housed in the encoding universe: " + a);
  ModelSet m_l = logic::models_of(kb, universe);
  return analyze_encoding(net, enc, agg, m_l, cap);
}

bool check_neural_model(const CandidateNetwork& net, const Encoding& enc, Agg agg,
                        const std::vector<logic::Formula>& kb, std::size_t cap) {
  return analyze_encoding(net, enc, agg, kb, cap).is_neural_model;
}

bool check_semantic_encoding(const CandidateNetwork& net, const Encoding& enc,
                             Agg agg, const std::vector<logic::Formula>& kb,
                             std::size_t cap) {
  auto report = analyze_encoding(net, enc, agg, kb, cap);
  // Semantic encoding entails neural model by construction.
  if (report.is_semantic_encoding && !report.is_neural_model)
    throw Error("internal: semantic encoding without neural model");
  return report.is_semantic_encoding;
}

std::string EncodingReport::to_string(const CandidateNetwork& net) const {
  (void)net;
  std::string out;
  out += "M_N = " + m_n.to_string() + "\n";
  out += "M_L = " + m_l.to_string() + "\n";
  out += std::string("neural model:      ") + (is_neural_model ? "yes" : "no") + "\n";
  out += std::string("semantic encoding: ") + (is_semantic_encoding ? "yes" : "no") + "\n";
  if (witness_state)
    out += "witness state: " + net::to_string(*witness_state) + "\n";
  if (witness_model)
    out += "witness model: " + logic::to_string(*witness_model, *m_n.universe()) + "\n";
  if (!witness_note.empty()) out += "note: " + witness_note + "\n";
  return out;
}

// --- logical classifiers -----------------------------------------------------

namespace {

// Clamped-input propagation through a feed-forward network: inputs stay
// fixed, every other neuron is evaluated once in topological order.
NetState propagate(const CandidateNetwork& net,
                   const std::vector<std::size_t>& input_idx,
                   const NetState& input_values) {
  const std::size_t n = net.size();
  std::vector<bool> fixed(n, false);
  NetState state(n, 0.0);
  for (std::size_t k = 0; k < input_idx.size(); ++k) {
    state[input_idx[k]] = input_values[k];
    fixed[input_idx[k]] = true;
  }
  // Kahn order over non-input neurons.
  std::vector<std::size_t> remaining_inputs(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (fixed[i]) continue;
    for (std::size_t j : net.inputs(i))
      if (!fixed[j]) ++remaining_inputs[i];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (!fixed[i] && remaining_inputs[i] == 0) ready.push_back(i);
  std::size_t done = input_idx.size();
  while (!ready.empty()) {
    std::size_t i = ready.back();
    ready.pop_back();
    double v = net.neuron(i).transfer(net.input_to(i, state));
    auto snapped = net.snap_to_domain(i, v);
    state[i] = snapped ? *snapped : v;
    fixed[i] = true;
    ++done;
    for (std::size_t to = 0; to < n; ++to) {
      if (fixed[to] || net.weight(i, to) == 0.0) continue;
      if (--remaining_inputs[to] == 0) ready.push_back(to);
    }
  }
  if (done != n)
    throw ValidationError("network is not feed-forward from the given inputs");
  return state;
}

bool patterns_equal(const NetState& a, const NetState& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kValueTolerance) return false;
  return true;
}

}  // namespace

bool check_logical_classifier(const CandidateNetwork& net,
                              const ClassifierTables& tables,
                              const logic::Formula& phi,
                              logic::UniversePtr universe) {
  if (!net.is_feed_forward())
    throw ValidationError("logical classifiers require a feed-forward network");
  for (const auto& a : phi.atoms())
    if (!universe->contains(a))
      throw ValidationError("classifier formula atom not in universe: " + a);

  std::vector<std::size_t> input_idx, output_idx;
  for (const auto& name : tables.input_neurons)
    input_idx.push_back(net.index_of(name));
  for (const auto& name : tables.output_neurons)
    output_idx.push_back(net.index_of(name));

  // g_in must be total over the input product space and surjective onto the
  // interpretation space.
  std::size_t expected = 1;
  for (std::size_t i : input_idx) expected *= net.domain(i).size();
  if (tables.g_in.size() != expected)
    throw ValidationError("g_in must be total over the input state space");
  std::set<std::uint64_t> image;
  for (const auto& [pattern, interp] : tables.g_in) image.insert(interp.bits);
  std::uint64_t interp_count = std::uint64_t{1} << universe->size();
  if (image.size() != interp_count)
    throw ValidationError("g_in is not surjective onto the interpretation space");

  auto g_out = [&](const NetState& out_pattern) -> bool {
    for (const auto& [pattern, label] : tables.g_out)
      if (patterns_equal(pattern, out_pattern)) return label;
    throw ValidationError("g_out has no entry for output pattern " +
                          net::to_string(out_pattern));
  };

  // Route 1: direct check of Def(g_out(N(x_in)) = 1 iff g_in(x_in) models phi).
  bool direct = true;
  // Route 2: the alpha <-> phi semantic-encoding condition, computed from the
  // fixed points (x_in, N(x_in)) independently of route 1's comparisons.
  std::vector<std::string> ext_names = universe->names();
  ext_names.push_back("__alpha__");
  auto ext_universe = logic::make_universe(ext_names);
  ModelSet m_n = ModelSet::none(ext_universe);

  for (const auto& [pattern, interp] : tables.g_in) {
    NetState full = propagate(net, input_idx, pattern);
    NetState out_pattern;
    for (std::size_t o : output_idx) out_pattern.push_back(full[o]);
    bool label = g_out(out_pattern);
    bool models_phi = phi.eval(interp, *universe);
    if (label != models_phi) direct = false;

    Cube cube;
    for (std::size_t a = 0; a < universe->size(); ++a)
      cube.assign(a, interp.value(a));
    cube.assign(universe->size(), label);
    m_n.add(cube);
  }
  m_n.compress();

  logic::Formula alpha = logic::Formula::atom("__alpha__");
  ModelSet m_l = logic::models_of({logic::Formula::iff(alpha, phi)}, ext_universe);
  bool encoding_route = !m_n.empty() && m_n.same_models(m_l);

  if (direct != encoding_route)
    throw Error("internal: classifier routes disagree");
  return direct;
}

// --- encoding transport ------------------------------------------------------

EncodingTable transport_encoding(const CandidateNetwork& net1,
                                 const CandidateNetwork& net2,
                                 const StateBijection& f, const Encoding& enc2,
                                 std::size_t cap) {
  require_valid_encoding(enc2, net2);
  auto states1 = net1.enumerate_states(cap);
  std::size_t total2 = net2.state_space_size(cap);
  if (f.pairs.size() != states1.size())
    throw ValidationError("state map must cover the full state space of the first network");
  if (states1.size() != total2)
    throw ValidationError("state spaces have different sizes; no bijection exists");

  std::vector<std::ptrdiff_t> image(states1.size(), -1);  // net1 index -> net2 index
  std::vector<bool> hit(total2, false);
  for (const auto& [x, y] : f.pairs) {
    std::size_t xi = net1.state_index(x);
    std::size_t yi = net2.state_index(y);
    if (image[xi] != -1)
      throw TransportError("state mapped twice: " + net::to_string(x), x);
    if (hit[yi])
      throw TransportError("two states map to " + net::to_string(y), x);
    image[xi] = static_cast<std::ptrdiff_t>(yi);
    hit[yi] = true;
  }
  for (std::size_t i = 0; i < states1.size(); ++i)
    if (image[i] == -1)
      throw TransportError("state unmapped: " + net::to_string(states1[i]),
                           states1[i]);

  auto states2 = net2.enumerate_states(cap);
  // Conjugacy f(N1(x)) = N2(f(x)), exhaustively.
  for (std::size_t i = 0; i < states1.size(); ++i) {
    std::size_t n1x = net1.state_index(net1.update(states1[i]));
    std::size_t fx = static_cast<std::size_t>(image[i]);
    std::size_t n2fx = net2.state_index(net2.update(states2[fx]));
    if (static_cast<std::size_t>(image[n1x]) != n2fx)
      throw TransportError(
          "conjugacy fails at state " + net::to_string(states1[i]) +
              ": f(N1(x)) != N2(f(x))",
          states1[i]);
  }

  // Build i o f keyed on net1's visible patterns. The composite must be
  // constant on visible-equivalence classes to qualify as an encoding.
  EncodingTable table;
  table.universe = universe_of(enc2);
  std::map<std::vector<double>, std::size_t> seen;  // visible pattern -> entry
  for (std::size_t i = 0; i < states1.size(); ++i) {
    NetState key;
    for (std::size_t v : net1.visible()) key.push_back(states1[i][v]);
    ModelSet ms =
        interpret_state(net2, enc2, states2[static_cast<std::size_t>(image[i])]);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen[key] = table.entries.size();
      table.entries.push_back({key, std::move(ms)});
    } else if (!table.entries[it->second].second.same_models(ms)) {
      throw TransportError(
          "composite map is not constant on visible-equivalent states (i o f "
          "is not an encoding); witness " +
              net::to_string(states1[i]),
          states1[i]);
    }
  }
  return table;
}

}  // namespace semenc::encoding
