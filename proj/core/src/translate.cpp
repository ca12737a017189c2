#include "semenc/translate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

namespace semenc::translate {

using encoding::EncodingNat;
using encoding::TruthMap;
using logic::Clause;
using logic::Interpretation;
using logic::Literal;
using logic::LogicProgram;
using logic::ModelSet;
using logic::PenaltyKB;
using logic::PenaltySentence;
using logic::Universe;
using logic::UniversePtr;
using net::CandidateNetwork;
using net::NetState;
using net::NeuronSpec;
using net::TransferFn;

void Certificate::add(const std::string& name, bool ok, std::string detail) {
  checks.push_back({name, ok ? Check::Status::Passed : Check::Status::Failed,
                    std::move(detail)});
  if (!ok) pass = false;
}

void Certificate::skip(const std::string& name, std::string detail) {
  checks.push_back({name, Check::Status::Skipped, std::move(detail)});
}

const Certificate::Check* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Certificate::to_string() const {
  std::string out = pass ? "certificate: PASS\n" : "certificate: FAIL\n";
  for (const auto& c : checks) {
    switch (c.status) {
      case Check::Status::Passed: out += "  [pass] "; break;
      case Check::Status::Failed: out += "  [FAIL] "; break;
      case Check::Status::Skipped: out += "  [skip] "; break;
    }
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base = "_" + base;
  return base;
}

Interpretation read_visible_atoms(const CandidateNetwork& net,
                                  const Universe& u, const NetState& s) {
  Interpretation m;
  for (std::size_t a = 0; a < u.size(); ++a)
    m.set(a, s[net.index_of(u.name(a))] >= 0.5);
  return m;
}

// All nonzero edges run between the two given neuron groups (in either
// direction); no edge stays within a group.
bool bipartite_between(const CandidateNetwork& net,
                       const std::vector<bool>& in_group_a) {
  for (std::size_t from = 0; from < net.size(); ++from)
    for (std::size_t to = 0; to < net.size(); ++to)
      if (net.weight(from, to) != 0.0 && in_group_a[from] == in_group_a[to])
        return false;
  return true;
}

LogicProgram dedupe(const LogicProgram& p) {
  std::set<Clause> seen;
  LogicProgram out;
  for (auto c : p.clauses) {
    std::sort(c.body.begin(), c.body.end());
    c.body.erase(std::unique(c.body.begin(), c.body.end()), c.body.end());
    if (seen.insert(c).second) out.clauses.push_back(c);
  }
  return out;
}

}  // namespace

CompilationResult kbann_compile(const LogicProgram& input) {
  if (!input.is_horn())
    throw ValidationError("kbann_compile requires a Horn program");
  if (!is_acyclic(input))
    throw ValidationError("kbann_compile requires an acyclic program");
  LogicProgram p = dedupe(input);
  auto universe = p.universe();
  const std::size_t n_atoms = universe->size();
  std::set<std::string> taken(universe->names().begin(), universe->names().end());

  std::set<std::string> fact_heads;
  for (std::size_t c = 0; c < p.clauses.size(); ++c)
    if (p.is_fact(c)) fact_heads.insert(p.clauses[c].head);

  CandidateNetwork::Builder b;
  for (std::size_t a = 0; a < n_atoms; ++a) {
    b.add_neuron({universe->name(a), TransferFn::heaviside(),
                  fact_heads.count(universe->name(a)) ? 0.5 : -0.5,
                  {0.0, 1.0},
                  true});
  }
  std::map<std::pair<std::string, std::string>, double> w;
  std::size_t gate_no = 0;
  for (const auto& clause : p.clauses) {
    if (clause.body.empty()) continue;  // facts became head biases
    std::string gate =
        fresh_name("_g" + std::to_string(++gate_no) + "_" + clause.head, taken);
    taken.insert(gate);
    double k = static_cast<double>(clause.body.size());
    b.add_neuron({gate, TransferFn::heaviside(), -(k - 0.5), {0.0, 1.0}, false});
    for (const auto& lit : clause.body) w[{lit.atom, gate}] += 1.0;
    w[{gate, clause.head}] += 1.0;
  }
  for (const auto& [edge, weight] : w) b.weight(edge.first, edge.second, weight);
  b.t_c(2);
  CandidateNetwork net = b.build();

  EncodingNat enc;
  enc.universe = universe;
  for (std::size_t a = 0; a < n_atoms; ++a)
    enc.atom_neuron.push_back({universe->name(a), universe->name(a)});

  CompilationResult result{std::move(net), std::move(enc), {}, std::nullopt};
  const CandidateNetwork& cnet = result.net;
  Certificate& cert = result.certificate;

  cert.add("program-acyclic-horn", true);

  // Visible atom neurons and hidden gates alternate strictly, so the visible
  // image of N(x) is a function of the visible part of x alone.
  std::vector<bool> visible_group(cnet.size(), false);
  for (std::size_t v : cnet.visible()) visible_group[v] = true;
  bool bipartite = bipartite_between(cnet, visible_group);
  cert.add("structure-visible-hidden-bipartite", bipartite);

  bool identity = true;
  std::string identity_detail;
  if (n_atoms > kDefaultAtomCap) {
    cert.skip("tp-identity-all-states", "atom count exceeds enumeration cap");
  } else {
    const std::uint64_t total = std::uint64_t{1} << n_atoms;
    for (std::uint64_t bits = 0; bits < total && identity; ++bits) {
      NetState x(cnet.size(), 0.0);
      Interpretation m{bits};
      for (std::size_t a = 0; a < n_atoms; ++a)
        x[cnet.index_of(universe->name(a))] = m.value(a) ? 1.0 : 0.0;
      Interpretation lhs = read_visible_atoms(cnet, *universe, cnet.update(x));
      Interpretation rhs = logic::tp_step(p, m, *universe);
      if (lhs != rhs) {
        identity = false;
        identity_detail = "fails at " + logic::to_string(m, *universe);
      }
    }
    if (identity)
      identity_detail = std::to_string(total) +
                        " visible assignments (hidden values cannot reach the "
                        "visible image; structure verified)";
    cert.add("tp-identity-all-states", identity && bipartite, identity_detail);
  }

  // The unique fixed point must carry the program's unique model.
  auto tp_bottom = logic::tp_fixpoint(p, Interpretation{}, *universe);
  std::uint64_t top_bits = n_atoms == 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << n_atoms) - 1;
  auto tp_top = logic::tp_fixpoint(p, Interpretation{top_bits}, *universe);
  bool fixed_ok = tp_bottom.converged() && tp_top.converged() &&
                  tp_bottom.fixpoint == tp_top.fixpoint;
  if (fixed_ok) {
    NetState x(cnet.size(), 0.0);
    for (std::size_t t = 0; t < 2 * n_atoms + 4; ++t) {
      NetState next = cnet.update(x);
      if (cnet.states_equal(next, x)) break;
      x = next;
    }
    fixed_ok = cnet.states_equal(cnet.update(x), x) &&
               read_visible_atoms(cnet, *universe, x) == tp_bottom.fixpoint;
  }
  cert.add("fixed-point-carries-program-model", fixed_ok,
           fixed_ok ? logic::to_string(tp_bottom.fixpoint, *universe) : "");
  return result;
}

ExtractionResult horn_extract(const CandidateNetwork& net, std::size_t fan_in_cap) {
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net.neuron(i).transfer.kind() != TransferFn::Kind::Heaviside)
      throw ValidationError("horn_extract requires heaviside units");
    if (net.domain(i) != std::vector<double>{0.0, 1.0})
      throw ValidationError("horn_extract requires binary {0,1} domains");
    for (std::size_t j = 0; j < net.size(); ++j)
      if (net.weight(i, j) < 0.0)
        throw ValidationError("horn_extract requires nonnegative weights");
  }
  if (!net.is_feed_forward())
    throw ValidationError("horn_extract requires a feed-forward network");

  LogicProgram program;
  for (std::size_t l = 0; l < net.size(); ++l) {
    const auto& in = net.inputs(l);
    if (in.size() >= 63 || (std::uint64_t{1} << in.size()) > fan_in_cap)
      throw CapExceeded("fan-in of neuron " + net.name(l) + " exceeds the cap");
    const std::uint64_t combos = std::uint64_t{1} << in.size();
    std::vector<std::uint64_t> firing;
    for (std::uint64_t s = 0; s < combos; ++s) {
      double sum = net.bias(l);
      for (std::size_t k = 0; k < in.size(); ++k)
        if ((s >> k) & 1u) sum += net.weight(in[k], l);
      if (sum >= 0.0) firing.push_back(s);
    }
    // Keep only minimal firing sets; supersets are subsumed (weights are
    // nonnegative, so firing is monotone).
    for (std::uint64_t s : firing) {
      bool minimal = true;
      for (std::uint64_t t : firing)
        if (t != s && (t & s) == t) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      Clause c;
      c.head = net.name(l);
      for (std::size_t k = 0; k < in.size(); ++k)
        if ((s >> k) & 1u) c.body.push_back(Literal{net.name(in[k]), false});
      program.clauses.push_back(std::move(c));
    }
  }
  program = dedupe(program);

  ExtractionResult result{std::move(program), {}};
  Certificate& cert = result.certificate;
  cert.add("program-acyclic-horn",
           result.program.is_horn() && is_acyclic(result.program));

  // T_P(i(x)) = i(step(x)) on every state, checked neuron-by-neuron over each
  // neuron's full in-neighborhood (both sides depend on nothing else, so the
  // per-neuron enumeration covers the whole state space exactly).
  bool identity = true;
  std::string detail;
  for (std::size_t l = 0; l < net.size() && identity; ++l) {
    const auto& in = net.inputs(l);
    const std::uint64_t combos = std::uint64_t{1} << in.size();
    for (std::uint64_t s = 0; s < combos && identity; ++s) {
      double sum = net.bias(l);
      for (std::size_t k = 0; k < in.size(); ++k)
        if ((s >> k) & 1u) sum += net.weight(in[k], l);
      bool fires = sum >= 0.0;
      bool derived = false;
      for (const auto& c : result.program.clauses) {
        if (c.head != net.name(l)) continue;
        bool body_true = true;
        for (const auto& lit : c.body) {
          bool active = false;
          for (std::size_t k = 0; k < in.size(); ++k)
            if (net.name(in[k]) == lit.atom && ((s >> k) & 1u)) active = true;
          if (!active) {
            body_true = false;
            break;
          }
        }
        if (body_true) {
          derived = true;
          break;
        }
      }
      if (fires != derived) {
        identity = false;
        detail = "fails at neuron " + net.name(l);
      }
    }
  }
  cert.add("step-tp-identity-all-states", identity, detail);
  return result;
}

CompilationResult cilp_compile(const LogicProgram& input) {
  LogicProgram p = dedupe(input);
  auto universe = p.universe();
  const std::size_t n_atoms = universe->size();
  if (n_atoms == 0) throw ValidationError("cilp_compile: empty program");
  std::set<std::string> taken(universe->names().begin(), universe->names().end());

  std::set<std::string> heads;
  for (const auto& c : p.clauses) heads.insert(c.head);

  CandidateNetwork::Builder b;
  for (std::size_t a = 0; a < n_atoms; ++a)
    b.add_neuron({universe->name(a), TransferFn::heaviside(), -0.5, {0.0, 1.0},
                  true});
  std::map<std::string, std::string> out_neuron;
  for (const auto& head : heads) {
    std::string name = fresh_name("_out_" + head, taken);
    taken.insert(name);
    out_neuron[head] = name;
    b.add_neuron({name, TransferFn::heaviside(), -0.5, {0.0, 1.0}, false});
  }
  std::map<std::pair<std::string, std::string>, double> w;
  std::size_t gate_no = 0;
  for (const auto& clause : p.clauses) {
    std::string gate = fresh_name("_k" + std::to_string(++gate_no), taken);
    taken.insert(gate);
    double positives = 0;
    for (const auto& lit : clause.body) {
      w[{lit.atom, gate}] += lit.negated ? -1.0 : 1.0;
      if (!lit.negated) positives += 1.0;
    }
    b.add_neuron({gate, TransferFn::heaviside(), -(positives - 0.5), {0.0, 1.0},
                  false});
    w[{gate, out_neuron[clause.head]}] += 1.0;
  }
  for (const auto& head : heads) w[{out_neuron[head], head}] += 1.0;
  for (const auto& [edge, weight] : w)
    if (weight != 0.0) b.weight(edge.first, edge.second, weight);
  b.t_c(3);
  CandidateNetwork net = b.build();

  EncodingNat enc;
  enc.universe = universe;
  for (std::size_t a = 0; a < n_atoms; ++a)
    enc.atom_neuron.push_back({universe->name(a), universe->name(a)});

  CompilationResult result{std::move(net), std::move(enc), {}, std::nullopt};
  const CandidateNetwork& cnet = result.net;
  Certificate& cert = result.certificate;

  // Ring structure input -> gate -> output -> input: after t_c = 3 steps each
  // layer is a function of its own previous value alone, so the visible image
  // of N is determined by the visible part of x.
  bool ring = true;
  auto layer = [&](std::size_t i) -> int {
    const std::string& name = cnet.name(i);
    if (universe->contains(name)) return 0;             // input
    if (name.rfind("_out_", 0) == 0) return 2;          // output
    return 1;                                           // clause gate
  };
  for (std::size_t from = 0; from < cnet.size() && ring; ++from)
    for (std::size_t to = 0; to < cnet.size(); ++to)
      if (cnet.weight(from, to) != 0.0 &&
          (layer(to) + 3 - layer(from)) % 3 != 1) {
        ring = false;
        break;
      }
  cert.add("structure-input-gate-output-ring", ring);

  bool identity = true;
  std::string identity_detail;
  if (n_atoms > kDefaultAtomCap) {
    cert.skip("tp-identity-all-states", "atom count exceeds enumeration cap");
    identity = false;
  } else {
    const std::uint64_t total = std::uint64_t{1} << n_atoms;
    for (std::uint64_t bits = 0; bits < total && identity; ++bits) {
      NetState x(cnet.size(), 0.0);
      Interpretation m{bits};
      for (std::size_t a = 0; a < n_atoms; ++a)
        x[cnet.index_of(universe->name(a))] = m.value(a) ? 1.0 : 0.0;
      Interpretation lhs = read_visible_atoms(cnet, *universe, cnet.update(x));
      Interpretation rhs = logic::tp_step(p, m, *universe);
      if (lhs != rhs) {
        identity = false;
        identity_detail = "fails at " + logic::to_string(m, *universe);
      }
    }
    if (identity)
      identity_detail = std::to_string(total) +
                        " visible assignments (gate and output values cannot "
                        "reach the visible image; structure verified)";
    cert.add("tp-identity-all-states", identity && ring, identity_detail);
  }

  // T_P converges from every start iff every recurrent interpretation under
  // T_P is a fixed point.
  if (n_atoms > kDefaultAtomCap || !identity || !ring) {
    cert.skip("tp-convergence", "hypotheses above unverified");
    cert.skip("semantic-encoding", "hypotheses above unverified");
    return result;
  }
  const std::uint64_t total = std::uint64_t{1} << n_atoms;
  std::vector<std::uint64_t> succ(total);
  for (std::uint64_t bits = 0; bits < total; ++bits)
    succ[bits] = logic::tp_step(p, Interpretation{bits}, *universe).bits;
  std::vector<std::size_t> indegree(total, 0);
  for (std::uint64_t s = 0; s < total; ++s) ++indegree[succ[s]];
  std::vector<std::uint64_t> queue;
  for (std::uint64_t s = 0; s < total; ++s)
    if (indegree[s] == 0) queue.push_back(s);
  std::vector<bool> recurrent(total, true);
  while (!queue.empty()) {
    std::uint64_t s = queue.back();
    queue.pop_back();
    recurrent[s] = false;
    if (--indegree[succ[s]] == 0) queue.push_back(succ[s]);
  }
  bool converges = true;
  std::string cycle_detail;
  for (std::uint64_t s = 0; s < total && converges; ++s) {
    if (recurrent[s] && succ[s] != s) {
      converges = false;
      cycle_detail = "T_P cycle through " +
                     logic::to_string(Interpretation{s}, *universe);
    }
  }
  if (!converges) {
    cert.add("tp-convergence", true, "not convergent: " + cycle_detail);
    cert.skip("semantic-encoding",
              "withheld; T_P does not converge (" + cycle_detail + ")");
    return result;
  }
  cert.add("tp-convergence", true, "T_P reaches a fixed point from every start");

  // With the ring structure and the T_P identity verified, the visible image
  // of X_inf is exactly the set of recurrent T_P interpretations, here all
  // fixed points; compare their union of cubes against the program's models.
  ModelSet m_n = ModelSet::none(universe);
  for (std::uint64_t s = 0; s < total; ++s)
    if (recurrent[s])
      m_n.add(ModelSet::of_interpretation(universe, Interpretation{s})
                  .cubes()
                  .front());
  m_n.compress();
  ModelSet m_p = logic::program_models(p, universe);
  bool sem = !m_n.empty() && m_n.same_models(m_p);
  cert.add("semantic-encoding", sem,
           sem ? "M_N = M_P = " + m_p.to_string() : "M_N != M_P");
  return result;
}

HopfieldPenaltyResult hopfield_to_penalty(const CandidateNetwork& net,
                                          std::size_t state_cap) {
  std::string why;
  if (!net.is_hopfield(&why))
    throw ValidationError("hopfield_to_penalty: " + why);
  if (!net.hidden().empty())
    throw ValidationError(
        "hopfield_to_penalty requires a fully visible network");
  const std::size_t n = net.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(net.name(i));
  auto universe = logic::make_universe(names);

  HopfieldPenaltyResult result;
  double offset = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double w = net.weight(i, j);
      if (w == 0.0) continue;
      auto both = logic::Formula::atom(names[i]) && logic::Formula::atom(names[j]);
      if (w > 0) {
        result.kb.sentences.push_back({w, both});
        offset += w;
      } else {
        result.kb.sentences.push_back({-w, !both});
      }
    }
    double bi = net.bias(i);
    if (bi > 0) {
      result.kb.sentences.push_back({bi, logic::Formula::atom(names[i])});
      offset += bi;
    } else if (bi < 0) {
      result.kb.sentences.push_back({-bi, !logic::Formula::atom(names[i])});
    }
  }
  result.offset = offset;
  result.enc.universe = universe;
  for (const auto& name : names)
    result.enc.atom_neuron.push_back({name, name});

  // Affine correspondence p_L(i0(x)) = E(x) + offset over every state, and
  // energy minima = penalty-minimal models.
  auto states = net.enumerate_states(state_cap);
  bool affine = true;
  double min_e = std::numeric_limits<double>::infinity();
  std::vector<double> energies(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    energies[s] = net::hopfield_energy(net, states[s]);
    min_e = std::min(min_e, energies[s]);
    Interpretation m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, states[s][i] >= 0.5);
    double pl = logic::penalty(result.kb, m, *universe);
    if (std::abs(pl - (energies[s] + offset)) > 1e-9) affine = false;
  }
  result.certificate.add("penalty-affine-to-energy", affine,
                         "offset " + format_real(offset));

  auto pm = logic::penalty_models(result.kb, universe);
  bool minima_match = !pm.hard_constraints_unsat;
  for (std::size_t s = 0; s < states.size() && minima_match; ++s) {
    Interpretation m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, states[s][i] >= 0.5);
    bool is_min = std::abs(energies[s] - min_e) <= 1e-9;
    if (is_min != pm.models.contains(m)) minima_match = false;
  }
  result.certificate.add("global-minima-are-penalty-models", minima_match);
  return result;
}

namespace {

// Pseudo-Boolean polynomial over variable indices, monomials as bitmasks.
using Poly = std::map<std::uint64_t, double>;

void add_violation_polynomial(Poly& poly, const PenaltySentence& s,
                              const Universe& u) {
  std::vector<std::size_t> vars;
  for (const auto& name : s.body.atoms()) vars.push_back(u.index_of(name));
  std::sort(vars.begin(), vars.end());
  if (vars.size() > kMaxSentenceAtoms)
    throw CapExceeded("penalty sentence over more than " +
                      std::to_string(kMaxSentenceAtoms) + " atoms");
  const std::uint64_t combos = std::uint64_t{1} << vars.size();
  for (std::uint64_t a = 0; a < combos; ++a) {
    Interpretation m;
    for (std::size_t k = 0; k < vars.size(); ++k) m.set(vars[k], (a >> k) & 1u);
    if (s.body.eval(m, u)) continue;  // satisfied: no violation mass
    // c * prod_{k in a} x_k * prod_{k not in a} (1 - x_k), expanded.
    std::uint64_t base = 0;
    std::vector<std::size_t> zeros;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if ((a >> k) & 1u)
        base |= std::uint64_t{1} << vars[k];
      else
        zeros.push_back(vars[k]);
    }
    const std::uint64_t zcombos = std::uint64_t{1} << zeros.size();
    for (std::uint64_t z = 0; z < zcombos; ++z) {
      std::uint64_t mask = base;
      int sign = 1;
      for (std::size_t k = 0; k < zeros.size(); ++k) {
        if ((z >> k) & 1u) {
          mask |= std::uint64_t{1} << zeros[k];
          sign = -sign;
        }
      }
      poly[mask] += sign * s.confidence;
    }
  }
}

}  // namespace

CompilationResult penalty_to_hopfield(const PenaltyKB& kb, UniversePtr universe,
                                      std::size_t state_cap) {
  kb.validate();
  for (const auto& s : kb.sentences)
    if (std::isinf(s.confidence))
      throw ValidationError(
          "penalty_to_hopfield does not handle hard (infinite) constraints");
  if (!universe) universe = kb.universe();
  for (const auto& name : kb.atom_names())
    if (!universe->contains(name))
      throw ValidationError("penalty atom not in universe: " + name);
  const std::size_t n_atoms = universe->size();
  if (n_atoms == 0)
    throw ValidationError("penalty_to_hopfield needs at least one atom");

  Poly poly;
  for (const auto& s : kb.sentences) add_violation_polynomial(poly, s, *universe);
  for (auto it = poly.begin(); it != poly.end();)
    it = std::abs(it->second) < 1e-12 ? poly.erase(it) : std::next(it);

  double constant = 0.0;
  if (auto it = poly.find(0); it != poly.end()) {
    constant = it->second;
    poly.erase(it);
  }

  // Iterated pair substitution: one hidden unit per degree->=3 monomial
  // instance, gadget weight 2|c|+1 forcing z = x_a * x_b at any minimum.
  std::size_t next_var = n_atoms;
  Poly quadratic;
  std::vector<std::pair<std::uint64_t, double>> work(poly.begin(), poly.end());
  std::size_t cursor = 0;
  while (cursor < work.size()) {
    auto [mask, c] = work[cursor++];
    if (std::popcount(mask) <= 2) {
      quadratic[mask] += c;
      continue;
    }
    if (next_var >= kMaxUniverseAtoms)
      throw CapExceeded("quadratization exceeds the variable limit");
    std::size_t a = static_cast<std::size_t>(std::countr_zero(mask));
    std::uint64_t rest = mask & ~(std::uint64_t{1} << a);
    std::size_t bvar = static_cast<std::size_t>(std::countr_zero(rest));
    std::uint64_t za = std::uint64_t{1} << a;
    std::uint64_t zb = std::uint64_t{1} << bvar;
    std::uint64_t z = std::uint64_t{1} << next_var++;
    double gadget = 2 * std::abs(c) + 1;
    quadratic[za | zb] += gadget;
    quadratic[za | z] += -2 * gadget;
    quadratic[zb | z] += -2 * gadget;
    quadratic[z] += 3 * gadget;
    work.push_back({(mask & ~za & ~zb) | z, c});
  }

  const std::size_t n_total = next_var;
  std::vector<std::string> neuron_names;
  for (std::size_t a = 0; a < n_atoms; ++a)
    neuron_names.push_back(universe->name(a));
  std::set<std::string> taken(neuron_names.begin(), neuron_names.end());
  for (std::size_t a = n_atoms; a < n_total; ++a) {
    std::string name =
        fresh_name("_q" + std::to_string(a - n_atoms + 1), taken);
    taken.insert(name);
    neuron_names.push_back(name);
  }
  // E = -sum w x x - sum b x realizes the quadratic with flipped signs.
  std::vector<double> biases(n_total, 0.0);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> pair_terms;
  for (const auto& [mask, c] : quadratic) {
    if (std::abs(c) < 1e-12) continue;
    int pc = std::popcount(mask);
    std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
    if (pc == 1) {
      biases[i] = -c;
    } else {
      std::size_t j = static_cast<std::size_t>(
          std::countr_zero(mask & ~(std::uint64_t{1} << i)));
      pair_terms.push_back({{i, j}, c});
    }
  }
  CandidateNetwork::Builder b;
  for (std::size_t a = 0; a < n_total; ++a)
    b.add_neuron({neuron_names[a], TransferFn::heaviside(), biases[a],
                  {0.0, 1.0}, a < n_atoms});
  for (const auto& [pr, c] : pair_terms) {
    b.weight(neuron_names[pr.first], neuron_names[pr.second], -c);
    b.weight(neuron_names[pr.second], neuron_names[pr.first], -c);
  }
  b.update_mode(net::UpdateMode::async_sweep());
  CandidateNetwork net = b.build();

  EncodingNat enc;
  enc.universe = universe;
  for (std::size_t a = 0; a < n_atoms; ++a)
    enc.atom_neuron.push_back({universe->name(a), universe->name(a)});

  CompilationResult result{std::move(net), std::move(enc), {}, -constant};
  Certificate& cert = result.certificate;
  const CandidateNetwork& cnet = result.net;

  std::string why;
  cert.add("hopfield-structure", cnet.is_hopfield(&why), why);

  const std::size_t n_hidden = n_total - n_atoms;
  if ((std::uint64_t{1} << n_total) > state_cap) {
    cert.skip("hidden-minimized-energy-affine-to-penalty",
              "state space exceeds the cap");
    cert.skip("visible-minima-are-penalty-models", "state space exceeds the cap");
    return result;
  }

  auto pm = logic::penalty_models(kb, universe);
  bool affine = true;
  bool minima_match = true;
  double expected_offset = -constant;
  double min_ebar = std::numeric_limits<double>::infinity();
  std::vector<double> ebar(std::size_t{1} << n_atoms);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n_atoms); ++v) {
    NetState s(n_total, 0.0);
    Interpretation m{v};
    for (std::size_t a = 0; a < n_atoms; ++a) s[a] = m.value(a) ? 1.0 : 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << n_hidden); ++h) {
      for (std::size_t k = 0; k < n_hidden; ++k)
        s[n_atoms + k] = ((h >> k) & 1u) ? 1.0 : 0.0;
      best = std::min(best, net::hopfield_energy(cnet, s));
    }
    ebar[v] = best;
    min_ebar = std::min(min_ebar, best);
    double pl = logic::penalty(kb, m, *universe);
    if (std::abs(best - (pl + expected_offset)) > 1e-9) affine = false;
  }
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n_atoms); ++v) {
    bool is_min = std::abs(ebar[v] - min_ebar) <= 1e-9;
    if (is_min != pm.models.contains(Interpretation{v})) minima_match = false;
  }
  cert.add("hidden-minimized-energy-affine-to-penalty", affine,
           "offset " + format_real(expected_offset));
  cert.add("visible-minima-are-penalty-models", minima_match);
  return result;
}

}  // namespace semenc::translate
