#include "semenc/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace semenc::stochastic {

using encoding::Agg;
using encoding::Encoding;
using logic::ModelSet;
using net::CandidateNetwork;
using net::NetState;

namespace {

bool states_close(const NetState& a, const NetState& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kValueTolerance) return false;
  return true;
}

}  // namespace

void LayeredStochasticNet::validate() const {
  if (input_names.empty() || units.empty())
    throw ValidationError("layered stochastic net needs inputs and units");
  double total = 0.0;
  for (const auto& [state, p] : input_dist) {
    if (state.size() != input_names.size())
      throw ValidationError("input state arity mismatch");
    if (p < 0.0 || p > 1.0)
      throw ValidationError("input probability outside [0,1]");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ValidationError("input distribution sums to " + format_real(total));
  for (const auto& unit : units) {
    for (const auto& [state, p] : unit.table) {
      if (p < 0.0 || p > 1.0)
        throw ValidationError("unit probability outside [0,1]");
      (void)state;
    }
    for (const auto& [input, ip] : input_dist) {
      (void)ip;
      bool found = false;
      for (const auto& [state, p] : unit.table) {
        (void)p;
        if (states_close(state, input)) found = true;
      }
      if (!found)
        throw ValidationError("unit " + unit.name +
                              " has no probability for input " +
                              net::to_string(input));
    }
  }
}

double LayeredStochasticNet::p_unit(std::size_t unit, const NetState& input) const {
  for (const auto& [state, p] : units[unit].table)
    if (states_close(state, input)) return p;
  throw ValidationError("unit " + units[unit].name +
                        " has no probability for input " + net::to_string(input));
}

std::vector<double> LayeredStochasticNet::p_vector(const NetState& input) const {
  std::vector<double> out(units.size());
  for (std::size_t u = 0; u < units.size(); ++u) out[u] = p_unit(u, input);
  return out;
}

void MarkovChain::validate() const {
  const std::size_t n = states.size();
  if (n == 0) throw ValidationError("chain has no states");
  if (rows.size() != n) throw ValidationError("transition matrix shape mismatch");
  for (const auto& row : rows) {
    if (row.size() != n) throw ValidationError("transition matrix shape mismatch");
    double total = 0.0;
    for (double p : row) {
      if (p < 0.0 || p > 1.0 + 1e-12)
        throw ValidationError("transition probability outside [0,1]");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw ValidationError("transition row sums to " + format_real(total));
  }
  if (!initial.empty()) {
    if (initial.size() != n) throw ValidationError("initial distribution shape mismatch");
    double total = 0.0;
    for (double p : initial) total += p;
    if (std::abs(total - 1.0) > 1e-12)
      throw ValidationError("initial distribution sums to " + format_real(total));
  }
  for (const auto& s : states)
    if (s.size() != neuron_names.size())
      throw ValidationError("state arity does not match the neuron list");
}

CandidateNetwork skeleton_network(const StochasticNetwork& snet) {
  CandidateNetwork::Builder b;
  if (const auto* layered = std::get_if<LayeredStochasticNet>(&snet)) {
    layered->validate();
    for (std::size_t i = 0; i < layered->input_names.size(); ++i) {
      std::vector<double> domain;
      for (const auto& [state, p] : layered->input_dist) {
        (void)p;
        domain.push_back(state[i]);
      }
      b.add_neuron({layered->input_names[i], net::TransferFn::identity(), 0.0,
                    domain, false});
    }
    for (const auto& unit : layered->units)
      b.add_neuron({unit.name, net::TransferFn::heaviside(), 0.0, {0.0, 1.0},
                    true});
    // Biases of 0 with heaviside would step everything to 1, but the skeleton
    // is never stepped; it only carries names, domains and visibility.
    return b.build();
  }
  const auto& chain = std::get<MarkovChain>(snet);
  chain.validate();
  for (std::size_t i = 0; i < chain.neuron_names.size(); ++i) {
    std::vector<double> domain;
    for (const auto& s : chain.states) domain.push_back(s[i]);
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    bool visible = std::find(chain.visible_names.begin(), chain.visible_names.end(),
                             chain.neuron_names[i]) != chain.visible_names.end();
    b.add_neuron({chain.neuron_names[i], net::TransferFn::identity(), 0.0,
                  domain, visible});
  }
  return b.build();
}

std::vector<NetState> enumerate_states(const StochasticNetwork& snet) {
  if (const auto* layered = std::get_if<LayeredStochasticNet>(&snet)) {
    std::vector<NetState> out;
    const std::size_t n_units = layered->units.size();
    const std::uint64_t combos = std::uint64_t{1} << n_units;
    for (const auto& [input, p] : layered->input_dist) {
      (void)p;
      for (std::uint64_t y = 0; y < combos; ++y) {
        NetState s = input;
        for (std::size_t u = 0; u < n_units; ++u)
          s.push_back((y >> u) & 1u ? 1.0 : 0.0);
        out.push_back(std::move(s));
      }
    }
    return out;
  }
  return std::get<MarkovChain>(snet).states;
}

namespace {

std::vector<double> initial_distribution(const MarkovChain& chain) {
  if (!chain.initial.empty()) return chain.initial;
  return std::vector<double>(chain.states.size(), 1.0 / chain.states.size());
}

std::vector<double> step_distribution(const std::vector<std::vector<double>>& rows,
                                      const std::vector<double>& pi) {
  std::vector<double> next(pi.size(), 0.0);
  for (std::size_t s = 0; s < pi.size(); ++s) {
    if (pi[s] == 0.0) continue;
    for (std::size_t t = 0; t < pi.size(); ++t) next[t] += pi[s] * rows[s][t];
  }
  return next;
}

double stationarity_residual(const std::vector<std::vector<double>>& rows,
                             const std::vector<double>& pi) {
  auto next = step_distribution(rows, pi);
  double r = 0.0;
  for (std::size_t s = 0; s < pi.size(); ++s) r += std::abs(next[s] - pi[s]);
  return r;
}

// Union of recurrent classes reachable from the initial support: iterative
// Tarjan SCC over the positive-probability transition graph, then closed
// components reachable from the support.
std::vector<std::size_t> recurrent_reachable(const MarkovChain& chain) {
  const std::size_t n = chain.states.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (chain.rows[s][t] > 0.0) adj[s].push_back(t);

  std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, comp_count = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& f = frames.back();
      if (f.edge < adj[f.v].size()) {
        std::size_t w = adj[f.v][f.edge++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          while (true) {
            std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
            if (w == f.v) break;
          }
          ++comp_count;
        }
        std::size_t v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  // A component is closed (recurrent) when no edge leaves it.
  std::vector<bool> closed(static_cast<std::size_t>(comp_count), true);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t : adj[s])
      if (comp[s] != comp[t]) closed[static_cast<std::size_t>(comp[s])] = false;
  // Reachability from the initial support.
  auto pi0 = initial_distribution(chain);
  std::vector<bool> reach(n, false);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s)
    if (pi0[s] > 0.0 && !reach[s]) {
      reach[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    std::size_t s = queue.back();
    queue.pop_back();
    for (std::size_t t : adj[s])
      if (!reach[t]) {
        reach[t] = true;
        queue.push_back(t);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < n; ++s)
    if (reach[s] && closed[static_cast<std::size_t>(comp[s])]) out.push_back(s);
  return out;
}

MarkovChain to_chain(const LayeredStochasticNet& layered) {
  MarkovChain chain;
  chain.neuron_names = layered.input_names;
  for (const auto& unit : layered.units) {
    chain.neuron_names.push_back(unit.name);
    chain.visible_names.push_back(unit.name);
  }
  StochasticNetwork wrapped = layered;
  chain.states = enumerate_states(wrapped);
  const std::size_t n = chain.states.size();
  const std::size_t n_in = layered.input_names.size();
  const std::size_t n_units = layered.units.size();
  chain.rows.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    NetState from_input(chain.states[s].begin(), chain.states[s].begin() +
                                                     static_cast<std::ptrdiff_t>(n_in));
    auto p = layered.p_vector(from_input);
    for (std::size_t t = 0; t < n; ++t) {
      NetState to_input(chain.states[t].begin(), chain.states[t].begin() +
                                                     static_cast<std::ptrdiff_t>(n_in));
      double prob = 0.0;
      for (const auto& [input, ip] : layered.input_dist)
        if (states_close(input, to_input)) prob = ip;
      for (std::size_t u = 0; u < n_units; ++u) {
        double y = chain.states[t][n_in + u];
        prob *= y >= 0.5 ? p[u] : 1.0 - p[u];
      }
      chain.rows[s][t] = prob;
    }
  }
  return chain;  // initial left uniform
}

}  // namespace

LimitingDistribution limiting_distribution(const StochasticNetwork& snet,
                                           double tol, std::size_t max_iter,
                                           double epsilon) {
  LimitingDistribution out;
  out.epsilon = epsilon;

  if (const auto* layered = std::get_if<LayeredStochasticNet>(&snet)) {
    layered->validate();
    out.states = enumerate_states(snet);
    const std::size_t n_in = layered->input_names.size();
    const std::size_t n_units = layered->units.size();
    // Closed form: the chain redraws the input each step, so the limiting law
    // is P_in(x) x marginal(y) with marginal(y) = sum_x P_in(x) prod CPT.
    for (const auto& s : out.states) {
      NetState input(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n_in));
      double p_in = 0.0;
      for (const auto& [istate, ip] : layered->input_dist)
        if (states_close(istate, input)) p_in = ip;
      double marginal = 0.0;
      for (const auto& [istate, ip] : layered->input_dist) {
        double term = ip;
        auto p = layered->p_vector(istate);
        for (std::size_t u = 0; u < n_units; ++u) {
          double y = s[n_in + u];
          term *= y >= 0.5 ? p[u] : 1.0 - p[u];
        }
        marginal += term;
      }
      out.probabilities.push_back(p_in * marginal);
    }
    out.converged = true;
    MarkovChain chain = to_chain(*layered);
    out.residual = stationarity_residual(chain.rows, out.probabilities);
    auto rec = recurrent_reachable(chain);
    out.x_p_inf = rec;
    return out;
  }

  const auto& chain = std::get<MarkovChain>(snet);
  chain.validate();
  out.states = chain.states;
  auto pi = initial_distribution(chain);
  for (std::size_t it = 0; it < max_iter; ++it) {
    double residual = stationarity_residual(chain.rows, pi);
    if (residual <= tol) {
      out.converged = true;
      out.iterations = it;
      out.residual = residual;
      break;
    }
    pi = step_distribution(chain.rows, pi);
    out.iterations = it + 1;
  }
  out.probabilities = pi;
  out.residual = stationarity_residual(chain.rows, pi);
  out.converged = out.residual <= tol;
  out.x_p_inf = recurrent_reachable(chain);
  return out;
}

MarkovChain embed_deterministic(const CandidateNetwork& net, std::size_t cap) {
  auto report = net::compute_x_inf(net, cap);
  MarkovChain chain;
  for (std::size_t i = 0; i < net.size(); ++i)
    chain.neuron_names.push_back(net.name(i));
  for (std::size_t v : net.visible())
    chain.visible_names.push_back(net.name(v));
  chain.states = report.states;
  const std::size_t n = chain.states.size();
  chain.rows.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) chain.rows[s][report.successor[s]] = 1.0;
  return chain;
}

FidelityReport fid_prob(const StochasticNetwork& snet, const Encoding& enc,
                        const std::vector<logic::Formula>& kb, Agg agg,
                        double tol, std::size_t max_iter) {
  if (agg != Agg::Union)
    throw ValidationError("fid_prob is defined for union aggregation only");
  CandidateNetwork skeleton = skeleton_network(snet);
  encoding::require_valid_encoding(enc, skeleton);
  const auto& universe = encoding::universe_of(enc);
  for (const auto& f : kb)
    for (const auto& a : f.atoms())
      if (!universe->contains(a))
        throw ValidationError("knowledge-base atom not housed: " + a);
  ModelSet m_l = logic::models_of(kb, universe);

  FidelityReport report;
  report.measure = "fid_prob";

  LimitingDistribution dist = limiting_distribution(snet, tol, max_iter);
  std::vector<double> masses = dist.probabilities;
  if (!dist.converged) {
    // No limiting distribution (periodic chain): use the Cesaro limit via the
    // lazy chain (I+T)/2, which always converges and matches the limiting
    // distribution whenever one exists.
    const auto& chain = std::get<MarkovChain>(snet);
    MarkovChain lazy = chain;
    for (std::size_t s = 0; s < lazy.rows.size(); ++s) {
      for (std::size_t t = 0; t < lazy.rows.size(); ++t) lazy.rows[s][t] *= 0.5;
      lazy.rows[s][s] += 0.5;
    }
    StochasticNetwork lazy_net = lazy;
    LimitingDistribution cesaro = limiting_distribution(lazy_net, tol, max_iter);
    if (!cesaro.converged)
      throw Error("lazy chain failed to converge within the iteration budget");
    masses = cesaro.probabilities;
    report.notes.push_back(
        "chain is periodic; value is the Cesaro (time-average) limit");
  }

  // Group states by their interpretation cube for the breakdown.
  std::vector<std::pair<std::string, std::pair<double, bool>>> groups;
  double total = 0.0;
  for (std::size_t s = 0; s < dist.states.size(); ++s) {
    ModelSet image = encoding::interpret_state(skeleton, enc, dist.states[s]);
    bool sat = image.subset_of(m_l);
    std::string label = image.to_string();
    if (sat) total += masses[s];
    bool found = false;
    for (auto& [l, acc] : groups)
      if (l == label) {
        acc.first += masses[s];
        found = true;
      }
    if (!found) groups.push_back({label, {masses[s], sat}});
  }
  for (const auto& [label, acc] : groups)
    report.breakdown.push_back({label, acc.first, acc.second});
  report.value = total;
  return report;
}

SemanticLossResult semantic_loss(const std::vector<logic::Formula>& kb,
                                 const logic::Universe& universe,
                                 const std::vector<double>& p,
                                 std::size_t atom_cap) {
  if (p.size() != universe.size())
    throw ValidationError("probability vector arity does not match the universe");
  for (double v : p)
    if (v < 0.0 || v > 1.0)
      throw ValidationError("probability outside [0,1]");
  if (universe.size() > atom_cap)
    throw CapExceeded("semantic loss enumeration exceeds the atom cap");
  for (const auto& f : kb)
    for (const auto& a : f.atoms())
      universe.index_of(a);  // throws when absent

  double sat_prob = 0.0;
  const std::uint64_t total = std::uint64_t{1} << universe.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    logic::Interpretation m{bits};
    bool sat = true;
    for (const auto& f : kb)
      if (!f.eval(m, universe)) {
        sat = false;
        break;
      }
    if (!sat) continue;
    double term = 1.0;
    for (std::size_t a = 0; a < universe.size(); ++a)
      term *= m.value(a) ? p[a] : 1.0 - p[a];
    sat_prob += term;
  }
  SemanticLossResult out;
  out.satisfaction_probability = sat_prob;
  if (sat_prob == 0.0) {
    out.infinite = true;
    out.loss = std::numeric_limits<double>::infinity();
  } else {
    out.loss = -std::log(sat_prob);
  }
  return out;
}

}  // namespace semenc::stochastic
