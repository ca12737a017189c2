#include "semenc/net.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "semenc/common.hpp"

namespace semenc::net {

TransferFn TransferFn::lookup(std::vector<std::pair<double, double>> table) {
  TransferFn fn(Kind::Lookup);
  std::sort(table.begin(), table.end());
  for (std::size_t i = 1; i < table.size(); ++i)
    if (table[i].first == table[i - 1].first)
      throw ValidationError("duplicate input in lookup table");
  fn.table_ = std::move(table);
  return fn;
}

double TransferFn::operator()(double input) const {
  switch (kind_) {
    case Kind::Heaviside:
      return input >= 0.0 ? 1.0 : 0.0;  // inclusive at zero
    case Kind::Identity:
      return input;
    case Kind::Sign:
      return input >= 0.0 ? 1.0 : -1.0;
    case Kind::Lookup:
      for (const auto& [in, out] : table_)
        if (std::abs(in - input) <= kValueTolerance) return out;
      throw ValidationError("unmapped lookup input " + format_real(input));
  }
  throw Error("unreachable transfer kind");
}

std::string to_string(const NetState& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += format_real(s[i]);
  }
  return out + ")";
}

CandidateNetwork::Builder& CandidateNetwork::Builder::add_neuron(NeuronSpec spec) {
  neurons_.push_back(std::move(spec));
  return *this;
}

CandidateNetwork::Builder& CandidateNetwork::Builder::weight(
    const std::string& from, const std::string& to, double w) {
  weights_.push_back({{from, to}, w});
  return *this;
}

CandidateNetwork::Builder& CandidateNetwork::Builder::t_c(std::size_t t) {
  t_c_ = t;
  return *this;
}

CandidateNetwork::Builder& CandidateNetwork::Builder::update_mode(UpdateMode m) {
  mode_ = std::move(m);
  return *this;
}

CandidateNetwork CandidateNetwork::Builder::build(std::size_t closure_cap) const {
  CandidateNetwork net;
  net.neurons_ = neurons_;
  net.t_c_ = t_c_;
  net.mode_ = mode_;
  const std::size_t n = net.neurons_.size();
  if (n == 0) throw ValidationError("network has no neurons");
  if (t_c_ < 1) throw ValidationError("computation time t_c must be >= 1");

  for (std::size_t i = 0; i < n; ++i) {
    auto& spec = net.neurons_[i];
    if (spec.name.empty()) throw ValidationError("neuron with empty name");
    if (!net.index_.emplace(spec.name, i).second)
      throw ValidationError("duplicate neuron name: " + spec.name);
    if (spec.domain.empty())
      throw ValidationError("neuron " + spec.name + " has an empty domain");
    std::sort(spec.domain.begin(), spec.domain.end());
    spec.domain.erase(std::unique(spec.domain.begin(), spec.domain.end()),
                      spec.domain.end());
    if (spec.visible) net.visible_.push_back(i);
    else net.hidden_.push_back(i);
  }
  if (net.visible_.empty())
    throw ValidationError("the visible set must be nonempty");

  net.weights_.assign(n * n, 0.0);
  std::vector<bool> edge_set(n * n, false);
  for (const auto& [edge, w] : weights_) {
    std::size_t from = net.index_of(edge.first);
    std::size_t to = net.index_of(edge.second);
    if (edge_set[from * n + to])
      throw ValidationError("duplicate weight for edge " + edge.first + " -> " +
                            edge.second);
    edge_set[from * n + to] = true;
    net.weights_[from * n + to] = w;
  }
  net.inputs_.resize(n);
  for (std::size_t to = 0; to < n; ++to)
    for (std::size_t from = 0; from < n; ++from)
      if (net.weights_[from * n + to] != 0.0) net.inputs_[to].push_back(from);

  switch (mode_.kind) {
    case UpdateMode::Kind::Synchronous:
      break;
    case UpdateMode::Kind::AsyncSweep: {
      net.order_ = mode_.order;
      if (net.order_.empty()) {
        net.order_.resize(n);
        std::iota(net.order_.begin(), net.order_.end(), 0);
      }
      std::vector<std::size_t> sorted = net.order_;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (i >= n || sorted[i] != i)
          throw ValidationError("asynchronous order must be a permutation of the neurons");
      if (sorted.size() != n)
        throw ValidationError("asynchronous order must be a permutation of the neurons");
      break;
    }
    case UpdateMode::Kind::AsyncRandom: {
      // A single random visitation order drawn from the seed; the update stays
      // a deterministic self-map of the state space.
      net.order_.resize(n);
      std::iota(net.order_.begin(), net.order_.end(), 0);
      std::mt19937_64 rng(mode_.seed);
      std::shuffle(net.order_.begin(), net.order_.end(), rng);
      break;
    }
  }

  // Domain closure and lookup totality: enumerate each neuron's reachable
  // inputs (product of in-neighbor domains) and require the step output to
  // land in the neuron's domain.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& in = net.inputs_[i];
    std::size_t combos = 1;
    for (std::size_t j : in) {
      std::size_t d = net.neurons_[j].domain.size();
      if (combos > closure_cap / d)
        throw CapExceeded("fan-in domain product of neuron " +
                          net.neurons_[i].name + " exceeds the cap");
      combos *= d;
    }
    std::vector<std::size_t> digits(in.size(), 0);
    for (std::size_t c = 0; c < combos; ++c) {
      double sum = net.neurons_[i].bias;
      for (std::size_t k = 0; k < in.size(); ++k)
        sum += net.weights_[in[k] * n + i] * net.neurons_[in[k]].domain[digits[k]];
      double out;
      try {
        out = net.neurons_[i].transfer(sum);
      } catch (const ValidationError&) {
        throw ValidationError("neuron " + net.neurons_[i].name +
                              ": lookup table not total over reachable input " +
                              format_real(sum));
      }
      if (!net.snap_to_domain(i, out))
        throw ValidationError("neuron " + net.neurons_[i].name +
                              ": step output " + format_real(out) +
                              " escapes its domain (input " + format_real(sum) +
                              ")");
      for (std::size_t k = 0; k < digits.size(); ++k) {
        if (++digits[k] < net.neurons_[in[k]].domain.size()) break;
        digits[k] = 0;
      }
    }
  }
  return net;
}

std::size_t CandidateNetwork::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("no neuron named " + name);
  return it->second;
}

std::optional<double> CandidateNetwork::snap_to_domain(std::size_t i,
                                                       double v) const {
  for (double d : neurons_[i].domain)
    if (std::abs(d - v) <= kValueTolerance) return d;
  return std::nullopt;
}

bool CandidateNetwork::valid_state(const NetState& s) const {
  if (s.size() != neurons_.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!snap_to_domain(i, s[i])) return false;
  return true;
}

void CandidateNetwork::require_valid_state(const NetState& s) const {
  if (s.size() != neurons_.size())
    throw ValidationError("state has " + std::to_string(s.size()) +
                          " components, network has " +
                          std::to_string(neurons_.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!snap_to_domain(i, s[i]))
      throw ValidationError("state value " + format_real(s[i]) +
                            " not in the domain of neuron " + neurons_[i].name);
}

std::size_t CandidateNetwork::state_space_size(std::size_t cap) const {
  std::size_t total = 1;
  for (const auto& spec : neurons_) {
    if (total > cap / spec.domain.size())
      throw CapExceeded("state space exceeds cap of " + std::to_string(cap) +
                        " states (override with a larger cap)");
    total *= spec.domain.size();
  }
  return total;
}

std::vector<NetState> CandidateNetwork::enumerate_states(std::size_t cap) const {
  std::size_t total = state_space_size(cap);
  std::vector<NetState> states;
  states.reserve(total);
  NetState cur(neurons_.size());
  std::vector<std::size_t> digits(neurons_.size(), 0);
  for (std::size_t c = 0; c < total; ++c) {
    for (std::size_t i = 0; i < neurons_.size(); ++i)
      cur[i] = neurons_[i].domain[digits[i]];
    states.push_back(cur);
    for (std::size_t i = neurons_.size(); i-- > 0;) {
      if (++digits[i] < neurons_[i].domain.size()) break;
      digits[i] = 0;
    }
  }
  return states;
}

std::size_t CandidateNetwork::state_index(const NetState& s) const {
  require_valid_state(s);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < neurons_.size(); ++i) {
    const auto& dom = neurons_[i].domain;
    double v = *snap_to_domain(i, s[i]);
    std::size_t digit =
        static_cast<std::size_t>(std::find(dom.begin(), dom.end(), v) - dom.begin());
    idx = idx * dom.size() + digit;
  }
  return idx;
}

double CandidateNetwork::input_to(std::size_t i, const NetState& s) const {
  double sum = neurons_[i].bias;
  for (std::size_t j : inputs_[i]) sum += weights_[j * neurons_.size() + i] * s[j];
  return sum;
}

NetState CandidateNetwork::step(const NetState& s) const {
  require_valid_state(s);
  const std::size_t n = neurons_.size();
  NetState out;
  if (mode_.kind == UpdateMode::Kind::Synchronous) {
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double v = neurons_[i].transfer(input_to(i, s));
      auto snapped = snap_to_domain(i, v);
      if (!snapped)
        throw ValidationError("step output escapes domain of neuron " +
                              neurons_[i].name);
      out[i] = *snapped;
    }
  } else {
    out = s;
    for (std::size_t i : order_) {
      double v = neurons_[i].transfer(input_to(i, out));
      auto snapped = snap_to_domain(i, v);
      if (!snapped)
        throw ValidationError("step output escapes domain of neuron " +
                              neurons_[i].name);
      out[i] = *snapped;
    }
  }
  return out;
}

NetState CandidateNetwork::update(const NetState& s) const {
  NetState cur = s;
  for (std::size_t t = 0; t < t_c_; ++t) cur = step(cur);
  return cur;
}

bool CandidateNetwork::states_equal(const NetState& a, const NetState& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kValueTolerance) return false;
  return true;
}

bool CandidateNetwork::visibly_equal(const NetState& a, const NetState& b) const {
  for (std::size_t i : visible_)
    if (std::abs(a[i] - b[i]) > kValueTolerance) return false;
  return true;
}

bool CandidateNetwork::is_feed_forward() const {
  const std::size_t n = neurons_.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = inputs_[i].size();
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) queue.push_back(i);
  std::size_t removed = 0;
  while (!queue.empty()) {
    std::size_t j = queue.back();
    queue.pop_back();
    ++removed;
    for (std::size_t to = 0; to < n; ++to) {
      if (weights_[j * n + to] != 0.0 && --indegree[to] == 0)
        queue.push_back(to);
    }
  }
  return removed == n;
}

bool CandidateNetwork::is_hopfield(std::string* why) const {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const std::size_t n = neurons_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (weights_[i * n + i] != 0.0)
      return fail("nonzero self-weight on neuron " + neurons_[i].name);
    for (std::size_t j = 0; j < n; ++j)
      if (weights_[i * n + j] != weights_[j * n + i])
        return fail("asymmetric weights between " + neurons_[i].name + " and " +
                    neurons_[j].name);
    if (neurons_[i].transfer.kind() != TransferFn::Kind::Heaviside)
      return fail("neuron " + neurons_[i].name + " is not a heaviside unit");
    if (neurons_[i].domain != std::vector<double>{0.0, 1.0})
      return fail("neuron " + neurons_[i].name + " is not binary {0,1}");
  }
  return true;
}

TransitionReport compute_x_inf(const CandidateNetwork& net, std::size_t cap) {
  TransitionReport report;
  report.states = net.enumerate_states(cap);
  const std::size_t total = report.states.size();
  report.successor.resize(total);
  for (std::size_t s = 0; s < total; ++s)
    report.successor[s] = net.state_index(net.update(report.states[s]));

  // Trim states with no remaining predecessors; whatever survives lies on a
  // cycle of the successor map.
  std::vector<std::size_t> indegree(total, 0);
  for (std::size_t s = 0; s < total; ++s) ++indegree[report.successor[s]];
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < total; ++s)
    if (indegree[s] == 0) queue.push_back(s);
  report.recurrent.assign(total, true);
  while (!queue.empty()) {
    std::size_t s = queue.back();
    queue.pop_back();
    report.recurrent[s] = false;
    std::size_t nxt = report.successor[s];
    if (--indegree[nxt] == 0) queue.push_back(nxt);
  }
  std::vector<bool> visited(total, false);
  for (std::size_t s = 0; s < total; ++s) {
    if (!report.recurrent[s]) continue;
    report.x_inf.push_back(s);
    if (visited[s]) continue;
    std::vector<std::size_t> cycle;
    std::size_t cur = s;
    do {
      visited[cur] = true;
      cycle.push_back(cur);
      cur = report.successor[cur];
    } while (cur != s);
    report.cycles.push_back(std::move(cycle));
  }
  return report;
}

double hopfield_energy(const CandidateNetwork& net, const NetState& s) {
  std::string why;
  if (!net.is_hopfield(&why))
    throw ValidationError("not a Hopfield network: " + why);
  net.require_valid_state(s);
  const std::size_t n = net.size();
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e -= net.weight(i, j) * s[i] * s[j];
    e -= net.bias(i) * s[i];
  }
  return e;
}

}  // namespace semenc::net
