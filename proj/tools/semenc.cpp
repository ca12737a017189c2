#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semenc/demos.hpp"
#include "semenc/dot.hpp"
#include "semenc/io.hpp"
#include "semenc/translate.hpp"

using namespace semenc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

std::vector<double> parse_csv_numbers(const std::string& text) {
  std::vector<double> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw ParseError("empty value in list");
    out.push_back(std::stod(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  return out;
}

std::vector<std::string> parse_csv_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

net::CandidateNetwork with_t_c(const net::CandidateNetwork& src, std::size_t t) {
  net::CandidateNetwork::Builder b;
  for (std::size_t i = 0; i < src.size(); ++i) b.add_neuron(src.neuron(i));
  for (std::size_t from = 0; from < src.size(); ++from)
    for (std::size_t to = 0; to < src.size(); ++to)
      if (src.weight(from, to) != 0.0)
        b.weight(src.name(from), src.name(to), src.weight(from, to));
  b.t_c(t);
  b.update_mode(src.update_mode());
  return b.build();
}

std::string true_atoms(const logic::Interpretation& m, const logic::Universe& u) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!m.value(i)) continue;
    if (!first) out += ", ";
    first = false;
    out += u.name(i);
  }
  return out + "}";
}

encoding::Agg parse_agg(const std::string& text) {
  if (text == "union") return encoding::Agg::Union;
  if (text == "intersection") return encoding::Agg::Intersection;
  throw ParseError("aggregation must be 'union' or 'intersection'");
}

struct Options {
  std::size_t state_cap = kDefaultStateCap;
};

int run_simulate(const std::string& net_path, const std::string& state_csv,
                 std::optional<std::size_t> updates,
                 std::optional<std::size_t> tc_override, const Options& opt) {
  auto network = io::load_network(net_path);
  if (tc_override) network = with_t_c(network, *tc_override);
  net::NetState state = parse_csv_numbers(state_csv);
  std::size_t budget = updates.value_or(opt.state_cap);
  std::vector<net::NetState> seen{state};
  std::cout << "t=0 " << net::to_string(state) << "\n";
  for (std::size_t t = 1; t <= budget; ++t) {
    state = network.update(state);
    std::cout << "t=" << t << " " << net::to_string(state) << "\n";
    if (!updates) {
      for (std::size_t k = 0; k < seen.size(); ++k) {
        if (network.states_equal(seen[k], state)) {
          if (k + 1 == seen.size())
            std::cout << "fixed point reached\n";
          else
            std::cout << "cycle of length " << seen.size() - k << " reached\n";
          return kExitOk;
        }
      }
      seen.push_back(state);
    }
  }
  return kExitOk;
}

int run_diagram(const std::string& net_path, const std::string& out_path,
                const Options& opt) {
  auto network = io::load_network(net_path);
  auto report = net::compute_x_inf(network, opt.state_cap);
  std::string dot = net::to_dot(network, report);
  if (out_path.empty())
    std::cout << dot;
  else
    io::write_file(out_path, dot);
  return kExitOk;
}

int run_verify(const std::string& net_path, const std::string& enc_path,
               const std::string& kb_path, const std::string& agg_text,
               const Options& opt) {
  auto network = io::load_network(net_path);
  auto enc = io::load_encoding(enc_path);
  auto kb = io::load_kb(kb_path);
  auto agg = parse_agg(agg_text);
  auto universe = encoding::universe_of(enc);

  std::optional<encoding::EncodingReport> report;
  if (kb.has_fuzzy())
    throw ParseError("interval-labelled sentences are handled by 'fidelity'");
  if (kb.has_penalty()) {
    auto pm = logic::penalty_models(kb.penalty, universe);
    if (pm.hard_constraints_unsat)
      std::cout << "warning: hard constraints unsatisfiable; using the finite part\n";
    report = encoding::analyze_encoding(network, enc, agg, pm.models, opt.state_cap);
  } else if (kb.has_program()) {
    auto m_l = logic::program_models(kb.ground_program(), universe);
    report = encoding::analyze_encoding(network, enc, agg, m_l, opt.state_cap);
  } else {
    report = encoding::analyze_encoding(network, enc, agg, kb.formulas,
                                        opt.state_cap);
  }
  std::cout << report->to_string(network);
  return report->is_semantic_encoding ? kExitOk : kExitVerificationFailed;
}

int run_tp(const std::string& program_path, const std::string& m0_csv,
           std::size_t max_iters) {
  auto kb = io::load_kb(program_path);
  auto program = kb.ground_program();
  auto universe = program.universe();
  logic::Interpretation m0;
  for (const auto& name : parse_csv_names(m0_csv))
    m0.set(universe->index_of(name), true);
  auto res = logic::tp_fixpoint(program, m0, *universe, max_iters);
  std::cout << "iterations: " << res.iterations << "\n";
  switch (res.status) {
    case logic::TpResult::Status::FixedPoint:
      std::cout << "fixed point: " << true_atoms(res.fixpoint, *universe) << "\n";
      return kExitOk;
    case logic::TpResult::Status::Cycle:
      std::cout << "cycle of length " << res.cycle.size() << ":\n";
      for (const auto& m : res.cycle)
        std::cout << "  " << true_atoms(m, *universe) << "\n";
      return kExitVerificationFailed;
    case logic::TpResult::Status::Exhausted:
      std::cout << "no repetition within the iteration budget\n";
      return kExitVerificationFailed;
  }
  return kExitInputError;
}

int run_compile(const std::string& method, const std::string& program_path,
                const std::string& kb_path, const std::string& net_path,
                const std::string& out_net, const std::string& out_enc,
                const std::string& out_kb, const std::string& out_cert,
                const Options& opt) {
  translate::Certificate cert;
  std::optional<net::CandidateNetwork> produced_net;
  std::optional<encoding::EncodingNat> produced_enc;
  std::optional<logic::PenaltyKB> produced_kb;
  std::optional<logic::LogicProgram> produced_program;

  if (method == "kbann" || method == "cilp") {
    if (program_path.empty()) throw ParseError("--program is required");
    auto program = io::load_kb(program_path).ground_program();
    auto result = method == "kbann" ? translate::kbann_compile(program)
                                    : translate::cilp_compile(program);
    cert = result.certificate;
    produced_net = result.net;
    produced_enc = result.enc;
  } else if (method == "extract") {
    if (net_path.empty()) throw ParseError("--net is required");
    auto result = translate::horn_extract(io::load_network(net_path));
    cert = result.certificate;
    produced_program = result.program;
    std::cout << result.program.to_string();
  } else if (method == "hopfield-to-penalty") {
    if (net_path.empty()) throw ParseError("--net is required");
    auto result =
        translate::hopfield_to_penalty(io::load_network(net_path), opt.state_cap);
    cert = result.certificate;
    produced_kb = result.kb;
    produced_enc = result.enc;
    std::cout << "offset: " << format_real(result.offset) << "\n";
    std::cout << io::to_text(result.kb);
  } else if (method == "penalty-to-hopfield") {
    if (kb_path.empty()) throw ParseError("--kb is required");
    auto kb = io::load_kb(kb_path);
    auto result = translate::penalty_to_hopfield(kb.penalty, nullptr, opt.state_cap);
    cert = result.certificate;
    produced_net = result.net;
    produced_enc = result.enc;
    if (result.energy_offset)
      std::cout << "offset: " << format_real(*result.energy_offset) << "\n";
  } else {
    throw ParseError("unknown method '" + method +
                     "' (kbann, cilp, extract, hopfield-to-penalty, "
                     "penalty-to-hopfield)");
  }

  if (!out_net.empty() && produced_net)
    io::write_file(out_net, io::to_json(*produced_net));
  if (!out_enc.empty() && produced_enc)
    io::write_file(out_enc, io::to_json(encoding::Encoding{*produced_enc}));
  if (!out_kb.empty()) {
    if (produced_kb) io::write_file(out_kb, io::to_text(*produced_kb));
    if (produced_program) io::write_file(out_kb, io::to_text(*produced_program));
  }
  if (!out_cert.empty()) io::write_file(out_cert, io::to_json(cert));
  std::cout << cert.to_string();
  return cert.pass ? kExitOk : kExitVerificationFailed;
}

int run_fidelity(const std::string& measure, const std::string& net_path,
                 const std::string& snet_path, const std::string& enc_path,
                 const std::string& kb_path, const std::string& valuations_path,
                 const std::string& satagg_text, const std::string& agg_text,
                 const std::string& p_csv, double tolerance, const Options& opt) {
  if (measure == "fuzzy") {
    auto kb = io::load_kb(kb_path);
    if (!kb.has_fuzzy())
      throw ParseError("the knowledge-base has no interval-labelled sentences");
    auto satagg = satagg_text == "mean" ? fuzzy::SatAggKind::Mean
                                        : fuzzy::SatAggKind::Min;
    FidelityReport report;
    if (!valuations_path.empty()) {
      report = fuzzy::fid_fuzzy(io::load_valuations(valuations_path), kb.fuzzy_kb,
                                satagg);
    } else {
      if (net_path.empty() || enc_path.empty())
        throw ParseError("fuzzy fidelity needs --valuations or --net and --enc");
      report = fuzzy::fid_fuzzy_of_network(
          io::load_network(net_path), io::load_encoding(enc_path),
          parse_agg(agg_text), kb.fuzzy_kb, satagg, opt.state_cap);
    }
    std::cout << report.to_string();
    return kExitOk;
  }
  if (measure == "prob") {
    if (snet_path.empty() || enc_path.empty())
      throw ParseError("probabilistic fidelity needs --snet and --enc");
    auto kb = io::load_kb(kb_path);
    auto report = stochastic::fid_prob(io::load_snet(snet_path),
                                       io::load_encoding(enc_path), kb.formulas,
                                       encoding::Agg::Union, tolerance);
    std::cout << report.to_string();
    return kExitOk;
  }
  if (measure == "loss") {
    auto kb = io::load_kb(kb_path);
    auto universe = kb.formula_universe();
    auto p = parse_csv_numbers(p_csv);
    auto res = stochastic::semantic_loss(kb.formulas, *universe, p);
    std::cout << "atom order:";
    for (const auto& name : universe->names()) std::cout << " " << name;
    std::cout << "\nsemantic loss = " << format_real(res.loss) << "\n";
    std::cout << "satisfaction probability: "
              << format_real(res.satisfaction_probability) << "\n";
    return kExitOk;
  }
  throw ParseError("unknown measure '" + measure + "' (fuzzy, prob, loss)");
}

int run_demo() {
  auto results = demos::run_demo_suite();
  std::size_t failed = 0;
  for (const auto& c : results) {
    std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name;
    if (!c.pass) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  for (const auto& c : results)
    if (!c.pass) ++failed;
  std::cout << results.size() - failed << "/" << results.size() << " passed\n";
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "semenc: check networks as finite dynamical systems against logical "
      "knowledge-bases (stable states, encodings, compilers, fidelity)"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("SEMENC_STATE_CAP"))
    opt.state_cap = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  app.add_option("--state-cap", opt.state_cap,
                 "Cap on exhaustively enumerated state spaces");

  std::string net_path, enc_path, kb_path, snet_path, valuations_path;
  std::string program_path, penalty_path;
  std::string state_csv, agg_text = "union", satagg_text = "min";
  std::string out_path, method, m0_csv, p_csv;
  std::string out_net, out_enc, out_kb, out_cert;
  std::optional<std::size_t> updates, tc_override;
  std::size_t max_iters = 1000;
  double tolerance = 1e-12;

  auto* simulate = app.add_subcommand("simulate", "Run a trajectory of a network");
  simulate->add_option("--net", net_path, "Network file")->required();
  simulate->add_option("--state", state_csv, "Initial state, comma-separated")
      ->required();
  std::size_t updates_value = 0, tc_value = 0;
  auto* updates_opt =
      simulate->add_option("--updates", updates_value, "Number of updates");
  auto* tc_opt = simulate->add_option("--tc", tc_value, "Override t_c");

  auto* diagram =
      app.add_subcommand("diagram", "Export the transition diagram as DOT");
  diagram->add_option("--net", net_path, "Network file")->required();
  diagram->add_option("--out", out_path, "Output path (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "Decide the neural-model and semantic-encoding conditions");
  verify->add_option("--net", net_path, "Network file")->required();
  verify->add_option("--enc", enc_path, "Encoding file")->required();
  verify->add_option("--kb", kb_path, "Knowledge-base file")->required();
  verify->add_option("--agg", agg_text, "union or intersection");

  auto* tp = app.add_subcommand("tp", "Iterate the immediate-consequence operator");
  tp->add_option("--program", program_path, "Program file")->required();
  tp->add_option("--m0", m0_csv, "Initially true atoms, comma-separated");
  tp->add_option("--max-iters", max_iters, "Iteration budget");

  auto* compile = app.add_subcommand("compile", "Knowledge-network compilers");
  compile->add_option("--method", method,
                      "kbann | cilp | extract | hopfield-to-penalty | "
                      "penalty-to-hopfield")
      ->required();
  compile->add_option("--program", program_path, "Program file (kbann, cilp)");
  compile->add_option("--kb", penalty_path, "Penalty knowledge-base file");
  compile->add_option("--net", net_path, "Network file (extract, hopfield-to-penalty)");
  compile->add_option("--out-net", out_net, "Write the produced network here");
  compile->add_option("--out-enc", out_enc, "Write the produced encoding here");
  compile->add_option("--out-kb", out_kb, "Write the produced knowledge-base here");
  compile->add_option("--out-cert", out_cert, "Write the certificate (JSON) here");

  auto* fidelity = app.add_subcommand("fidelity", "Fidelity measures");
  fidelity->add_option("--measure", method, "fuzzy | prob | loss")->required();
  fidelity->add_option("--net", net_path, "Network file (fuzzy)");
  fidelity->add_option("--snet", snet_path, "Stochastic network file (prob)");
  fidelity->add_option("--enc", enc_path, "Encoding file");
  fidelity->add_option("--kb", kb_path, "Knowledge-base file")->required();
  fidelity->add_option("--valuations", valuations_path, "Valuation file (fuzzy)");
  fidelity->add_option("--satagg", satagg_text, "min or mean (fuzzy)");
  fidelity->add_option("--agg", agg_text, "union or intersection (fuzzy)");
  fidelity->add_option("--p", p_csv, "Atom probabilities, comma-separated (loss)");
  fidelity->add_option("--tolerance", tolerance, "Stationarity tolerance (prob)");

  auto* demo = app.add_subcommand("demo", "Run the bundled regression suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      if (*updates_opt) updates = updates_value;
      if (*tc_opt) tc_override = tc_value;
      return run_simulate(net_path, state_csv, updates, tc_override, opt);
    }
    if (diagram->parsed()) return run_diagram(net_path, out_path, opt);
    if (verify->parsed())
      return run_verify(net_path, enc_path, kb_path, agg_text, opt);
    if (tp->parsed()) return run_tp(program_path, m0_csv, max_iters);
    if (compile->parsed())
      return run_compile(method, program_path, penalty_path, net_path, out_net,
                         out_enc, out_kb, out_cert, opt);
    if (fidelity->parsed())
      return run_fidelity(method, net_path, snet_path, enc_path, kb_path,
                          valuations_path, satagg_text, agg_text, p_csv,
                          tolerance, opt);
    if (demo->parsed()) return run_demo();
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
