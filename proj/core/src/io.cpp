#include "semenc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace semenc::io {

using logic::Formula;
using nlohmann::json;

namespace {

// --- formula tokenizer / recursive descent -----------------------------------

struct Token {
  enum class Kind {
    Atom, Not, And, Or, Implies, Iff, LParen, RParen, True, False, End
  };
  Kind kind;
  std::string text;
  std::size_t col;
};

class FormulaLexer {
 public:
  FormulaLexer(const std::string& text, std::size_t line)
      : text_(text), line_(line) {}

  Token next() {
    skip_ws();
    std::size_t col = pos_ + 1;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", col};
    char c = text_[pos_];
    if (c == '(') { ++pos_; return {Token::Kind::LParen, "(", col}; }
    if (c == ')') { ++pos_; return {Token::Kind::RParen, ")", col}; }
    if (c == '~' || c == '!') { ++pos_; return {Token::Kind::Not, "~", col}; }
    if (c == '&') { ++pos_; return {Token::Kind::And, "&", col}; }
    if (c == '|') { ++pos_; return {Token::Kind::Or, "|", col}; }
    if (text_.compare(pos_, 3, "<->") == 0) {
      pos_ += 3;
      return {Token::Kind::Iff, "<->", col};
    }
    if (text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return {Token::Kind::Implies, "->", col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = read_atom();
      if (name == "true") return {Token::Kind::True, name, col};
      if (name == "false") return {Token::Kind::False, name, col};
      return {Token::Kind::Atom, name, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "' in formula",
                     line_, col);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  // ident, optionally with a ground argument tuple: r1(a,b)
  std::string read_atom() {
    std::size_t start = pos_;
    auto ident_char = [&](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') {
        char c = text_[pos_];
        if (!ident_char(c) && c != ',' && c != ' ')
          throw ParseError("bad character in atom arguments", line_, pos_ + 1);
        ++pos_;
      }
      if (pos_ >= text_.size())
        throw ParseError("unterminated atom argument list", line_, start + 1);
      ++pos_;  // ')'
    }
    std::string name = text_.substr(start, pos_ - start);
    std::string cleaned;
    for (char c : name)
      if (c != ' ') cleaned += c;
    return cleaned;
  }

  const std::string& text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

class FormulaParser {
 public:
  FormulaParser(const std::string& text, std::size_t line)
      : lexer_(text, line), line_(line) {
    advance();
  }

  Formula parse() {
    Formula f = parse_iff();
    if (cur_.kind != Token::Kind::End)
      throw ParseError("unexpected token '" + cur_.text + "' after formula",
                       line_, cur_.col);
    return f;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (cur_.kind == Token::Kind::Iff) {
      advance();
      f = Formula::iff(f, parse_implies());
    }
    return f;
  }
  Formula parse_implies() {
    Formula f = parse_or();
    if (cur_.kind == Token::Kind::Implies) {
      advance();
      return Formula::implies(f, parse_implies());  // right associative
    }
    return f;
  }
  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.kind == Token::Kind::Or) {
      advance();
      f = f || parse_and();
    }
    return f;
  }
  Formula parse_and() {
    Formula f = parse_unary();
    while (cur_.kind == Token::Kind::And) {
      advance();
      f = f && parse_unary();
    }
    return f;
  }
  Formula parse_unary() {
    if (cur_.kind == Token::Kind::Not) {
      advance();
      return !parse_unary();
    }
    return parse_primary();
  }
  Formula parse_primary() {
    switch (cur_.kind) {
      case Token::Kind::LParen: {
        advance();
        Formula f = parse_iff();
        if (cur_.kind != Token::Kind::RParen)
          throw ParseError("expected ')'", line_, cur_.col);
        advance();
        return f;
      }
      case Token::Kind::True: advance(); return Formula::constant(true);
      case Token::Kind::False: advance(); return Formula::constant(false);
      case Token::Kind::Atom: {
        Formula f = Formula::atom(cur_.text);
        advance();
        return f;
      }
      default:
        throw ParseError("expected a formula, found '" + cur_.text + "'", line_,
                         cur_.col);
    }
  }

  FormulaLexer lexer_;
  std::size_t line_;
  Token cur_;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

// pred(a,B,c) -> FoAtom with uppercase-initial arguments as variables.
logic::FoAtom parse_clause_atom(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty atom in clause", line);
  std::size_t open = t.find('(');
  logic::FoAtom atom;
  if (open == std::string::npos) {
    atom.predicate = t;
    return atom;
  }
  if (t.back() != ')')
    throw ParseError("unterminated argument list in clause atom", line);
  atom.predicate = trim(t.substr(0, open));
  std::string args = t.substr(open + 1, t.size() - open - 2);
  std::string cur;
  auto flush = [&]() {
    std::string a = trim(cur);
    if (a.empty()) throw ParseError("empty argument in clause atom", line);
    bool variable = std::isupper(static_cast<unsigned char>(a[0])) != 0;
    atom.args.push_back({a, variable});
    cur.clear();
  };
  for (char c : args) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return atom;
}

logic::FoClause parse_clause(const std::string& line_text, std::size_t line) {
  std::string body_text;
  std::string head_text = line_text;
  std::size_t arrow = line_text.find("<-");
  if (arrow != std::string::npos) {
    head_text = line_text.substr(0, arrow);
    body_text = trim(line_text.substr(arrow + 2));
  }
  logic::FoClause clause;
  clause.head = parse_clause_atom(head_text, line);
  if (!body_text.empty()) {
    std::string cur;
    auto flush = [&]() {
      std::string lit = trim(cur);
      if (lit.empty()) throw ParseError("empty body literal", line);
      bool neg = lit[0] == '~';
      if (neg) lit = trim(lit.substr(1));
      clause.body.push_back({parse_clause_atom(lit, line), neg});
      cur.clear();
    };
    for (char c : body_text) {
      if (c == '&')
        flush();
      else
        cur += c;
    }
    flush();
  }
  return clause;
}

double parse_confidence(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  if (t == "inf" || t == "infinity") return logic::kInfinity;
  try {
    std::size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad confidence value '" + t + "'", line);
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  return FormulaParser(text, 0).parse();
}

KnowledgeBaseFile parse_kb(const std::string& text) {
  KnowledgeBaseFile kb;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.rfind("atoms:", 0) == 0) {
      for (auto& a : split_ws(line.substr(6))) kb.declared_atoms.push_back(a);
      continue;
    }
    if (line.rfind("constants:", 0) == 0) {
      for (auto& c : split_ws(line.substr(10))) kb.constants.push_back(c);
      continue;
    }
    if (line.back() == '.') {
      kb.program.clauses.push_back(
          parse_clause(trim(line.substr(0, line.size() - 1)), line_no));
      continue;
    }
    if (line.front() == '[') {
      std::size_t close = line.find(']');
      std::size_t colon = line.find(':', close == std::string::npos ? 0 : close);
      if (close == std::string::npos || colon == std::string::npos)
        throw ParseError("bad interval label; expected [a,b] : formula", line_no);
      std::string interval = line.substr(1, close - 1);
      std::size_t comma = interval.find(',');
      if (comma == std::string::npos)
        throw ParseError("bad interval label; expected [a,b] : formula", line_no);
      fuzzy::FuzzySentence s;
      s.lo = parse_confidence(interval.substr(0, comma), line_no);
      s.hi = parse_confidence(interval.substr(comma + 1), line_no);
      s.body = FormulaParser(line.substr(colon + 1), line_no).parse();
      kb.fuzzy_kb.sentences.push_back(std::move(s));
      continue;
    }
    // `c : formula` if the prefix before ':' is a number or inf.
    std::size_t colon = line.find(':');
    if (colon != std::string::npos) {
      logic::PenaltySentence s;
      s.confidence = parse_confidence(line.substr(0, colon), line_no);
      s.body = FormulaParser(line.substr(colon + 1), line_no).parse();
      kb.penalty.sentences.push_back(std::move(s));
      continue;
    }
    kb.formulas.push_back(FormulaParser(line, line_no).parse());
  }
  kb.penalty.validate();
  kb.fuzzy_kb.validate();
  return kb;
}

logic::LogicProgram KnowledgeBaseFile::ground_program() const {
  return logic::ground(program, constants);
}

logic::UniversePtr KnowledgeBaseFile::formula_universe() const {
  std::set<std::string> names(declared_atoms.begin(), declared_atoms.end());
  for (const auto& f : formulas) f.collect_atoms(names);
  return logic::make_universe({names.begin(), names.end()});
}

KnowledgeBaseFile load_kb(const std::string& path) {
  return parse_kb(read_file(path));
}

std::string to_text(const logic::PenaltyKB& kb) {
  std::string out = "# knowledge-base v1\n";
  for (const auto& s : kb.sentences) {
    out += std::isinf(s.confidence) ? "inf" : format_real(s.confidence);
    out += " : " + s.body.to_string() + "\n";
  }
  return out;
}

std::string to_text(const logic::LogicProgram& p) {
  return "# knowledge-base v1\n" + p.to_string();
}

std::vector<fuzzy::FuzzyValuation> parse_valuations(const std::string& text) {
  std::vector<fuzzy::FuzzyValuation> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    fuzzy::FuzzyValuation v;
    for (const auto& pair : split_ws(line)) {
      std::size_t eq = pair.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected atom=value", line_no);
      v[pair.substr(0, eq)] = parse_confidence(pair.substr(eq + 1), line_no);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<fuzzy::FuzzyValuation> load_valuations(const std::string& path) {
  return parse_valuations(read_file(path));
}

// --- JSON formats -------------------------------------------------------------

namespace {

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON in " + what);
  return j;
}

void require_format(const json& j, const std::string& format) {
  if (!j.is_object() || j.value("format", "") != format)
    throw ParseError("expected a document with format \"" + format + "\"");
  if (j.value("version", 0) != 1)
    throw ParseError("unsupported version in " + format + " document");
}

net::TransferFn transfer_from_json(const json& j) {
  if (j.is_string()) {
    std::string kind = j.get<std::string>();
    if (kind == "heaviside") return net::TransferFn::heaviside();
    if (kind == "identity") return net::TransferFn::identity();
    if (kind == "sign") return net::TransferFn::sign();
    throw ParseError("unknown transfer function \"" + kind + "\"");
  }
  if (j.is_object() && j.contains("lookup")) {
    std::vector<std::pair<double, double>> table;
    for (const auto& row : j.at("lookup"))
      table.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
    return net::TransferFn::lookup(std::move(table));
  }
  throw ParseError("bad transfer function specification");
}

json transfer_to_json(const net::TransferFn& fn) {
  switch (fn.kind()) {
    case net::TransferFn::Kind::Heaviside: return "heaviside";
    case net::TransferFn::Kind::Identity: return "identity";
    case net::TransferFn::Kind::Sign: return "sign";
    case net::TransferFn::Kind::Lookup: {
      json rows = json::array();
      for (const auto& [in, out] : fn.table()) rows.push_back({in, out});
      return json{{"lookup", rows}};
    }
  }
  throw Error("unreachable transfer kind");
}

encoding::TruthMap truth_map_from_json(const json& j) {
  encoding::TruthMap g;
  for (const auto& row : j)
    g.rows.push_back({row.at("value").get<double>(), row.at("truth").get<bool>()});
  return g;
}

json truth_map_to_json(const encoding::TruthMap& g) {
  json out = json::array();
  for (const auto& [value, truth] : g.rows)
    out.push_back({{"value", value}, {"truth", truth}});
  return out;
}

}  // namespace

net::CandidateNetwork parse_network(const std::string& json_text) {
  json j = parse_json(json_text, "network");
  require_format(j, "semenc-net");
  net::CandidateNetwork::Builder b;
  std::vector<std::string> names;
  for (const auto& nj : j.at("neurons")) {
    net::NeuronSpec spec;
    spec.name = nj.at("name").get<std::string>();
    names.push_back(spec.name);
    spec.transfer = transfer_from_json(nj.value("transfer", json("heaviside")));
    spec.bias = nj.value("bias", 0.0);
    spec.domain.clear();
    if (nj.contains("domain"))
      for (const auto& v : nj.at("domain")) spec.domain.push_back(v.get<double>());
    else
      spec.domain = {0.0, 1.0};
    spec.visible = nj.value("visible", true);
    b.add_neuron(std::move(spec));
  }
  if (j.contains("weights"))
    for (const auto& wj : j.at("weights"))
      b.weight(wj.at("from").get<std::string>(), wj.at("to").get<std::string>(),
               wj.at("weight").get<double>());
  b.t_c(j.value("t_c", 1));
  if (j.contains("update")) {
    const auto& uj = j.at("update");
    std::string mode = uj.value("mode", "synchronous");
    if (mode == "synchronous") {
      b.update_mode(net::UpdateMode::synchronous());
    } else if (mode == "asynchronous-sweep") {
      std::vector<std::size_t> order;
      if (uj.contains("order")) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
        for (const auto& name : uj.at("order")) {
          auto it = index.find(name.get<std::string>());
          if (it == index.end())
            throw ParseError("unknown neuron in update order: " +
                             name.get<std::string>());
          order.push_back(it->second);
        }
      }
      b.update_mode(net::UpdateMode::async_sweep(std::move(order)));
    } else if (mode == "asynchronous-random") {
      b.update_mode(net::UpdateMode::async_random(uj.value("seed", 0)));
    } else {
      throw ParseError("unknown update mode \"" + mode + "\"");
    }
  }
  return b.build();
}

net::CandidateNetwork load_network(const std::string& path) {
  return parse_network(read_file(path));
}

std::string to_json(const net::CandidateNetwork& net) {
  json j;
  j["format"] = "semenc-net";
  j["version"] = 1;
  j["t_c"] = net.t_c();
  json update;
  switch (net.update_mode().kind) {
    case net::UpdateMode::Kind::Synchronous:
      update["mode"] = "synchronous";
      break;
    case net::UpdateMode::Kind::AsyncSweep: {
      update["mode"] = "asynchronous-sweep";
      json order = json::array();
      for (std::size_t i : net.sweep_order()) order.push_back(net.name(i));
      update["order"] = order;
      break;
    }
    case net::UpdateMode::Kind::AsyncRandom:
      update["mode"] = "asynchronous-random";
      update["seed"] = net.update_mode().seed;
      break;
  }
  j["update"] = update;
  json neurons = json::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto& spec = net.neuron(i);
    json nj;
    nj["name"] = spec.name;
    nj["transfer"] = transfer_to_json(spec.transfer);
    nj["bias"] = spec.bias;
    nj["domain"] = spec.domain;
    nj["visible"] = spec.visible;
    neurons.push_back(nj);
  }
  j["neurons"] = neurons;
  json weights = json::array();
  for (std::size_t from = 0; from < net.size(); ++from)
    for (std::size_t to = 0; to < net.size(); ++to)
      if (net.weight(from, to) != 0.0)
        weights.push_back({{"from", net.name(from)},
                           {"to", net.name(to)},
                           {"weight", net.weight(from, to)}});
  j["weights"] = weights;
  return j.dump(2) + "\n";
}

encoding::Encoding parse_encoding(const std::string& json_text) {
  json j = parse_json(json_text, "encoding");
  require_format(j, "semenc-enc");
  std::vector<std::string> atoms;
  for (const auto& a : j.at("universe")) atoms.push_back(a.get<std::string>());
  auto universe = logic::make_universe(atoms);
  std::string type = j.at("type").get<std::string>();
  if (type == "nat") {
    encoding::EncodingNat enc;
    enc.universe = universe;
    for (const auto& [atom, neuron] : j.at("atoms").items())
      enc.atom_neuron.push_back({atom, neuron.get<std::string>()});
    if (j.contains("g")) enc.g = truth_map_from_json(j.at("g"));
    return enc;
  }
  if (type == "dat") {
    encoding::EncodingDat enc;
    enc.universe = universe;
    for (const auto& s : j.at("selectors"))
      enc.selector_neurons.push_back(s.get<std::string>());
    for (const auto& fj : j.at("families")) {
      encoding::EncodingDat::Triple triple;
      for (const auto& rj : fj.at("rows")) {
        encoding::EncodingDat::Row row;
        row.atom = rj.at("atom").get<std::string>();
        for (const auto& s : rj.at("selectors"))
          row.selectors.push_back(s.get<std::string>());
        for (const auto& v : rj.at("values"))
          row.selector_values.push_back(v.get<double>());
        row.value_neuron = rj.at("value_neuron").get<std::string>();
        triple.rows.push_back(std::move(row));
      }
      enc.triples.push_back(std::move(triple));
    }
    if (j.contains("g")) enc.g = truth_map_from_json(j.at("g"));
    return enc;
  }
  if (type == "table") {
    encoding::EncodingTable enc;
    enc.universe = universe;
    for (const auto& ej : j.at("entries")) {
      net::NetState pattern;
      for (const auto& v : ej.at("visible")) pattern.push_back(v.get<double>());
      logic::ModelSet models(universe);
      for (const auto& cj : ej.at("cubes")) {
        logic::Cube cube;
        for (const auto& [atom, truth] : cj.items())
          cube.assign(universe->index_of(atom), truth.get<bool>());
        models.add(cube);
      }
      enc.entries.push_back({std::move(pattern), std::move(models)});
    }
    return enc;
  }
  throw ParseError("unknown encoding type \"" + type + "\"");
}

encoding::Encoding load_encoding(const std::string& path) {
  return parse_encoding(read_file(path));
}

std::string to_json(const encoding::Encoding& enc) {
  json j;
  j["format"] = "semenc-enc";
  j["version"] = 1;
  j["universe"] = encoding::universe_of(enc)->names();
  if (const auto* nat = std::get_if<encoding::EncodingNat>(&enc)) {
    j["type"] = "nat";
    json atoms = json::object();
    for (const auto& [atom, neuron] : nat->atom_neuron) atoms[atom] = neuron;
    j["atoms"] = atoms;
    j["g"] = truth_map_to_json(nat->g);
  } else if (const auto* dat = std::get_if<encoding::EncodingDat>(&enc)) {
    j["type"] = "dat";
    j["selectors"] = dat->selector_neurons;
    json families = json::array();
    for (const auto& triple : dat->triples) {
      json rows = json::array();
      for (const auto& row : triple.rows)
        rows.push_back({{"atom", row.atom},
                        {"selectors", row.selectors},
                        {"values", row.selector_values},
                        {"value_neuron", row.value_neuron}});
      families.push_back({{"rows", rows}});
    }
    j["families"] = families;
    j["g"] = truth_map_to_json(dat->g);
  } else {
    const auto& table = std::get<encoding::EncodingTable>(enc);
    j["type"] = "table";
    json entries = json::array();
    for (const auto& [pattern, models] : table.entries) {
      json cubes = json::array();
      for (const auto& cube : models.cubes()) {
        json cj = json::object();
        for (std::size_t a = 0; a < table.universe->size(); ++a)
          if (cube.constrains(a)) cj[table.universe->name(a)] = *cube.value(a);
        cubes.push_back(cj);
      }
      entries.push_back({{"visible", pattern}, {"cubes", cubes}});
    }
    j["entries"] = entries;
  }
  return j.dump(2) + "\n";
}

stochastic::StochasticNetwork parse_snet(const std::string& json_text) {
  json j = parse_json(json_text, "stochastic network");
  require_format(j, "semenc-snet");
  std::string type = j.at("type").get<std::string>();
  if (type == "layered") {
    stochastic::LayeredStochasticNet snet;
    const auto& ij = j.at("inputs");
    for (const auto& name : ij.at("names"))
      snet.input_names.push_back(name.get<std::string>());
    for (const auto& dj : ij.at("distribution")) {
      net::NetState state;
      for (const auto& v : dj.at("state")) state.push_back(v.get<double>());
      snet.input_dist.push_back({std::move(state), dj.at("p").get<double>()});
    }
    for (const auto& uj : j.at("units")) {
      stochastic::LayeredStochasticNet::Unit unit;
      unit.name = uj.at("name").get<std::string>();
      for (const auto& tj : uj.at("table")) {
        net::NetState input;
        for (const auto& v : tj.at("input")) input.push_back(v.get<double>());
        unit.table.push_back({std::move(input), tj.at("p").get<double>()});
      }
      snet.units.push_back(std::move(unit));
    }
    snet.validate();
    return snet;
  }
  if (type == "chain") {
    stochastic::MarkovChain chain;
    for (const auto& n : j.at("neurons"))
      chain.neuron_names.push_back(n.get<std::string>());
    for (const auto& n : j.at("visible"))
      chain.visible_names.push_back(n.get<std::string>());
    for (const auto& sj : j.at("states")) {
      net::NetState s;
      for (const auto& v : sj) s.push_back(v.get<double>());
      chain.states.push_back(std::move(s));
    }
    for (const auto& rj : j.at("matrix")) {
      std::vector<double> row;
      for (const auto& v : rj) row.push_back(v.get<double>());
      chain.rows.push_back(std::move(row));
    }
    if (j.contains("initial"))
      for (const auto& v : j.at("initial")) chain.initial.push_back(v.get<double>());
    chain.validate();
    return chain;
  }
  throw ParseError("unknown stochastic network type \"" + type + "\"");
}

stochastic::StochasticNetwork load_snet(const std::string& path) {
  return parse_snet(read_file(path));
}

std::string to_json(const stochastic::StochasticNetwork& snet) {
  json j;
  j["format"] = "semenc-snet";
  j["version"] = 1;
  if (const auto* layered = std::get_if<stochastic::LayeredStochasticNet>(&snet)) {
    j["type"] = "layered";
    json inputs;
    inputs["names"] = layered->input_names;
    json dist = json::array();
    for (const auto& [state, p] : layered->input_dist)
      dist.push_back({{"state", state}, {"p", p}});
    inputs["distribution"] = dist;
    j["inputs"] = inputs;
    json units = json::array();
    for (const auto& unit : layered->units) {
      json table = json::array();
      for (const auto& [input, p] : unit.table)
        table.push_back({{"input", input}, {"p", p}});
      units.push_back({{"name", unit.name}, {"table", table}});
    }
    j["units"] = units;
  } else {
    const auto& chain = std::get<stochastic::MarkovChain>(snet);
    j["type"] = "chain";
    j["neurons"] = chain.neuron_names;
    j["visible"] = chain.visible_names;
    j["states"] = chain.states;
    j["matrix"] = chain.rows;
    if (!chain.initial.empty()) j["initial"] = chain.initial;
  }
  return j.dump(2) + "\n";
}

std::string to_json(const translate::Certificate& cert) {
  json j;
  j["pass"] = cert.pass;
  json checks = json::array();
  for (const auto& c : cert.checks) {
    std::string status = c.status == translate::Certificate::Check::Status::Passed
                             ? "passed"
                             : c.status == translate::Certificate::Check::Status::Failed
                                   ? "failed"
                                   : "skipped";
    checks.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace semenc::io
