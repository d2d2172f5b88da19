#include "planeaut/io.hpp"

#include <fstream>
#include <sstream>

#include "planeaut/errors.hpp"

namespace planeaut {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Lines with comments stripped; blank lines are kept as empty text.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    out.push_back({n, trim(raw)});
  }
  return out;
}

// "keyword <positive integer>", or nothing if the keyword does not match.
std::optional<long> header_value(const Line& line, const std::string& keyword) {
  std::istringstream in(line.text);
  std::string word;
  in >> word;
  if (word != keyword) return std::nullopt;
  long v = 0;
  std::string rest;
  if (!(in >> v) || (in >> rest)) throw ParseError("expected '" + keyword + " <integer>'", line.number);
  if (v < 1) throw ParseError(keyword + " must be positive", line.number);
  return v;
}

CycloElem scalar_at(const std::string& text, long n, int line) {
  if (text.empty()) throw ParseError("empty scalar expression", line);
  try {
    return parse_scalar(text, n);
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

std::vector<std::string> split_row(const std::string& row) {
  std::vector<std::string> out;
  if (row.find(',') != std::string::npos) {
    std::string cell;
    std::istringstream in(row);
    while (std::getline(in, cell, ',')) out.push_back(trim(cell));
  } else {
    std::istringstream in(row);
    std::string cell;
    while (in >> cell) out.push_back(cell);
  }
  return out;
}

// One matrix from consecutive non-blank lines.
ProjTransform matrix_block(const std::vector<Line>& block, long& conductor) {
  std::size_t i = 0;
  if (auto z = header_value(block[0], "zeta")) {
    conductor = *z;
    ++i;
  }
  if (conductor < 1) throw ParseError("missing 'zeta <n>' header", block[0].number);
  if (block.size() - i != 3)
    throw ParseError("a matrix needs exactly 3 rows, found " + std::to_string(block.size() - i), block[i < block.size() ? i : 0].number);
  Matrix3 m;
  for (int r = 0; r < 3; ++r, ++i) {
    auto cells = split_row(block[i].text);
    if (cells.size() != 3)
      throw ParseError("a row needs 3 entries, found " + std::to_string(cells.size()), block[i].number);
    for (int c = 0; c < 3; ++c) m(r, c) = scalar_at(cells[static_cast<std::size_t>(c)], conductor, block[i].number);
  }
  try {
    return ProjTransform(m);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), block[0].number);
  }
}

std::vector<std::vector<Line>> blocks(std::string_view text) {
  std::vector<std::vector<Line>> out;
  std::vector<Line> cur;
  for (auto& l : split_lines(text)) {
    if (l.text.empty()) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(std::move(l));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string scalar_text(const CycloElem& x, long n) { return x.embed_to(n).to_string(); }

}  // namespace

TernaryForm parse_poly(std::string_view text) {
  long n = 0;
  int degree = -1;
  std::vector<std::pair<Exponent, CycloElem>> terms;
  std::vector<int> term_lines;
  for (const auto& l : split_lines(text)) {
    if (l.text.empty()) continue;
    if (n == 0) {
      auto z = header_value(l, "zeta");
      if (!z) throw ParseError("expected 'zeta <n>' header", l.number);
      n = *z;
      continue;
    }
    if (degree < 0) {
      auto d = header_value(l, "degree");
      if (!d) throw ParseError("expected 'degree <d>' header", l.number);
      degree = static_cast<int>(*d);
      continue;
    }
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'i j k : <scalar>'", l.number);
    std::istringstream in(l.text.substr(0, colon));
    Exponent e{};
    std::string rest;
    if (!(in >> e[0] >> e[1] >> e[2]) || (in >> rest)) throw ParseError("expected three exponents before ':'", l.number);
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw ParseError("negative exponent", l.number);
    if (e[0] + e[1] + e[2] != degree)
      throw ParseError("exponents sum to " + std::to_string(e[0] + e[1] + e[2]) + ", not the degree " +
                           std::to_string(degree),
                       l.number);
    for (std::size_t t = 0; t < terms.size(); ++t)
      if (terms[t].first == e) throw ParseError("exponent repeated from line " + std::to_string(term_lines[t]), l.number);
    terms.emplace_back(e, scalar_at(trim(l.text.substr(colon + 1)), n, l.number));
    term_lines.push_back(l.number);
  }
  if (n == 0) throw ParseError("missing 'zeta <n>' header");
  if (degree < 0) throw ParseError("missing 'degree <d>' header");
  TernaryForm f(degree);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

std::string format_poly(const TernaryForm& f) {
  const long n = f.conductor();
  std::ostringstream out;
  out << "zeta " << n << "\n" << "degree " << f.degree() << "\n";
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    out << it->first[0] << " " << it->first[1] << " " << it->first[2] << " : " << scalar_text(it->second, n) << "\n";
  return out.str();
}

ProjTransform parse_matrix(std::string_view text) {
  auto gens = parse_generators(text);
  if (gens.size() != 1) throw ParseError("expected exactly one matrix, found " + std::to_string(gens.size()));
  return gens.front();
}

std::vector<ProjTransform> parse_generators(std::string_view text) {
  std::vector<ProjTransform> out;
  long conductor = 0;
  for (const auto& b : blocks(text)) out.push_back(matrix_block(b, conductor));
  return out;
}

std::string format_matrix(const ProjTransform& m) {
  const long n = m.conductor();
  std::ostringstream out;
  out << "zeta " << n << "\n";
  for (int i = 0; i < 3; ++i)
    out << scalar_text(m(i, 0), n) << ", " << scalar_text(m(i, 1), n) << ", " << scalar_text(m(i, 2), n) << "\n";
  return out.str();
}

std::string format_generators(const std::vector<ProjTransform>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "\n" : "") + format_matrix(gens[i]);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TernaryForm read_poly_file(const std::string& path) { return parse_poly(read_text_file(path)); }

std::vector<ProjTransform> read_generators_file(const std::string& path) {
  return parse_generators(read_text_file(path));
}

nlohmann::json to_json(const TernaryForm& f) {
  const long n = f.conductor();
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"exponent", it->first}, {"coefficient", scalar_text(it->second, n)}});
  return {{"zeta", n}, {"degree", f.degree()}, {"terms", terms}};
}

TernaryForm form_from_json(const nlohmann::json& j) {
  const long n = j.at("zeta").get<long>();
  TernaryForm f(j.at("degree").get<int>());
  for (const auto& t : j.at("terms"))
    f.add_term(t.at("exponent").get<Exponent>(), parse_scalar(t.at("coefficient").get<std::string>(), n));
  return f;
}

nlohmann::json to_json(const ProjTransform& m) {
  const long n = m.conductor();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back({scalar_text(m(i, 0), n), scalar_text(m(i, 1), n), scalar_text(m(i, 2), n)});
  return {{"zeta", n}, {"rows", rows}};
}

ProjTransform transform_from_json(const nlohmann::json& j) {
  const long n = j.at("zeta").get<long>();
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m(i, k) = parse_scalar(j.at("rows").at(i).at(k).get<std::string>(), n);
  return ProjTransform(m);
}

void to_json(nlohmann::json& j, const BoundAudit& b) {
  j = {{"case", b.case_label}, {"degree", b.degree}, {"bound", b.bound}, {"order", b.order}, {"passed", b.passed}};
}

void from_json(const nlohmann::json& j, BoundAudit& b) {
  b.case_label = j.at("case").get<std::string>();
  b.degree = j.at("degree").get<long>();
  b.bound = j.at("bound").get<long>();
  b.order = j.at("order").get<long>();
  b.passed = j.at("passed").get<bool>();
}

void to_json(nlohmann::json& j, const ClassificationReport& r) {
  j = {{"order", r.order},   {"degree", r.degree},       {"cases", r.cases},
       {"primary", r.primary}, {"witnesses", r.witnesses}, {"bounds", r.bounds},
       {"flags", r.flags},   {"consistent", r.consistent}};
}

void from_json(const nlohmann::json& j, ClassificationReport& r) {
  r.order = j.at("order").get<long>();
  r.degree = j.at("degree").get<long>();
  r.cases = j.at("cases").get<std::vector<std::string>>();
  r.primary = j.at("primary").get<std::string>();
  r.witnesses = j.at("witnesses").get<std::map<std::string, std::string>>();
  r.bounds = j.at("bounds").get<std::vector<BoundAudit>>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  r.consistent = j.at("consistent").get<bool>();
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  std::vector<std::string> ratios;
  for (const auto& q : r.allowed_ratios) ratios.push_back(q.get_str());
  j = {{"bound", r.name}, {"inputs", inputs}, {"value", r.value.get_str()}};
  if (!ratios.empty()) j["allowed_ratios"] = ratios;
}

void from_json(const nlohmann::json& j, BoundReport& r) {
  r.name = j.at("bound").get<std::string>();
  r.inputs.clear();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  r.value = Rational(j.at("value").get<std::string>());
  r.value.canonicalize();
  r.allowed_ratios.clear();
  if (j.contains("allowed_ratios"))
    for (const auto& s : j.at("allowed_ratios")) {
      Rational q(s.get<std::string>());
      q.canonicalize();
      r.allowed_ratios.push_back(q);
    }
}

void to_json(nlohmann::json& j, const AuditEntry& e) {
  j = {{"family", e.family},     {"parameter", e.parameter},
       {"degree", e.degree},     {"closure_order", e.closure_order},
       {"recorded_order", e.recorded_order}, {"threshold", e.threshold},
       {"exceeds", e.exceeds},   {"passed", e.passed},
       {"note", e.note}};
}

void from_json(const nlohmann::json& j, AuditEntry& e) {
  e.family = j.at("family").get<std::string>();
  e.parameter = j.at("parameter").get<std::string>();
  e.degree = j.at("degree").get<long>();
  e.closure_order = j.at("closure_order").get<long>();
  e.recorded_order = j.at("recorded_order").get<long>();
  e.threshold = j.at("threshold").get<long>();
  e.exceeds = j.at("exceeds").get<bool>();
  e.passed = j.at("passed").get<bool>();
  e.note = j.at("note").get<std::string>();
}

void to_json(nlohmann::json& j, const AuditReport& r) {
  j = {{"audit", r.name},         {"degree", r.degree},       {"threshold", r.threshold},
       {"entries", r.entries},    {"failures", r.failures},   {"notes", r.notes},
       {"passed", r.passed()}};
}

void from_json(const nlohmann::json& j, AuditReport& r) {
  r.name = j.at("audit").get<std::string>();
  r.degree = j.at("degree").get<long>();
  r.threshold = j.at("threshold").get<long>();
  r.entries = j.at("entries").get<std::vector<AuditEntry>>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
}

std::string format_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "order: " << r.order << "\ndegree: " << r.degree << "\nprimary case: " << r.primary << "\ncases:";
  for (const auto& c : r.cases) out << " " << c;
  out << "\n";
  for (const auto& [k, v] : r.witnesses) out << "  " << k << ": " << v << "\n";
  for (const auto& b : r.bounds)
    out << "bound " << b.case_label << ": |G| = " << b.order << " <= " << b.bound << (b.passed ? " ok" : " FAILED")
        << "\n";
  for (const auto& f : r.flags) out << "check " << f << "\n";
  out << "consistent: " << (r.consistent ? "yes" : "no") << "\n";
  return out.str();
}

std::string format_text(const BoundReport& r) {
  std::ostringstream out;
  out << r.name << "(";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) out << (i ? ", " : "") << r.inputs[i].first << "=" << r.inputs[i].second;
  out << ") = " << r.value.get_str() << "\n";
  if (!r.allowed_ratios.empty()) {
    out << "admissible |G|/(g-1):";
    for (std::size_t i = 0; i + 1 < r.allowed_ratios.size(); ++i) out << " " << r.allowed_ratios[i].get_str();
    out << " or at most " << r.allowed_ratios.back().get_str() << "\n";
  }
  return out.str();
}

std::string format_text(const AuditReport& r) {
  std::ostringstream out;
  out << r.name << " audit, d = " << r.degree << ", threshold " << r.threshold << "\n";
  for (const auto& e : r.entries) {
    out << "  " << e.family;
    if (!e.parameter.empty()) out << " (lambda = " << e.parameter << ")";
    out << ": order " << e.recorded_order;
    if (e.closure_order) out << ", closure " << e.closure_order;
    out << (e.exceeds ? ", exceeds" : "") << (e.passed ? "" : ", FAILED");
    if (!e.note.empty()) out << " [" << e.note << "]";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& f : r.failures) out << "failure: " << f << "\n";
  out << (r.passed() ? "passed" : "FAILED") << "\n";
  return out.str();
}

}  // namespace planeaut
