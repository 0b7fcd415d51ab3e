#include "lrc/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lrc {

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line;
  int value_column;
};

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (lead) *lead = s.size();
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const Entry& e) {
  std::vector<std::string> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string name = trim(item);
    if (name.empty()) throw ParseError("empty coordinate name in '" + e.key + "'", e.line, e.value_column);
    out.push_back(name);
  }
  return out;
}

std::uint64_t parse_unsigned(const Entry& e, const std::string& field) {
  if (e.value.empty() || !std::all_of(e.value.begin(), e.value.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a nonnegative integer for '" + e.key + "'", e.line, e.value_column);
  try {
    return std::stoull(e.value);
  } catch (const std::out_of_range&) {
    throw ScenarioError(field, "value out of range", e.line);
  }
}

// Unknown coordinates are semantic errors; everything else the parser reports is syntax.
template <class F>
auto with_semantic_names(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind("unknown coordinate", 0) == 0) throw ScenarioError(field, what);
    throw;
  }
}

SplittingPtr build_splitting(const Chart& chart, const std::vector<Entry>& entries, const std::string& section) {
  const auto coords = chart.coordinates();
  std::vector<std::vector<Polynomial>> v(chart.p(), std::vector<Polynomial>(chart.n(), Polynomial(chart.m())));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    const std::string field = section + "." + e.key;
    const auto dot = e.key.find('.');
    if (dot == std::string::npos)
      throw ParseError("expected a key of the form <transverse>.<leaf>", e.line, 1);
    const std::string u = e.key.substr(0, dot), x = e.key.substr(dot + 1);
    const auto a = std::find(chart.transverse.begin(), chart.transverse.end(), u);
    if (a == chart.transverse.end()) throw ScenarioError(field, "unknown transverse coordinate '" + u + "'", e.line);
    const auto i = std::find(chart.leaf.begin(), chart.leaf.end(), x);
    if (i == chart.leaf.end()) throw ScenarioError(field, "unknown leaf coordinate '" + x + "'", e.line);
    const std::size_t ai = static_cast<std::size_t>(a - chart.transverse.begin());
    const std::size_t ii = static_cast<std::size_t>(i - chart.leaf.begin());
    if (!seen.insert({ai, ii}).second) throw ScenarioError(field, "duplicate entry", e.line);
    v[ai][ii] = with_semantic_names(field, [&] { return parse_expression(e.value, coords, e.line, e.value_column); });
  }
  return Splitting::make(chart, std::move(v));
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& default_name) {
  static const std::map<std::string, std::set<std::string>> known = {
      {"scenario", {"name", "seed", "cases", "max_arity"}},
      {"chart", {"leaf", "transverse"}},
      {"splitting", {}},
      {"alt_splitting", {}},
      {"omega", {"form"}},
  };
  std::map<std::string, std::vector<Entry>> sections;
  std::map<std::string, int> section_line;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    const std::string s = trim(raw, &lead);
    if (s.empty()) continue;
    const int col = static_cast<int>(lead) + 1;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("unterminated section header", line, col + static_cast<int>(s.size()));
      current = trim(s.substr(1, s.size() - 2));
      if (!known.count(current)) throw ParseError("unknown section '" + current + "'", line, col + 1);
      if (section_line.count(current)) throw ParseError("repeated section '" + current + "'", line, col + 1);
      section_line[current] = line;
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError("entry outside of any section", line, col);
    const auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected '='", line, col + static_cast<int>(s.size()));
    const std::string key = trim(raw.substr(0, eq));
    if (key.empty()) throw ParseError("missing key", line, static_cast<int>(eq) + 1);
    std::size_t vlead = 0;
    const std::string value = trim(raw.substr(eq + 1), &vlead);
    const int vcol = static_cast<int>(eq + 1 + vlead) + 1;
    const auto& allowed = known.at(current);
    if (!allowed.empty() && !allowed.count(key)) throw ParseError("unknown key '" + key + "' in [" + current + "]", line, col);
    for (const auto& prev : sections[current])
      if (prev.key == key) throw ParseError("repeated key '" + key + "'", line, col);
    sections[current].push_back({key, value, line, vcol});
  }

  Scenario sc;
  sc.name = default_name;
  auto find = [&](const std::string& sec, const std::string& key) -> const Entry* {
    auto it = sections.find(sec);
    if (it == sections.end()) return nullptr;
    for (const auto& e : it->second)
      if (e.key == key) return &e;
    return nullptr;
  };
  if (const Entry* e = find("scenario", "name")) sc.name = e->value;
  if (const Entry* e = find("scenario", "seed")) sc.seed = parse_unsigned(*e, "scenario.seed");
  if (const Entry* e = find("scenario", "cases")) {
    const auto c = parse_unsigned(*e, "scenario.cases");
    if (c == 0) throw ScenarioError("scenario.cases", "must be positive", e->line);
    sc.cases = static_cast<std::size_t>(c);
  }
  if (const Entry* e = find("scenario", "max_arity")) {
    const auto m = parse_unsigned(*e, "scenario.max_arity");
    if (m == 0 || m > 8) throw ScenarioError("scenario.max_arity", "must lie in 1..8", e->line);
    sc.max_arity = static_cast<int>(m);
  }

  if (!sections.count("chart")) throw ScenarioError("chart", "missing section");
  const Entry* leaf = find("chart", "leaf");
  const Entry* transverse = find("chart", "transverse");
  if (!leaf && !transverse) throw ScenarioError("chart", "no coordinates", section_line["chart"]);
  if (leaf && !leaf->value.empty()) sc.chart.leaf = split_names(*leaf);
  if (transverse && !transverse->value.empty()) sc.chart.transverse = split_names(*transverse);
  try {
    sc.chart.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("chart", e.what(), section_line["chart"]);
  }

  sc.splitting = build_splitting(sc.chart, sections["splitting"], "splitting");
  sections.erase("splitting");  // operator[] above may have created it
  if (sections.count("alt_splitting")) sc.alt_splitting = build_splitting(sc.chart, sections["alt_splitting"], "alt_splitting");
  if (sections.count("omega")) {
    const Entry* f = find("omega", "form");
    if (!f) throw ScenarioError("omega.form", "missing", section_line["omega"]);
    sc.omega = FormSource{f->value, f->line, f->value_column};
    // parse now so that errors surface at load time
    with_semantic_names("omega.form", [&] { return parse_form(f->value, sc.splitting, f->line, f->value_column); });
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_scenario(buf.str(), stem);
}

}  // namespace lrc
