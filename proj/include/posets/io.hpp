#pragma once

// Text formats for posets, monomial ideals and arrangements, plus Hasse
// diagram export to Graphviz DOT and TikZ.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "posets/arrangement.hpp"
#include "posets/errors.hpp"
#include "posets/monomial.hpp"
#include "posets/poset.hpp"

namespace posets::io {

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

/// Lines with '#' comments stripped; blank lines are kept so numbering stays 1-based.
inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  for (auto& l : lines)
    if (auto hash = l.find('#'); hash != std::string::npos) l.erase(hash);
  return lines;
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_ws(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline bool is_blank(const std::string& line) { return split_ws(line).empty(); }

inline bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline Exponent parse_exponent(const std::string& s, std::size_t line, std::size_t column) {
  if (!all_digits(s)) throw ParseError("expected a nonnegative integer exponent", line, column);
  std::uint64_t value = 0;
  for (char c : s) {
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > std::numeric_limits<Exponent>::max())
      throw ParseError("exponent too large", line, column);
  }
  return static_cast<Exponent>(value);
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace detail

// --- posets -----------------------------------------------------------------

/// Reads {"elements": [...], "relations": [[a, b], ...]}.
inline Poset parse_poset(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw ParseError("poset document needs an \"elements\" array", 0, 0);
  std::vector<Label> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw ParseError("element labels must be strings", 0, 0);
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<Label, Label>> pairs;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) throw ParseError("\"relations\" must be an array", 0, 0);
    for (const auto& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
        throw ParseError("each relation must be a pair of strings", 0, 0);
      pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  }
  return Poset::from_relations(std::move(elements), pairs);
}

inline nlohmann::json poset_json(const Poset& p) {
  nlohmann::json relations = nlohmann::json::array();
  for (const auto& c : covering_relations(p)) relations.push_back({c.lower, c.upper});
  return {{"elements", p.elements()}, {"relations", relations}};
}

/// Canonical form: sorted elements and sorted covering relations.
inline std::string write_poset(const Poset& p) { return poset_json(p).dump(2) + "\n"; }

// --- monomial ideals ----------------------------------------------------------

/// One generator, as an exponent vector ("3 2 1 0") or a product ("a^3*b^2*c").
/// A line of exactly as many integers as variables is read as an exponent vector.
inline Monomial parse_monomial(const std::string& line, const std::vector<std::string>& variables,
                               std::size_t line_no = 0) {
  const auto tokens = detail::split_ws(line);
  if (tokens.empty()) throw ParseError("empty generator", line_no, 1);
  Monomial m{std::vector<Exponent>(variables.size(), 0)};

  const bool vector_form =
      tokens.size() == variables.size() &&
      std::all_of(tokens.begin(), tokens.end(), [](const auto& t) { return detail::all_digits(t.text); });
  if (vector_form) {
    for (std::size_t i = 0; i < tokens.size(); ++i)
      m.exponents[i] = detail::parse_exponent(tokens[i].text, line_no, tokens[i].column);
    return m;
  }

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  bool expect_factor = true;
  while (true) {
    skip_ws();
    if (i == line.size()) break;
    if (!expect_factor) {
      if (line[i] != '*') throw ParseError("expected '*' between factors", line_no, i + 1);
      ++i;
      expect_factor = true;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == '1' && (i + 1 == line.size() || line[i + 1] == '*' ||
                           std::isspace(static_cast<unsigned char>(line[i + 1])))) {
      ++i;  // explicit constant factor
    } else {
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
      const std::string name = line.substr(start, i - start);
      if (name.empty()) throw ParseError("expected a variable name", line_no, start + 1);
      auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end()) throw ParseError("unknown variable '" + name + "'", line_no, start + 1);
      Exponent e = 1;
      if (i < line.size() && line[i] == '^') {
        const std::size_t exp_start = ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        e = detail::parse_exponent(line.substr(exp_start, i - exp_start), line_no, exp_start + 1);
      }
      auto& slot = m.exponents[static_cast<std::size_t>(it - variables.begin())];
      if (slot > std::numeric_limits<Exponent>::max() - e)
        throw ParseError("exponent overflow", line_no, start + 1);
      slot += e;
    }
    expect_factor = false;
  }
  if (expect_factor) throw ParseError("dangling '*'", line_no, line.size() + 1);
  return m;
}

/// First non-blank line: variable names. Each further line: one generator.
inline MonomialIdeal parse_ideal(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && detail::is_blank(lines[k])) ++k;
  if (k == lines.size()) throw ParseError("missing variable line", 1, 1);
  std::vector<std::string> variables;
  for (const auto& t : detail::split_ws(lines[k])) {
    if (!detail::is_identifier(t.text))
      throw ParseError("invalid variable name '" + t.text + "'", k + 1, t.column);
    if (std::find(variables.begin(), variables.end(), t.text) != variables.end())
      throw ParseError("repeated variable '" + t.text + "'", k + 1, t.column);
    variables.push_back(t.text);
  }
  std::vector<Monomial> gens;
  for (++k; k < lines.size(); ++k) {
    if (detail::is_blank(lines[k])) continue;
    gens.push_back(parse_monomial(lines[k], variables, k + 1));
  }
  if (gens.empty()) throw ParseError("ideal has no generators", lines.size(), 1);
  return MonomialIdeal(std::move(variables), std::move(gens));
}

inline std::string write_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (std::size_t i = 0; i < ideal.variables().size(); ++i) {
    if (i) out += ' ';
    out += ideal.variables()[i];
  }
  out += '\n';
  for (const auto& g : ideal.generators()) out += ideal.to_string(g) + "\n";
  return out;
}

// --- arrangements ---------------------------------------------------------------

/// First line: ambient dimension n. Each further line: "a1 ... an c" for a·x + c = 0.
inline Arrangement parse_arrangement(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && detail::is_blank(lines[k])) ++k;
  if (k == lines.size()) throw ParseError("missing dimension line", 1, 1);
  const auto head = detail::split_ws(lines[k]);
  if (head.size() != 1 || !detail::all_digits(head[0].text) || head[0].text.size() > 6)
    throw ParseError("first line must be the ambient dimension", k + 1, head[0].column);
  const std::size_t n = std::stoul(head[0].text);
  std::vector<Hyperplane> hyperplanes;
  for (++k; k < lines.size(); ++k) {
    const auto tokens = detail::split_ws(lines[k]);
    if (tokens.empty()) continue;
    if (tokens.size() != n + 1)
      throw ParseError("expected " + std::to_string(n + 1) + " rationals, found " +
                           std::to_string(tokens.size()),
                       k + 1, tokens.front().column);
    Hyperplane h;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      Rational q;
      try {
        q = parse_rational(tokens[t].text);
      } catch (const ParseError& e) {
        throw ParseError("invalid rational '" + tokens[t].text + "'", k + 1,
                         tokens[t].column + (e.column() ? e.column() - 1 : 0));
      }
      if (t < n) h.normal.push_back(std::move(q));
      else h.constant = std::move(q);
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& q) { return q == 0; }))
      throw ParseError("hyperplane with zero normal vector", k + 1, tokens.front().column);
    hyperplanes.push_back(std::move(h));
  }
  try {
    return Arrangement(n, std::move(hyperplanes));
  } catch (const DuplicateHyperplane& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

// --- Hasse diagrams -----------------------------------------------------------------

enum class HasseFormat { dot, tikz };

/// Rows are height blocks from the bottom, each in label order.
struct RenderSpec {
  HasseFormat format = HasseFormat::dot;
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\textbackslash{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '#': out += "\\#"; break;
      case '%': out += "\\%"; break;
      case '&': out += "\\&"; break;
      case '$': out += "\\$"; break;
      case '~': out += "\\~{}"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fixed2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << (v == 0.0 ? 0.0 : v);
  return os.str();
}

}  // namespace detail

inline std::string export_hasse(const Poset& p, const RenderSpec& spec = {}) {
  const auto rows = rank_partition(p);
  const auto covers = cover_indices(p);
  std::ostringstream os;
  if (spec.format == HasseFormat::dot) {
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
      os << "  n" << i << " [label=\"" << detail::dot_escape(p.label(i)) << "\"];\n";
    for (const auto& row : rows) {
      os << "  { rank=same;";
      for (const auto& label : row) os << " n" << p.index_of(label) << ';';
      os << " }\n";
    }
    for (auto [lo, hi] : covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
  }

  constexpr double kDx = 1.5, kDy = 1.5;
  os << "\\begin{tikzpicture}[scale=1, vertices/.style={draw, fill=black, circle, inner sep=0pt}]\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double x0 = -kDx * static_cast<double>(rows[r].size() - 1) / 2.0;
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      os << "  \\node [vertices, label=right:{\\texttt{" << detail::tex_escape(rows[r][k]) << "}}] ("
         << p.index_of(rows[r][k]) << ") at (" << detail::fixed2(x0 + kDx * static_cast<double>(k))
         << "," << detail::fixed2(kDy * static_cast<double>(r)) << "){};\n";
  }
  if (!covers.empty()) {
    os << "  \\foreach \\to/\\from in {";
    for (std::size_t e = 0; e < covers.size(); ++e)
      os << (e ? ", " : "") << covers[e].first << '/' << covers[e].second;
    os << "} \\draw [-] (\\to)--(\\from);\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace posets::io
