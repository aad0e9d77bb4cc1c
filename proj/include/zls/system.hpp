#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zls/matrix.hpp"

namespace zls {

/// One homogeneous equation: sum of coef * variable = 0.
/// Terms are keyed by variable index, sorted, with nonzero coefficients only.
struct Equation {
  std::vector<std::pair<std::size_t, Int>> terms;
  bool operator==(const Equation&) const = default;
};

/// A finite system of homogeneous integer-linear equations over an ordered
/// set of named variables. Declared-but-unused variables are retained.
/// Duplicate equations are retained as well (multiset semantics), so
/// subsystem cardinalities count equations, not distinct constraints.
struct System {
  std::vector<std::string> variables;
  std::vector<Equation> equations;
  std::string name;  // display label only; not part of equality

  bool operator==(const System& o) const {
    return variables == o.variables && equations == o.equations;
  }
};

enum class WitnessKind { nontrivial, weak };

inline const char* to_string(WitnessKind k) {
  return k == WitnessKind::nontrivial ? "nontrivial" : "weak";
}

/// An integer assignment to every variable of a system. For kind nontrivial
/// all values are nonzero; for kind weak the assignment is not identically
/// zero unless the system has no equations (where any assignment counts).
struct Witness {
  WitnessKind kind = WitnessKind::nontrivial;
  std::vector<std::pair<std::string, Int>> assignment;  // in variable order

  const Int* value_of(std::string_view var) const {
    for (const auto& [name, value] : assignment)
      if (name == var) return &value;
    return nullptr;
  }
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Shared line scanner for the .zls and .zpres term syntax.
struct LineScanner {
  std::string_view line;
  std::size_t line_no;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }
  bool eol() {
    skip_ws();
    return pos == line.size();
  }
  char peek() const { return pos < line.size() ? line[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(line_no, pos + 1, msg);
  }

  std::string ident() {
    skip_ws();
    if (pos == line.size() || !ident_start(line[pos]))
      fail("expected a variable name");
    std::size_t start = pos;
    while (pos < line.size() && ident_char(line[pos])) ++pos;
    return std::string(line.substr(start, pos - start));
  }

  Int digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return Int(std::string(line.substr(start, pos - start)));
  }

  // term (('+' | '-') term)*, where term = [coefficient '*'] identifier
  std::vector<std::pair<std::string, Int>> term_list() {
    std::vector<std::pair<std::string, Int>> out;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos;
    }
    while (true) {
      skip_ws();
      Int coef = 1;
      if (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
        coef = digits();
        skip_ws();
        if (peek() != '*') fail("expected '*' between coefficient and variable");
        ++pos;
      }
      std::string name = ident();
      out.emplace_back(std::move(name), sign * coef);
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos;
        continue;
      }
      break;
    }
    return out;
  }
};

// Merge raw (name, coef) terms over a variable index map; returns nothing if
// every coefficient cancels (the 0 = 0 equation).
inline std::optional<Equation> normalize_terms(
    const std::vector<std::pair<std::size_t, Int>>& raw) {
  std::map<std::size_t, Int> acc;
  for (const auto& [idx, coef] : raw) acc[idx] += coef;
  Equation eq;
  for (auto& [idx, coef] : acc)
    if (coef != 0) eq.terms.emplace_back(idx, std::move(coef));
  if (eq.terms.empty()) return std::nullopt;
  return eq;
}

}  // namespace detail

/// Parse the .zls text format: one equation per line, '#' comments, an
/// optional leading "vars:" header fixing the variable order. Equations are
/// normalized (terms merged, zero coefficients removed); 0 = 0 equations are
/// dropped with a warning. A nonzero right-hand side is rejected.
inline System parse_system(std::string_view text,
                           std::vector<std::string>* warnings = nullptr) {
  System sys;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    sys.variables.push_back(name);
    index.emplace(name, sys.variables.size() - 1);
    return sys.variables.size() - 1;
  };

  bool saw_content = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    detail::LineScanner sc{line, line_no};
    if (sc.eol()) continue;

    if (line.substr(sc.pos, 5) == "vars:") {
      if (saw_content)
        sc.fail("'vars:' header must precede all equations");
      saw_content = true;
      sc.pos += 5;
      while (!sc.eol()) {
        std::string name = sc.ident();
        if (index.count(name))
          sc.fail("duplicate variable '" + name + "' in vars header");
        intern(name);
      }
      continue;
    }
    saw_content = true;

    auto raw = sc.term_list();
    sc.skip_ws();
    if (sc.peek() != '=') sc.fail("expected '=' after the left-hand side");
    ++sc.pos;
    sc.skip_ws();
    std::size_t rhs_col = sc.pos + 1;
    int rhs_sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
      rhs_sign = sc.peek() == '-' ? -1 : 1;
      ++sc.pos;
    }
    Int rhs = rhs_sign * sc.digits();
    if (!sc.eol()) sc.fail("trailing characters after the right-hand side");
    if (rhs != 0)
      throw parse_error(line_no, rhs_col,
                        "nonhomogeneous equation: right-hand side must be 0");

    std::vector<std::pair<std::size_t, Int>> indexed;
    indexed.reserve(raw.size());
    for (auto& [name, coef] : raw) indexed.emplace_back(intern(name), coef);
    if (auto eq = detail::normalize_terms(indexed)) {
      sys.equations.push_back(std::move(*eq));
    } else if (warnings) {
      warnings->push_back("line " + std::to_string(line_no) +
                          ": equation reduces to 0 = 0; dropped");
    }
  }
  return sys;
}

/// Canonical serialization; parse_system(serialize_system(s)) == s for any
/// normalized system.
inline std::string serialize_system(const System& sys) {
  std::string out;
  if (!sys.variables.empty()) {
    out += "vars:";
    for (const auto& v : sys.variables) {
      out += ' ';
      out += v;
    }
    out += '\n';
  }
  for (const Equation& eq : sys.equations) {
    for (std::size_t k = 0; k < eq.terms.size(); ++k) {
      const auto& [idx, coef] = eq.terms[k];
      Int mag = abs_int(coef);
      if (k == 0) {
        if (coef < 0) out += '-';
      } else {
        out += coef < 0 ? " - " : " + ";
      }
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += sys.variables[idx];
    }
    out += " = 0\n";
  }
  return out;
}

/// Coefficient matrix: one row per equation, one column per variable in
/// declared order. Returned together with that variable order.
inline std::pair<IntMatrix, std::vector<std::string>> coefficient_matrix(
    const System& sys) {
  IntMatrix m(sys.equations.size(), sys.variables.size());
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    for (const auto& [idx, coef] : sys.equations[i].terms) m(i, idx) = coef;
  return {std::move(m), sys.variables};
}

inline std::vector<bool> appearing_mask(const System& sys) {
  std::vector<bool> mask(sys.variables.size(), false);
  for (const Equation& eq : sys.equations)
    for (const auto& [idx, coef] : eq.terms) mask[idx] = true;
  return mask;
}

/// Subsystem at the given equation indices. The variable set of the result
/// is exactly the set of variables appearing in the kept equations, in the
/// original order.
inline System subsystem(const System& sys, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (std::size_t i : indices)
    if (i >= sys.equations.size())
      throw std::out_of_range("subsystem: equation index out of range");

  std::vector<bool> used(sys.variables.size(), false);
  for (std::size_t i : indices)
    for (const auto& [idx, coef] : sys.equations[i].terms) used[idx] = true;

  System out;
  out.name = sys.name;
  std::vector<std::size_t> remap(sys.variables.size(), 0);
  for (std::size_t j = 0; j < sys.variables.size(); ++j)
    if (used[j]) {
      remap[j] = out.variables.size();
      out.variables.push_back(sys.variables[j]);
    }
  for (std::size_t i : indices) {
    Equation eq;
    eq.terms.reserve(sys.equations[i].terms.size());
    for (const auto& [idx, coef] : sys.equations[i].terms)
      eq.terms.emplace_back(remap[idx], coef);
    out.equations.push_back(std::move(eq));
  }
  return out;
}

/// Check a witness against a system: the assignment must cover exactly the
/// system's variables, satisfy every equation, and meet its kind's nonzero
/// contract. A system with no equations accepts any total assignment.
inline bool verify_witness(const System& sys, const Witness& w) {
  if (w.assignment.size() != sys.variables.size()) return false;
  std::unordered_map<std::string_view, const Int*> values;
  for (const auto& [name, value] : w.assignment) values[name] = &value;
  std::vector<const Int*> by_index(sys.variables.size(), nullptr);
  for (std::size_t j = 0; j < sys.variables.size(); ++j) {
    auto it = values.find(sys.variables[j]);
    if (it == values.end()) return false;
    by_index[j] = it->second;
  }
  for (const Equation& eq : sys.equations) {
    Int sum = 0;
    for (const auto& [idx, coef] : eq.terms) sum += coef * *by_index[idx];
    if (sum != 0) return false;
  }
  if (w.kind == WitnessKind::nontrivial) {
    for (const auto& [name, value] : w.assignment)
      if (value == 0) return false;
    return true;
  }
  if (sys.equations.empty()) return true;  // solvable by convention
  for (const auto& [name, value] : w.assignment)
    if (value != 0) return true;
  return false;
}

}  // namespace zls
