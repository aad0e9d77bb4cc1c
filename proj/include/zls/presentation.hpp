#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zls/lattice.hpp"
#include "zls/system.hpp"

namespace zls {

/// Finitely presented abelian group F/K: a free group on n_generators and a
/// relation matrix with one row per relation generator, expressed in the free
/// generators (n_generators columns). Zero relation rows are dropped at
/// construction.
struct Presentation {
  std::size_t n_generators = 0;
  IntMatrix relations{0, 0};
  std::vector<std::string> generator_names;  // optional; empty means e0, e1, ...
};

inline Presentation make_presentation(std::size_t n_generators,
                                      const IntMatrix& relations,
                                      std::vector<std::string> names = {},
                                      std::vector<std::string>* warnings = nullptr) {
  if (relations.rows() != 0 && relations.cols() != n_generators)
    throw std::invalid_argument(
        "presentation: relation matrix must have one column per generator");
  if (!names.empty() && names.size() != n_generators)
    throw std::invalid_argument("presentation: generator name count mismatch");
  Presentation p;
  p.n_generators = n_generators;
  p.generator_names = std::move(names);
  std::vector<std::vector<Int>> kept;
  for (std::size_t i = 0; i < relations.rows(); ++i) {
    if (relations.row_is_zero(i)) {
      if (warnings)
        warnings->push_back("relation " + std::to_string(i) + " is zero; dropped");
      continue;
    }
    kept.push_back(relations.row(i));
  }
  p.relations = IntMatrix(kept.size(), n_generators);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < n_generators; ++j) p.relations(i, j) = kept[i][j];
  return p;
}

/// Invariant-factor decomposition of F/K: torsion factors (each > 1), free
/// rank, and the rank of Hom(F/K, Z), which for an abelian group equals the
/// free rank.
struct GroupInfo {
  std::vector<Int> invariant_factors;
  std::size_t free_rank = 0;
  std::size_t dual_rank = 0;
};

inline GroupInfo analyze(const Presentation& p) {
  SnfResult s = snf(p.relations);
  GroupInfo info;
  for (const Int& d : s.invariant_factors)
    if (d > 1) info.invariant_factors.push_back(d);
  info.free_rank = p.n_generators - s.invariant_factors.size();
  info.dual_rank = info.free_rank;
  return info;
}

/// Concrete homomorphisms F/K -> Z: a homomorphism is determined by its
/// values y on the generators, and it kills K exactly when relations * y = 0.
/// The canonical kernel basis therefore lists an explicit basis of the dual.
inline KernelBasis dual_basis(const Presentation& p) {
  return kernel_basis(p.relations);
}

inline std::string generator_name(const Presentation& p, std::size_t j) {
  if (!p.generator_names.empty()) return p.generator_names[j];
  return "x" + std::to_string(j);
}

/// Transcribe a presentation into the system of equations its relations
/// spell out: one variable per generator, one equation per relation row.
inline System presentation_to_system(const Presentation& p) {
  System sys;
  sys.variables.reserve(p.n_generators);
  for (std::size_t j = 0; j < p.n_generators; ++j)
    sys.variables.push_back(generator_name(p, j));
  for (std::size_t i = 0; i < p.relations.rows(); ++i) {
    Equation eq;
    for (std::size_t j = 0; j < p.n_generators; ++j)
      if (p.relations(i, j) != 0) eq.terms.emplace_back(j, p.relations(i, j));
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

/// Inverse transcription: generators are the system's variables, relation
/// rows are the equation coefficient rows. Round-trips with
/// presentation_to_system on normalized data.
inline Presentation system_to_presentation(const System& sys) {
  Presentation p;
  p.n_generators = sys.variables.size();
  p.generator_names = sys.variables;
  auto [matrix, order] = coefficient_matrix(sys);
  p.relations = std::move(matrix);
  return p;
}

/// Generators that already lie in the relation lattice (so the quotient kills
/// them outright). The translation to systems stays valid, but callers may
/// want to warn: such a presentation is usually an input mistake.
inline std::vector<std::size_t> generators_in_relation_lattice(const Presentation& p) {
  std::vector<std::size_t> hits;
  if (p.relations.rows() == 0) return hits;
  HnfResult h = hnf(p.relations);
  for (std::size_t j = 0; j < p.n_generators; ++j) {
    std::vector<Int> unit(p.n_generators, 0);
    unit[j] = 1;
    if (detail::echelon_member(std::move(unit), h.H, h.rank)) hits.push_back(j);
  }
  return hits;
}

/// Parse the .zpres format: a "gens: n" header, then one relation per line in
/// the .zls term syntax (e.g. "2*e0 - e1"). Generator identifiers are resolved
/// by their trailing decimal index, which must be < n.
inline Presentation parse_presentation(std::string_view text,
                                       std::vector<std::string>* warnings = nullptr) {
  std::vector<std::vector<Int>> rows;
  bool saw_header = false;
  std::size_t n_generators = 0;
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

    if (!saw_header) {
      if (line.substr(sc.pos, 5) != "gens:")
        sc.fail("expected 'gens: <count>' header");
      sc.pos += 5;
      Int n = sc.digits();
      if (!sc.eol()) sc.fail("trailing characters after generator count");
      if (n > 1000000) sc.fail("generator count too large");
      n_generators = n.convert_to<std::size_t>();
      saw_header = true;
      continue;
    }

    auto raw = sc.term_list();
    if (!sc.eol()) sc.fail("trailing characters after relation");
    std::vector<std::pair<std::size_t, Int>> indexed;
    for (auto& [name, coef] : raw) {
      std::size_t digits_at = name.size();
      while (digits_at > 0 &&
             std::isdigit(static_cast<unsigned char>(name[digits_at - 1])))
        --digits_at;
      if (digits_at == name.size())
        throw parse_error(line_no, 1,
                          "generator '" + name + "' must end in a decimal index");
      std::size_t idx = 0;
      try {
        idx = std::stoull(name.substr(digits_at));
      } catch (const std::out_of_range&) {
        throw parse_error(line_no, 1, "generator index in '" + name + "' too large");
      }
      if (idx >= n_generators)
        throw parse_error(line_no, 1,
                          "generator index " + std::to_string(idx) +
                              " out of range (gens: " +
                              std::to_string(n_generators) + ")");
      indexed.emplace_back(idx, std::move(coef));
    }
    std::vector<Int> row(n_generators, 0);
    for (const auto& [idx, coef] : indexed) row[idx] += coef;
    rows.push_back(std::move(row));
  }
  if (!saw_header) throw parse_error(1, 1, "missing 'gens: <count>' header");
  IntMatrix relations(rows.size(), n_generators);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n_generators; ++j) relations(i, j) = rows[i][j];
  return make_presentation(n_generators, relations, {}, warnings);
}

/// Canonical .zpres serialization with e<k> generator names.
inline std::string serialize_presentation(const Presentation& p) {
  std::string out = "gens: " + std::to_string(p.n_generators) + "\n";
  for (std::size_t i = 0; i < p.relations.rows(); ++i) {
    bool first = true;
    for (std::size_t j = 0; j < p.n_generators; ++j) {
      const Int& coef = p.relations(i, j);
      if (coef == 0) continue;
      Int mag = abs_int(coef);
      if (first) {
        if (coef < 0) out += '-';
        first = false;
      } else {
        out += coef < 0 ? " - " : " + ";
      }
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += "e" + std::to_string(j);
    }
    out += '\n';
  }
  return out;
}

}  // namespace zls
