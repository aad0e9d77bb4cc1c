#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zls/lattice.hpp"
#include "zls/system.hpp"

namespace zls {

/// Names variables whose coordinate vanishes on the whole kernel lattice of
/// the coefficient matrix; such a variable can never be nonzero in any
/// solution, which certifies unsolvability for the respective mode.
struct UnsolvabilityCertificate {
  WitnessKind mode = WitnessKind::nontrivial;
  std::vector<std::string> dead_variables;
};

struct SolveReport {
  enum class Status { solvable, unsolvable };
  Status status = Status::unsolvable;
  std::optional<Witness> witness;
  std::optional<UnsolvabilityCertificate> certificate;
};

/// Deterministic search for a lattice vector that is nonzero in every
/// required coordinate. Starting from the first basis vector, each still-zero
/// required coordinate c is fixed by adding m*b, where b is the first basis
/// vector nonzero at c and m is the smallest positive integer that keeps
/// every currently-nonzero required coordinate nonzero (finitely many m are
/// forbidden). Returns nothing iff some required coordinate is zero in every
/// basis vector.
inline std::optional<std::vector<Int>> all_nonzero_combination(
    const KernelBasis& basis, std::vector<std::size_t> required) {
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  for (std::size_t c : required)
    if (c >= basis.ambient_dim)
      throw std::out_of_range("all_nonzero_combination: coordinate out of range");
  if (basis.vectors.empty()) {
    if (required.empty()) return std::vector<Int>(basis.ambient_dim, 0);
    return std::nullopt;
  }
  std::vector<Int> w = basis.vectors.front();
  for (std::size_t c : required) {
    if (w[c] != 0) continue;
    const std::vector<Int>* b = nullptr;
    for (const auto& cand : basis.vectors)
      if (cand[c] != 0) {
        b = &cand;
        break;
      }
    if (b == nullptr) return std::nullopt;  // dead coordinate
    std::vector<Int> forbidden;
    for (std::size_t k : required) {
      if (w[k] == 0 || (*b)[k] == 0) continue;
      Int num = -w[k];
      if (num % (*b)[k] == 0) {
        Int m = num / (*b)[k];
        if (m > 0) forbidden.push_back(std::move(m));
      }
    }
    Int mul = 1;
    while (std::find(forbidden.begin(), forbidden.end(), mul) != forbidden.end())
      ++mul;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += mul * (*b)[j];
  }
  return w;
}

namespace detail {

inline Witness make_witness(const System& sys, WitnessKind kind,
                            const std::vector<Int>& values) {
  Witness w;
  w.kind = kind;
  w.assignment.reserve(sys.variables.size());
  for (std::size_t j = 0; j < sys.variables.size(); ++j)
    w.assignment.emplace_back(sys.variables[j], values[j]);
  return w;
}

inline std::vector<std::string> dead_variables_of(const System& sys,
                                                  const KernelBasis& kernel) {
  std::vector<std::string> dead;
  for (std::size_t j = 0; j < sys.variables.size(); ++j) {
    bool all_zero = true;
    for (const auto& v : kernel.vectors)
      if (v[j] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) dead.push_back(sys.variables[j]);
  }
  return dead;
}

inline SolveReport checked_solvable(const System& sys, Witness w) {
  if (!verify_witness(sys, w))
    throw std::logic_error("solver produced a witness that fails verification");
  SolveReport rep;
  rep.status = SolveReport::Status::solvable;
  rep.witness = std::move(w);
  return rep;
}

}  // namespace detail

/// Nontrivial solvability in the integers: an assignment with every variable
/// nonzero satisfying all equations. Decided on the kernel lattice of the
/// coefficient matrix; the witness is built by all_nonzero_combination, so
/// the solvable verdict is always constructive. Variables that appear in no
/// equation contribute unit kernel vectors and always end up with value 1.
/// A system with no equations is solvable with the all-ones witness.
inline SolveReport solve_nontrivial(const System& sys) {
  auto [matrix, order] = coefficient_matrix(sys);
  KernelBasis kernel = kernel_basis(matrix);
  std::vector<std::size_t> required(sys.variables.size());
  for (std::size_t j = 0; j < required.size(); ++j) required[j] = j;
  if (auto vec = all_nonzero_combination(kernel, required))
    return detail::checked_solvable(
        sys, detail::make_witness(sys, WitnessKind::nontrivial, *vec));
  SolveReport rep;
  rep.status = SolveReport::Status::unsolvable;
  rep.certificate = UnsolvabilityCertificate{
      WitnessKind::nontrivial, detail::dead_variables_of(sys, kernel)};
  return rep;
}

/// Weak solvability: an assignment satisfying all equations and not
/// identically zero on the system's variables. Equivalently, the kernel
/// lattice of the coefficient matrix is nontrivial. The witness is the first
/// canonical kernel basis vector, preferring one that is nonzero on a
/// variable actually appearing in an equation; a system with no equations is
/// solvable by convention with the all-zero assignment.
inline SolveReport solve_weak(const System& sys) {
  if (sys.equations.empty())
    return detail::checked_solvable(
        sys, detail::make_witness(sys, WitnessKind::weak,
                                  std::vector<Int>(sys.variables.size(), 0)));
  auto [matrix, order] = coefficient_matrix(sys);
  KernelBasis kernel = kernel_basis(matrix);
  if (kernel.vectors.empty()) {
    SolveReport rep;
    rep.status = SolveReport::Status::unsolvable;
    rep.certificate =
        UnsolvabilityCertificate{WitnessKind::weak, sys.variables};
    return rep;
  }
  std::vector<bool> appears = appearing_mask(sys);
  const std::vector<Int>* pick = nullptr;
  for (const auto& v : kernel.vectors) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (appears[j] && v[j] != 0) {
        pick = &v;
        break;
      }
    if (pick) break;
  }
  if (!pick) pick = &kernel.vectors.front();
  return detail::checked_solvable(
      sys, detail::make_witness(sys, WitnessKind::weak, *pick));
}

}  // namespace zls
