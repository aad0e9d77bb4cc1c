#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zls/presentation.hpp"
#include "zls/solver.hpp"
#include "zls/system.hpp"

namespace zls {

/// An unsolvable subsystem (by original equation indices) every single
/// deletion of which is solvable.
struct CoreReport {
  WitnessKind mode = WitnessKind::nontrivial;
  std::vector<std::size_t> core_indices;
  bool locally_minimal = false;
};

class search_bound_error : public std::runtime_error {
 public:
  explicit search_bound_error(std::size_t count, std::size_t bound)
      : std::runtime_error("exact search over " + std::to_string(count) +
                           " equations exceeds the bound " +
                           std::to_string(bound) +
                           "; raise the bound to enumerate") {}
};

inline bool is_solvable(const System& sys, WitnessKind mode) {
  const SolveReport rep =
      mode == WitnessKind::nontrivial ? solve_nontrivial(sys) : solve_weak(sys);
  return rep.status == SolveReport::Status::solvable;
}

namespace detail {

// Deletion scan order over the current core c_0 < ... < c_{m-1}: starting at
// the second-highest index and moving down, with the highest index tried
// last, i.e. (c_{m-2}, ..., c_0, c_{m-1}).
inline std::vector<std::size_t> deletion_scan_order(
    const std::vector<std::size_t>& core) {
  std::vector<std::size_t> order;
  order.reserve(core.size());
  if (core.size() >= 2)
    for (std::size_t k = core.size() - 1; k-- > 0;) order.push_back(core[k]);
  if (!core.empty()) order.push_back(core.back());
  return order;
}

}  // namespace detail

/// Locally minimal unsolvable core by greedy deletion, or nothing when the
/// system itself is solvable in the given mode. Deletion passes follow the
/// documented scan order and repeat until no single deletion preserves
/// unsolvability; weak mode needs the repeated passes because weak
/// solvability is not monotone under subsystems.
inline std::optional<CoreReport> minimal_core(const System& sys, WitnessKind mode) {
  if (is_solvable(sys, mode)) return std::nullopt;
  std::vector<std::size_t> core(sys.equations.size());
  std::iota(core.begin(), core.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t victim : detail::deletion_scan_order(core)) {
      std::vector<std::size_t> candidate;
      candidate.reserve(core.size() - 1);
      for (std::size_t e : core)
        if (e != victim) candidate.push_back(e);
      if (!is_solvable(subsystem(sys, candidate), mode)) {
        core = std::move(candidate);
        changed = true;
      }
    }
  }
  // the final pass tried every remaining equation without success, so every
  // single deletion is solvable
  return CoreReport{mode, core, true};
}

/// Least cardinality of an unsolvable nonempty subsystem, by size-ordered
/// exhaustive enumeration, or nothing if every nonempty subsystem is
/// solvable. For nontrivial mode a solvable system short-circuits to nothing
/// (nontrivial solvability is monotone under subsystems); weak mode
/// enumerates unconditionally, which is exponential in the equation count.
inline std::optional<std::size_t> min_unsolvable_size(const System& sys,
                                                      WitnessKind mode,
                                                      std::size_t bound = 20) {
  const std::size_t m = sys.equations.size();
  if (m > bound) throw search_bound_error(m, bound);
  if (m == 0) return std::nullopt;
  if (mode == WitnessKind::nontrivial && is_solvable(sys, mode))
    return std::nullopt;
  for (std::size_t k = 1; k <= m; ++k) {
    // lexicographic k-subsets of {0..m-1}
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (!is_solvable(subsystem(sys, pick), mode)) return k;
      std::size_t i = k;
      while (i-- > 0)
        if (pick[i] != i + m - k) break;
      if (i == static_cast<std::size_t>(-1)) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// The divisibility chain x_i = p * x_{i+1}, i < n, over x_0..x_n. Every
/// finite chain is nontrivially solvable, but any solution must satisfy
/// p^n | x_0, so witnesses grow without bound as n does.
inline System gen_chain(std::size_t n, const Int& p) {
  if (n < 1) throw std::invalid_argument("gen_chain: need n >= 1");
  if (p < 2) throw std::invalid_argument("gen_chain: need p >= 2");
  System sys;
  sys.name = "chain(" + std::to_string(n) + "," + p.str() + ")";
  for (std::size_t j = 0; j <= n; ++j)
    sys.variables.push_back("x" + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i) {
    Equation eq;
    eq.terms.emplace_back(i, Int(1));
    eq.terms.emplace_back(i + 1, -p);
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

/// System transcribing a presentation's relations; when the presentation has
/// dual rank 0 the result has no weak solution while (torsion-free cases
/// aside) small subsystems often stay solvable, which is the interesting
/// regime for core extraction.
inline System gen_from_presentation(const Presentation& p) {
  return presentation_to_system(p);
}

}  // namespace zls
