#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zls/lattice.hpp"
#include "zls/solver.hpp"
#include "zls/system.hpp"

namespace zls {

// Raised when an input violates a structural hypothesis of the constructive
// pipeline (as opposed to a malformed argument).
class hypothesis_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The quotient has torsion: `witness` is an integer vector outside the
/// relation lattice with a proper multiple inside it.
class torsion_error : public hypothesis_error {
 public:
  torsion_error(std::vector<Int> witness, std::vector<Int> factors)
      : hypothesis_error(describe(witness, factors)),
        witness_(std::move(witness)),
        factors_(std::move(factors)) {}

  const std::vector<Int>& witness() const { return witness_; }
  const std::vector<Int>& nontrivial_factors() const { return factors_; }

 private:
  static std::string describe(const std::vector<Int>& w, const std::vector<Int>& f) {
    std::ostringstream os;
    os << "torsion found: invariant factors";
    for (const Int& d : f) os << ' ' << d;
    os << "; witness (";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ") is torsion modulo the relation lattice";
    return os.str();
  }

  std::vector<Int> witness_;
  std::vector<Int> factors_;
};

/// Some generator maps to zero in the quotient (it lies in the relation
/// lattice), so no homomorphism can be nonzero on it.
class zero_image_error : public hypothesis_error {
 public:
  explicit zero_image_error(std::size_t generator)
      : hypothesis_error("generator " + std::to_string(generator) +
                         " has zero image in the quotient"),
        generator_(generator) {}

  std::size_t generator() const { return generator_; }

 private:
  std::size_t generator_;
};

/// A constraint carries the zero vector; with excluded value 0 it would be
/// unsatisfiable, and it violates the one-generator filtration hypothesis.
class zero_constraint_error : public hypothesis_error {
 public:
  explicit zero_constraint_error(std::size_t constraint)
      : hypothesis_error("constraint " + std::to_string(constraint) +
                         " has a zero coefficient vector"),
        constraint_(constraint) {}

  std::size_t constraint() const { return constraint_; }

 private:
  std::size_t constraint_;
};

/// Strict filtration validation failed: a constraint vector lies in the
/// lattice spanned by the earlier ones.
class filtration_error : public hypothesis_error {
 public:
  explicit filtration_error(std::size_t constraint)
      : hypothesis_error("constraint " + std::to_string(constraint) +
                         " lies in the lattice of the earlier constraints"),
        constraint_(constraint) {}

  std::size_t constraint() const { return constraint_; }

 private:
  std::size_t constraint_;
};

/// Behavior contract for a ring the avoidance construction can run over:
/// exact arithmetic, exact division when it exists, and an enumeration of
/// pairwise-distinct elements. An infinite domain guarantees the greedy
/// choice below never runs out of candidates.
template <typename R>
concept AvoidanceRing = requires(const typename R::value_type& a,
                                 const typename R::value_type& b, std::size_t k) {
  { R::zero() } -> std::convertible_to<typename R::value_type>;
  { R::one() } -> std::convertible_to<typename R::value_type>;
  { a + b } -> std::convertible_to<typename R::value_type>;
  { a - b } -> std::convertible_to<typename R::value_type>;
  { a * b } -> std::convertible_to<typename R::value_type>;
  { a == b } -> std::convertible_to<bool>;
  { R::divide_exact(a, b) } -> std::convertible_to<std::optional<typename R::value_type>>;
  { R::element_at(k) } -> std::convertible_to<typename R::value_type>;
};

/// The integers with the enumeration 0, 1, -1, 2, -2, ...
struct IntegerRing {
  using value_type = Int;
  static Int zero() { return 0; }
  static Int one() { return 1; }
  static std::optional<Int> divide_exact(const Int& a, const Int& b) {
    if (!divides(b, a)) return std::nullopt;
    return a / b;
  }
  static Int element_at(std::size_t k) { return integer_at(k); }
};

/// A list of inequality constraints over a free module of the given rank:
/// the sought homomorphism psi (a vector of generator values) must satisfy
/// <coeffs, psi> != excluded for every constraint. Constraint vectors must be
/// nonzero; with excluded = 0 a zero vector would be unsatisfiable.
template <AvoidanceRing R>
struct BasicAvoidanceProblem {
  using value_type = typename R::value_type;
  struct Constraint {
    std::vector<value_type> coeffs;
    value_type excluded;
  };
  std::size_t free_rank = 0;
  std::vector<Constraint> constraints;
};

using AvoidanceProblem = BasicAvoidanceProblem<IntegerRing>;

/// Greedy construction of psi, one generator at a time. A constraint is
/// consulted exactly when its highest-support generator is being fixed; at
/// that point every other term of the constraint is already decided, so the
/// constraint forbids at most one value b*psi[g] and the enumeration always
/// escapes the finitely many forbidden choices. Deterministic: the first
/// admissible enumeration element is taken.
template <AvoidanceRing R>
std::vector<typename R::value_type> avoid_hom(const BasicAvoidanceProblem<R>& p) {
  using V = typename R::value_type;
  std::vector<std::vector<std::size_t>> bucket(p.free_rank);
  for (std::size_t idx = 0; idx < p.constraints.size(); ++idx) {
    const auto& c = p.constraints[idx];
    if (c.coeffs.size() != p.free_rank)
      throw std::invalid_argument("avoid_hom: constraint length mismatch");
    std::size_t top = p.free_rank;
    for (std::size_t k = p.free_rank; k-- > 0;)
      if (!(c.coeffs[k] == R::zero())) {
        top = k;
        break;
      }
    if (top == p.free_rank) throw zero_constraint_error(idx);
    bucket[top].push_back(idx);
  }

  std::vector<V> psi;
  psi.reserve(p.free_rank);
  for (std::size_t g = 0; g < p.free_rank; ++g) {
    std::vector<V> forbidden;
    for (std::size_t idx : bucket[g]) {
      const auto& c = p.constraints[idx];
      V rhs = c.excluded;
      for (std::size_t k = 0; k < g; ++k)
        if (!(c.coeffs[k] == R::zero())) rhs = rhs - c.coeffs[k] * psi[k];
      if (auto r = R::divide_exact(rhs, c.coeffs[g])) forbidden.push_back(*r);
    }
    std::size_t k = 0;
    V cand = R::element_at(0);
    while (std::find(forbidden.begin(), forbidden.end(), cand) != forbidden.end())
      cand = R::element_at(++k);
    psi.push_back(std::move(cand));
  }
  return psi;
}

/// Optional stricter hypothesis check over the integers: every constraint
/// vector must lie outside the lattice spanned by its predecessors (a proper
/// one-generator filtration step). The greedy construction itself only needs
/// nonzero vectors, so this is off by default.
inline void validate_strict_filtration(const AvoidanceProblem& p) {
  for (std::size_t idx = 1; idx < p.constraints.size(); ++idx) {
    IntMatrix earlier(idx, p.free_rank);
    for (std::size_t i = 0; i < idx; ++i)
      for (std::size_t j = 0; j < p.free_rank; ++j)
        earlier(i, j) = p.constraints[i].coeffs[j];
    if (lattice_member(p.constraints[idx].coeffs, earlier))
      throw filtration_error(idx);
  }
}

/// A free basis for the quotient of the ambient free group by the row lattice
/// of `relation_rows`, realized through the dual: the canonical kernel basis
/// k_1..k_m of the relation matrix induces coordinates
/// x -> (<k_1,x>, ..., <k_m,x>), which is an isomorphism exactly when the
/// quotient is torsion-free. coord_map holds the coordinates of each ambient
/// generator's image, one row per generator.
struct FreeQuotientBasis {
  std::size_t basis_rank = 0;
  IntMatrix coord_map{0, 0};
};

inline FreeQuotientBasis free_quotient_basis(std::size_t ambient_rank,
                                             const IntMatrix& relation_rows) {
  if (relation_rows.rows() != 0 && relation_rows.cols() != ambient_rank)
    throw std::invalid_argument("free_quotient_basis: column count mismatch");
  SnfResult s = snf(relation_rows);
  std::vector<Int> nontrivial;
  for (const Int& d : s.invariant_factors)
    if (d > 1) nontrivial.push_back(d);
  KernelBasis dual = kernel_basis(relation_rows);
  if (!nontrivial.empty()) {
    // exhibit a saturation vector missing from the relation lattice
    KernelBasis saturation = kernel_basis(dual.as_matrix());
    for (const auto& cand : saturation.vectors)
      if (!lattice_member(cand, relation_rows))
        throw torsion_error(cand, nontrivial);
    throw torsion_error({}, nontrivial);  // unreachable for consistent inputs
  }
  FreeQuotientBasis out;
  out.basis_rank = dual.vectors.size();
  out.coord_map = IntMatrix(ambient_rank, out.basis_rank);
  for (std::size_t j = 0; j < ambient_rank; ++j)
    for (std::size_t i = 0; i < out.basis_rank; ++i)
      out.coord_map(j, i) = dual.vectors[i][j];
  for (std::size_t j = 0; j < ambient_rank; ++j)
    if (out.coord_map.row_is_zero(j)) throw zero_image_error(j);
  return out;
}

/// Constructive nontrivial solving through the quotient filtration: build
/// free-quotient coordinates for every variable, require the homomorphism to
/// avoid 0 on each of them (in variable order), and evaluate. Succeeds
/// exactly when the quotient by the equation lattice is torsion-free and no
/// variable's image vanishes; the result is verified by substitution.
inline Witness nontrivial_solution_via_filtration(const System& sys,
                                                  bool strict = false) {
  auto [matrix, order] = coefficient_matrix(sys);
  FreeQuotientBasis fq = free_quotient_basis(sys.variables.size(), matrix);
  AvoidanceProblem problem;
  problem.free_rank = fq.basis_rank;
  problem.constraints.reserve(sys.variables.size());
  for (std::size_t j = 0; j < sys.variables.size(); ++j)
    problem.constraints.push_back({fq.coord_map.row(j), Int(0)});
  if (strict) validate_strict_filtration(problem);
  std::vector<Int> psi = avoid_hom(problem);
  std::vector<Int> values(sys.variables.size(), 0);
  for (std::size_t j = 0; j < sys.variables.size(); ++j)
    for (std::size_t i = 0; i < fq.basis_rank; ++i)
      values[j] += fq.coord_map(j, i) * psi[i];
  Witness w = detail::make_witness(sys, WitnessKind::nontrivial, values);
  if (!verify_witness(sys, w))
    throw std::logic_error("filtration pipeline produced an invalid witness");
  return w;
}

}  // namespace zls
