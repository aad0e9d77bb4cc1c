#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zls/normal_form.hpp"

namespace zls {

/// Canonical basis of the saturated integer kernel lattice {v : M v = 0}.
/// The basis rows are stored in Hermite normal form, so equal lattices get
/// bit-identical bases.
struct KernelBasis {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Int>> vectors;

  IntMatrix as_matrix() const {
    IntMatrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    return m;
  }
};

// Canonical form of a lattice given by (possibly dependent) generator rows:
// the nonzero rows of the Hermite normal form.
inline IntMatrix hnf_basis(const IntMatrix& generators) {
  HnfResult res = hnf(generators);
  IntMatrix out(res.rank, generators.cols());
  for (std::size_t i = 0; i < res.rank; ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) out(i, j) = res.H(i, j);
  return out;
}

inline KernelBasis kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HnfResult ht = hnf(transpose(m));
  // rows of U facing zero rows of H satisfy u * M^T = 0, i.e. M u^T = 0;
  // because U is unimodular they form a basis of the full (saturated) kernel
  IntMatrix raw(n - ht.rank, n);
  for (std::size_t i = ht.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw(i - ht.rank, j) = ht.U(i, j);
  IntMatrix canon = hnf_basis(raw);
  KernelBasis basis{n, {}};
  basis.vectors.reserve(canon.rows());
  for (std::size_t i = 0; i < canon.rows(); ++i) basis.vectors.push_back(canon.row(i));
  return basis;
}

namespace detail {

// Back-substitution against rows already in Hermite normal form.
inline bool echelon_member(std::vector<Int> v, const IntMatrix& h, std::size_t nrows) {
  for (std::size_t i = 0; i < nrows; ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h(i, c) == 0) ++c;
    if (c == h.cols()) continue;
    if (v[c] == 0) continue;
    if (v[c] % h(i, c) != 0) return false;
    Int q = v[c] / h(i, c);
    for (std::size_t j = c; j < h.cols(); ++j) v[j] -= q * h(i, j);
  }
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

inline bool lattice_member(const std::vector<Int>& v, const KernelBasis& basis) {
  if (v.size() != basis.ambient_dim)
    throw std::invalid_argument("lattice_member: dimension mismatch");
  return detail::echelon_member(v, basis.as_matrix(), basis.vectors.size());
}

inline bool lattice_member(const std::vector<Int>& v, const IntMatrix& generator_rows) {
  if (v.size() != generator_rows.cols())
    throw std::invalid_argument("lattice_member: dimension mismatch");
  HnfResult res = hnf(generator_rows);
  return detail::echelon_member(v, res.H, res.rank);
}

/// Intersection of the lattices spanned by the rows of b1 and b2, computed
/// from the kernel of the stacked matrix [b1^T | -b2^T]. Returns a canonical
/// generator matrix (rows in Hermite normal form).
inline IntMatrix lattice_intersect(const IntMatrix& b1, const IntMatrix& b2) {
  if (b1.cols() != b2.cols())
    throw std::invalid_argument("lattice_intersect: ambient dimensions differ");
  const std::size_t n = b1.cols();
  const std::size_t k1 = b1.rows();
  const std::size_t k2 = b2.rows();
  if (k1 == 0 || k2 == 0) return IntMatrix(0, n);
  IntMatrix stacked(n, k1 + k2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k1; ++j) stacked(i, j) = b1(j, i);
    for (std::size_t j = 0; j < k2; ++j) stacked(i, k1 + j) = -b2(j, i);
  }
  KernelBasis ker = kernel_basis(stacked);
  IntMatrix combos(ker.vectors.size(), n);
  for (std::size_t i = 0; i < ker.vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int w = 0;
      for (std::size_t t = 0; t < k1; ++t) w += ker.vectors[i][t] * b1(t, j);
      combos(i, j) = w;
    }
  return hnf_basis(combos);
}

}  // namespace zls
