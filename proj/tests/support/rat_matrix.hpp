#pragma once

// Exact rational dense matrices for the eigenvalue-bound soundness suite.
// Test-only; deliberately independent of the weight-system route the library
// uses to compute eigenspace dimensions.

#include <f4rigid/linalg.hpp>
#include <f4rigid/numeric.hpp>

#include <random>
#include <vector>

namespace testsupport {

using f4rigid::IMat;
using f4rigid::Rat;
using RatMat = std::vector<std::vector<Rat>>;

inline RatMat rat_identity(int n) {
  RatMat m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMat rat_from_int(const IMat& a) {
  RatMat m(a.size(), std::vector<Rat>(a.empty() ? 0 : a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m[i][j] = Rat(a[i][j]);
  return m;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMat out(n, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

/// dim ker by Gaussian elimination (column convention: kernel of v -> M v).
inline int nullity(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Rat inv = Rat(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(cols - rank);
}

/// Random unimodular integer matrix as a product of elementary shears and
/// signed permutations; entries kept small so products stay exact in int64.
inline IMat random_unimodular(int n, std::mt19937_64& rng, int ops = 6) {
  IMat m = f4rigid::identity_matrix(n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int step = 0; step < ops; ++step) {
    const int i = idx(rng);
    int j = idx(rng);
    switch (kind(rng)) {
      case 0: {  // row_i += c * row_j
        if (j == i) j = (j + 1) % n;
        const int c = coef(rng);
        for (int t = 0; t < n; ++t) m[i][t] += c * m[j][t];
        break;
      }
      case 1:  // swap rows
        if (j == i) j = (j + 1) % n;
        std::swap(m[i], m[j]);
        break;
      default:  // negate a row
        for (int t = 0; t < n; ++t) m[i][t] = -m[i][t];
    }
  }
  return m;
}

/// Q D Q^{-1} with D = diag(+1 x dim_plus, -1 x dim_minus).
inline RatMat involution_matrix(int dim_plus, int dim_minus, const IMat& q) {
  const int n = dim_plus + dim_minus;
  RatMat d = rat_identity(n);
  for (int i = dim_plus; i < n; ++i) d[i][i] = -1;
  return rat_mul(rat_mul(rat_from_int(q), d), rat_from_int(f4rigid::mat_inverse_unimodular(q)));
}

/// Conjugated unipotent with exactly `blocks` nontrivial Jordan blocks of
/// size 2 (identity when blocks = 0).
inline RatMat unipotent_matrix(int n, int blocks, const IMat& q, std::mt19937_64& rng) {
  IMat u = f4rigid::identity_matrix(n);
  std::uniform_int_distribution<int> coef(1, 3);
  for (int b = 0; b < blocks && 2 * b + 1 < n; ++b) u[2 * b][2 * b + 1] = coef(rng);
  IMat conj = f4rigid::mat_mul(f4rigid::mat_mul(q, u), f4rigid::mat_inverse_unimodular(q));
  return rat_from_int(conj);
}

inline RatMat rat_add_identity(RatMat m) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += 1;
  return m;
}

}  // namespace testsupport
