#include "f4rigid/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace f4rigid {

IMat identity_matrix(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  if (k == 0 || (n && a[0].size() != k))
    throw std::invalid_argument("matrix dimension mismatch in mat_mul");
  const std::size_t m = b[0].size();
  IMat out(n, IVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      const std::int64_t aik = a[i][t];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += aik * b[t][j];
    }
  return out;
}

IMat mat_transpose(const IMat& m) {
  if (m.empty()) return {};
  IMat out(m[0].size(), IVec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

IVec row_apply(const IVec& v, const IMat& m) {
  if (v.size() != m.size()) throw std::invalid_argument("vector/matrix size mismatch");
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  IVec out(cols, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

namespace {

std::int64_t det_rec(const IMat& m, std::vector<int>& cols, std::size_t row) {
  if (cols.empty()) return 1;
  if (cols.size() == 1) return m[row][cols[0]];
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::int64_t pivot = m[row][cols[k]];
    if (pivot != 0) {
      const int c = cols[k];
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      const std::int64_t minor = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      sum += ((k % 2 == 0) ? 1 : -1) * pivot * minor;
    }
  }
  return sum;
}

}  // namespace

std::int64_t mat_det(const IMat& m) {
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("mat_det requires a square matrix");
  std::vector<int> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = static_cast<int>(j);
  return det_rec(m, cols, 0);
}

IMat mat_inverse_unimodular(const IMat& m) {
  const std::int64_t d = mat_det(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("mat_inverse_unimodular: determinant is not +-1");
  const std::size_t n = m.size();
  IMat inv(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor expansion of the (j, i) minor
      IMat minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IVec row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      const std::int64_t sign = ((i + j) % 2 == 0) ? 1 : -1;
      inv[i][j] = sign * mat_det(minor) * d;  // 1/d == d for d = +-1
    }
  }
  return inv;
}

IVec vec_add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IVec vec_sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IVec vec_scale(const IVec& a, std::int64_t c) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

IVec vec_neg(const IVec& a) { return vec_scale(a, -1); }

std::int64_t dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch in dot");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const IVec& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

bool lex_positive(const IVec& a) {
  for (auto x : a) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

std::string vec_to_string(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string mat_to_string(const IMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << " ";
      os << m[i][j];
    }
  }
  os << "]";
  return os.str();
}

}  // namespace f4rigid
