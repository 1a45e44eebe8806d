#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace f4rigid {

// Row-vector convention throughout: a lattice vector v is a row, a matrix M
// acts by v -> v*M.
using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;

IMat identity_matrix(int n);
IMat mat_mul(const IMat& a, const IMat& b);
IMat mat_transpose(const IMat& m);
IVec row_apply(const IVec& v, const IMat& m);  // v*M

std::int64_t mat_det(const IMat& m);

/// Inverse of a matrix with determinant +-1 (integral by unimodularity).
IMat mat_inverse_unimodular(const IMat& m);

IVec vec_add(const IVec& a, const IVec& b);
IVec vec_sub(const IVec& a, const IVec& b);
IVec vec_scale(const IVec& a, std::int64_t c);
IVec vec_neg(const IVec& a);
std::int64_t dot(const IVec& a, const IVec& b);
bool is_zero_vec(const IVec& a);

/// First nonzero coordinate is positive (used as a total positivity order).
bool lex_positive(const IVec& a);

std::string vec_to_string(const IVec& v);
std::string mat_to_string(const IMat& m);

}  // namespace f4rigid
