#pragma once

#include <utility>
#include <vector>

#include "blockcheck/matrix.hpp"
#include "blockcheck/verdict.hpp"

namespace blockcheck {

/// Exact determinant (Bareiss fraction-free elimination with row pivoting).
Int det(const IntMatrix& m);

/// Determinants of the leading principal k x k submatrices, k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Sylvester criterion on a symmetric matrix; throws NotSymmetric otherwise.
bool is_positive_definite(const IntMatrix& m);

/// Elementary divisors d_1 | d_2 | ... | d_n (nonnegative; trailing zeros for
/// singular input). Product of the nonzero divisors is |det|.
std::vector<Int> smith_normal_form(const IntMatrix& m);

/// Two determinant bounds for a positive definite integer matrix:
///   hadamard:  det <= product of diagonal entries
///   amgm:      det * l^l <= trace^l   (l = size; root-free arithmetic-mean
///              bound, so everything stays integral)
/// Throws NotPositiveDefinite / NotSymmetric when the hypotheses fail.
std::pair<Verdict, Verdict> determinant_bounds(const IntMatrix& m);

}  // namespace blockcheck
