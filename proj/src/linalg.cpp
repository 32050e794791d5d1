#include "blockcheck/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace blockcheck {

namespace {

// Bareiss one-step: after step k the trailing entries are the (k+2)-minors
// divided by the previous pivot, so every intermediate value is an exact
// integer and growth stays polynomial.
Int bareiss_det(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // exact by Sylvester's identity
                a.at(i, j) = num / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix leading_submatrix(const IntMatrix& m, std::size_t k) {
    IntMatrix s(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s.at(i, j) = m.at(i, j);
    return s;
}

}  // namespace

Int det(const IntMatrix& m) { return bareiss_det(m); }

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
    // One Bareiss pass without row swaps yields all leading minors as the
    // successive pivots -- but only while they stay nonzero. Fall back to
    // per-minor determinants from the first zero pivot on.
    const std::size_t n = m.size();
    std::vector<Int> minors;
    minors.reserve(n);
    IntMatrix a = m;
    Int prev = 1;
    std::size_t k = 0;
    for (; k < n; ++k) {
        if (a.at(k, k) == 0) break;
        minors.push_back(a.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    for (std::size_t r = k + 1; r <= n; ++r) minors.push_back(det(leading_submatrix(m, r)));
    return minors;
}

bool is_positive_definite(const IntMatrix& m) {
    if (!is_symmetric(m))
        throw Error(Error::Kind::NotSymmetric, "positive definiteness requires a symmetric matrix");
    if (m.size() == 0) return true;
    // Sylvester: symmetric M > 0 iff every leading principal minor > 0. The
    // swap-free Bareiss pivots are exactly those minors; a zero pivot means
    // some leading minor vanishes, which already rules out definiteness.
    IntMatrix a = m;
    const std::size_t n = a.size();
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return true;
}

std::vector<Int> smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t n = a.size();
    std::vector<Int> divisors(n, 0);

    for (std::size_t t = 0; t < n; ++t) {
        // locate a nonzero entry of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                Int v = abs(a.at(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;  // trailing block is zero; remaining divisors stay 0

        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(pi, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, t), a.at(i, pj));

        // clear row and column t; each reduction shrinks |pivot|, so this
        // terminates
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) {
                    // remainder is smaller than the pivot: promote it
                    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                for (std::size_t i = 0; i < n; ++i) a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) {
                    for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, t), a.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: d_t must divide every trailing entry
            for (std::size_t i = t + 1; i < n && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        for (std::size_t c = 0; c < n; ++c) a.at(t, c) += a.at(i, c);
                        clean = false;
                    }
        }
        divisors[t] = abs(a.at(t, t));
    }
    return divisors;
}

std::pair<Verdict, Verdict> determinant_bounds(const IntMatrix& m) {
    if (!is_positive_definite(m))
        throw Error(Error::Kind::NotPositiveDefinite,
                    "determinant bounds need a positive definite matrix");
    const std::size_t n = m.size();
    Int d = det(m);
    Int diag_prod = 1;
    for (std::size_t i = 0; i < n; ++i) diag_prod *= m.at(i, i);
    Verdict hadamard = Verdict::compare("hadamard", to_rat(d), to_rat(diag_prod));

    Int tr = trace(m);
    Int lhs = d * int_pow(Int(static_cast<long>(n)), static_cast<unsigned long>(n));
    Int rhs = int_pow(tr, static_cast<unsigned long>(n));
    Verdict amgm = Verdict::compare("amgm", to_rat(lhs), to_rat(rhs),
                                    {"det * n^n <= trace^n with n = " + std::to_string(n)});
    return {hadamard, amgm};
}

}  // namespace blockcheck
