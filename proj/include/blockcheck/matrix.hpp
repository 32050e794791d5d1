#pragma once

#include <cstddef>
#include <vector>

#include "blockcheck/numeric.hpp"

namespace blockcheck {

using Vec = std::vector<Int>;

/// Dense square matrix over Int. Small sizes only (block Cartan matrices
/// rarely exceed a few dozen rows), so no attempt at sparsity.
class IntMatrix {
public:
    IntMatrix() = default;

    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

    IntMatrix(std::size_t n, std::vector<Int> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n_ * n_)
            throw Error(Error::Kind::DimensionMismatch, "entry count does not match matrix size");
    }

    static IntMatrix from_rows(const std::vector<Vec>& rows) {
        IntMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw Error(Error::Kind::DimensionMismatch, "matrix rows must form a square");
            for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

inline Int trace(const IntMatrix& m) {
    Int t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m.at(i, i);
    return t;
}

inline bool is_symmetric(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

inline bool is_nonnegative(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m.at(i, j) < 0) return false;
    return true;
}

inline Vec mat_vec(const IntMatrix& m, const Vec& v) {
    if (v.size() != m.size())
        throw Error(Error::Kind::DimensionMismatch, "vector length does not match matrix size");
    Vec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m.size(); ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

/// v^T M v
inline Int quad_form(const IntMatrix& m, const Vec& v) {
    Vec mv = mat_vec(m, v);
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * mv[i];
    return s;
}

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(Error::Kind::DimensionMismatch, "dot of vectors with different lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// D^T D for a (not necessarily square) matrix given as rows of equal length.
inline IntMatrix gram_matrix(const std::vector<Vec>& rows) {
    if (rows.empty()) throw Error(Error::Kind::BadInput, "gram matrix of empty row set");
    const std::size_t cols = rows[0].size();
    for (const Vec& r : rows)
        if (r.size() != cols)
            throw Error(Error::Kind::DimensionMismatch, "ragged rows in gram matrix input");
    IntMatrix g(cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i; j < cols; ++j) {
            Int s = 0;
            for (const Vec& r : rows) s += r[i] * r[j];
            g.at(i, j) = s;
            g.at(j, i) = s;
        }
    return g;
}

/// Kronecker product; row/column (i,j) of the result corresponds to the pair
/// (row i of a, row j of b) in lexicographic order.
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t na = a.size(), nb = b.size();
    IntMatrix k(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t s = 0; s < nb; ++s)
                for (std::size_t t = 0; t < nb; ++t)
                    k.at(i * nb + s, j * nb + t) = a.at(i, j) * b.at(s, t);
    return k;
}

}  // namespace blockcheck
