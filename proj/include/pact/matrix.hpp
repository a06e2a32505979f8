#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace pact {

using Vec = std::vector<GaussianRational>;

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec out(a);
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec out(a);
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    return out;
}

inline Vec vec_scale(const GaussianRational& c, const Vec& v) {
    Vec out(v.size());
    if (c.is_zero()) return out;
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = c * v[k];
    return out;
}

inline Vec vec_conj(const Vec& v) {
    Vec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
    return out;
}

inline Vec unit_vec(std::size_t n, std::size_t k) {
    Vec out(n);
    out.at(k) = GaussianRational(1);
    return out;
}

/// Row-major dense matrix over Q(i).
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = GaussianRational(1);
        return m;
    }

    static DenseMatrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return DenseMatrix();
        DenseMatrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }

    Vec row(std::size_t r) const {
        return Vec(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    Vec col(std::size_t c) const {
        Vec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }
    void set_row(std::size_t r, const Vec& v) {
        if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
    }

    bool is_zero() const { return vec_is_zero(e_); }

    /// Matrix applied to a column vector.
    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
        Vec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            GaussianRational acc;
            for (std::size_t c = 0; c < cols_; ++c) {
                const auto& m = (*this)(r, c);
                if (!m.is_zero() && !v[c].is_zero()) acc += m * v[c];
            }
            out[r] = acc;
        }
        return out;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
        DenseMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& f = a(r, k);
                if (f.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    const auto& g = b(k, c);
                    if (!g.is_zero()) out(r, c) += f * g;
                }
            }
        return out;
    }
    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum size mismatch");
        DenseMatrix out(a);
        for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] += b.e_[k];
        return out;
    }
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference size mismatch");
        DenseMatrix out(a);
        for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] -= b.e_[k];
        return out;
    }
    friend DenseMatrix operator*(const GaussianRational& c, const DenseMatrix& a) {
        DenseMatrix out(a);
        for (auto& x : out.e_) x = c * x;
        return out;
    }
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    DenseMatrix transpose() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }
    DenseMatrix conjugate() const {
        DenseMatrix out(*this);
        for (auto& x : out.e_) x = x.conj();
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    // Factors are taken by value: callers routinely pass entries of the very
    // rows being rewritten.
    void scale_row(std::size_t r, GaussianRational f) {
        for (std::size_t c = 0; c < cols_; ++c) {
            auto& x = (*this)(r, c);
            if (!x.is_zero()) x *= f;
        }
    }
    /// row[dst] -= f * row[src]
    void axpy_row(std::size_t dst, GaussianRational f, std::size_t src) {
        if (f.is_zero()) return;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& s = (*this)(src, c);
            if (!s.is_zero()) (*this)(dst, c) -= f * s;
        }
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> e_;
};

inline DenseMatrix hstack(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    DenseMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

inline DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw std::invalid_argument("vstack column mismatch");
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    DenseMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
    return out;
}

struct RrefResult {
    DenseMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

inline RrefResult rref(DenseMatrix m);

/// Inverse of a square matrix, absent when singular.
inline std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("only square matrices invert");
    const std::size_t n = m.rows();
    RrefResult rr = rref(hstack(m, DenseMatrix::identity(n)));
    if (rr.rank != n || (n > 0 && rr.pivots.back() >= n)) return std::nullopt;
    DenseMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = rr.reduced(r, n + c);
    return out;
}

/// Reduced row echelon form by exact Gauss-Jordan elimination. The result is
/// the unique RREF of the input, so equal row spans give equal nonzero rows.
inline RrefResult rref(DenseMatrix m) {
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        m.scale_row(r, m(r, c).inverse());
        for (std::size_t q = 0; q < m.rows(); ++q)
            if (q != r) m.axpy_row(q, m(q, c), r);
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

/// Basis of the right kernel {x : m x = 0}, returned as the rows of a matrix
/// already in RREF (the canonical basis of the kernel).
inline DenseMatrix kernel_basis(const DenseMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = GaussianRational(1);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced(k, f);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return DenseMatrix(0, m.cols());
    RrefResult canon = rref(DenseMatrix::from_rows(rows));
    DenseMatrix out(canon.rank, m.cols());
    for (std::size_t r = 0; r < canon.rank; ++r) out.set_row(r, canon.reduced.row(r));
    return out;
}

struct LinearSolution {
    std::optional<Vec> particular;  // absent when m x = b is inconsistent
    DenseMatrix kernel;             // rows span {x : m x = 0}
};

/// Solves m x = b exactly. The particular solution has zeros in all free
/// coordinates, which makes it canonical.
inline LinearSolution solve(const DenseMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve size mismatch");
    DenseMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(std::move(aug));
    LinearSolution out;
    out.kernel = kernel_basis(m);
    bool consistent = rr.pivots.empty() || rr.pivots.back() != m.cols();
    if (consistent) {
        Vec x(m.cols());
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.reduced(k, m.cols());
        out.particular = std::move(x);
    }
    return out;
}

}  // namespace pact
