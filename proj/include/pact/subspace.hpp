#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace pact {

/// Linear subspace of Q(i)^n stored as the unique RREF basis of its span.
/// Two Subspace values are equal as sets iff their representations are equal,
/// so operator== decides subspace equality.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient) {
        Subspace s(ambient);
        s.basis_ = DenseMatrix::identity(ambient);
        s.pivots_.resize(ambient);
        for (std::size_t k = 0; k < ambient; ++k) s.pivots_[k] = k;
        return s;
    }

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        for (const auto& v : vectors)
            if (v.size() != ambient) throw std::invalid_argument("span vector size mismatch");
        RrefResult rr = rref(DenseMatrix::from_rows(vectors));
        s.basis_ = DenseMatrix(rr.rank, ambient);
        for (std::size_t r = 0; r < rr.rank; ++r) s.basis_.set_row(r, rr.reduced.row(r));
        s.pivots_ = rr.pivots;
        return s;
    }

    static Subspace row_space(const DenseMatrix& m) {
        std::vector<Vec> rows;
        rows.reserve(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
        return span(m.cols(), rows);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const DenseMatrix& basis() const { return basis_; }
    Vec basis_row(std::size_t k) const { return basis_.row(k); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Residual of v after elimination against the basis; zero iff v lies in
    /// the subspace.
    Vec reduce(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        Vec w(v);
        for (std::size_t k = 0; k < dim(); ++k) {
            const GaussianRational f = w[pivots_[k]];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < ambient_; ++c) {
                const auto& b = basis_(k, c);
                if (!b.is_zero()) w[c] -= f * b;
            }
        }
        return w;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        for (std::size_t k = 0; k < other.dim(); ++k)
            if (!contains(other.basis_row(k))) return false;
        return true;
    }

    /// Coordinates of v in the RREF basis; for an RREF basis these are just
    /// the pivot entries of v once membership holds.
    std::optional<Vec> coords(const Vec& v) const {
        if (!contains(v)) return std::nullopt;
        Vec c(dim());
        for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
        return c;
    }

    Vec lift(const Vec& c) const {
        if (c.size() != dim()) throw std::invalid_argument("coordinate size mismatch");
        Vec v(ambient_);
        for (std::size_t k = 0; k < dim(); ++k) {
            if (c[k].is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j) {
                const auto& b = basis_(k, j);
                if (!b.is_zero()) v[j] += c[k] * b;
            }
        }
        return v;
    }

    /// ambient x dim matrix whose columns are the basis vectors.
    DenseMatrix lift_matrix() const { return basis_.transpose(); }

    /// dim x ambient matrix extracting coordinates; only meaningful on
    /// vectors already inside the subspace.
    DenseMatrix coord_matrix() const {
        DenseMatrix p(dim(), ambient_);
        for (std::size_t k = 0; k < dim(); ++k) p(k, pivots_[k]) = GaussianRational(1);
        return p;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    DenseMatrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Vec> rows;
    rows.reserve(a.dim() + b.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) rows.push_back(a.basis_row(k));
    for (std::size_t k = 0; k < b.dim(); ++k) rows.push_back(b.basis_row(k));
    return Subspace::span(a.ambient_dim(), rows);
}

/// Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry the
/// intersection in their right half.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    const std::size_t n = a.ambient_dim();
    if (n != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
    DenseMatrix block(a.dim() + b.dim(), 2 * n);
    for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t c = 0; c < n; ++c) {
            block(k, c) = a.basis()(k, c);
            block(k, n + c) = a.basis()(k, c);
        }
    for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t c = 0; c < n; ++c) block(a.dim() + k, c) = b.basis()(k, c);
    RrefResult rr = rref(std::move(block));
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (!rr.reduced(r, c).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = rr.reduced(r, n + c);
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, rows);
}

struct AffineSolution {
    std::optional<Vec> particular;
    Subspace nullspace;
};

/// Full solution set of m x = b: canonical particular point plus the kernel.
inline AffineSolution solve_system(const DenseMatrix& m, const Vec& b) {
    LinearSolution ls = solve(m, b);
    AffineSolution out{std::move(ls.particular), Subspace::row_space(ls.kernel)};
    return out;
}

inline Subspace kernel_space(const DenseMatrix& m) {
    return Subspace::row_space(kernel_basis(m));
}

/// Image of a subspace under a linear map given on the ambient space.
inline Subspace apply_to_subspace(const DenseMatrix& m, const Subspace& s) {
    std::vector<Vec> rows;
    rows.reserve(s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) rows.push_back(m.apply(s.basis_row(k)));
    return Subspace::span(m.rows(), rows);
}

}  // namespace pact
