#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "group.hpp"
#include "report.hpp"
#include "star_algebra.hpp"

namespace pact {

/// Multiplier of the function algebra A^G that treats every slot on its own:
/// (T f)(r) = left[r] f(r) and (f T)(r) = right[r] f(r). Every multiplier
/// this library ever produces has that shape, because the inclusion of A and
/// all its translates do, and the shape is closed under sums, products,
/// translation and adjoints.
struct GMultiplier {
    std::vector<DenseMatrix> left, right;

    GMultiplier() = default;
    GMultiplier(std::size_t slots, std::size_t dim)
        : left(slots, DenseMatrix(dim, dim)), right(slots, DenseMatrix(dim, dim)) {}

    static GMultiplier one(std::size_t slots, std::size_t dim) {
        GMultiplier m(slots, dim);
        for (std::size_t r = 0; r < slots; ++r)
            m.left[r] = m.right[r] = DenseMatrix::identity(dim);
        return m;
    }

    std::size_t slots() const { return left.size(); }
    std::size_t dim() const { return left.empty() ? 0 : left[0].rows(); }

    bool is_zero() const {
        for (const auto& b : left)
            if (!b.is_zero()) return false;
        for (const auto& b : right)
            if (!b.is_zero()) return false;
        return true;
    }

    friend GMultiplier operator*(const GMultiplier& m, const GMultiplier& n) {
        // (m n) f = m (n f) and f (m n) = (f m) n, slot by slot.
        GMultiplier out(m.slots(), m.dim());
        for (std::size_t r = 0; r < m.slots(); ++r) {
            out.left[r] = m.left[r] * n.left[r];
            out.right[r] = n.right[r] * m.right[r];
        }
        return out;
    }
    friend GMultiplier operator+(const GMultiplier& m, const GMultiplier& n) {
        GMultiplier out(m.slots(), m.dim());
        for (std::size_t r = 0; r < m.slots(); ++r) {
            out.left[r] = m.left[r] + n.left[r];
            out.right[r] = m.right[r] + n.right[r];
        }
        return out;
    }
    friend GMultiplier operator-(const GMultiplier& m, const GMultiplier& n) {
        GMultiplier out(m.slots(), m.dim());
        for (std::size_t r = 0; r < m.slots(); ++r) {
            out.left[r] = m.left[r] - n.left[r];
            out.right[r] = m.right[r] - n.right[r];
        }
        return out;
    }
    friend GMultiplier operator*(const GaussianRational& c, const GMultiplier& m) {
        GMultiplier out(m.slots(), m.dim());
        for (std::size_t r = 0; r < m.slots(); ++r) {
            out.left[r] = c * m.left[r];
            out.right[r] = c * m.right[r];
        }
        return out;
    }
    friend bool operator==(const GMultiplier& m, const GMultiplier& n) {
        return m.left == n.left && m.right == n.right;
    }
    friend bool operator!=(const GMultiplier& m, const GMultiplier& n) { return !(m == n); }
};

/// Conjugation by the shift f(r) -> f(inv(s) r): the block that used to sit
/// at slot inv(s) r ends up at slot r. This is how the group acts on
/// multipliers of A^G.
inline GMultiplier translate(const GMultiplier& m, const Group& g, std::size_t s) {
    if (m.slots() != g.order) throw std::invalid_argument("slot count differs from group order");
    GMultiplier out(m.slots(), m.dim());
    const std::size_t si = g.inv(s);
    for (std::size_t r = 0; r < m.slots(); ++r) {
        const std::size_t src = g.op(si, r);
        out.left[r] = m.left[src];
        out.right[r] = m.right[src];
    }
    return out;
}

/// Star of a multiplier: (T* f) = (f* T)* slotwise, so the left block is the
/// old right block conjugated by the involution, and vice versa.
inline GMultiplier adjoint(const GMultiplier& m, const StarAlgebra& alg) {
    if (m.dim() != alg.dim()) throw std::invalid_argument("block size differs from algebra");
    const DenseMatrix& c = alg.star_matrix();
    GMultiplier out(m.slots(), m.dim());
    for (std::size_t r = 0; r < m.slots(); ++r) {
        out.left[r] = c * (m.right[r] * c).conjugate();
        out.right[r] = c * (m.left[r] * c).conjugate();
    }
    return out;
}

/// T f for a function given slot major: f[r*dim .. r*dim+dim) is f(r).
inline Vec apply_left(const GMultiplier& m, const Vec& f) {
    const std::size_t d = m.dim();
    if (f.size() != m.slots() * d) throw std::invalid_argument("function length mismatch");
    Vec out(f.size());
    for (std::size_t r = 0; r < m.slots(); ++r) {
        Vec fr(f.begin() + static_cast<std::ptrdiff_t>(r * d),
               f.begin() + static_cast<std::ptrdiff_t>((r + 1) * d));
        Vec v = m.left[r].apply(fr);
        for (std::size_t i = 0; i < d; ++i) out[r * d + i] = v[i];
    }
    return out;
}

/// f T, slot major as above.
inline Vec apply_right(const GMultiplier& m, const Vec& f) {
    const std::size_t d = m.dim();
    if (f.size() != m.slots() * d) throw std::invalid_argument("function length mismatch");
    Vec out(f.size());
    for (std::size_t r = 0; r < m.slots(); ++r) {
        Vec fr(f.begin() + static_cast<std::ptrdiff_t>(r * d),
               f.begin() + static_cast<std::ptrdiff_t>((r + 1) * d));
        Vec v = m.right[r].apply(fr);
        for (std::size_t i = 0; i < d; ++i) out[r * d + i] = v[i];
    }
    return out;
}

/// Coordinates in the fixed basis of slot diagonal multipliers: left blocks
/// slot by slot in row major order, then right blocks the same way. Linear
/// algebra over spans of multipliers happens in this picture.
inline Vec flatten(const GMultiplier& m) {
    const std::size_t d = m.dim();
    Vec out(2 * m.slots() * d * d);
    std::size_t p = 0;
    for (const auto& b : m.left)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out[p++] = b(i, j);
    for (const auto& b : m.right)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out[p++] = b(i, j);
    return out;
}

inline GMultiplier unflatten(std::size_t slots, std::size_t dim, const Vec& v) {
    if (v.size() != 2 * slots * dim * dim)
        throw std::invalid_argument("flattened multiplier has the wrong length");
    GMultiplier m(slots, dim);
    std::size_t p = 0;
    for (auto& b : m.left)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) b(i, j) = v[p++];
    for (auto& b : m.right)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) b(i, j) = v[p++];
    return m;
}

/// Multiplier identities of T over A^G, slot by slot: T(fg) = T(f)g,
/// (fg)T = f(gT) and f T(g) = (fT) g. Bilinearity reduces everything to
/// basis elements concentrated in one slot.
inline Report check_gmultiplier(const StarAlgebra& alg, const GMultiplier& m) {
    Report rep;
    const std::size_t d = alg.dim();
    if (m.dim() != d) throw std::invalid_argument("block size differs from algebra");
    for (std::size_t b = 0; b < d; ++b) {
        DenseMatrix lb = alg.left_mult(alg.basis(b));
        DenseMatrix rb = alg.right_mult(alg.basis(b));
        for (std::size_t r = 0; r < m.slots(); ++r) {
            if (m.left[r] * rb != rb * m.left[r])
                rep.add_once("gmultiplier-left", detail::idx_witness({{"r", r}, {"b", b}}));
            if (m.right[r] * lb != lb * m.right[r])
                rep.add_once("gmultiplier-right", detail::idx_witness({{"r", r}, {"b", b}}));
            if (lb * m.left[r] != alg.left_mult(m.right[r].apply(alg.basis(b))))
                rep.add_once("gmultiplier-balance", detail::idx_witness({{"r", r}, {"b", b}}));
        }
    }
    return rep;
}

}  // namespace pact
