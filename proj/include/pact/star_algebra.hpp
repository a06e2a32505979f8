#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "report.hpp"
#include "subspace.hpp"

namespace pact {

/// Finite-dimensional associative algebra over Q(i) with a conjugate-linear
/// involution, both given on a fixed basis: structure[i][j][k] is the e_k
/// coefficient of e_i e_j, and row i of the involution matrix holds the
/// coefficients of (e_i)*. Neither associativity nor the involution axioms
/// are assumed here; check_star_algebra decides them.
class StarAlgebra {
public:
    StarAlgebra(std::size_t dim, std::vector<GaussianRational> structure, DenseMatrix involution)
        : dim_(dim), sc_(std::move(structure)), inv_(std::move(involution)) {
        if (sc_.size() != dim_ * dim_ * dim_)
            throw std::invalid_argument("structure tensor must have dim^3 entries");
        if (inv_.rows() != dim_ || inv_.cols() != dim_)
            throw std::invalid_argument("involution matrix must be dim x dim");
        // star(x) = C conj(x) with C the transpose of the row-form matrix.
        conj_mat_ = inv_.transpose();
    }

    std::size_t dim() const { return dim_; }

    const GaussianRational& sc(std::size_t i, std::size_t j, std::size_t k) const {
        return sc_[(i * dim_ + j) * dim_ + k];
    }

    const DenseMatrix& involution() const { return inv_; }

    /// Matrix C with star(x) = C conj(x) on coefficient columns.
    const DenseMatrix& star_matrix() const { return conj_mat_; }

    Vec basis(std::size_t k) const { return unit_vec(dim_, k); }

    Vec mul(const Vec& a, const Vec& b) const {
        if (a.size() != dim_ || b.size() != dim_)
            throw std::invalid_argument("element dimension mismatch");
        Vec out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                const GaussianRational f = a[i] * b[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const auto& c = sc(i, j, k);
                    if (!c.is_zero()) out[k] += f * c;
                }
            }
        }
        return out;
    }

    Vec star(const Vec& a) const {
        if (a.size() != dim_) throw std::invalid_argument("element dimension mismatch");
        return conj_mat_.apply(vec_conj(a));
    }

    /// Matrix of x -> a x.
    DenseMatrix left_mult(const Vec& a) const {
        DenseMatrix m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    const auto& c = sc(i, j, k);
                    if (!c.is_zero()) m(k, j) += a[i] * c;
                }
        }
        return m;
    }

    /// Matrix of x -> x a.
    DenseMatrix right_mult(const Vec& a) const {
        DenseMatrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (a[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t k = 0; k < dim_; ++k) {
                    const auto& c = sc(i, j, k);
                    if (!c.is_zero()) m(k, i) += a[j] * c;
                }
        }
        return m;
    }

    /// Two-sided unit of the whole algebra, if one exists.
    std::optional<Vec> unit() const;

private:
    std::size_t dim_;
    std::vector<GaussianRational> sc_;
    DenseMatrix inv_;
    DenseMatrix conj_mat_;
};

/// Element bound to its algebra; arithmetic refuses to mix algebras.
class Element {
public:
    Element(const StarAlgebra& alg, Vec coeffs) : alg_(&alg), c_(std::move(coeffs)) {
        if (c_.size() != alg.dim()) throw std::invalid_argument("element dimension mismatch");
    }

    const Vec& coeffs() const { return c_; }
    const StarAlgebra& algebra() const { return *alg_; }

    Element star() const { return Element(*alg_, alg_->star(c_)); }
    bool is_zero() const { return vec_is_zero(c_); }

    friend Element operator*(const Element& a, const Element& b) {
        a.require_same(b);
        return Element(*a.alg_, a.alg_->mul(a.c_, b.c_));
    }
    friend Element operator+(const Element& a, const Element& b) {
        a.require_same(b);
        return Element(*a.alg_, vec_add(a.c_, b.c_));
    }
    friend Element operator-(const Element& a, const Element& b) {
        a.require_same(b);
        return Element(*a.alg_, vec_sub(a.c_, b.c_));
    }
    friend Element operator*(const GaussianRational& f, const Element& a) {
        return Element(*a.alg_, vec_scale(f, a.c_));
    }
    friend bool operator==(const Element& a, const Element& b) {
        a.require_same(b);
        return a.c_ == b.c_;
    }

private:
    void require_same(const Element& other) const {
        if (alg_ != other.alg_) throw std::invalid_argument("elements of different algebras");
    }
    const StarAlgebra* alg_;
    Vec c_;
};

namespace detail {

inline std::string idx_witness(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& [name, value] : parts) {
        if (!first) os << ",";
        os << name << "=" << value;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace detail

/// Associativity via L_{e_i e_j} = L_{e_i} L_{e_j}, involution via the axioms
/// on basis elements. Witnesses are the lexicographically first failing index
/// tuples.
inline Report check_star_algebra(const StarAlgebra& alg) {
    Report rep;
    const std::size_t d = alg.dim();
    std::vector<DenseMatrix> lmul(d);
    for (std::size_t i = 0; i < d; ++i) lmul[i] = alg.left_mult(alg.basis(i));
    for (std::size_t i = 0; i < d && !rep.has("algebra-associativity"); ++i)
        for (std::size_t j = 0; j < d && !rep.has("algebra-associativity"); ++j) {
            Vec prod = alg.mul(alg.basis(i), alg.basis(j));
            DenseMatrix lhs = alg.left_mult(prod);
            DenseMatrix rhs = lmul[i] * lmul[j];
            if (lhs == rhs) continue;
            for (std::size_t k = 0; k < d && !rep.has("algebra-associativity"); ++k)
                for (std::size_t m = 0; m < d; ++m)
                    if (lhs(m, k) != rhs(m, k)) {
                        rep.add("algebra-associativity",
                                detail::idx_witness({{"i", i}, {"j", j}, {"k", k}, {"coef", m}}));
                        break;
                    }
        }
    for (std::size_t i = 0; i < d; ++i) {
        Vec ss = alg.star(alg.star(alg.basis(i)));
        if (ss != alg.basis(i)) {
            rep.add_once("algebra-involutive", detail::idx_witness({{"i", i}}));
            break;
        }
    }
    for (std::size_t i = 0; i < d && !rep.has("algebra-star-antimultiplicative"); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs = alg.star(alg.mul(alg.basis(i), alg.basis(j)));
            Vec rhs = alg.mul(alg.star(alg.basis(j)), alg.star(alg.basis(i)));
            if (lhs != rhs) {
                rep.add("algebra-star-antimultiplicative",
                        detail::idx_witness({{"i", i}, {"j", j}}));
                break;
            }
        }
    return rep;
}

inline std::optional<Vec> StarAlgebra::unit() const {
    // Solve u e_j = e_j and e_j u = e_j for all j.
    DenseMatrix sys(2 * dim_ * dim_, dim_);
    Vec rhs(2 * dim_ * dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        DenseMatrix r = right_mult(basis(j));  // u -> u e_j
        DenseMatrix l = left_mult(basis(j));   // u -> e_j u
        for (std::size_t k = 0; k < dim_; ++k) {
            for (std::size_t c = 0; c < dim_; ++c) {
                sys((2 * j) * dim_ + k, c) = r(k, c);
                sys((2 * j + 1) * dim_ + k, c) = l(k, c);
            }
            rhs[(2 * j) * dim_ + k] = basis(j)[k];
            rhs[(2 * j + 1) * dim_ + k] = basis(j)[k];
        }
    }
    return solve(sys, rhs).particular;
}

/// Two-sided ideal of a StarAlgebra, recorded by its span. Construct through
/// verify_ideal so the ideal property has actually been checked.
struct Ideal {
    Subspace space;
};

inline Report check_ideal(const StarAlgebra& alg, const Subspace& space) {
    Report rep;
    if (space.ambient_dim() != alg.dim()) throw std::invalid_argument("ideal ambient mismatch");
    for (std::size_t k = 0; k < space.dim(); ++k) {
        Vec v = space.basis_row(k);
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (!space.contains(alg.mul(alg.basis(j), v)))
                rep.add_once("ideal-left-absorbing", detail::idx_witness({{"j", j}, {"k", k}}));
            if (!space.contains(alg.mul(v, alg.basis(j))))
                rep.add_once("ideal-right-absorbing", detail::idx_witness({{"j", j}, {"k", k}}));
        }
    }
    return rep;
}

inline std::optional<Ideal> verify_ideal(const StarAlgebra& alg, const Subspace& space) {
    if (!check_ideal(alg, space).pass()) return std::nullopt;
    return Ideal{space};
}

/// {a : a v = v a = 0 for all v in the span}.
inline Subspace annihilator(const StarAlgebra& alg, const Subspace& space) {
    const std::size_t d = alg.dim();
    DenseMatrix sys(2 * space.dim() * d, d);
    for (std::size_t k = 0; k < space.dim(); ++k) {
        Vec v = space.basis_row(k);
        DenseMatrix r = alg.right_mult(v);  // a -> a v
        DenseMatrix l = alg.left_mult(v);   // a -> v a
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t c = 0; c < d; ++c) {
                sys((2 * k) * d + i, c) = r(i, c);
                sys((2 * k + 1) * d + i, c) = l(i, c);
            }
    }
    return kernel_space(sys);
}

inline Subspace annihilator(const StarAlgebra& alg, const Ideal& ideal) {
    return annihilator(alg, ideal.space);
}

/// Unit of an ideal as a subalgebra: u in the span with u v = v u = v on the
/// span. For an ideal of an associative algebra such a unit is automatically
/// unique and central in the ideal; both facts are asserted, and violations
/// throw std::logic_error because they mean the input was not a verified
/// ideal.
inline std::optional<Vec> unit_of(const StarAlgebra& alg, const Subspace& space) {
    const std::size_t d = alg.dim();
    const std::size_t m = space.dim();
    if (m == 0) return Vec(d);  // the zero algebra is unital with unit 0
    DenseMatrix lift = space.lift_matrix();  // d x m
    DenseMatrix sys(2 * m * d, m);
    Vec rhs(2 * m * d);
    for (std::size_t k = 0; k < m; ++k) {
        Vec v = space.basis_row(k);
        DenseMatrix r = alg.right_mult(v) * lift;  // c -> lift(c) v
        DenseMatrix l = alg.left_mult(v) * lift;   // c -> v lift(c)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t c = 0; c < m; ++c) {
                sys((2 * k) * d + i, c) = r(i, c);
                sys((2 * k + 1) * d + i, c) = l(i, c);
            }
        for (std::size_t i = 0; i < d; ++i) {
            rhs[(2 * k) * d + i] = v[i];
            rhs[(2 * k + 1) * d + i] = v[i];
        }
    }
    LinearSolution ls = solve(sys, rhs);
    if (!ls.particular) return std::nullopt;
    if (ls.kernel.rows() != 0) throw std::logic_error("ideal unit is not unique");
    Vec u = space.lift(*ls.particular);
    for (std::size_t k = 0; k < m; ++k) {
        Vec v = space.basis_row(k);
        if (alg.mul(u, v) != alg.mul(v, u))
            throw std::logic_error("ideal unit is not central in the ideal");
    }
    return u;
}

inline std::optional<Vec> unit_of(const StarAlgebra& alg, const Ideal& ideal) {
    return unit_of(alg, ideal.space);
}

/// Multiplier of a subalgebra I, expressed in the coordinates of its span:
/// left(x) plays a x, right(x) plays x a.
struct MultiplierPair {
    DenseMatrix left, right;

    friend MultiplierPair operator*(const MultiplierPair& m, const MultiplierPair& n) {
        // (m n) x = m (n x), x (m n) = (x m) n.
        return {m.left * n.left, n.right * m.right};
    }
    friend MultiplierPair operator+(const MultiplierPair& m, const MultiplierPair& n) {
        return {m.left + n.left, m.right + n.right};
    }
    friend MultiplierPair operator-(const MultiplierPair& m, const MultiplierPair& n) {
        return {m.left - n.left, m.right - n.right};
    }
    friend bool operator==(const MultiplierPair& m, const MultiplierPair& n) {
        return m.left == n.left && m.right == n.right;
    }
    bool is_zero() const { return left.is_zero() && right.is_zero(); }
};

/// The pair (x -> a x, x -> x a) restricted to the span of an ideal
/// containing a's products, in span coordinates.
inline MultiplierPair ideal_multiplier(const StarAlgebra& alg, const Subspace& space,
                                       const Vec& a) {
    DenseMatrix lift = space.lift_matrix();
    DenseMatrix proj = space.coord_matrix();
    MultiplierPair m{proj * (alg.left_mult(a) * lift), proj * (alg.right_mult(a) * lift)};
    // coord_matrix is only a projection on members of the span; confirm the
    // products really landed inside.
    for (std::size_t k = 0; k < space.dim(); ++k) {
        Vec v = space.basis_row(k);
        if (!space.contains(alg.mul(a, v)) || !space.contains(alg.mul(v, a)))
            throw std::invalid_argument("element does not multiply the span into itself");
    }
    return m;
}

/// Multiplier identities over the subalgebra spanned by `space`:
/// L(xy) = L(x)y, R(xy) = xR(y), xL(y) = R(x)y.
inline Report check_multiplier(const StarAlgebra& alg, const Subspace& space,
                               const MultiplierPair& m) {
    Report rep;
    const std::size_t n = space.dim();
    if (m.left.rows() != n || m.left.cols() != n || m.right.rows() != n || m.right.cols() != n)
        throw std::invalid_argument("multiplier dimension mismatch");
    auto prod_coords = [&](const Vec& x, const Vec& y) {
        auto c = space.coords(alg.mul(x, y));
        if (!c) throw std::invalid_argument("span is not closed under products");
        return *c;
    };
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Vec x = space.basis_row(k);
            Vec y = space.basis_row(l);
            Vec xy = prod_coords(x, y);
            if (m.left.apply(xy) != prod_coords(space.lift(m.left.apply(space.coords(x).value())), y))
                rep.add_once("multiplier-left", detail::idx_witness({{"k", k}, {"l", l}}));
            if (m.right.apply(xy) != prod_coords(x, space.lift(m.right.apply(space.coords(y).value()))))
                rep.add_once("multiplier-right", detail::idx_witness({{"k", k}, {"l", l}}));
            Vec lhs = prod_coords(x, space.lift(m.left.apply(space.coords(y).value())));
            Vec rhs = prod_coords(space.lift(m.right.apply(space.coords(x).value())), y);
            if (lhs != rhs) rep.add_once("multiplier-balance", detail::idx_witness({{"k", k}, {"l", l}}));
        }
    return rep;
}

/// Structure of a product- and star-closed subspace as a StarAlgebra in the
/// subspace's own coordinates, together with the change of coordinates.
struct SubalgebraView {
    StarAlgebra algebra;
    Subspace space;

    Vec lift(const Vec& c) const { return space.lift(c); }
    Vec project(const Vec& v) const {
        auto c = space.coords(v);
        if (!c) throw std::invalid_argument("vector outside subalgebra");
        return *c;
    }
};

inline SubalgebraView subalgebra(const StarAlgebra& alg, const Subspace& space) {
    const std::size_t m = space.dim();
    std::vector<GaussianRational> sc(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto c = space.coords(alg.mul(space.basis_row(i), space.basis_row(j)));
            if (!c) throw std::invalid_argument("subspace is not closed under products");
            for (std::size_t k = 0; k < m; ++k) sc[(i * m + j) * m + k] = (*c)[k];
        }
    DenseMatrix inv(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        auto c = space.coords(alg.star(space.basis_row(i)));
        if (!c) throw std::invalid_argument("subspace is not closed under star");
        inv.set_row(i, *c);
    }
    return SubalgebraView{StarAlgebra(m, std::move(sc), std::move(inv)), space};
}

}  // namespace pact
