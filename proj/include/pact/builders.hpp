#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "block_realization.hpp"
#include "star_algebra.hpp"

namespace pact {

/// C^n with pointwise product and conjugation as star.
inline StarAlgebra diagonal_algebra(std::size_t n) {
    std::vector<GaussianRational> sc(n * n * n);
    for (std::size_t i = 0; i < n; ++i) sc[(i * n + i) * n + i] = GaussianRational(1);
    return StarAlgebra(n, std::move(sc), DenseMatrix::identity(n));
}

/// Full matrix algebra M_n with basis E_{ab} at index a n + b and the usual
/// adjoint as star.
inline StarAlgebra matrix_algebra(std::size_t n) {
    const std::size_t d = n * n;
    std::vector<GaussianRational> sc(d * d * d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t i = a * n + b, j = b * n + c, k = a * n + c;
                sc[(i * d + j) * d + k] = GaussianRational(1);
            }
    DenseMatrix inv(d, d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) inv(a * n + b, b * n + a) = GaussianRational(1);
    return StarAlgebra(d, std::move(sc), std::move(inv));
}

inline StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da + db;
    std::vector<GaussianRational> sc(d * d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) sc[(i * d + j) * d + k] = a.sc(i, j, k);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k)
                sc[((da + i) * d + da + j) * d + da + k] = b.sc(i, j, k);
    DenseMatrix inv(d, d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < da; ++k) inv(i, k) = a.involution()(i, k);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t k = 0; k < db; ++k) inv(da + i, da + k) = b.involution()(i, k);
    return StarAlgebra(d, std::move(sc), std::move(inv));
}

/// Direct sum of full matrix algebras M_{n_1} + ... + M_{n_r} with basis all
/// matrix units, block by block; matches the basis order produced by folding
/// matrix_algebra with direct_sum.
inline StarAlgebra multi_matrix_algebra(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("at least one block required");
    StarAlgebra acc = matrix_algebra(sizes[0]);
    for (std::size_t k = 1; k < sizes.size(); ++k) acc = direct_sum(acc, matrix_algebra(sizes[k]));
    return acc;
}

/// The tautological realization of multi_matrix_algebra(sizes): basis element
/// (block t, unit E_{ab}) maps to E_{ab} in block t and zero elsewhere.
inline BlockRealization matrix_units_realization(const std::vector<std::size_t>& sizes) {
    BlockRealization real;
    real.block_sizes = sizes;
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        const std::size_t n = sizes[t];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<Eigen::MatrixXcd> blocks;
                for (std::size_t u = 0; u < sizes.size(); ++u)
                    blocks.push_back(Eigen::MatrixXcd::Zero(
                        static_cast<Eigen::Index>(sizes[u]), static_cast<Eigen::Index>(sizes[u])));
                blocks[t](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = 1.0;
                real.images.push_back(std::move(blocks));
            }
    }
    return real;
}

}  // namespace pact
