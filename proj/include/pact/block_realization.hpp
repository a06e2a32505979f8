#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "report.hpp"
#include "star_algebra.hpp"

namespace pact {

/// Concrete picture of a StarAlgebra as block-diagonal complex matrices: one
/// image list per basis element, one matrix per block. Supplies the operator
/// norm that the abstract side has no access to.
struct BlockRealization {
    std::vector<std::size_t> block_sizes;
    std::vector<std::vector<Eigen::MatrixXcd>> images;  // images[basis][block]

    Eigen::MatrixXcd realize_block(const Vec& a, std::size_t block) const {
        const std::size_t n = block_sizes.at(block);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            std::complex<double> f = a[i].to_complex();
            m += f * images.at(i).at(block);
        }
        return m;
    }
};

/// Checks that the images define a *-homomorphism up to tol in max absolute
/// entry: multiplicativity, star to adjoint, and injectivity on the span
/// (numerical rank of the stacked images).
inline Report check_realization(const StarAlgebra& alg, const BlockRealization& real,
                                double tol = 1e-9) {
    Report rep;
    const std::size_t d = alg.dim();
    const std::size_t nb = real.block_sizes.size();
    if (real.images.size() != d) {
        rep.add("realization-shape", "one image list per basis element required");
        return rep;
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (real.images[i].size() != nb) {
            rep.add("realization-shape", "basis element " + std::to_string(i));
            return rep;
        }
        for (std::size_t b = 0; b < nb; ++b) {
            const auto& m = real.images[i][b];
            if (m.rows() != static_cast<Eigen::Index>(real.block_sizes[b]) ||
                m.cols() != static_cast<Eigen::Index>(real.block_sizes[b])) {
                rep.add("realization-shape",
                        "block " + std::to_string(b) + " of basis element " + std::to_string(i));
                return rep;
            }
        }
    }
    auto max_abs = [](const Eigen::MatrixXcd& m) {
        return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
    };
    for (std::size_t i = 0; i < d && !rep.has("realization-multiplicative"); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec prod = alg.mul(alg.basis(i), alg.basis(j));
            bool bad = false;
            for (std::size_t b = 0; b < nb; ++b) {
                Eigen::MatrixXcd lhs = real.images[i][b] * real.images[j][b];
                Eigen::MatrixXcd rhs = real.realize_block(prod, b);
                if (max_abs(lhs - rhs) > tol) {
                    bad = true;
                    break;
                }
            }
            if (bad) {
                rep.add("realization-multiplicative",
                        detail::idx_witness({{"i", i}, {"j", j}}));
                break;
            }
        }
    for (std::size_t i = 0; i < d; ++i) {
        Vec st = alg.star(alg.basis(i));
        bool bad = false;
        for (std::size_t b = 0; b < nb; ++b)
            if (max_abs(real.images[i][b].adjoint() - real.realize_block(st, b)) > tol) {
                bad = true;
                break;
            }
        if (bad) {
            rep.add_once("realization-star", detail::idx_witness({{"i", i}}));
            break;
        }
    }
    // Injectivity: stack all blocks of all images into rows and rank-check.
    std::size_t total = 0;
    for (std::size_t b = 0; b < nb; ++b) total += real.block_sizes[b] * real.block_sizes[b];
    if (total > 0 && d > 0) {
        Eigen::MatrixXcd stacked(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(total));
        for (std::size_t i = 0; i < d; ++i) {
            Eigen::Index col = 0;
            for (std::size_t b = 0; b < nb; ++b) {
                const auto& m = real.images[i][b];
                for (Eigen::Index r = 0; r < m.rows(); ++r)
                    for (Eigen::Index c = 0; c < m.cols(); ++c) stacked(i, col++) = m(r, c);
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
        svd.setThreshold(tol);
        if (static_cast<std::size_t>(svd.rank()) != d)
            rep.add("realization-injective",
                    "numerical rank " + std::to_string(svd.rank()) + " of " + std::to_string(d));
    }
    return rep;
}

/// Operator norm of a on a validated realization: the largest singular value
/// over all blocks.
inline double cstar_norm(const BlockRealization& real, const Vec& a) {
    double best = 0.0;
    for (std::size_t b = 0; b < real.block_sizes.size(); ++b) {
        if (real.block_sizes[b] == 0) continue;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(real.realize_block(a, b));
        double s = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        if (s > best) best = s;
    }
    return best;
}

}  // namespace pact
