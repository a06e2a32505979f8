#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "block_realization.hpp"
#include "partial_action.hpp"

namespace pact {

/// Deterministic sample source shared by every randomized check, so a report
/// that names its seed is reproducible anywhere. splitmix64 underneath; the
/// standard distributions are not pinned across implementations, so takes
/// residues directly.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::size_t below(std::size_t n) {
        if (n == 0) throw std::invalid_argument("empty range");
        return static_cast<std::size_t>(next() % n);
    }

    /// Small exact scalar: real and imaginary parts in [-3,3] over denominators
    /// up to 3.
    GaussianRational scalar() {
        long num = static_cast<long>(below(7)) - 3;
        long den = static_cast<long>(below(3)) + 1;
        long inum = static_cast<long>(below(7)) - 3;
        long iden = static_cast<long>(below(3)) + 1;
        return GaussianRational::rational(num, den) +
               GaussianRational::i() * GaussianRational::rational(inum, iden);
    }

    Vec element(std::size_t dim) {
        Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = scalar();
        return v;
    }

private:
    std::uint64_t state_;
};

struct NormViolation {
    std::size_t sample = 0;
    std::size_t r = 0, t = 0;
    Vec a;
    double lhs = 0.0, rhs = 0.0;
};

struct NormCheckResult {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<NormViolation> violations;
    double max_slack = 0.0;  // largest lhs - rhs observed; negative means all inside

    bool pass() const { return violations.empty(); }
};

/// Samples the square-difference bound behind continuity of translation: over
/// random r, t and a, the squared norm of moving a through rt versus r is at
/// most 2 |a| (|a - back-and-forth through t| + |a - back-and-forth through
/// inv(t)|). Needs every domain unital and a valid realization for the norm;
/// throws otherwise. Floating point enters only through the norms, so a fixed
/// tolerance of 1e-9 absorbs the roundoff.
inline NormCheckResult norm_inequality_check(const PartialAction& pa,
                                             const BlockRealization& real, std::size_t samples,
                                             std::uint64_t seed) {
    const StarAlgebra& alg = pa.algebra;
    const Group& g = pa.group;
    const std::size_t n = g.order;
    const std::size_t d = alg.dim();

    std::vector<Vec> unit(n);
    for (std::size_t t = 0; t < n; ++t) {
        auto u = unit_of(alg, pa.domains[t]);
        if (!u) throw std::invalid_argument("domain at t=" + std::to_string(t) + " has no unit");
        unit[t] = *u;
    }
    Report rr = check_realization(alg, real);
    if (!rr.pass()) throw std::invalid_argument("realization rejected: " + rr.summary());

    constexpr double tol = 1e-9;
    SampleStream rng(seed);
    NormCheckResult out;
    out.samples = samples;
    out.seed = seed;
    out.max_slack = -std::numeric_limits<double>::infinity();
    if (samples == 0) out.max_slack = 0.0;

    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t r = rng.below(n);
        std::size_t t = rng.below(n);
        Vec a = rng.element(d);

        const std::size_t rt = g.op(r, t);
        Vec diff = vec_sub(pa.apply(rt, alg.mul(unit[g.inv(rt)], a)),
                           pa.apply(r, alg.mul(unit[g.inv(r)], a)));
        double moved = cstar_norm(real, diff);
        double lhs = moved * moved;

        double na = cstar_norm(real, a);
        double d1 = cstar_norm(real, vec_sub(a, pa.apply(g.inv(t), alg.mul(unit[t], a))));
        double d2 = cstar_norm(real, vec_sub(a, pa.apply(t, alg.mul(unit[g.inv(t)], a))));
        double rhs = 2.0 * na * (d1 + d2);

        if (lhs - rhs > out.max_slack) out.max_slack = lhs - rhs;
        if (lhs > rhs + tol) out.violations.push_back({s, r, t, std::move(a), lhs, rhs});
    }
    return out;
}

}  // namespace pact
