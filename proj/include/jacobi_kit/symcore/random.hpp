#pragma once

#include <cstdint>

#include "jacobi_kit/symcore/expr.hpp"

namespace jacobi_kit::symcore {

/// splitmix64: tiny, fully specified, identical everywhere. Used instead
/// of <random> distributions so that reports are byte-identical across
/// standard library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; bias is irrelevant here.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Mix a stream index into a seed so independent draws decorrelate.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x517cc1b727220a95ull * (stream + 1)));
    return g.next();
}

/// Deterministic-for-seed dense polynomial with coefficients in [-3, 3]
/// and total degree <= degree. Same seed, same chart, same degree gives a
/// structurally identical expression.
inline Expr random_poly(const Chart& chart, unsigned degree, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Polynomial p(chart);
    Monomial m(chart.dim(), 0);
    // Enumerate all monomials of total degree <= degree in a fixed order.
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var + 1 == chart.dim()) {
            for (std::uint32_t e = 0; e <= remaining; ++e) {
                m[var] = e;
                long long c = rng.range(-3, 3);
                if (c != 0) p.add_term(m, Rational(c));
            }
            m[var] = 0;
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            m[var] = e;
            self(self, var + 1, remaining - e);
        }
        m[var] = 0;
    };
    rec(rec, 0, degree);
    return Expr(std::move(p));
}

/// First seed at or after `seed` whose polynomial is not identically zero.
inline Expr random_nonzero_poly(const Chart& chart, unsigned degree, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        Expr e = random_poly(chart, degree, s);
        if (!e.is_zero()) return e;
    }
}

}  // namespace jacobi_kit::symcore
