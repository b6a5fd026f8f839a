#pragma once

// Independent brute-force polynomial arithmetic used as the oracle for the
// truncated series engine. No degree caps: plain map-based dense products
// bounded by total degree only, so it shares no code path with MultiSeries.

#include <array>
#include <map>
#include <complex>

#include "ngmzi/series.hpp"

namespace naive {

using Key = std::array<int, 4>;
using Poly = std::map<Key, std::complex<double>>;

inline int total_degree(const Key& k) { return k[0] + k[1] + k[2] + k[3]; }

inline Poly multiply(const Poly& a, const Poly& b, int max_total_degree) {
    Poly out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            const Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
            if (total_degree(k) > max_total_degree) continue;
            out[k] += va * vb;
        }
    return out;
}

inline Poly from_exponent(const ngmzi::QuadExponent& e) {
    Poly q;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (e.M(i, j) == std::complex<double>{}) continue;
            Key k{0, 0, 0, 0};
            k[static_cast<std::size_t>(i)] += 1;
            k[static_cast<std::size_t>(j)] += 1;
            q[k] += e.M(i, j);
        }
        if (e.L[static_cast<std::size_t>(i)] != std::complex<double>{}) {
            Key k{0, 0, 0, 0};
            k[static_cast<std::size_t>(i)] = 1;
            q[k] += e.L[static_cast<std::size_t>(i)];
        }
    }
    return q;
}

/// exp(q) term by term up to the given total degree; exact for every
/// monomial whose total degree stays within the bound.
inline Poly exp_poly(const Poly& q, int max_total_degree) {
    Poly result{{Key{0, 0, 0, 0}, 1.0}};
    Poly term = result;
    for (int k = 1; k <= max_total_degree; ++k) {
        term = multiply(term, q, max_total_degree);
        for (auto& [key, v] : term) v /= static_cast<double>(k);
        Poly next = result;
        for (const auto& [key, v] : term) next[key] += v;
        result = std::move(next);
    }
    return result;
}

inline std::complex<double> coeff(const Poly& p, int i, int j, int k, int l) {
    const auto it = p.find(Key{i, j, k, l});
    return it == p.end() ? std::complex<double>{} : it->second;
}

} // namespace naive
