#include "ngmzi/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ngmzi {

namespace {

constexpr std::size_t kMaxCoeffStorage = std::size_t{1} << 26;

std::size_t storage_size(DegreeCaps caps) {
    const auto a = static_cast<std::size_t>(caps.d1) + 1;
    const auto b = static_cast<std::size_t>(caps.d2) + 1;
    return a * a * b * b;
}

} // namespace

MultiSeries::MultiSeries(DegreeCaps caps) : caps_(caps) {
    if (caps.d1 < 0 || caps.d2 < 0)
        throw std::invalid_argument("MultiSeries: negative degree cap");
    if (caps.d1 > 4096 || caps.d2 > 4096) // keeps storage_size below overflow
        throw std::length_error("MultiSeries: degree caps far beyond any dense budget");
    const std::size_t n = storage_size(caps);
    if (n > kMaxCoeffStorage)
        throw std::length_error("MultiSeries: coefficient storage for caps (" +
                                std::to_string(caps.d1) + ", " + std::to_string(caps.d2) +
                                ") exceeds the dense-array budget");
    c_.assign(n, cdouble{});
}

std::size_t MultiSeries::index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * (caps_.d1 + 1) + j) * (caps_.d2 + 1) + k) *
               (caps_.d2 + 1) +
           l;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
    if (other.caps_.d1 != caps_.d1 || other.caps_.d2 != caps_.d2)
        throw std::invalid_argument("MultiSeries: cap mismatch in +=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
}

MultiSeries& MultiSeries::operator*=(cdouble scale) {
    for (auto& x : c_) x *= scale;
    return *this;
}

MultiSeries operator*(const MultiSeries& lhs, const MultiSeries& rhs) {
    if (lhs.caps_.d1 != rhs.caps_.d1 || lhs.caps_.d2 != rhs.caps_.d2)
        throw std::invalid_argument("MultiSeries: cap mismatch in *");
    const int d1 = lhs.caps_.d1;
    const int d2 = lhs.caps_.d2;
    MultiSeries out(lhs.caps_);

    // Collect the sparse factor's nonzeros once; exponent polynomials have
    // at most 20 monomials, so this dominates nothing.
    struct Term {
        int i, j, k, l;
        cdouble v;
    };
    std::vector<Term> terms;
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d1; ++j)
            for (int k = 0; k <= d2; ++k)
                for (int l = 0; l <= d2; ++l) {
                    const cdouble v = rhs.coeff(i, j, k, l);
                    if (v != cdouble{}) terms.push_back({i, j, k, l, v});
                }

    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d1; ++j)
            for (int k = 0; k <= d2; ++k)
                for (int l = 0; l <= d2; ++l) {
                    const cdouble v = lhs.coeff(i, j, k, l);
                    if (v == cdouble{}) continue;
                    for (const Term& t : terms) {
                        const int ii = i + t.i;
                        const int jj = j + t.j;
                        const int kk = k + t.k;
                        const int ll = l + t.l;
                        if (ii > d1 || jj > d1 || kk > d2 || ll > d2) continue;
                        out.at(ii, jj, kk, ll) += v * t.v;
                    }
                }
    return out;
}

MultiSeries series_from_exponent(const QuadExponent& e, DegreeCaps caps) {
    MultiSeries base(caps);
    const int d1 = caps.d1;
    const int d2 = caps.d2;

    // Degrees of u = (u1, v1, u2, v2) as multi-indices.
    static constexpr int deg[4][4] = {
        {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    auto fits = [&](const int* m) {
        return m[0] <= d1 && m[1] <= d1 && m[2] <= d2 && m[3] <= d2;
    };

    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const int m[4] = {deg[i][0] + deg[j][0], deg[i][1] + deg[j][1],
                              deg[i][2] + deg[j][2], deg[i][3] + deg[j][3]};
            if (e.M(i, j) != cdouble{} && fits(m))
                base.at(m[0], m[1], m[2], m[3]) += e.M(i, j);
        }
        if (e.L[static_cast<std::size_t>(i)] != cdouble{} && fits(deg[i]))
            base.at(deg[i][0], deg[i][1], deg[i][2], deg[i][3]) += e.L[static_cast<std::size_t>(i)];
    }

    MultiSeries result(caps);
    result.at(0, 0, 0, 0) = 1.0;
    MultiSeries term(caps);
    term.at(0, 0, 0, 0) = 1.0;
    const int max_power = 2 * d1 + 2 * d2;
    for (int k = 1; k <= max_power; ++k) {
        term = term * base;
        term *= cdouble{1.0 / k, 0.0};
        result += term;
    }
    return result;
}

double factorial(int k) {
    if (k < 0 || k > 24) throw std::invalid_argument("factorial: argument outside [0, 24]");
    unsigned __int128 acc = 1;
    for (int i = 2; i <= k; ++i) acc *= static_cast<unsigned>(i);
    return static_cast<double>(acc);
}

cdouble apply_f1(const MultiSeries& s, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("apply_f1: negative order");
    if (m > s.caps().d1 || n > s.caps().d2)
        throw std::invalid_argument("apply_f1: series caps (" + std::to_string(s.caps().d1) +
                                    ", " + std::to_string(s.caps().d2) +
                                    ") insufficient for orders (" + std::to_string(m) + ", " +
                                    std::to_string(n) + ")");
    const double sign = ((m + n) % 2 == 0) ? 1.0 : -1.0;
    const double scale =
        sign * std::pow(2.0, m + n) * factorial(m) * factorial(n) / std::numbers::pi;
    return scale * s.coeff(m, m, n, n);
}

} // namespace ngmzi
