#pragma once

#include <cstddef>
#include <vector>

#include "ngmzi/types.hpp"

namespace ngmzi {

/// Per-variable maximum degrees: d1 caps u1 and v1, d2 caps u2 and v2.
struct DegreeCaps {
    int d1 = 0;
    int d2 = 0;
};

/// Dense truncated power series in the four auxiliary variables
/// (u1, v1, u2, v2) with complex coefficients, indexed by multi-degree
/// (i, j, k, l) with i, j <= d1 and k, l <= d2. All arithmetic is closed
/// under the caps: product terms whose multi-degree exceeds a cap are
/// discarded. Storage is exactly (d1+1)^2 (d2+1)^2 coefficients.
class MultiSeries {
  public:
    explicit MultiSeries(DegreeCaps caps);

    DegreeCaps caps() const { return caps_; }
    std::size_t size() const { return c_.size(); }

    cdouble coeff(int i, int j, int k, int l) const { return c_[index(i, j, k, l)]; }
    cdouble& at(int i, int j, int k, int l) { return c_[index(i, j, k, l)]; }

    MultiSeries& operator+=(const MultiSeries& other);
    MultiSeries& operator*=(cdouble scale);

    /// Truncated product; both operands must share the same caps.
    friend MultiSeries operator*(const MultiSeries& lhs, const MultiSeries& rhs);

    const std::vector<cdouble>& raw() const { return c_; }

  private:
    std::size_t index(int i, int j, int k, int l) const;

    DegreeCaps caps_;
    std::vector<cdouble> c_;
};

/// Quadratic-plus-linear-plus-constant exponent u^T M u + u^T L + c over
/// the auxiliary vector u = (u1, v1, u2, v2)^T.
struct QuadExponent {
    Mat4 M{};
    Vec4 L{};
    cdouble c{};
};

/// Truncated Taylor expansion of exp(u^T M u + u^T L). The constant part
/// e.c is not folded in; callers apply exp(c) as an external scalar factor.
/// The non-constant part is nilpotent under truncation, so the expansion
/// terminates after 2*d1 + 2*d2 powers and is exact within the caps.
MultiSeries series_from_exponent(const QuadExponent& e, DegreeCaps caps);

/// Mixed-derivative extraction for the heralding operator: returns
/// (-2)^{m+n} m! n! / pi times the coefficient of u1^m v1^m u2^n v2^n,
/// i.e. the derivative d^m_{u1} d^m_{v1} d^n_{u2} d^n_{v2} at zero with
/// the generating-function prefactor attached.
cdouble apply_f1(const MultiSeries& s, int m, int n);

/// Exact integer factorial converted to double once; k <= 24.
double factorial(int k);

} // namespace ngmzi
