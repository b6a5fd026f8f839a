#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace ngmzi {

using cdouble = std::complex<double>;

/// 4x4 complex matrix, row-major. Used only through the symmetric
/// combination u^T M u; storage is not assumed symmetric.
struct Mat4 {
    std::array<cdouble, 16> a{};
    cdouble& operator()(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
    const cdouble& operator()(int i, int j) const { return a[static_cast<std::size_t>(4 * i + j)]; }
};

using Vec4 = std::array<cdouble, 4>;

/// 4x2 complex matrix (couples the auxiliary vector to the displacement).
struct Mat4x2 {
    std::array<cdouble, 8> a{};
    cdouble& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
    const cdouble& operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }
};

/// Diagonal 2x2 real matrix.
struct Diag2 {
    double d0 = 0.0;
    double d1 = 0.0;
};

/// Signals that a computed quantity violates an internal invariant
/// (e.g. a probability outside [0,1] or a parity magnitude above one),
/// which indicates a transcription or convention bug rather than bad input.
class ConsistencyError : public std::runtime_error {
  public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ngmzi
