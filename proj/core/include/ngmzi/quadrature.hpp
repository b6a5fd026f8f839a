#pragma once

#include <vector>

namespace ngmzi {

/// Gauss-Legendre nodes and weights on [a, b].
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};

QuadRule gauss_legendre(int n, double a, double b);

} // namespace ngmzi
