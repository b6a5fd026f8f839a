#include "ngmzi/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>
#include <stdexcept>

namespace ngmzi {

QuadRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    std::unique_ptr<gsl_integration_glfixed_table, void (*)(gsl_integration_glfixed_table*)>
        table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)),
              gsl_integration_glfixed_table_free);
    if (!table) throw std::runtime_error("gauss_legendre: table allocation failed");

    QuadRule rule;
    rule.x.resize(static_cast<std::size_t>(n));
    rule.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double xi = 0.0;
        double wi = 0.0;
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &xi, &wi, table.get());
        rule.x[static_cast<std::size_t>(i)] = xi;
        rule.w[static_cast<std::size_t>(i)] = wi;
    }
    return rule;
}

} // namespace ngmzi
