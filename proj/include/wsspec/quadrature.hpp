#pragma once

#include <cstddef>
#include <functional>

namespace wsspec
{

struct QuadratureResult
{
    double value;
    double error;
};

// Adaptive Gauss-Kronrod on [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10);

// Integrable algebraic or logarithmic singularity at the left endpoint a
// (tanh-sinh rule).
QuadratureResult integrate_left_singular(const std::function<double(double)>& f,
                                         double a, double b,
                                         double rel_tol = 1e-10);

// Composite Simpson rule for uniformly spaced samples (odd count) with
// a trapezoid correction on the last panel for even counts.
double simpson(const double* values, std::size_t count, double h);

} // namespace wsspec
