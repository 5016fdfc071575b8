#include "wsspec/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace wsspec
{

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol)
{
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::
        integrate(f, a, b, 15, rel_tol, &err);
    return {v, err};
}

QuadratureResult integrate_left_singular(const std::function<double(double)>& f,
                                         double a, double b, double rel_tol)
{
    // double-exponential nodes cluster at both ends and never touch them
    static boost::math::quadrature::tanh_sinh<double> rule;
    double err = 0.0;
    double l1 = 0.0;
    const double v = rule.integrate(f, a, b, rel_tol, &err, &l1);
    return {v, err};
}

double simpson(const double* values, std::size_t count, double h)
{
    if (count < 2)
        return 0.0;
    std::size_t last = count - 1;
    double tail = 0.0;
    if (last % 2 == 1)
    {
        tail = 0.5 * h * (values[last - 1] + values[last]);
        --last;
    }
    double s = values[0] + values[last];
    for (std::size_t i = 1; i < last; ++i)
        s += (i % 2 == 1 ? 4.0 : 2.0) * values[i];
    return s * h / 3.0 + tail;
}

} // namespace wsspec
