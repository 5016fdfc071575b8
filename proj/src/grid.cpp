#include "wsspec/grid.hpp"

#include <string>

#include "wsspec/errors.hpp"
#include "wsspec/quadrature.hpp"

namespace wsspec
{

std::vector<double> RadialGrid::points() const
{
    std::vector<double> out(count_);
    for (std::size_t i = 0; i < count_; ++i)
        out[i] = r(i);
    return out;
}

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t count)
    : r_min_(r_min), r_max_(r_max), count_(count)
{
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw ConfigError("radial grid needs 0 < r_min < r_max");
    if (count < kMinCount)
        throw ConfigError("radial grid needs at least "
                          + std::to_string(kMinCount) + " points");
}

double RadialFunction::norm_integral() const
{
    std::vector<double> sq(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        sq[i] = u[i] * u[i];
    const double h = r.size() > 1 ? r[1] - r[0] : 0.0;
    return simpson(sq.data(), sq.size(), h);
}

} // namespace wsspec
