#include "wsspec/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsspec/errors.hpp"

namespace wsspec
{

WoodsSaxonParams::WoodsSaxonParams(double depth, double radius,
                                   double diffuseness)
    : depth_(depth), radius_(radius), diffuseness_(diffuseness)
{
    if (!(depth > 0.0) || !(radius > 0.0) || !(diffuseness > 0.0)
        || !std::isfinite(depth) || !std::isfinite(radius)
        || !std::isfinite(diffuseness))
        throw ConfigError("Woods-Saxon V0, r0 and a must be positive");
}

double fermi_shape(double r, const WoodsSaxonParams& p)
{
    const double s = p.beta() * (r - p.radius());
    if (s > 0.0)
    {
        const double e = std::exp(-s);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(s));
}

double woods_saxon(double r, const WoodsSaxonParams& p)
{
    return -p.depth() * fermi_shape(r, p);
}

PekerisCoefficients pekeris_shape_coefficients(double t)
{
    const double inv = 1.0 / t;
    const double inv2 = inv * inv;
    return {0.0, 12.0 * inv2 - 4.0 * inv + 1.0, -48.0 * inv2 + 8.0 * inv,
            48.0 * inv2};
}

PekerisCoefficients pekeris_coefficients(int l, const WoodsSaxonParams& p,
                                         const Particle& particle)
{
    if (l < 0)
        throw InvalidState("angular momentum must be non-negative");
    auto c = pekeris_shape_coefficients(p.beta() * p.radius());
    const double ll = static_cast<double>(l) * (l + 1);
    c.D = particle.hbar2_over_2m() * ll / (p.radius() * p.radius());
    return c;
}

double centrifugal_exact(double r, int l, const Particle& particle)
{
    if (!(r > 0.0))
        throw std::domain_error("centrifugal barrier is singular at r <= 0");
    const double ll = static_cast<double>(l) * (l + 1);
    return particle.hbar2_over_2m() * ll / (r * r);
}

double centrifugal_approx(double r, const PekerisCoefficients& c,
                          const WoodsSaxonParams& p)
{
    const double f = fermi_shape(r, p);
    return c.D * (c.D0 + c.D1 * f + c.D2 * f * f);
}

double effective_potential_exact(double r, int l, const WoodsSaxonParams& p,
                                 const Particle& particle)
{
    return woods_saxon(r, p) + centrifugal_exact(r, l, particle);
}

double effective_potential_approx(double r, int l, const WoodsSaxonParams& p,
                                  const Particle& particle)
{
    const auto c = pekeris_coefficients(l, p, particle);
    return woods_saxon(r, p) + centrifugal_approx(r, c, p);
}

} // namespace wsspec

namespace wsspec
{

double TaylorResiduals::max() const
{
    return std::max({order0, order1, order2});
}

TaylorResiduals pekeris_taylor_residuals(double t)
{
    // units r0 = 1, D = 1, beta = t; extended precision keeps the
    // difference quotients clear of cancellation for steep surfaces
    using real = long double;
    const auto c = pekeris_shape_coefficients(t);
    auto approx = [&c, t](real x) {
        const real f = 1.0L / (1.0L + std::exp(static_cast<real>(t) * x));
        return c.D0 + c.D1 * f + c.D2 * f * f;
    };
    const real h = 1e-2L / std::max(1.0, t);
    const real fm2 = approx(-2 * h);
    const real fm1 = approx(-h);
    const real f0 = approx(0.0L);
    const real fp1 = approx(h);
    const real fp2 = approx(2 * h);
    const real d1 = (fm2 - 8.0L * fm1 + 8.0L * fp1 - fp2) / (12.0L * h);
    const real d2 = (-fm2 + 16.0L * fm1 - 30.0L * f0 + 16.0L * fp1 - fp2)
                    / (12.0L * h * h);
    // 1/(1+x)^2 = 1 - 2x + 3x^2 - ...
    return {static_cast<double>(std::abs(f0 - 1.0L)),
            static_cast<double>(std::abs(d1 + 2.0L) / 2.0L),
            static_cast<double>(std::abs(0.5L * d2 - 3.0L) / 3.0L)};
}

double centrifugal_max_deviation(const WoodsSaxonParams& p, double x_ratio,
                                 int samples)
{
    const auto c = pekeris_shape_coefficients(p.beta() * p.radius());
    const double r0 = p.radius();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i)
    {
        const double x = x_ratio * r0 * (2.0 * i / (samples - 1) - 1.0);
        const double f = fermi_shape(r0 + x, p);
        const double approx = c.D0 + c.D1 * f + c.D2 * f * f;
        const double exact = 1.0 / ((1.0 + x / r0) * (1.0 + x / r0));
        worst = std::max(worst, std::abs(approx - exact) / exact);
    }
    return worst;
}

double effective_potential_max_deviation(int l, const WoodsSaxonParams& p,
                                         const Particle& particle,
                                         double x_ratio, int samples)
{
    const double r0 = p.radius();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i)
    {
        const double r = r0 + x_ratio * r0 * (2.0 * i / (samples - 1) - 1.0);
        if (!(r > 0.0))
            continue;
        const double exact = effective_potential_exact(r, l, p, particle);
        const double approx = effective_potential_approx(r, l, p, particle);
        if (exact != 0.0)
            worst = std::max(worst, std::abs(approx - exact) / std::abs(exact));
    }
    return worst;
}

} // namespace wsspec
