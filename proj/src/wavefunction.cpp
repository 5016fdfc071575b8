#include "wsspec/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wsspec/errors.hpp"
#include "wsspec/quadrature.hpp"

namespace wsspec
{

WavefunctionSpec::WavefunctionSpec(EquationKind kind, QuantumState state,
                                   double z_exponent, double far_exponent,
                                   JacobiParams jacobi,
                                   WoodsSaxonParams geometry, double norm)
    : kind_(kind),
      state_(state),
      z_exponent_(z_exponent),
      far_exponent_(far_exponent),
      jacobi_(jacobi),
      geometry_(geometry),
      norm_(norm)
{
}

double WavefunctionSpec::z_of_r(double r) const
{
    const double f = fermi_shape(r, geometry_);
    return kind_ == EquationKind::klein_gordon ? 2.0 * f : f;
}

double WavefunctionSpec::dz_dr(double r) const
{
    const double f = fermi_shape(r, geometry_);
    const double d = -geometry_.beta() * f * (1.0 - f);
    return kind_ == EquationKind::klein_gordon ? 2.0 * d : d;
}

double WavefunctionSpec::shape(double z) const
{
    if (z <= 0.0)
        return 0.0;
    if (kind_ == EquationKind::klein_gordon)
        return std::pow(2.0 - z, far_exponent_) * std::pow(z, z_exponent_)
               * jacobi(jacobi_, 1.0 - z);
    return std::pow(1.0 - z, far_exponent_) * std::pow(z, z_exponent_)
           * jacobi(jacobi_, 1.0 - 2.0 * z);
}

WavefunctionSpec WavefunctionSpec::with_norm(double norm) const
{
    auto copy = *this;
    copy.norm_ = norm;
    return copy;
}

WavefunctionSpec kg_wavefunction(const QuantumState& state,
                                 const KGCoefficients& k,
                                 const WoodsSaxonParams& p, double norm)
{
    const double tol = 1e-12;
    auto is_real = [tol](complex v) {
        return std::abs(v.imag()) <= tol * std::max(1.0, std::abs(v));
    };
    if (!is_real(k.a3) || !is_real(k.A))
        throw InvalidExponents("KG exponents a3, A are complex");
    const double a3 = k.a3.real();
    const double A = k.A.real();
    if (!(a3 > -1.0) || !(A > -1.0))
        throw InvalidExponents("KG exponents need a3 > -1 and A > -1 (a3="
                               + std::to_string(a3)
                               + ", A=" + std::to_string(A) + ")");
    return {EquationKind::klein_gordon,
            state,
            0.5 * a3,
            0.5 * A,
            {state.formula_index(), a3, A},
            p,
            norm};
}

SEParameters se_parameters(int l, double energy, const WoodsSaxonParams& p,
                           const Particle& particle)
{
    const auto c = pekeris_coefficients(l, p, particle);
    const double scale = 1.0
                         / (p.beta() * p.beta() * particle.hbar2_over_2m());
    SEParameters s;
    s.eps_sq = scale * (c.D * c.D0 - energy);
    s.gamma_sq = scale * (c.D * c.D1 - p.depth());
    s.kappa_sq = scale * c.D * c.D2;
    s.eps = s.eps_sq > 0.0 ? std::sqrt(s.eps_sq) : 0.0;
    const double a_sq = s.eps_sq + s.gamma_sq + s.kappa_sq;
    s.A = a_sq >= 0.0 ? std::sqrt(a_sq) : std::nan("");
    return s;
}

WavefunctionSpec se_wavefunction(const QuantumState& state, double eps,
                                 double A, const WoodsSaxonParams& p,
                                 double norm)
{
    if (!(eps > 0.0))
        throw NonNormalizable("SE eigenfunction needs eps > 0 to decay");
    if (!(A >= 0.0))
        throw InvalidExponents("SE exponent A must be real and non-negative");
    return {EquationKind::schrodinger,
            state,
            eps,
            A,
            {state.formula_index(), 2.0 * eps, 2.0 * A},
            p,
            norm};
}

double normalization_integral(const WavefunctionSpec& spec)
{
    double value = 0.0;
    if (spec.kind() == EquationKind::klein_gordon)
    {
        if (!(spec.z_exponent() > -0.5))
            throw DivergentIntegral("KG normalization diverges at z = 0");
        auto f = [&spec](double z) {
            const double phi = spec(z);
            return phi * phi * z / (2.0 - z);
        };
        value = 2.0 / spec.geometry().beta()
                * integrate_left_singular(f, 0.0, 1.0).value;
    }
    else
    {
        if (!(spec.z_exponent() > 0.0))
            throw DivergentIntegral("SE normalization diverges at z = 0");
        // dr = -dz / (beta z (1 - z)), r in (0, inf) <-> z in (0, z(0))
        const double z_top = spec.z_of_r(0.0);
        const double beta = spec.geometry().beta();
        auto f = [&spec, beta](double z) {
            const double phi = spec(z);
            return phi * phi / (beta * z * (1.0 - z));
        };
        value = integrate_left_singular(f, 0.0, z_top).value;
    }
    if (!std::isfinite(value))
        throw DivergentIntegral("normalization integral is not finite");
    return value;
}

double normalize(const WavefunctionSpec& spec)
{
    const double v = normalization_integral(spec);
    if (!(v > 0.0))
        throw DivergentIntegral("normalization integral vanishes");
    return 1.0 / std::sqrt(v);
}

WavefunctionSpec normalized(const WavefunctionSpec& spec)
{
    return spec.with_norm(spec.norm() * normalize(spec));
}

namespace
{

complex g_factor(int n, int m, double a3, double A)
{
    const complex phase = std::pow(complex(-1.0, 0.0), m + 0.5)
                          * std::pow(complex(-2.0, 0.0), -m + 0.5);
    double sum = 0.0;
    for (int j = 0; j <= n; ++j)
        sum += binomial(n, j)
               * std::exp(std::lgamma(A + a3 + n + j + 1.0)
                          - std::lgamma(a3 + A + 1.0));
    const double lead = std::exp(std::lgamma(a3 + n + 1.0)
                                 - std::lgamma(n + 1.0)
                                 - std::lgamma(A + a3 + n + 1.0));
    return phase * lead * sum;
}

} // namespace

complex kg_norm_closed_form(int n, double a3, double A, double beta)
{
    const int m = 0;
    const int s = 0;
    const double ms = m + s;
    const double ratio = std::exp(std::lgamma(ms + a3 + 3.0)
                                  + std::lgamma(0.5 + A)
                                  - std::lgamma(ms + a3 + 2.0)
                                  - std::lgamma(1.0 + A));
    const double pre = std::pow(2.0, 1.0 + A)
                       / (beta * std::sqrt(std::numbers::pi));
    return pre * ratio / (g_factor(n, m, a3, A) * g_factor(n, s, a3, A));
}

RadialFunction sample(const WavefunctionSpec& spec, const RadialGrid& grid)
{
    RadialFunction out;
    out.r = grid.points();
    out.u.resize(out.r.size());
    for (std::size_t i = 0; i < out.r.size(); ++i)
        out.u[i] = spec.at_r(out.r[i]);
    out.norm_residual = std::abs(out.norm_integral() - 1.0);
    return out;
}

OriginExpansion origin_expansion(int n, double eps, double A)
{
    const double alpha = 2.0 * eps;
    const double beta = 2.0 * A;
    OriginExpansion e{};
    const double scale = std::ldexp(1.0, -n);
    for (int k = 0; k <= n; ++k)
    {
        const double w = binomial(n + alpha, k) * binomial(n + beta, n - k);
        const double sign = (n - k) % 2 == 0 ? 1.0 : -1.0;
        e.coefficient_sum += scale * w;
        e.jacobi_constant += scale * w * sign;
        e.jacobi_linear += scale * w * sign * (2.0 * k - n);
    }
    e.prefactor = std::pow(0.5, A + eps);
    e.prefactor_slope = e.prefactor * (A - eps);
    return e;
}

int count_sign_changes(const std::function<double(double)>& f, double lo,
                       double hi, int points)
{
    int changes = 0;
    double prev = 0.0;
    for (int i = 1; i < points; ++i)
    {
        const double x = lo + (hi - lo) * i / points;
        const double v = f(x);
        if (v != 0.0)
        {
            if (prev != 0.0 && (v > 0.0) != (prev > 0.0))
                ++changes;
            prev = v;
        }
    }
    return changes;
}

} // namespace wsspec
