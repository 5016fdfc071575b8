#pragma once

#include <functional>

#include "wsspec/closed_form.hpp"
#include "wsspec/grid.hpp"
#include "wsspec/potential.hpp"
#include "wsspec/quantum_state.hpp"
#include "wsspec/special_functions.hpp"

namespace wsspec
{

enum class EquationKind
{
    klein_gordon,
    schrodinger
};

// Closed-form eigenfunction in the variable z of its transformation:
//   KG: z = 2 / (1 + e^{beta x}),  phi = b' (2-z)^{A/2} z^{a3/2} P_n^{(a3,A)}(1-z)
//   SE: z = 1 / (1 + e^{beta x}),  phi = a_n (1-z)^{A} z^{eps} P_n^{(2eps,2A)}(1-2z)
// with x = r - r0. Both map r -> inf to z -> 0.
class WavefunctionSpec
{
  public:
    WavefunctionSpec(EquationKind kind, QuantumState state, double z_exponent,
                     double far_exponent, JacobiParams jacobi,
                     WoodsSaxonParams geometry, double norm = 1.0);

    EquationKind kind() const { return kind_; }
    const QuantumState& state() const { return state_; }
    double z_exponent() const { return z_exponent_; }
    // exponent of (2 - z) for KG, of (1 - z) for SE
    double far_exponent() const { return far_exponent_; }
    const JacobiParams& jacobi_params() const { return jacobi_; }
    const WoodsSaxonParams& geometry() const { return geometry_; }
    double norm() const { return norm_; }

    double z_of_r(double r) const;
    // dz/dr (negative)
    double dz_dr(double r) const;

    // Unnormalized shape and the normalized value phi(z) = norm * shape(z).
    double shape(double z) const;
    double operator()(double z) const { return norm_ * shape(z); }
    double at_r(double r) const { return (*this)(z_of_r(r)); }

    WavefunctionSpec with_norm(double norm) const;

  private:
    EquationKind kind_;
    QuantumState state_;
    double z_exponent_;
    double far_exponent_;
    JacobiParams jacobi_;
    WoodsSaxonParams geometry_;
    double norm_;
};

// Builds the KG eigenfunction of index state.formula_index().
// Throws InvalidExponents unless a3 and A are real and > -1.
WavefunctionSpec kg_wavefunction(const QuantumState& state,
                                 const KGCoefficients& k,
                                 const WoodsSaxonParams& p, double norm = 1.0);

// Parameters of the transformed Schrodinger equation at energy E.
struct SEParameters
{
    double eps_sq;
    double gamma_sq;
    double kappa_sq;
    double eps;  // principal root
    double A;    // sqrt(eps^2 + gamma^2 + kappa^2)
};

SEParameters se_parameters(int l, double energy, const WoodsSaxonParams& p,
                           const Particle& particle);

// Exponents taken positive so the function decays at z -> 0.
// Throws NonNormalizable for eps <= 0 and InvalidExponents for A < 0 or NaN.
WavefunctionSpec se_wavefunction(const QuantumState& state, double eps,
                                 double A, const WoodsSaxonParams& p,
                                 double norm = 1.0);

// Integral of the normalization measure over |phi|^2 with the current norm:
//   KG: (2/beta) int_0^1 |phi|^2 z / (2 - z) dz
//   SE: int_0^inf |phi(r)|^2 dr
// Throws DivergentIntegral when the result is not finite.
double normalization_integral(const WavefunctionSpec& spec);

// Factor c > 0 such that c * spec has unit normalization integral.
double normalize(const WavefunctionSpec& spec);

WavefunctionSpec normalized(const WavefunctionSpec& spec);

// Closed-form |b'_n|^2 of the KG normalization, evaluated with the free
// expansion indices set to m = s = 0 and r = n. Only n = 0 is unambiguous.
complex kg_norm_closed_form(int n, double a3, double A, double beta);

// Samples u(r) on the grid. The normalization residual is measured on the
// samples with Simpson's rule.
RadialFunction sample(const WavefunctionSpec& spec, const RadialGrid& grid);

// First-order expansion of the SE eigenfunction about z = 1/2 (r = r0) in
// y = 1 - 2z:  phi / a_n ~ constant + linear * y.
struct OriginExpansion
{
    double jacobi_constant;  // P_n^{(2eps,2A)}(0) from the binomial sum
    double jacobi_linear;    // d/dy P_n at y = 0
    double prefactor;        // (1-z)^A z^eps at z = 1/2
    double prefactor_slope;  // d/dy of the prefactor at y = 0
    double coefficient_sum;  // 2^-n sum_k C(n+2eps, k) C(n+2A, n-k)

    double constant() const { return prefactor * jacobi_constant; }
    double linear() const
    {
        return prefactor * jacobi_linear + prefactor_slope * jacobi_constant;
    }
};

OriginExpansion origin_expansion(int n, double eps, double A);

// Interior sign changes of f on a uniform grid of `points` over (lo, hi).
int count_sign_changes(const std::function<double(double)>& f, double lo,
                       double hi, int points);

} // namespace wsspec
