#pragma once

#include "wsspec/units.hpp"

namespace wsspec
{

// Woods-Saxon well -V0 / (1 + exp((r - r0) / a)).
class WoodsSaxonParams
{
  public:
    WoodsSaxonParams(double depth, double radius, double diffuseness);

    double depth() const { return depth_; }             // V0 > 0
    double radius() const { return radius_; }           // r0 > 0
    double diffuseness() const { return diffuseness_; } // a > 0
    double beta() const { return 1.0 / diffuseness_; }

  private:
    double depth_;
    double radius_;
    double diffuseness_;
};

// Replacement of the centrifugal barrier by the Woods-Saxon shape functions:
//   hbar^2 l(l+1) / (2 m0 r^2)  ~  D * [D0 + D1 f + D2 f^2],
//   f = 1 / (1 + exp(beta (r - r0))).
// D0 + D1/2 + D2/4 = 1 for every geometry, so both forms agree at r = r0.
struct PekerisCoefficients
{
    double D;  // hbar^2 l(l+1) / (2 m0 r0^2)
    double D0;
    double D1;
    double D2;
};

double woods_saxon(double r, const WoodsSaxonParams& p);

// Fermi shape 1 / (1 + exp(beta (r - r0))), written to avoid overflow.
double fermi_shape(double r, const WoodsSaxonParams& p);

// Dimensionless coefficients for t = beta * r0.
PekerisCoefficients pekeris_shape_coefficients(double t);

PekerisCoefficients pekeris_coefficients(int l, const WoodsSaxonParams& p,
                                         const Particle& particle);

double centrifugal_exact(double r, int l, const Particle& particle);
double centrifugal_approx(double r, const PekerisCoefficients& c,
                          const WoodsSaxonParams& p);

// Woods-Saxon plus the exact barrier. Throws std::domain_error for r <= 0.
double effective_potential_exact(double r, int l, const WoodsSaxonParams& p,
                                 const Particle& particle);

// Woods-Saxon plus the shape-function barrier; regular at r = 0.
double effective_potential_approx(double r, int l, const WoodsSaxonParams& p,
                                  const Particle& particle);

} // namespace wsspec

namespace wsspec
{

// Relative residuals of the Taylor coefficients (orders 0, 1, 2 about
// x = 0) of the shape-function barrier against D / (1 + x/r0)^2, for
// t = beta r0. Derivatives are taken by fourth-order central differences.
struct TaylorResiduals
{
    double order0;
    double order1;
    double order2;

    double max() const;
};

TaylorResiduals pekeris_taylor_residuals(double t);

// max |approx - exact| / exact of the centrifugal term over
// |x| <= x_ratio * r0 (independent of l for l >= 1).
double centrifugal_max_deviation(const WoodsSaxonParams& p, double x_ratio,
                                 int samples = 20001);

// Same scan for the full effective potentials at angular momentum l.
double effective_potential_max_deviation(int l, const WoodsSaxonParams& p,
                                         const Particle& particle,
                                         double x_ratio, int samples = 20001);

} // namespace wsspec
