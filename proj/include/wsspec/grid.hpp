#pragma once

#include <cstddef>
#include <vector>

namespace wsspec
{

// Uniform radial mesh r_i = r_min + i h, i = 0 .. count-1.
class RadialGrid
{
  public:
    static constexpr std::size_t kMinCount = 1000;

    RadialGrid(double r_min, double r_max, std::size_t count);

    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    std::size_t count() const { return count_; }
    double step() const { return (r_max_ - r_min_) / (count_ - 1); }
    double r(std::size_t i) const { return r_min_ + i * step(); }

    // Same interval, half the step.
    RadialGrid refined() const { return {r_min_, r_max_, 2 * count_ - 1}; }

    std::vector<double> points() const;

  private:
    double r_min_;
    double r_max_;
    std::size_t count_;
};

// Sampled radial function u(r) with the residual of its unit normalization.
struct RadialFunction
{
    std::vector<double> r;
    std::vector<double> u;
    double norm_residual = 0.0;

    // integral of u^2 dr by Simpson's rule on the (uniform) samples
    double norm_integral() const;
};

} // namespace wsspec
