#include "wsspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "wsspec/errors.hpp"
#include "wsspec/quadrature.hpp"

namespace wsspec
{

namespace
{

constexpr double kRescaleAbove = 1e150;
constexpr double kRescaleBy = 1e-150;

bool opposite(double a, double b)
{
    return (a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0);
}

struct NumerovFactors
{
    std::vector<double> w;
    std::vector<double> f;  // 1 - h^2 w / 12
};

NumerovFactors factors(const ShootingProblem& problem, double energy,
                       const RadialGrid& grid)
{
    const std::size_t n = grid.count();
    const double h = grid.step();
    const double c = h * h / 12.0;
    NumerovFactors nf;
    nf.w.resize(n);
    nf.f.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        nf.w[i] = problem.W(grid.r(i), energy);
        nf.f[i] = 1.0 - c * nf.w[i];
    }
    return nf;
}

// Outward sweep over the whole grid; returns the node count.
int sweep_outward(const ShootingProblem& problem, const RadialGrid& grid,
                  const NumerovFactors& nf, std::vector<double>& u)
{
    const std::size_t n = grid.count();
    u.assign(n, 0.0);
    u[0] = std::pow(grid.r(0) / grid.r(1), problem.l + 1);
    u[1] = 1.0;
    int nodes = 0;
    for (std::size_t i = 1; i + 1 < n; ++i)
    {
        u[i + 1] = ((12.0 - 10.0 * nf.f[i]) * u[i] - nf.f[i - 1] * u[i - 1])
                   / nf.f[i + 1];
        if (std::abs(u[i + 1]) > kRescaleAbove)
            for (std::size_t j = 0; j <= i + 1; ++j)
                u[j] *= kRescaleBy;
        if (opposite(u[i], u[i + 1]))
            ++nodes;
    }
    return nodes;
}

// Inward sweep down to index `stop`; u has full grid length.
void sweep_inward(const ShootingProblem& problem, const RadialGrid& grid,
                  const NumerovFactors& nf, std::size_t stop,
                  std::vector<double>& u)
{
    const std::size_t n = grid.count();
    u.assign(n, 0.0);
    if (problem.right == RightBoundary::hard_wall)
    {
        u[n - 1] = 0.0;
        u[n - 2] = 1.0;
    }
    else
    {
        const double kappa = std::sqrt(std::max(nf.w[n - 1], 0.0));
        u[n - 1] = 1.0;
        u[n - 2] = std::exp(kappa * grid.step());
    }
    for (std::size_t i = n - 2; i > stop; --i)
    {
        u[i - 1] = ((12.0 - 10.0 * nf.f[i]) * u[i] - nf.f[i + 1] * u[i + 1])
                   / nf.f[i - 1];
        if (std::abs(u[i - 1]) > kRescaleAbove)
            for (std::size_t j = i - 1; j < n; ++j)
                u[j] *= kRescaleBy;
    }
}

std::size_t turning_point(const NumerovFactors& nf)
{
    const std::size_t n = nf.w.size();
    std::size_t m = 0;
    bool found = false;
    for (std::size_t i = n; i-- > 0;)
        if (nf.w[i] < 0.0)
        {
            m = i;
            found = true;
            break;
        }
    if (!found)
        m = static_cast<std::size_t>(
            std::min_element(nf.w.begin(), nf.w.end()) - nf.w.begin());
    return std::clamp<std::size_t>(m, 2, n - 3);
}

double max_abs(const std::vector<double>& v, std::size_t lo, std::size_t hi)
{
    double m = 0.0;
    for (std::size_t i = lo; i <= hi; ++i)
        m = std::max(m, std::abs(v[i]));
    return m;
}

int outward_nodes(const ShootingProblem& problem, double energy,
                  const RadialGrid& grid)
{
    const auto nf = factors(problem, energy, grid);
    std::vector<double> u;
    return sweep_outward(problem, grid, nf, u);
}

} // namespace

SweepResult numerov_integrate(const ShootingProblem& problem, double energy,
                              const RadialGrid& grid,
                              std::optional<std::size_t> match)
{
    const auto nf = factors(problem, energy, grid);
    const std::size_t n = grid.count();
    SweepResult s;
    s.match_index = match ? std::clamp<std::size_t>(*match, 2, n - 3)
                          : turning_point(nf);
    const std::size_t m = s.match_index;

    std::vector<double> out;
    s.nodes = sweep_outward(problem, grid, nf, out);
    std::vector<double> in;
    sweep_inward(problem, grid, nf, m - 1, in);

    const double h = grid.step();
    const double scale = max_abs(out, 0, m) * max_abs(in, m, n - 1);
    const double wronskian = out[m + 1] * in[m] - out[m] * in[m + 1];
    s.mismatch = scale > 0.0 ? wronskian / (h * scale) : 0.0;
    s.log_derivative_mismatch = (out[m + 1] / out[m] - in[m + 1] / in[m]) / h;

    s.outward.assign(out.begin(), out.begin() + static_cast<long>(m) + 2);
    s.inward.assign(in.begin() + static_cast<long>(m) - 1, in.end());
    return s;
}

EigenResult solve_eigenvalue(const ShootingProblem& problem,
                             const RadialGrid& grid,
                             std::pair<double, double> bracket)
{
    const int target = problem.target_nodes;
    double lo = bracket.first;
    double hi = bracket.second;
    int c_lo = outward_nodes(problem, lo, grid);
    int c_hi = outward_nodes(problem, hi, grid);
    if (c_hi <= target)
        throw NoBoundState("only " + std::to_string(c_hi)
                           + " levels below the threshold, need node count "
                           + std::to_string(target));
    if (c_lo > target)
        throw BracketAmbiguous("bracket starts above the target level");

    while (c_lo != target || c_hi != target + 1)
    {
        const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
        if (hi - lo <= 1e-13 * scale)
            throw BracketAmbiguous("levels with " + std::to_string(target)
                                   + " and more nodes are not separable");
        const double mid = 0.5 * (lo + hi);
        const int c = outward_nodes(problem, mid, grid);
        if (c <= target)
        {
            lo = mid;
            c_lo = c;
        }
        else
        {
            hi = mid;
            c_hi = c;
        }
    }

    // a wide count bracket can hide extra zeros of the mismatch between its
    // ends; narrow it on node counts until the mismatch changes sign
    std::size_t match = 0;
    auto mismatch = [&](double e) {
        return numerov_integrate(problem, e, grid, match).mismatch;
    };
    double g_lo = 0.0;
    double g_hi = 0.0;
    for (int k = 0;; ++k)
    {
        match = turning_point(factors(problem, 0.5 * (lo + hi), grid));
        g_lo = mismatch(lo);
        g_hi = mismatch(hi);
        const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
        if (opposite(g_lo, g_hi) || g_lo == 0.0 || g_hi == 0.0 || k == 60
            || hi - lo <= 1e-10 * scale)
            break;
        const double mid = 0.5 * (lo + hi);
        if (outward_nodes(problem, mid, grid) <= target)
            lo = mid;
        else
            hi = mid;
    }
    // the free-decay level lies slightly below the one counted with a
    // node at r_max; widen downwards while staying above the previous level
    for (int k = 0; k < 40 && !opposite(g_lo, g_hi) && g_lo != 0.0; ++k)
    {
        const double lower = lo - (hi - lo);
        if (outward_nodes(problem, lower, grid) != target)
            break;
        lo = lower;
        g_lo = mismatch(lo);
    }
    double energy = lo;
    if (g_hi == 0.0)
        energy = hi;
    else if (g_lo != 0.0)
    {
        if (!opposite(g_lo, g_hi))
            throw BracketAmbiguous("mismatch does not change sign in bracket");
        std::uintmax_t iterations = 200;
        const auto root = boost::math::tools::toms748_solve(
            mismatch, lo, hi, g_lo, g_hi,
            boost::math::tools::eps_tolerance<double>(52), iterations);
        energy = 0.5 * (root.first + root.second);
    }

    const auto s = numerov_integrate(problem, energy, grid, match);
    const std::size_t n = grid.count();
    const std::size_t m = s.match_index;
    EigenResult result;
    result.energy = energy;
    result.mismatch = s.mismatch;
    auto& wf = result.wavefunction;
    wf.r = grid.points();
    wf.u.resize(n);
    const double in_m = s.inward[1];
    const double ratio = in_m != 0.0 ? s.outward[m] / in_m : 0.0;
    for (std::size_t i = 0; i <= m; ++i)
        wf.u[i] = s.outward[i];
    for (std::size_t i = m + 1; i < n; ++i)
        wf.u[i] = s.inward[i - (m - 1)] * ratio;

    const double norm = std::sqrt(wf.norm_integral());
    for (auto& v : wf.u)
        v /= norm;
    wf.norm_residual = std::abs(wf.norm_integral() - 1.0);
    result.node_count = static_cast<int>(node_positions(wf, 1e-10).size());
    return result;
}

EigenResult solve_eigenvalue(const ShootingProblem& problem,
                             const RadialGrid& grid)
{
    return solve_eigenvalue(problem, grid,
                            {problem.energy_floor, problem.energy_ceiling});
}

EigenResult solve_with_convergence(const ShootingProblem& problem,
                                   const RadialGrid& grid)
{
    auto coarse = solve_eigenvalue(problem, grid);
    const auto fine = solve_eigenvalue(problem, grid.refined());
    coarse.grid_convergence_delta = std::abs(fine.energy - coarse.energy);
    return coarse;
}

RadialGrid default_grid(const WoodsSaxonParams& p)
{
    return {1e-6, p.radius() + 20.0 * p.diffuseness(), 20001};
}

namespace
{

// min over f in [0, 1] of D0 + D1 f + D2 f^2, times D
double barrier_minimum(const PekerisCoefficients& c)
{
    double m = std::min(c.D0, c.D0 + c.D1 + c.D2);
    if (c.D2 > 0.0)
    {
        const double f = -c.D1 / (2.0 * c.D2);
        if (f > 0.0 && f < 1.0)
            m = std::min(m, c.D0 + c.D1 * f + c.D2 * f * f);
    }
    return c.D * m;
}

} // namespace

ShootingProblem make_problem(const QuantumState& state,
                             const WoodsSaxonParams& p,
                             const Particle& particle, OracleModel model)
{
    const int l = state.l();
    const auto c = pekeris_coefficients(l, p, particle);
    const double h2m = particle.hbar2_over_2m();
    const double V0 = p.depth();

    ShootingProblem problem;
    // The shape-function barrier is finite at r = 0, so the regular
    // solution starts like r whatever l is.
    problem.l = model.centrifugal == Centrifugal::exact ? l : 0;
    problem.target_nodes = state.radial_nodes();

    std::function<double(double)> barrier;
    double barrier_floor = 0.0;
    double barrier_far = 0.0;
    if (model.centrifugal == Centrifugal::exact)
        barrier = [l, particle](double r) {
            return centrifugal_exact(r, l, particle);
        };
    else
    {
        barrier = [c, p](double r) { return centrifugal_approx(r, c, p); };
        barrier_floor = std::min(0.0, barrier_minimum(c));
        barrier_far = c.D * c.D0;
    }

    if (model.equation == EquationKind::schrodinger)
    {
        problem.W = [p, h2m, barrier](double r, double e) {
            return (woods_saxon(r, p) + barrier(r) - e) / h2m;
        };
        problem.energy_floor = -V0 * (1.0 + 1e-6) + barrier_floor;
        problem.energy_ceiling = barrier_far;
        return problem;
    }

    const double mc2 = particle.rest_energy();
    const double delta = particle.delta();
    problem.W = [p, h2m, barrier, mc2, delta](double r, double e) {
        const double ev = e - woods_saxon(r, p);
        return barrier(r) / h2m + delta * delta * (mc2 * mc2 - ev * ev);
    };
    // W(r -> inf, E) = 0
    const double threshold
        = std::sqrt(mc2 * mc2 + barrier_far / (h2m * delta * delta));
    if (model.branch == Branch::particle)
    {
        problem.energy_floor = mc2 - V0 * (1.0 + 1e-6)
                               + barrier_floor / (h2m * delta * delta * mc2);
        problem.energy_ceiling = threshold;
    }
    else
    {
        problem.energy_floor = -threshold;
        problem.energy_ceiling = -mc2 + V0;
    }
    return problem;
}

std::vector<OracleLevel> solve_spectrum(const WoodsSaxonParams& p,
                                        const Particle& particle, int n_max,
                                        OracleModel model,
                                        const RadialGrid& grid,
                                        bool check_convergence)
{
    if (n_max < 1)
        throw InvalidState("N_max must be at least 1");
    std::vector<OracleLevel> levels;
    for (int N = 1; N <= n_max; ++N)
        for (int l = 0; l < N; ++l)
        {
            OracleLevel level{QuantumState(N, l), std::nullopt, {}};
            try
            {
                const auto problem = make_problem(level.state, p, particle,
                                                  model);
                level.result = check_convergence
                                   ? solve_with_convergence(problem, grid)
                                   : solve_eigenvalue(problem, grid);
            }
            catch (const Error& e)
            {
                level.error = e.what();
            }
            levels.push_back(std::move(level));
        }
    return levels;
}

std::vector<double> node_positions(const RadialFunction& f, double floor)
{
    double peak = 0.0;
    for (double v : f.u)
        peak = std::max(peak, std::abs(v));
    const double cut = floor * peak;
    std::vector<double> nodes;
    std::size_t last = f.u.size();
    for (std::size_t i = 0; i < f.u.size(); ++i)
    {
        if (std::abs(f.u[i]) <= cut)
            continue;
        if (last < f.u.size() && opposite(f.u[last], f.u[i]))
        {
            const double a = f.u[last];
            const double b = f.u[i];
            nodes.push_back(f.r[last] + (f.r[i] - f.r[last]) * a / (a - b));
        }
        last = i;
    }
    return nodes;
}

OverlayReport overlay(RadialFunction a, RadialFunction b)
{
    OverlayReport rep;
    const std::size_t n = std::min(a.u.size(), b.u.size());
    const double h = n > 1 ? a.r[1] - a.r[0] : 0.0;
    std::vector<double> prod(n);
    for (std::size_t i = 0; i < n; ++i)
        prod[i] = a.u[i] * b.u[i];
    if (simpson(prod.data(), n, h) < 0.0)
        for (auto& v : b.u)
            v = -v;
    std::vector<double> diff(n);
    for (std::size_t i = 0; i < n; ++i)
        diff[i] = (a.u[i] - b.u[i]) * (a.u[i] - b.u[i]);
    rep.l2_difference = std::sqrt(simpson(diff.data(), n, h));

    auto argmax = [](const RadialFunction& f) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < f.u.size(); ++i)
            if (std::abs(f.u[i]) > std::abs(f.u[k]))
                k = i;
        return f.r[k];
    };
    rep.argmax_a = argmax(a);
    rep.argmax_b = argmax(b);
    rep.argmax_shift = rep.argmax_a - rep.argmax_b;
    rep.nodes_a = node_positions(a);
    rep.nodes_b = node_positions(b);
    rep.a = std::move(a);
    rep.b = std::move(b);
    return rep;
}

OverlayReport compare_eigenfunctions(const QuantumState& state,
                                     OracleModel model_a, OracleModel model_b,
                                     const WoodsSaxonParams& p,
                                     const Particle& particle,
                                     const RadialGrid& grid)
{
    auto ra = solve_eigenvalue(make_problem(state, p, particle, model_a), grid);
    auto rb = solve_eigenvalue(make_problem(state, p, particle, model_b), grid);
    return overlay(std::move(ra.wavefunction), std::move(rb.wavefunction));
}

} // namespace wsspec
