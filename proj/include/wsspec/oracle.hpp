#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wsspec/closed_form.hpp"
#include "wsspec/grid.hpp"
#include "wsspec/potential.hpp"
#include "wsspec/quantum_state.hpp"
#include "wsspec/wavefunction.hpp"

namespace wsspec
{

enum class RightBoundary
{
    decaying,  // u ~ exp(-kappa r) with kappa^2 = W(r_max, E)
    hard_wall  // u(r_max) = 0
};

// Radial problem u'' = W(r, E) u with u ~ r^(l+1) at r_min.
struct ShootingProblem
{
    std::function<double(double, double)> W;
    int l = 0;  // start exponent: u ~ r^(l+1) at r_min
    int target_nodes = 0;
    double energy_floor = 0.0;    // W > 0 everywhere below this energy
    double energy_ceiling = 0.0;  // continuum threshold
    RightBoundary right = RightBoundary::decaying;
};

struct SweepResult
{
    std::vector<double> outward;  // u on [0, match + 1]
    std::vector<double> inward;   // u on [match - 1, count - 1], offset by match - 1
    std::size_t match_index = 0;
    int nodes = 0;                // sign changes of the full outward sweep
    double mismatch = 0.0;        // normalized Wronskian at the match point
    double log_derivative_mismatch = 0.0;
};

// Numerov sweeps at trial energy E. The outward sweep runs over the whole
// grid to count nodes; the matching uses the outermost classical turning
// point unless `match` is given. Magnitudes above 1e150 are rescaled.
SweepResult numerov_integrate(const ShootingProblem& problem, double energy,
                              const RadialGrid& grid,
                              std::optional<std::size_t> match = {});

struct EigenResult
{
    double energy = 0.0;
    int node_count = 0;
    double mismatch = 0.0;
    double grid_convergence_delta = 0.0;  // |E(h/2) - E(h)|, when requested
    RadialFunction wavefunction;
};

// Node-count bisection isolates the target level inside `bracket`, then a
// bracketing secant-type solver drives the mismatch to zero.
// Throws NoBoundState or BracketAmbiguous.
EigenResult solve_eigenvalue(const ShootingProblem& problem,
                             const RadialGrid& grid,
                             std::pair<double, double> bracket);

EigenResult solve_eigenvalue(const ShootingProblem& problem,
                             const RadialGrid& grid);

// Solves on grid and grid.refined(); reports the coarse result with the
// grid-halving drift filled in.
EigenResult solve_with_convergence(const ShootingProblem& problem,
                                   const RadialGrid& grid);

enum class Centrifugal
{
    exact,
    pekeris
};

struct OracleModel
{
    EquationKind equation = EquationKind::schrodinger;
    Centrifugal centrifugal = Centrifugal::exact;
    Branch branch = Branch::particle;  // KG only

    static OracleModel se_exact() { return {}; }
    static OracleModel se_pekeris()
    {
        return {EquationKind::schrodinger, Centrifugal::pekeris,
                Branch::particle};
    }
    static OracleModel kg(Centrifugal c = Centrifugal::pekeris,
                          Branch b = Branch::particle)
    {
        return {EquationKind::klein_gordon, c, b};
    }
};

// r_min = 1e-6, r_max = r0 + 20 a, 20001 points.
RadialGrid default_grid(const WoodsSaxonParams& p);

ShootingProblem make_problem(const QuantumState& state,
                             const WoodsSaxonParams& p,
                             const Particle& particle, OracleModel model);

struct OracleLevel
{
    QuantumState state;
    std::optional<EigenResult> result;  // empty when the solve failed
    std::string error;
};

// All states with N <= n_max, ordered by (N, l).
std::vector<OracleLevel> solve_spectrum(const WoodsSaxonParams& p,
                                        const Particle& particle, int n_max,
                                        OracleModel model,
                                        const RadialGrid& grid,
                                        bool check_convergence = false);

struct OverlayReport
{
    double l2_difference = 0.0;  // sqrt(int (u_a - u_b)^2 dr), signs aligned
    double argmax_a = 0.0;       // r of max |u_a|
    double argmax_b = 0.0;
    double argmax_shift = 0.0;   // argmax_a - argmax_b
    std::vector<double> nodes_a;
    std::vector<double> nodes_b;
    RadialFunction a;
    RadialFunction b;            // sign aligned with a
};

OverlayReport compare_eigenfunctions(const QuantumState& state,
                                     OracleModel model_a, OracleModel model_b,
                                     const WoodsSaxonParams& p,
                                     const Particle& particle,
                                     const RadialGrid& grid);

// Overlay of two sampled functions on the same grid.
OverlayReport overlay(RadialFunction a, RadialFunction b);

// Interior zeros located by linear interpolation between sign changes,
// ignoring the tails where |u| is below `floor` times max |u|.
std::vector<double> node_positions(const RadialFunction& f,
                                   double floor = 1e-8);

} // namespace wsspec
