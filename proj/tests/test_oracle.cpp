#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wsspec/errors.hpp"
#include "wsspec/oracle.hpp"

using namespace wsspec;

namespace
{
const WoodsSaxonParams table_geometry(50.0, 7.0, 0.6);
const Particle unit_mass(1.0, UnitSystem::dimensionless());
const WoodsSaxonParams particle_geometry(43.1, 3.44731, 0.67);
const WoodsSaxonParams anti_geometry(43.1, 3.44731, 0.55);
const Particle proton(1.007825, UnitSystem::nuclear());
const Particle anti(1.00866, UnitSystem::nuclear());

ShootingProblem oscillator(int l, int nodes)
{
    ShootingProblem p;
    p.W = [l](double r, double e) { return r * r + l * (l + 1) / (r * r) - e; };
    p.l = l;
    p.target_nodes = nodes;
    p.energy_floor = 0.0;
    p.energy_ceiling = 60.0;
    return p;
}

ShootingProblem box(int l, int nodes)
{
    ShootingProblem p;
    p.W = [l](double r, double e) { return l * (l + 1) / (r * r) - e; };
    p.l = l;
    p.target_nodes = nodes;
    p.energy_floor = 0.0;
    p.energy_ceiling = 400.0;
    p.right = RightBoundary::hard_wall;
    return p;
}

double slope(const ShootingProblem& p, double exact, double r_min, double r_max)
{
    const RadialGrid g1(r_min, r_max, 1001);
    const double e1 = std::abs(solve_eigenvalue(p, g1).energy - exact);
    const double e2 = std::abs(solve_eigenvalue(p, g1.refined()).energy - exact);
    return std::log2(e1 / e2);
}
} // namespace

TEST_CASE("harmonic oscillator levels and fourth-order convergence")
{
    // u'' = (r^2 + l(l+1)/r^2 - E) u has E = 4 n_r + 2 l + 3
    for (int l : {0, 1, 3})
        for (int n : {0, 2})
        {
            const auto p = oscillator(l, n);
            const double exact = 4 * n + 2 * l + 3;
            const auto r = solve_eigenvalue(p, RadialGrid(1e-6, 10.0, 20001));
            CHECK(r.energy == doctest::Approx(exact).epsilon(1e-9));
            CHECK(r.node_count == n);
        }
    // a highly excited level keeps the discretization error far above rounding
    auto high = oscillator(0, 20);
    high.energy_ceiling = 300.0;
    CHECK(slope(high, 83.0, 1e-6, 16.0) == doctest::Approx(4.0).epsilon(0.3 / 4));
}

TEST_CASE("hard-wall box levels and fourth-order convergence")
{
    const double pi = std::numbers::pi;
    for (int k = 1; k <= 3; ++k)
    {
        const auto r = solve_eigenvalue(box(0, k - 1), RadialGrid(1e-6, 1.0, 4001));
        CHECK(r.energy == doctest::Approx(k * k * pi * pi).epsilon(1e-8));
    }
    // first zero of the spherical Bessel function j1
    const double x1 = 4.493409457909064;
    CHECK(solve_eigenvalue(box(1, 0), RadialGrid(1e-6, 1.0, 4001)).energy ==
          doctest::Approx(x1 * x1).epsilon(1e-9));
    auto high = box(0, 20);
    high.energy_ceiling = 2e4;
    CHECK(slope(high, 21 * 21 * pi * pi, 1e-6, 1.0) == doctest::Approx(4.0).epsilon(0.3 / 4));
}

TEST_CASE("table geometry against a finite-difference oracle")
{
    // Richardson-extrapolated second-order differences on a 40000-point mesh
    const auto grid = default_grid(table_geometry);
    auto E = [&](const char* label, OracleModel m) {
        return solve_eigenvalue(make_problem(QuantumState::parse(label), table_geometry,
                                             unit_mass, m),
                                grid)
            .energy;
    };
    const auto ex = OracleModel::se_exact();
    const auto pk = OracleModel::se_pekeris();
    CHECK(E("1s", ex) == doctest::Approx(-49.5735734358).epsilon(1e-10));
    CHECK(E("4s", ex) == doctest::Approx(-45.0225734223).epsilon(1e-10));
    CHECK(E("2p", ex) == doctest::Approx(-49.1666854003).epsilon(1e-10));
    // the l = 5 references carry about 1e-8 of rounding from the fine meshes
    CHECK(E("6h", ex) == doctest::Approx(-46.7898735798).epsilon(1e-9));
    CHECK(E("12h", ex) == doctest::Approx(-29.3263570713).epsilon(1e-9));
    CHECK(E("2p", pk) == doctest::Approx(-49.5152490095).epsilon(1e-10));
    CHECK(E("3p", pk) == doctest::Approx(-48.4467497905).epsilon(1e-10));
    CHECK(E("6h", pk) == doctest::Approx(-48.6987121194).epsilon(1e-10));
}

TEST_CASE("nuclear units against the finite-difference oracle")
{
    const auto grid = default_grid(particle_geometry);
    auto E = [&](int N) {
        return solve_eigenvalue(make_problem(QuantumState(N, 0), particle_geometry, proton,
                                             OracleModel::se_exact()),
                                grid)
            .energy;
    };
    CHECK(E(1) == doctest::Approx(-26.5463837688).epsilon(1e-9));
    CHECK(E(2) == doctest::Approx(-2.9075889671).epsilon(1e-8));
    CHECK_THROWS_AS(E(3), NoBoundState);
}

TEST_CASE("node counts, normalization and grid drift on the table states")
{
    const auto levels = solve_spectrum(table_geometry, unit_mass, 6,
                                       OracleModel::se_pekeris(),
                                       default_grid(table_geometry), true);
    REQUIRE(levels.size() == 21);
    for (const auto& lv : levels)
    {
        REQUIRE(lv.result);
        CHECK(lv.result->node_count == lv.state.radial_nodes());
        CHECK(node_positions(lv.result->wavefunction).size() ==
              static_cast<std::size_t>(lv.state.radial_nodes()));
        CHECK(lv.result->wavefunction.norm_residual < 1e-6);
        CHECK(lv.result->grid_convergence_delta < 1e-6);
        CHECK(std::abs(lv.result->mismatch) < 1e-6);
    }
}

TEST_CASE("s states do not see the barrier model")
{
    const auto grid = default_grid(table_geometry);
    for (int N = 1; N <= 6; ++N)
    {
        const QuantumState s(N, 0);
        const double a = solve_eigenvalue(
            make_problem(s, table_geometry, unit_mass, OracleModel::se_exact()), grid).energy;
        const double b = solve_eigenvalue(
            make_problem(s, table_geometry, unit_mass, OracleModel::se_pekeris()), grid).energy;
        CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("node count of the outward sweep grows with energy")
{
    const auto p = make_problem(QuantumState(3, 1), table_geometry, unit_mass,
                                OracleModel::se_exact());
    const auto grid = default_grid(table_geometry);
    int previous = -1;
    for (double e = -49.9; e < 0.0; e += 0.5)
    {
        const int nodes = numerov_integrate(p, e, grid).nodes;
        CHECK(nodes >= previous);
        previous = nodes;
    }
    CHECK(previous >= 6);
}

TEST_CASE("unbound requests")
{
    const auto grid = default_grid(table_geometry);
    CHECK_THROWS_AS(solve_eigenvalue(make_problem(QuantumState(30, 0), table_geometry,
                                                  unit_mass, OracleModel::se_exact()),
                                     grid),
                    NoBoundState);
}

TEST_CASE("Klein-Gordon oracle at the particle set")
{
    const auto grid = default_grid(particle_geometry);
    const double mc2 = proton.rest_energy();
    for (int l = 0; l <= 4; ++l)
    {
        const auto s = QuantumState::from_nodes(0, l);
        const auto kg = make_problem(s, particle_geometry, proton, OracleModel::kg());
        const auto r = solve_with_convergence(kg, grid);
        CHECK(r.energy > mc2 - particle_geometry.depth());
        // the shape-function barrier tends to D D0 > 0 here, which lifts
        // the threshold above mc^2 for the higher partial waves
        CHECK(r.energy < kg.energy_ceiling);
        CHECK(r.node_count == 0);
        CHECK(r.grid_convergence_delta < 1e-6);
        // binding close to the Schrodinger one for a shallow well
        const double se = solve_eigenvalue(
            make_problem(s, particle_geometry, proton, OracleModel::se_pekeris()), grid).energy;
        CHECK(std::abs((r.energy - mc2) - se) < 0.05 * particle_geometry.depth());
    }
    CHECK_THROWS_AS(
        solve_eigenvalue(make_problem(QuantumState::from_nodes(3, 1), particle_geometry,
                                      proton, OracleModel::kg()),
                         grid),
        NoBoundState);
}

TEST_CASE("antiparticle branch has no bound states in the well")
{
    const auto grid = default_grid(anti_geometry);
    for (int l = 1; l <= 4; ++l)
        CHECK_THROWS_AS(
            solve_eigenvalue(make_problem(QuantumState::from_nodes(0, l), anti_geometry,
                                          anti,
                                          OracleModel::kg(Centrifugal::pekeris,
                                                          Branch::antiparticle)),
                             grid),
            NoBoundState);
}

TEST_CASE("overlay aligns signs and measures the difference")
{
    const auto grid = default_grid(table_geometry);
    const auto rep = compare_eigenfunctions(QuantumState(3, 1), OracleModel::se_exact(),
                                            OracleModel::se_pekeris(), table_geometry,
                                            unit_mass, grid);
    CHECK(rep.l2_difference > 0.0);
    CHECK(rep.l2_difference < std::sqrt(2.0));
    CHECK(rep.nodes_a.size() == 1);
    CHECK(rep.nodes_b.size() == 1);
    const auto self = overlay(rep.a, rep.a);
    CHECK(self.l2_difference == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(self.argmax_shift == 0.0);
}
