#include "wsspec/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wsspec/errors.hpp"

namespace wsspec
{

std::string to_string(Branch b)
{
    return b == Branch::particle ? "particle" : "antiparticle";
}

std::string to_string(Method m)
{
    switch (m)
    {
    case Method::kg_closed: return "kg-closed";
    case Method::se_closed: return "se-closed";
    case Method::oracle_exact: return "oracle-exact";
    case Method::oracle_approx: return "oracle-approx";
    }
    return "unknown";
}

bool is_effectively_real(complex e)
{
    return std::abs(e.imag()) < 1e-10 * std::max(1.0, std::abs(e));
}

bool KGCoefficients::real(double tol) const
{
    auto ok = [tol](complex v) {
        return std::abs(v.imag()) <= tol * std::max(1.0, std::abs(v));
    };
    return ok(a3) && ok(A) && ok(n1);
}

namespace
{

// 2 m0 D / hbar^2, the barrier scale as an inverse length squared.
double barrier_scale(const PekerisCoefficients& c, const Particle& particle)
{
    return c.D / particle.hbar2_over_2m();
}

complex pick_branch(complex first, complex root, Branch branch)
{
    if (root.real() < 0.0)
        root = -root;
    return branch == Branch::particle ? first + root : first - root;
}

std::string complex_message(const QuantumState& s, complex e)
{
    std::ostringstream os;
    os.precision(12);
    os << "energy of " << s.label() << " is complex: " << e.real()
       << (e.imag() < 0 ? " - " : " + ") << std::abs(e.imag()) << "i";
    return os.str();
}

} // namespace

KGCoefficients kg_coefficients(int n, int l, double energy,
                               const WoodsSaxonParams& p,
                               const Particle& particle)
{
    const auto c = pekeris_coefficients(l, p, particle);
    const double K = barrier_scale(c, particle);
    const double delta = particle.delta();
    const double mc2 = particle.rest_energy();
    const double V0 = p.depth();
    const double b2 = p.beta() * p.beta();

    KGCoefficients k;
    k.a1_sq = -(delta * delta * V0 * V0 - K * c.D2) / b2;
    k.a2_sq = -(2.0 / b2) * (2.0 * delta * delta * energy * V0 - K * c.D1);
    k.a3_sq = -(4.0 / b2)
              * (delta * delta * (energy * energy - mc2 * mc2) - K * c.D0);
    k.a3 = std::sqrt(k.a3_sq);
    k.A = std::sqrt(k.a3_sq + 2.0 * k.a2_sq + 4.0 * k.a1_sq);
    k.n1 = -(2.0 * n + 1.0) + std::sqrt(1.0 + 4.0 * k.a1_sq);
    return k;
}

KGEnergyTerms kg_energy_terms(int n, int l, const WoodsSaxonParams& p,
                              const Particle& particle)
{
    if (n < 0)
        throw InvalidState("formula index must be non-negative");
    const auto c = pekeris_coefficients(l, p, particle);
    const double K = barrier_scale(c, particle);
    const double delta = particle.delta();
    const double mc2 = particle.rest_energy();
    const double V0 = p.depth();
    const double beta = p.beta();

    const complex a1_sq = -(delta * delta * V0 * V0 - K * c.D2)
                          / (beta * beta);
    const complex n1 = -(2.0 * n + 1.0) + std::sqrt(1.0 + 4.0 * a1_sq);
    const complex T = beta * beta * n1 * n1 + 4.0 * delta * delta * V0 * V0;

    KGEnergyTerms t;
    t.n1 = n1;
    // -[T - 4K(D1+D2)] V0 / (2T) without subtracting two large quotients
    t.first = -0.5 * V0 + 2.0 * K * (c.D1 + c.D2) * V0 / T;
    const complex q = K * (c.D1 + c.D2) / T;
    t.radicand = (2.0 * mc2 * mc2 * delta * delta
                  + K * (2.0 * c.D0 + c.D1 + c.D2))
                     / (2.0 * T)
                 - q * q - 1.0 / 16.0;
    t.root = beta * n1 / delta * std::sqrt(t.radicand);
    return t;
}

complex kg_energy_complex(int n, int l, Branch branch,
                          const WoodsSaxonParams& p, const Particle& particle)
{
    const auto t = kg_energy_terms(n, l, p, particle);
    return pick_branch(t.first, t.root, branch);
}

EnergyLevel kg_energy_level(const QuantumState& state, Branch branch,
                            const WoodsSaxonParams& p,
                            const Particle& particle)
{
    const complex e = kg_energy_complex(state.formula_index(), state.l(),
                                        branch, p, particle);
    EnergyLevel level{state};
    level.energy = e.real();
    level.imag = e.imag();
    level.branch = branch;
    level.method = Method::kg_closed;
    level.is_real = is_effectively_real(e);
    level.valid = level.is_real;
    if (!level.is_real)
        level.note = "complex";
    return level;
}

EnergyLevel kg_energy(const QuantumState& state, Branch branch,
                      const WoodsSaxonParams& p, const Particle& particle)
{
    auto level = kg_energy_level(state, branch, p, particle);
    if (!level.is_real)
        throw ComplexEnergy(
            complex_message(state, complex(level.energy, level.imag)));
    return level;
}

complex kg_energy_swave_complex(int n, Branch branch, const WoodsSaxonParams& p,
                                const Particle& particle)
{
    if (n < 0)
        throw InvalidState("formula index must be non-negative");
    const double delta = particle.delta();
    const double mc2 = particle.rest_energy();
    const double V0 = p.depth();
    const double beta = p.beta();

    const complex a1_sq = -(delta * delta * V0 * V0) / (beta * beta);
    const complex n1 = -(2.0 * n + 1.0) + std::sqrt(1.0 + 4.0 * a1_sq);
    const complex T = beta * beta * n1 * n1 + 4.0 * delta * delta * V0 * V0;
    const complex root = beta * n1 / delta
                         * std::sqrt(mc2 * mc2 * delta * delta / T
                                     - 1.0 / 16.0);
    return pick_branch(complex(-0.5 * V0, 0.0), root, branch);
}

EnergyLevel kg_energy_swave(int n, Branch branch, const WoodsSaxonParams& p,
                            const Particle& particle)
{
    const auto state = QuantumState::from_nodes(n, 0);
    const complex e = kg_energy_swave_complex(n, branch, p, particle);
    EnergyLevel level{state};
    level.energy = e.real();
    level.imag = e.imag();
    level.branch = branch;
    level.method = Method::kg_closed;
    level.is_real = is_effectively_real(e);
    level.valid = level.is_real;
    if (!level.is_real)
        throw ComplexEnergy(complex_message(state, e));
    return level;
}

bool kg_reality_condition(const QuantumState& state, const WoodsSaxonParams& p,
                          const Particle& particle)
{
    const auto c = pekeris_coefficients(state.l(), p, particle);
    const double K = barrier_scale(c, particle);
    const double delta = particle.delta();
    const double mc2 = particle.rest_energy();
    const double V0 = p.depth();
    const double beta = p.beta();

    const double disc = 1.0 + 4.0 * (-(delta * delta * V0 * V0 - K * c.D2)
                                     / (beta * beta));
    if (disc < 0.0)
        return false;
    const double n1 = -(2.0 * state.formula_index() + 1.0) + std::sqrt(disc);
    const double T = beta * beta * n1 * n1 + 4.0 * delta * delta * V0 * V0;
    const double lhs = (2.0 * mc2 * mc2 * delta * delta
                        + K * (2.0 * c.D0 + c.D1 + c.D2))
                       / (2.0 * T);
    const double q = K * (c.D1 + c.D2) / T;
    return lhs > q * q + 1.0 / 16.0;
}

double schrodinger_root(int l, const WoodsSaxonParams& p)
{
    const auto c = pekeris_shape_coefficients(p.beta() * p.radius());
    const double ll = static_cast<double>(l) * (l + 1);
    const double a = p.diffuseness();
    const double r0 = p.radius();
    return std::sqrt(1.0 + 4.0 * ll * a * a / (r0 * r0) * c.D2);
}

double schrodinger_energy_formula(int n, int l, const WoodsSaxonParams& p,
                                  const Particle& particle)
{
    const auto c = pekeris_coefficients(l, p, particle);
    const double h2m = particle.hbar2_over_2m();
    const double ll = static_cast<double>(l) * (l + 1);
    const double a = p.diffuseness();
    const double r0 = p.radius();
    const double V0 = p.depth();

    const double q = 2.0 * n + 1.0 + schrodinger_root(l, p);
    const double bracket
        = 0.25 * q
          - (ll * a * a / (r0 * r0) * (c.D1 + c.D2) - V0 * a * a / h2m) / q;
    return c.D * c.D0 - h2m / (a * a) * bracket * bracket;
}

EnergyLevel schrodinger_energy(const QuantumState& state,
                               const WoodsSaxonParams& p,
                               const Particle& particle)
{
    EnergyLevel level{state};
    level.energy = schrodinger_energy_formula(state.formula_index(), state.l(),
                                              p, particle);
    level.method = Method::se_closed;
    return level;
}

double schrodinger_energy_swave_formula(int n, const WoodsSaxonParams& p,
                                        const Particle& particle)
{
    if (n < 0)
        throw InvalidState("formula index must be non-negative");
    const double h2m = particle.hbar2_over_2m();
    const double a = p.diffuseness();
    // m0 V0 a^2 / hbar^2
    const double s = p.depth() * a * a / (2.0 * h2m);
    const double half = 0.5 * (n + 1.0);
    const double tail = s / (n + 1.0);
    return -h2m / (a * a) * (half * half + tail * tail + s);
}

EnergyLevel schrodinger_energy_swave(int n, const WoodsSaxonParams& p,
                                     const Particle& particle)
{
    EnergyLevel level{QuantumState::from_nodes(n, 0)};
    level.energy = schrodinger_energy_swave_formula(n, p, particle);
    level.method = Method::se_closed;
    return level;
}

} // namespace wsspec
