#pragma once

#include <complex>
#include <string>

#include "wsspec/potential.hpp"
#include "wsspec/quantum_state.hpp"
#include "wsspec/units.hpp"

namespace wsspec
{

using complex = std::complex<double>;

// The two roots of the Klein-Gordon quadratic. The particle branch is the
// upper root (root term with non-negative real part), the antiparticle
// branch the lower one.
enum class Branch
{
    particle,
    antiparticle
};

enum class Method
{
    kg_closed,
    se_closed,
    oracle_exact,
    oracle_approx
};

std::string to_string(Branch b);
std::string to_string(Method m);

struct EnergyLevel
{
    explicit EnergyLevel(QuantumState s) : state(s) {}

    QuantumState state;
    double energy = 0.0;
    double imag = 0.0;  // residual imaginary part (closed forms)
    Branch branch = Branch::particle;
    Method method = Method::se_closed;
    bool is_real = true;
    bool valid = true;  // false when the state could not be evaluated
    std::string note;   // reason when !valid
};

// Parameters of the transformed KG equation in z = 2 / (1 + exp(beta x)).
// a3 and A are principal square roots.
struct KGCoefficients
{
    complex a1_sq;
    complex a2_sq;
    complex a3_sq;
    complex a3;
    complex A;   // sqrt(a3^2 + 2 a2^2 + 4 a1^2)
    complex n1;  // -(2n+1) + sqrt(1 + 4 a1^2)

    bool real(double tol = 1e-12) const;
};

// Coefficients for formula index n, angular momentum l and energy E.
KGCoefficients kg_coefficients(int n, int l, double energy,
                               const WoodsSaxonParams& p,
                               const Particle& particle);

// Both pieces of the KG spectrum formula: E = first +/- root.
struct KGEnergyTerms
{
    complex first;     // rational term
    complex root;      // beta n1 / delta * sqrt(radicand), sign as printed
    complex radicand;
    complex n1;
};

KGEnergyTerms kg_energy_terms(int n, int l, const WoodsSaxonParams& p,
                              const Particle& particle);

// Branch value in complex arithmetic; never throws on complex results.
complex kg_energy_complex(int n, int l, Branch branch,
                          const WoodsSaxonParams& p, const Particle& particle);

// Throws ComplexEnergy if the imaginary part exceeds
// 1e-10 * max(1, |E|).
EnergyLevel kg_energy(const QuantumState& state, Branch branch,
                      const WoodsSaxonParams& p, const Particle& particle);

// Non-throwing form used by tables; complex results are flagged.
EnergyLevel kg_energy_level(const QuantumState& state, Branch branch,
                            const WoodsSaxonParams& p,
                            const Particle& particle);

// Independent s-wave formula with its own n'_1.
complex kg_energy_swave_complex(int n, Branch branch, const WoodsSaxonParams& p,
                                const Particle& particle);
EnergyLevel kg_energy_swave(int n, Branch branch, const WoodsSaxonParams& p,
                            const Particle& particle);

// True iff n1 is real and the radicand of the spectrum formula is positive,
// written as the printed inequality lhs > rhs + 1/16.
bool kg_reality_condition(const QuantumState& state, const WoodsSaxonParams& p,
                          const Particle& particle);

// Non-relativistic spectrum for formula index n (no state validation).
double schrodinger_energy_formula(int n, int l, const WoodsSaxonParams& p,
                                  const Particle& particle);

// sqrt(1 + 4 l(l+1) a^2 D2 / r0^2)
double schrodinger_root(int l, const WoodsSaxonParams& p);

EnergyLevel schrodinger_energy(const QuantumState& state,
                               const WoodsSaxonParams& p,
                               const Particle& particle);

double schrodinger_energy_swave_formula(int n, const WoodsSaxonParams& p,
                                        const Particle& particle);
EnergyLevel schrodinger_energy_swave(int n, const WoodsSaxonParams& p,
                                     const Particle& particle);

// |Im E| < 1e-10 * max(1, |E|)
bool is_effectively_real(complex e);

} // namespace wsspec
