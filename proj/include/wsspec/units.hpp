#pragma once

namespace wsspec
{

enum class UnitPreset
{
    nuclear,       // MeV and fm, masses in amu
    dimensionless  // hbar^2/(2 m0) = 1, lengths and energies unitless
};

// Physical constants of a unit convention. All fields are strictly positive.
//
// hbar2_over_2m0 is stored per unit of mass: for the nuclear preset it is
// (hbar c)^2 / (2 * 1 amu) in MeV fm^2, for the dimensionless preset it is 1.
// A Particle divides it by its own mass.
struct UnitSystem
{
    UnitPreset preset;
    double hbar_c;         // MeV fm
    double amu_to_energy;  // MeV per amu
    double hbar2_over_2m0; // energy * length^2 * mass-unit

    static UnitSystem nuclear();
    static UnitSystem dimensionless();
};

// A particle of given rest mass expressed in a unit system.
class Particle
{
  public:
    // mass in amu (nuclear) or in units of the reference mass (dimensionless)
    Particle(double mass, UnitSystem units);

    double mass() const { return mass_; }
    const UnitSystem& units() const { return units_; }

    // hbar^2 / (2 m0)
    double hbar2_over_2m() const { return units_.hbar2_over_2m0 / mass_; }

    // m0 c^2; only meaningful for relativistic (nuclear) units.
    double rest_energy() const;

    // 1 / (hbar c), the coupling that turns (E - V)^2 into an inverse length
    // squared in the radial Klein-Gordon equation.
    double delta() const;

    bool relativistic() const { return units_.preset == UnitPreset::nuclear; }

  private:
    double mass_;
    UnitSystem units_;
};

} // namespace wsspec
