#include "wsspec/units.hpp"

#include <cmath>

#include "wsspec/errors.hpp"

namespace wsspec
{

namespace
{
constexpr double kHbarC = 197.3269804;       // MeV fm
constexpr double kAmuToMeV = 931.49410242;   // MeV / amu
} // namespace

UnitSystem UnitSystem::nuclear()
{
    return {UnitPreset::nuclear, kHbarC, kAmuToMeV,
            kHbarC * kHbarC / (2.0 * kAmuToMeV)};
}

UnitSystem UnitSystem::dimensionless()
{
    return {UnitPreset::dimensionless, 1.0, 1.0, 1.0};
}

Particle::Particle(double mass, UnitSystem units) : mass_(mass), units_(units)
{
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw ConfigError("particle mass must be positive");
    if (!(units.hbar_c > 0.0) || !(units.amu_to_energy > 0.0)
        || !(units.hbar2_over_2m0 > 0.0))
        throw ConfigError("unit system constants must be positive");
}

double Particle::rest_energy() const
{
    if (!relativistic())
        throw ConfigError(
            "Klein-Gordon quantities need the nuclear unit system");
    return mass_ * units_.amu_to_energy;
}

double Particle::delta() const
{
    if (!relativistic())
        throw ConfigError(
            "Klein-Gordon quantities need the nuclear unit system");
    return 1.0 / units_.hbar_c;
}

} // namespace wsspec
