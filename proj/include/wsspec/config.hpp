#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsspec/closed_form.hpp"
#include "wsspec/grid.hpp"
#include "wsspec/potential.hpp"
#include "wsspec/quantum_state.hpp"
#include "wsspec/units.hpp"
#include "wsspec/wavefunction.hpp"

namespace wsspec
{

// Column groups of the spectrum table.
enum class SpectrumColumn
{
    closed_form,
    oracle_exact,
    oracle_pekeris
};

struct GridOverrides
{
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<std::size_t> count;
};

// Sampling of the potential command, in radius.
struct PotentialRange
{
    std::optional<double> r_min;  // default 0.1 r0
    std::optional<double> r_max;  // default r0 + 5 a
    int points = 401;
};

// Everything a command needs. Defaults are the table1 preset.
//
// Keys accepted in a config file (`key = value`, `#` starts a comment):
//   preset, V0, r0, a, mass, units (nuclear | dimensionless),
//   equation (SE | KG), branch (particle | antiparticle),
//   methods (comma list of closed_form, oracle_exact, oracle_pekeris),
//   nmax, l_values (comma list, empty for all), out, state (e.g. 3p),
//   grid.r_min, grid.r_max, grid.count,
//   potential.r_min, potential.r_max, potential.points
// A `preset` line resets every field to that preset before later keys apply.
struct RunConfig
{
    std::string preset = "table1";
    double V0 = 50.0;
    double r0 = 7.0;
    double a = 0.6;
    double mass = 1.0;
    UnitPreset units = UnitPreset::dimensionless;
    EquationKind equation = EquationKind::schrodinger;
    Branch branch = Branch::particle;
    std::vector<SpectrumColumn> methods = {SpectrumColumn::closed_form,
                                           SpectrumColumn::oracle_exact,
                                           SpectrumColumn::oracle_pekeris};
    int n_max = 6;
    std::vector<int> l_values;  // empty: every l < N
    std::string out = ".";
    std::optional<QuantumState> state;
    GridOverrides grid;
    PotentialRange potential;

    WoodsSaxonParams params() const;
    Particle particle() const;
    // default grid of the geometry with the overrides applied
    RadialGrid radial_grid() const;
    bool has_method(SpectrumColumn c) const;
    bool includes_l(int l) const;
};

std::vector<std::string> preset_names();

// Throws ConfigError for an unknown name.
RunConfig preset_config(std::string_view name);

// Applies `key = value` lines on top of `base`. Throws ConfigError on
// unknown keys, malformed lines or invalid values.
RunConfig parse_config(std::string_view text, RunConfig base = {});

RunConfig load_config(const std::string& path, RunConfig base = {});

// Checks positivity and ranges; throws ConfigError.
void validate(const RunConfig& config);

} // namespace wsspec
