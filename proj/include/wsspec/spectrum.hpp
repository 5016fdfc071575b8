#pragma once

#include <optional>
#include <vector>

#include "wsspec/closed_form.hpp"
#include "wsspec/grid.hpp"
#include "wsspec/potential.hpp"

namespace wsspec
{

// Every state with l + 1 <= N <= n_max, sorted by (N, l), evaluated by
// `method`. Per-state failures are flagged on the level, never dropped.
// Oracle methods solve the Schrodinger equation on `grid` (default grid
// when absent).
std::vector<EnergyLevel> spectrum_table(const WoodsSaxonParams& p,
                                        const Particle& particle, int n_max,
                                        Method method,
                                        Branch branch = Branch::particle,
                                        std::optional<RadialGrid> grid = {});

} // namespace wsspec
