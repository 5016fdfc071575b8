#include "wsspec/spectrum.hpp"

#include "wsspec/errors.hpp"
#include "wsspec/oracle.hpp"

namespace wsspec
{

std::vector<EnergyLevel> spectrum_table(const WoodsSaxonParams& p,
                                        const Particle& particle, int n_max,
                                        Method method, Branch branch,
                                        std::optional<RadialGrid> grid)
{
    if (n_max < 1)
        throw InvalidState("N_max must be at least 1");

    if (method == Method::oracle_exact || method == Method::oracle_approx)
    {
        const auto model = method == Method::oracle_exact
                               ? OracleModel::se_exact()
                               : OracleModel::se_pekeris();
        const auto levels = solve_spectrum(p, particle, n_max, model,
                                           grid ? *grid : default_grid(p));
        std::vector<EnergyLevel> out;
        out.reserve(levels.size());
        for (const auto& lv : levels)
        {
            EnergyLevel e{lv.state};
            e.method = method;
            if (lv.result)
                e.energy = lv.result->energy;
            else
            {
                e.valid = false;
                e.note = lv.error;
            }
            out.push_back(std::move(e));
        }
        return out;
    }

    std::vector<EnergyLevel> out;
    out.reserve(static_cast<std::size_t>(n_max * (n_max + 1) / 2));
    for (int N = 1; N <= n_max; ++N)
        for (int l = 0; l < N; ++l)
        {
            const QuantumState s(N, l);
            if (method == Method::kg_closed)
                out.push_back(kg_energy_level(s, branch, p, particle));
            else
                out.push_back(schrodinger_energy(s, p, particle));
        }
    return out;
}

} // namespace wsspec
