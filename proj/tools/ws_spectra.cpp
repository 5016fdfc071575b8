// ws-spectra: spectra, effective potentials and eigenfunctions of the
// Woods-Saxon well as CSV files.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsspec/commands.hpp"
#include "wsspec/errors.hpp"

namespace
{

struct Options
{
    std::string config_file;
    std::string preset;
    std::optional<int> nmax;
    std::string out;
    std::string state;
    std::optional<int> n;
    std::optional<int> l;
    std::vector<int> ls;
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<int> points;
};

wsspec::RunConfig build_config(const Options& o)
{
    using namespace wsspec;
    RunConfig c = o.preset.empty() ? RunConfig{} : preset_config(o.preset);
    if (!o.config_file.empty())
        c = load_config(o.config_file, c);
    if (o.nmax)
        c.n_max = *o.nmax;
    if (!o.out.empty())
        c.out = o.out;
    if (!o.state.empty())
        c.state = QuantumState::parse(o.state);
    if (o.n || o.l)
    {
        if (!(o.n && o.l))
            throw ConfigError("--n and --l go together");
        c.state = QuantumState::from_nodes(*o.n, *o.l);
    }
    if (!o.ls.empty())
        c.l_values = o.ls;
    if (o.r_min)
        c.potential.r_min = *o.r_min;
    if (o.r_max)
        c.potential.r_max = *o.r_max;
    if (o.points)
        c.potential.points = *o.points;
    validate(c);
    return c;
}

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--config", o.config_file, "key = value config file");
    sub->add_option("--preset", o.preset,
                    "table1, fig1 ... fig8 (applied before --config)");
    sub->add_option("--nmax", o.nmax, "largest principal number N");
    sub->add_option("--out", o.out, "output directory");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Woods-Saxon bound-state spectra and eigenfunctions"};
    app.require_subcommand(1);
    Options o;

    auto* spectrum = app.add_subcommand("spectrum", "energy table");
    add_common(spectrum, o);
    spectrum->add_option("--ls", o.ls, "restrict to these l values");

    auto* potential = app.add_subcommand("potential",
                                         "exact and approximate V_eff");
    add_common(potential, o);
    potential->add_option("--ls", o.ls, "l values");
    potential->add_option("--rmin", o.r_min, "smallest radius");
    potential->add_option("--rmax", o.r_max, "largest radius");
    potential->add_option("--points", o.points, "samples per l");

    auto* wavefunction = app.add_subcommand("wavefunction",
                                            "eigenfunctions of one state");
    add_common(wavefunction, o);
    wavefunction->add_option("--state", o.state, "spectroscopic label, e.g. 3p");
    wavefunction->add_option("--n", o.n, "radial node count");
    wavefunction->add_option("--l", o.l, "angular momentum");

    auto* conformance = app.add_subcommand("conformance",
                                           "checks against the printed table");
    add_common(conformance, o);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : wsspec::exit_usage;
    }

    try
    {
        const auto config = build_config(o);
        if (spectrum->parsed())
            return wsspec::cmd_spectrum(config, std::cout, std::cerr);
        if (potential->parsed())
            return wsspec::cmd_potential(config, std::cout, std::cerr);
        if (wavefunction->parsed())
            return wsspec::cmd_wavefunction(config, std::cout, std::cerr);
        return wsspec::cmd_conformance(config, std::cout, std::cerr);
    }
    catch (const wsspec::ConfigError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return wsspec::exit_usage;
    }
    catch (const wsspec::InvalidState& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return wsspec::exit_usage;
    }
    catch (const wsspec::Error& e)
    {
        std::cerr << "solver failure: " << e.what() << '\n';
        return wsspec::exit_solver_failure;
    }
}
