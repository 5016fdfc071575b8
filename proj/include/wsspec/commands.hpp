#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "wsspec/config.hpp"
#include "wsspec/csv.hpp"

namespace wsspec
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_conformance_failure = 1,
    exit_usage = 2,
    exit_solver_failure = 3
};

struct SpectrumReport
{
    CsvTable table;  // label, N, l, n_r, E_closed_form, E_oracle_exact,
                     // E_oracle_pekeris, flags
    std::vector<std::string> diagnostics;
    bool solver_failure = false;  // a solve failed for a reason other than
                                  // the state being unbound
};

SpectrumReport spectrum_report(const RunConfig& config);

// l, beta_x, V_eff_exact, V_eff_approx for every l of the config (l = 0
// when none is given). Throws ConfigError for an invalid range.
CsvTable potential_table(const RunConfig& config);

struct WavefunctionReport
{
    CsvTable table;    // r, u_exact, u_pekeris, u_closed_form
    CsvTable summary;  // quantity, value
};

// Schrodinger eigenfunctions of config.state. Throws NoBoundState when
// either oracle finds no such level.
WavefunctionReport wavefunction_report(const RunConfig& config);

struct ConformanceReport
{
    CsvTable table;  // criterion, computed, reference, delta, status
    std::vector<std::string> failed;
};

// Table I geometry is taken from the config; the Klein-Gordon entries use
// the fig3 preset.
ConformanceReport conformance_report(const RunConfig& config);

// Command drivers: write CSV files into config.out and return an exit code.
int cmd_spectrum(const RunConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_potential(const RunConfig& config, std::ostream& out,
                  std::ostream& err);
int cmd_wavefunction(const RunConfig& config, std::ostream& out,
                     std::ostream& err);
int cmd_conformance(const RunConfig& config, std::ostream& out,
                    std::ostream& err);

} // namespace wsspec
