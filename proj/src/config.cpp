#include "wsspec/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "wsspec/csv.hpp"
#include "wsspec/errors.hpp"
#include "wsspec/oracle.hpp"

namespace wsspec
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> parts;
    if (trim(s).empty())
        return parts;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

double parse_double(std::string_view key, std::string_view v)
{
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(x))
        throw ConfigError(std::string(key) + ": not a number: '" +
                          std::string(v) + "'");
    return x;
}

long parse_int(std::string_view key, std::string_view v)
{
    long x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError(std::string(key) + ": not an integer: '" +
                          std::string(v) + "'");
    return x;
}

double positive(std::string_view key, std::string_view v)
{
    const double x = parse_double(key, v);
    if (!(x > 0.0))
        throw ConfigError(std::string(key) + " must be positive");
    return x;
}

SpectrumColumn parse_column(std::string_view v)
{
    if (v == "closed_form")
        return SpectrumColumn::closed_form;
    if (v == "oracle_exact")
        return SpectrumColumn::oracle_exact;
    if (v == "oracle_pekeris")
        return SpectrumColumn::oracle_pekeris;
    throw ConfigError("methods: unknown method '" + std::string(v) + "'");
}

RunConfig nuclear_set(double a, double mass)
{
    RunConfig c;
    c.V0 = 43.1;
    c.r0 = 3.44731;
    c.a = a;
    c.mass = mass;
    c.units = UnitPreset::nuclear;
    return c;
}

constexpr double kProtonMass = 1.007825;
constexpr double kAntiMass = 1.00866;

void apply(RunConfig& c, std::string_view key, std::string_view v)
{
    if (key == "preset")
        c = preset_config(v);
    else if (key == "V0")
        c.V0 = positive(key, v);
    else if (key == "r0")
        c.r0 = positive(key, v);
    else if (key == "a")
        c.a = positive(key, v);
    else if (key == "mass")
        c.mass = positive(key, v);
    else if (key == "units")
    {
        if (v == "nuclear")
            c.units = UnitPreset::nuclear;
        else if (v == "dimensionless")
            c.units = UnitPreset::dimensionless;
        else
            throw ConfigError("units: expected nuclear or dimensionless");
    }
    else if (key == "equation")
    {
        if (v == "SE")
            c.equation = EquationKind::schrodinger;
        else if (v == "KG")
            c.equation = EquationKind::klein_gordon;
        else
            throw ConfigError("equation: expected SE or KG");
    }
    else if (key == "branch")
    {
        if (v == "particle")
            c.branch = Branch::particle;
        else if (v == "antiparticle")
            c.branch = Branch::antiparticle;
        else
            throw ConfigError("branch: expected particle or antiparticle");
    }
    else if (key == "methods")
    {
        c.methods.clear();
        for (auto m : split_list(v))
            c.methods.push_back(parse_column(m));
        if (c.methods.empty())
            throw ConfigError("methods: at least one method is required");
    }
    else if (key == "nmax")
        c.n_max = static_cast<int>(parse_int(key, v));
    else if (key == "l_values")
    {
        c.l_values.clear();
        for (auto l : split_list(v))
            c.l_values.push_back(static_cast<int>(parse_int(key, l)));
    }
    else if (key == "out")
        c.out = std::string(v);
    else if (key == "state")
    {
        try
        {
            c.state = QuantumState::parse(v);
        }
        catch (const Error& e)
        {
            throw ConfigError(std::string("state: ") + e.what());
        }
    }
    else if (key == "grid.r_min")
        c.grid.r_min = positive(key, v);
    else if (key == "grid.r_max")
        c.grid.r_max = positive(key, v);
    else if (key == "grid.count")
        c.grid.count = static_cast<std::size_t>(positive(key, v));
    else if (key == "potential.r_min")
        c.potential.r_min = parse_double(key, v);
    else if (key == "potential.r_max")
        c.potential.r_max = parse_double(key, v);
    else if (key == "potential.points")
        c.potential.points = static_cast<int>(parse_int(key, v));
    else
        throw ConfigError("unknown key '" + std::string(key) + "'");
}

} // namespace

WoodsSaxonParams RunConfig::params() const { return {V0, r0, a}; }

Particle RunConfig::particle() const
{
    return {mass, units == UnitPreset::nuclear ? UnitSystem::nuclear()
                                               : UnitSystem::dimensionless()};
}

RadialGrid RunConfig::radial_grid() const
{
    const auto base = default_grid(params());
    return {grid.r_min.value_or(base.r_min()), grid.r_max.value_or(base.r_max()),
            grid.count.value_or(base.count())};
}

bool RunConfig::has_method(SpectrumColumn c) const
{
    return std::find(methods.begin(), methods.end(), c) != methods.end();
}

bool RunConfig::includes_l(int l) const
{
    return l_values.empty() ||
           std::find(l_values.begin(), l_values.end(), l) != l_values.end();
}

std::vector<std::string> preset_names()
{
    return {"table1", "fig1", "fig2", "fig3", "fig4",
            "fig5",   "fig6", "fig7", "fig8"};
}

RunConfig preset_config(std::string_view name)
{
    RunConfig c;
    if (name == "table1")
        ;
    else if (name == "fig1" || name == "fig2")
    {
        c = nuclear_set(0.67, kProtonMass);
        c.l_values = name == "fig1" ? std::vector<int>{1}
                                    : std::vector<int>{2, 5};
    }
    else if (name == "fig3" || name == "fig4")
    {
        c = name == "fig3" ? nuclear_set(0.67, kProtonMass)
                           : nuclear_set(0.55, kAntiMass);
        c.equation = EquationKind::klein_gordon;
        c.branch = name == "fig3" ? Branch::particle : Branch::antiparticle;
        c.l_values = {1, 2, 3, 4};
        c.n_max = 8;
    }
    else if (name == "fig5" || name == "fig6")
    {
        c = nuclear_set(0.67, kProtonMass);
        c.l_values = name == "fig5" ? std::vector<int>{0}
                                    : std::vector<int>{1, 2};
        c.n_max = 8;
    }
    else if (name == "fig7")
        c.state = QuantumState::from_nodes(1, 1);
    else if (name == "fig8")
        c.state = QuantumState::from_nodes(6, 5);
    else
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    c.preset = std::string(name);
    return c;
}

RunConfig parse_config(std::string_view text, RunConfig base)
{
    RunConfig c = std::move(base);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size())
    {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        try
        {
            apply(c, key, value);
        }
        catch (const Error& e)
        {
            throw ConfigError("line " + std::to_string(line_no) + ": " +
                              e.what());
        }
    }
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path, RunConfig base)
{
    std::string text;
    try
    {
        text = read_file(path);
    }
    catch (const Error&)
    {
        throw ConfigError("cannot read config file " + path);
    }
    return parse_config(text, std::move(base));
}

void validate(const RunConfig& c)
{
    if (!(c.V0 > 0 && c.r0 > 0 && c.a > 0 && c.mass > 0))
        throw ConfigError("V0, r0, a and mass must be positive");
    if (c.n_max < 1)
        throw ConfigError("nmax must be at least 1");
    for (int l : c.l_values)
        if (l < 0)
            throw ConfigError("l_values must be non-negative");
    if (c.equation == EquationKind::klein_gordon &&
        c.units != UnitPreset::nuclear)
        throw ConfigError("KG requires nuclear units");
    if (c.potential.points < 2)
        throw ConfigError("potential.points must be at least 2");
    if (c.grid.count && *c.grid.count < RadialGrid::kMinCount)
        throw ConfigError("grid.count must be at least " +
                          std::to_string(RadialGrid::kMinCount));
    if (c.out.empty())
        throw ConfigError("out must not be empty");
}

} // namespace wsspec
