#include <doctest.h>

#include <cmath>
#include <string>

#include "wsspec/commands.hpp"
#include "wsspec/config.hpp"
#include "wsspec/csv.hpp"
#include "wsspec/errors.hpp"

using namespace wsspec;

TEST_CASE("number formatting")
{
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-250.694444444444) == "-250.694444444");
    CHECK(format_number(5.0) == "5");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(std::nan("")).empty());
    CHECK(format_number(std::optional<double>{}).empty());
}

TEST_CASE("csv round trip is byte-identical")
{
    CsvTable t;
    t.header = {"a", "b", "c"};
    t.rows = {{"1", "", "x;y"}, {"say \"hi\"", "1,5", "line\nbreak"}, {"", "", ""}};
    const auto text = t.to_string();
    CHECK(text.back() == '\n');
    CHECK(text.find('\r') == std::string::npos);
    const auto back = parse_csv(text);
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
    CHECK(back.to_string() == text);
}

TEST_CASE("csv parse errors")
{
    CHECK_THROWS_AS(parse_csv(""), ConfigError);
    CHECK_THROWS_AS(parse_csv("a,b"), ConfigError);
    CHECK_THROWS_AS(parse_csv("a,b\r\n1,2\r\n"), ConfigError);
    CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ConfigError);
    CHECK_THROWS_AS(parse_csv("a\n\"open\n"), ConfigError);
}

TEST_CASE("config defaults are the table preset")
{
    const RunConfig c;
    CHECK(c.V0 == 50.0);
    CHECK(c.r0 == 7.0);
    CHECK(c.a == 0.6);
    CHECK(c.units == UnitPreset::dimensionless);
    CHECK(c.n_max == 6);
    CHECK(c.particle().hbar2_over_2m() == 1.0);
    CHECK(c.radial_grid().r_max() == doctest::Approx(19.0));
}

TEST_CASE("presets")
{
    for (const auto& name : preset_names())
        CHECK_NOTHROW(validate(preset_config(name)));
    const auto f3 = preset_config("fig3");
    CHECK(f3.equation == EquationKind::klein_gordon);
    CHECK(f3.branch == Branch::particle);
    CHECK(f3.a == 0.67);
    CHECK(f3.mass == 1.007825);
    CHECK(f3.l_values == std::vector<int>{1, 2, 3, 4});
    const auto f4 = preset_config("fig4");
    CHECK(f4.branch == Branch::antiparticle);
    CHECK(f4.a == 0.55);
    CHECK(f4.mass == 1.00866);
    CHECK(preset_config("fig7").state == QuantumState(3, 1));
    CHECK(preset_config("fig8").state == QuantumState(12, 5));
    CHECK_THROWS_AS(preset_config("fig9"), ConfigError);
}

TEST_CASE("config parsing")
{
    const auto c = parse_config("# comment\n"
                                "preset = fig3\n"
                                "V0 = 40   # shallower\n"
                                "\n"
                                "l_values = 1, 3\n"
                                "methods = closed_form\n"
                                "grid.count = 4001\n"
                                "state = 2p\n");
    CHECK(c.preset == "fig3");
    CHECK(c.V0 == 40.0);
    CHECK(c.r0 == 3.44731);
    CHECK(c.l_values == std::vector<int>{1, 3});
    CHECK(c.has_method(SpectrumColumn::closed_form));
    CHECK_FALSE(c.has_method(SpectrumColumn::oracle_exact));
    CHECK(c.radial_grid().count() == 4001);
    CHECK(c.includes_l(3));
    CHECK_FALSE(c.includes_l(2));
    CHECK(c.state == QuantumState(2, 1));
}

TEST_CASE("config rejects bad input")
{
    CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("V0 50\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("V0 = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("V0 = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("nmax = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = KG\n"), ConfigError);  // dimensionless
    CHECK_THROWS_AS(parse_config("units = metric\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("methods = guess\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("state = 1p\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("grid.count = 10\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
}

TEST_CASE("spectrum table shape and determinism")
{
    RunConfig c;
    c.n_max = 1;
    const auto one = spectrum_report(c);
    REQUIRE(one.table.rows.size() == 1);
    CHECK(one.table.rows[0][0] == "1s");

    c.n_max = 6;
    const auto a = spectrum_report(c);
    const auto b = spectrum_report(c);
    CHECK(a.table.rows.size() == 21);
    CHECK(a.table.header == std::vector<std::string>{"label", "N", "l", "n_r",
                                                     "E_closed_form", "E_oracle_exact",
                                                     "E_oracle_pekeris", "flags"});
    CHECK(a.table.to_string() == b.table.to_string());
    CHECK(parse_csv(a.table.to_string()).to_string() == a.table.to_string());
    CHECK_FALSE(a.solver_failure);
}

TEST_CASE("Klein-Gordon spectrum flags unbound oracle states")
{
    const auto rep = spectrum_report(preset_config("fig3"));
    REQUIRE_FALSE(rep.table.rows.empty());
    CHECK(rep.table.rows[0][0] == "2p");
    CHECK_FALSE(rep.table.rows[0][6].empty());
    bool saw_unbound = false;
    for (const auto& row : rep.table.rows)
        saw_unbound |= row[7].find("unbound") != std::string::npos;
    CHECK(saw_unbound);
    CHECK_FALSE(rep.solver_failure);
}

TEST_CASE("potential table")
{
    auto c = preset_config("fig1");
    c.l_values = {0, 1, 5};
    const auto t = potential_table(c);
    CHECK(t.header == std::vector<std::string>{"l", "beta_x", "V_eff_exact", "V_eff_approx"});
    double l1_inner = 0, l1_outer = 0, l5_inner = 0, l5_outer = 0;
    for (const auto& row : t.rows)
    {
        if (row[0] == "0")
        {
            CHECK(row[2] == row[3]);
            continue;
        }
        const double bx = std::stod(row[1]);
        const double d = std::abs(std::stod(row[2]) - std::stod(row[3]));
        if (bx < 0.0)
            continue;
        double& slot = row[0] == "1" ? (bx < 2.5 ? l1_inner : l1_outer)
                                     : (bx < 2.5 ? l5_inner : l5_outer);
        slot = std::max(slot, d);
    }
    // l = 1 curves stay close near the surface; l = 5 separates beyond 2.5
    CHECK(l1_inner < 0.02 * c.V0);
    CHECK(l1_outer > l1_inner);
    CHECK(l5_outer > l5_inner);
    CHECK(l5_outer > 10 * l1_outer);

    c.potential.r_min = -1.0;
    CHECK_THROWS_AS(potential_table(c), ConfigError);
    c.potential.r_min = 1.0;
    c.potential.r_max = 1e3;
    CHECK_THROWS_AS(potential_table(c), ConfigError);
}

TEST_CASE("wavefunction report")
{
    const auto rep = wavefunction_report(preset_config("fig7"));
    CHECK(rep.table.header ==
          std::vector<std::string>{"r", "u_exact", "u_pekeris", "u_closed_form"});
    CHECK(rep.table.rows.size() == 2001);
    CHECK(rep.summary.rows[0] == std::vector<std::string>{"state", "3p"});

    RunConfig s;
    s.state = QuantumState(2, 0);
    const auto swave = wavefunction_report(s);
    for (const auto& row : swave.table.rows)
        CHECK(std::abs(std::stod(row[1]) - std::stod(row[2])) < 1e-8);

    s.state = QuantumState(30, 0);
    CHECK_THROWS_AS(wavefunction_report(s), NoBoundState);
    s.state.reset();
    CHECK_THROWS_AS(wavefunction_report(s), ConfigError);
}

TEST_CASE("conformance report entries")
{
    const auto rep = conformance_report(RunConfig{});
    bool found = false;
    for (const auto& row : rep.table.rows)
        if (row[0] == "closed_form.swave.n0")
        {
            found = true;
            CHECK(std::stod(row[1]) == doctest::Approx(-250.694444444));
            CHECK(row[4] == "REPORT");
        }
    CHECK(found);
    for (const auto& f : rep.failed)
        CHECK(f.rfind("table1.", 0) == 0);

    RunConfig tampered;
    tampered.V0 *= 1.01;
    const auto bad = conformance_report(tampered);
    CHECK(bad.failed.size() > rep.failed.size());
}

TEST_CASE("default conformance run passes" * doctest::may_fail())
{
    // Fails on the 5s and 6s cells of the printed table; see the ledger.
    CHECK(conformance_report(RunConfig{}).failed.empty());
}
