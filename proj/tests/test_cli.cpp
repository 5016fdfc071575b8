#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "wsspec/csv.hpp"

namespace fs = std::filesystem;

namespace
{

fs::path scratch_dir()
{
    auto d = fs::temp_directory_path() / ("ws_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

int run(const std::string& args)
{
    const std::string cmd = std::string(WS_SPECTRA_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("exit codes")
{
    const auto dir = scratch_dir();
    const std::string out = " --out " + dir.string();

    CHECK(run("--help") == 0);
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("spectrum --preset nope" + out) == 2);
    CHECK(run("spectrum --nmax 1" + out) == 0);
    CHECK(run("potential --preset fig1 --rmin -1" + out) == 2);
    CHECK(run("potential --preset fig2" + out) == 0);
    CHECK(run("wavefunction --state 30s" + out) == 3);
    CHECK(run("wavefunction --preset fig7" + out) == 0);

    wsspec::write_file((dir / "bad.cfg").string(), "bogus = 1\n");
    CHECK(run("spectrum --config " + (dir / "bad.cfg").string() + out) == 2);

    wsspec::write_file((dir / "tamper.cfg").string(), "preset = table1\nV0 = 50.5\n");
    CHECK(run("conformance --config " + (dir / "tamper.cfg").string() + out) == 1);
    fs::remove_all(dir);
}

TEST_CASE("spectrum output is deterministic and round-trips")
{
    const auto dir = scratch_dir();
    REQUIRE(run("spectrum --nmax 3 --out " + (dir / "a").string()) == 0);
    REQUIRE(run("spectrum --nmax 3 --out " + (dir / "b").string()) == 0);
    const auto a = wsspec::read_file((dir / "a" / "spectrum.csv").string());
    const auto b = wsspec::read_file((dir / "b" / "spectrum.csv").string());
    CHECK(a == b);
    const auto t = wsspec::parse_csv(a);
    CHECK(t.rows.size() == 6);
    CHECK(t.to_string() == a);
    fs::remove_all(dir);
}

TEST_CASE("wavefunction writes the sidecar report")
{
    const auto dir = scratch_dir();
    REQUIRE(run("wavefunction --n 1 --l 1 --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "wavefunction.csv"));
    const auto rep = wsspec::parse_csv(
        wsspec::read_file((dir / "wavefunction_report.csv").string()));
    CHECK(rep.rows[0][1] == "3p");
    fs::remove_all(dir);
}
