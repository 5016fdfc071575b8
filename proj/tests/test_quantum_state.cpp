#include <doctest.h>

#include <algorithm>
#include <vector>

#include "wsspec/errors.hpp"
#include "wsspec/quantum_state.hpp"

using namespace wsspec;

TEST_CASE("labels round-trip")
{
    for (int N = 1; N <= 12; ++N)
        for (int l = 0; l < N && l < 8; ++l)
        {
            const QuantumState s(N, l);
            CHECK(QuantumState::parse(s.label()) == s);
        }
    CHECK(QuantumState(1, 0).label() == "1s");
    CHECK(QuantumState(6, 5).label() == "6h");
    CHECK(QuantumState(12, 5).label() == "12h");
    CHECK(QuantumState(8, 7).label() == "8k");
}

TEST_CASE("radial nodes and formula index")
{
    const auto s = QuantumState::parse("3p");
    CHECK(s.N() == 3);
    CHECK(s.l() == 1);
    CHECK(s.radial_nodes() == 1);
    CHECK(s.formula_index() == 1);
    CHECK(QuantumState::from_nodes(6, 5) == QuantumState(12, 5));
    CHECK(QuantumState::from_nodes(0, 2).label() == "3d");
}

TEST_CASE("invalid states")
{
    CHECK_THROWS_AS(QuantumState(1, 1), InvalidState);
    CHECK_THROWS_AS(QuantumState(2, -1), InvalidState);
    CHECK_THROWS_AS(QuantumState::from_nodes(-1, 0), InvalidState);
    CHECK_THROWS_AS(QuantumState::parse("1p"), InvalidState);
    CHECK_THROWS_AS(QuantumState::parse("x"), InvalidState);
    CHECK_THROWS_AS(QuantumState::parse("2j"), InvalidState);
    CHECK_THROWS_AS(QuantumState::parse(""), InvalidState);
}

TEST_CASE("ordering is by N then l")
{
    std::vector<QuantumState> v{QuantumState(3, 0), QuantumState(2, 1),
                                QuantumState(2, 0), QuantumState(1, 0)};
    std::sort(v.begin(), v.end());
    CHECK(v[0].label() == "1s");
    CHECK(v[1].label() == "2s");
    CHECK(v[2].label() == "2p");
    CHECK(v[3].label() == "3s");
}
