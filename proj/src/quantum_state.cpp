#include "wsspec/quantum_state.hpp"

#include <charconv>
#include <string>

#include "wsspec/errors.hpp"

namespace wsspec
{

namespace
{
// s p d f then alphabetical, skipping j (and the letters already used).
constexpr std::string_view kLetters = "spdfghiklmnoqrtuvwxyz";
} // namespace

char orbital_letter(int l)
{
    if (l < 0 || l >= static_cast<int>(kLetters.size()))
        throw InvalidState("no spectroscopic letter for l = "
                           + std::to_string(l));
    return kLetters[static_cast<std::size_t>(l)];
}

QuantumState::QuantumState(int N, int l) : N_(N), l_(l)
{
    if (l < 0)
        throw InvalidState("l must be non-negative, got " + std::to_string(l));
    if (N < l + 1)
        throw InvalidState("N must exceed l (N=" + std::to_string(N)
                           + ", l=" + std::to_string(l) + ")");
}

QuantumState QuantumState::from_nodes(int n_r, int l)
{
    if (n_r < 0)
        throw InvalidState("radial node count must be non-negative");
    return QuantumState(n_r + l + 1, l);
}

QuantumState QuantumState::parse(std::string_view label)
{
    if (label.size() < 2)
        throw InvalidState("bad state label '" + std::string(label) + "'");
    int N = 0;
    const auto* first = label.data();
    const auto* last = label.data() + label.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, N);
    if (ec != std::errc() || ptr != last)
        throw InvalidState("bad state label '" + std::string(label) + "'");
    const auto pos = kLetters.find(label.back());
    if (pos == std::string_view::npos)
        throw InvalidState("bad orbital letter in '" + std::string(label)
                           + "'");
    return QuantumState(N, static_cast<int>(pos));
}

std::string QuantumState::label() const
{
    return std::to_string(N_) + orbital_letter(l_);
}

} // namespace wsspec
