#pragma once

#include <string>
#include <string_view>

namespace wsspec
{

// Spectroscopic state (N, l). The closed-form formulas are indexed by the
// radial node count n_r = N - l - 1, so 1s, 2p, 3d ... all have index 0.
class QuantumState
{
  public:
    QuantumState(int N, int l);

    // n_r radial nodes and angular momentum l.
    static QuantumState from_nodes(int n_r, int l);

    // "1s", "2p", "6h", ...
    static QuantumState parse(std::string_view label);

    int N() const { return N_; }
    int l() const { return l_; }
    int radial_nodes() const { return N_ - l_ - 1; }
    int formula_index() const { return radial_nodes(); }

    std::string label() const;

    friend bool operator==(const QuantumState&, const QuantumState&) = default;
    friend auto operator<=>(const QuantumState&, const QuantumState&) = default;

  private:
    int N_;
    int l_;
};

char orbital_letter(int l);

} // namespace wsspec
