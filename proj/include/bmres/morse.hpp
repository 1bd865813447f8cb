#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "bmres/betti.hpp"
#include "bmres/matching.hpp"

namespace bmres {

// Signed count of gradient paths from a start symbol to each critical
// symbol of the same cardinality.
using GradientFlow = std::unordered_map<Symbol, std::int64_t>;

// m(s -> t) for an edge of the Morse digraph.
std::int64_t morse_edge_weight(Symbol from, Symbol to, const Matching& A);

GradientFlow gradient_flow(Symbol start, const Matching& A);

struct MorseEntry {
    int row = 0;  // index into basis[r-1]
    int col = 0;  // index into basis[r]
    std::int64_t coeff = 0;
    Monomial multiplier;  // lcm(col) / lcm(row)

    bool operator==(const MorseEntry&) const = default;
};

struct MorseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<MorseEntry> entries;
};

// A complex of free modules with basis the critical symbols: d[r] maps
// cardinality r to cardinality r-1 (r >= 1).
struct MorseDifferential {
    std::vector<std::vector<Symbol>> basis;   // by cardinality, basis[0] = {empty}
    std::vector<Monomial> basis_lcm_flat;     // lcm per basis element, concatenated by card
    std::vector<MorseMatrix> d;               // d[r] for r = 1..maxcard (d[0] unused)

    int max_card() const { return static_cast<int>(basis.size()) - 1; }
    const Monomial& basis_lcm(int card, int idx) const;
    std::vector<long long> ranks() const;  // rank vector, index = homological degree
};

MorseDifferential differential(const Matching& A, const LcmTable& T);

struct MinimalityReport {
    bool minimal = true;
    // sufficient condition: no two critical symbols one apart share an lcm
    bool lcm_adjacency_ok = true;
    std::optional<MorseEntry> unit_witness;
    int unit_witness_card = -1;
};

MinimalityReport minimality(const MorseDifferential& D);
inline bool is_minimal(const MorseDifferential& D) { return minimality(D).minimal; }

// d_{r} . d_{r+1} = 0 over the integers, with monomial bookkeeping.
bool composes_to_zero(const MorseDifferential& D);

// Counts of critical symbols by (cardinality, multidegree of lcm); an upper
// bound for the graded Betti numbers, exact iff the resolution is minimal.
GradedBettiTable betti_from_criticals(const Matching& A, const LcmTable& T);

// Minimality of the Barile-Macchia resolution in characteristic zero: no
// differential entry is a nonzero integer times the unit monomial.
bool is_bridge_minimal(const MonomialIdeal& I, const GenOrder& ord);
bool is_bridge_minimal(const LcmTable& T, const GenOrder& ord);

}  // namespace bmres
