#pragma once

#include <optional>
#include <vector>

#include "bmres/matching.hpp"

namespace bmres {

// Free-module rank vectors indexed by homological degree; ranks[0] = 1 for
// R, trailing zeros trimmed.
using RankVector = std::vector<long long>;

RankVector taylor_ranks(const MonomialIdeal& I);

// Ranks of the resolution with basis the critical symbols of a matching.
RankVector ranks_from_criticals(const Matching& A, const LcmTable& T);

// v_L / m_L of a symbol: with sigma listed descending as m_1 > ... > m_q,
// v_L is the largest k such that some generator strictly below m_k divides
// lcm(m_1..m_k); m_L is the smallest divisor of that prefix lcm. Absent
// values encode -infinity.
struct LyubeznikValue {
    std::optional<int> v_L;  // 1-based position into the descending listing
    std::optional<int> m_L;  // generator index
};

LyubeznikValue lyubeznik_value(Symbol s, const MonomialIdeal& I, const GenOrder& ord);

// The Lyubeznik matching: deduplicated pairs (s + m_L, s - m_L) over all
// nonempty symbols with finite v_L.
Matching lyubeznik_matching(const LcmTable& T, const GenOrder& ord);
Matching lyubeznik_matching(const MonomialIdeal& I, const GenOrder& ord);

// Symbols whose lcm no other symbol attains, grouped by cardinality.
std::vector<std::vector<Symbol>> scarf_complex(const LcmTable& T);
std::vector<std::vector<Symbol>> scarf_complex(const MonomialIdeal& I);
RankVector scarf_ranks(const LcmTable& T);

// lcm(s) = lcm(t) implies lcm(s & t) = lcm(s) for all symbol pairs.
struct YuzvinskyReport {
    bool holds = true;
    std::optional<std::pair<Symbol, Symbol>> witness;
};

YuzvinskyReport yuzvinsky_condition(const MonomialIdeal& I, const LcmTable* table = nullptr);

// Four-way comparison used by the CLI.
struct ComparisonReport {
    RankVector taylor, lyubeznik, scarf, barile_macchia;
    bool barile_macchia_minimal = false;
};

ComparisonReport compare_constructions(const MonomialIdeal& I, const GenOrder& ord);

}  // namespace bmres
