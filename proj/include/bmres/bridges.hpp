#pragma once

#include <optional>
#include <vector>

#include "bmres/symbols.hpp"

namespace bmres {

// Structural classification of a symbol relative to a bridge matching.
// PotentialType2Only means potentially-type-2 and not type-2.
enum class SymbolClass { Type1, Type2, PotentialType2Only, Critical };

const char* to_string(SymbolClass c);

// Raw lcm-based predicates; these are the definitions everything else is
// measured against. Table-free variants work up to the bitmask capacity.
bool is_bridge(int g, Symbol s, const MonomialIdeal& I);
bool is_gap(int g, Symbol s, const MonomialIdeal& I);
bool is_true_gap(int g, Symbol s, const MonomialIdeal& I, const GenOrder& ord);
std::optional<int> sbridge(Symbol s, const MonomialIdeal& I, const GenOrder& ord);

// Table-backed fast predicates.
inline std::uint64_t bridge_set(const LcmTable& T, Symbol s) { return T.bridge_masks()[s.mask]; }
std::uint64_t gap_set(const LcmTable& T, Symbol s);
std::uint64_t true_gap_set(const LcmTable& T, Symbol s, const GenOrder& ord);
std::optional<int> sbridge(const LcmTable& T, Symbol s, const GenOrder& ord);

// Structure-only classification per the characterization of type-1,
// potentially-type-2 and type-2 symbols. Must agree pointwise with the
// classification read off an actual algorithm run.
SymbolClass classify_structural(Symbol s, const LcmTable& T, const GenOrder& ord);

// Friendliness criterion: for every potentially-type-2 symbol s, every true
// gap m of s \ sbridge(s) with sbridge(s) >_I m is a true gap of s.
struct FriendlinessReport {
    bool friendly = true;
    std::optional<std::pair<Symbol, int>> witness;  // (symbol, true gap) violating the criterion
};

FriendlinessReport check_friendliness_criterion(const MonomialIdeal& I, const GenOrder& ord,
                                                const LcmTable* table = nullptr);

}  // namespace bmres
