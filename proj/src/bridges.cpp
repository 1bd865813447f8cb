#include "bmres/bridges.hpp"

namespace bmres {

const char* to_string(SymbolClass c) {
    switch (c) {
        case SymbolClass::Type1: return "type1";
        case SymbolClass::Type2: return "type2";
        case SymbolClass::PotentialType2Only: return "potential_type2_only";
        case SymbolClass::Critical: return "critical";
    }
    return "?";
}

bool is_bridge(int g, Symbol s, const MonomialIdeal& I) {
    if (!s.contains(g)) return false;
    return symbol_lcm(s.without(g), I) == symbol_lcm(s, I);
}

bool is_gap(int g, Symbol s, const MonomialIdeal& I) {
    if (s.contains(g) || g >= I.gen_count()) return false;
    return symbol_lcm(s.with(g), I) == symbol_lcm(s, I);
}

bool is_true_gap(int g, Symbol s, const MonomialIdeal& I, const GenOrder& ord) {
    if (!is_gap(g, s, I)) return false;
    Symbol up = s.with(g);
    for (int h = 0; h < I.gen_count(); ++h) {
        if (h == g || !ord.greater(g, h)) continue;
        if (is_bridge(h, up, I) && !is_bridge(h, s, I)) return false;
    }
    return true;
}

std::optional<int> sbridge(Symbol s, const MonomialIdeal& I, const GenOrder& ord) {
    std::optional<int> best;
    for_each_bit(s.mask, [&](int g) {
        if (is_bridge(g, s, I) && (!best || ord.greater(*best, g))) best = g;
    });
    return best;
}

std::uint64_t gap_set(const LcmTable& T, Symbol s) {
    const auto& br = T.bridge_masks();
    std::uint64_t gaps = 0;
    for (int g = 0; g < T.gen_count(); ++g) {
        if (s.contains(g)) continue;
        if (br[s.with(g).mask] & (std::uint64_t{1} << g)) gaps |= std::uint64_t{1} << g;
    }
    return gaps;
}

// Gens strictly below g under ord, as a bitmask.
static std::uint64_t below_mask(const GenOrder& ord, int g) {
    std::uint64_t m = 0;
    for (int h = 0; h < ord.size(); ++h)
        if (ord.greater(g, h)) m |= std::uint64_t{1} << h;
    return m;
}

std::uint64_t true_gap_set(const LcmTable& T, Symbol s, const GenOrder& ord) {
    const auto& br = T.bridge_masks();
    std::uint64_t out = 0;
    std::uint64_t gaps = gap_set(T, s);
    for_each_bit(gaps, [&](int g) {
        std::uint64_t new_bridges = br[s.with(g).mask] & ~br[s.mask];
        if ((new_bridges & below_mask(ord, g)) == 0) out |= std::uint64_t{1} << g;
    });
    return out;
}

std::optional<int> sbridge(const LcmTable& T, Symbol s, const GenOrder& ord) {
    std::uint64_t b = T.bridge_masks()[s.mask];
    std::optional<int> best;
    for_each_bit(b, [&](int g) {
        if (!best || ord.greater(*best, g)) best = g;
    });
    return best;
}

SymbolClass classify_structural(Symbol s, const LcmTable& T, const GenOrder& ord) {
    const auto& br = T.bridge_masks();
    std::uint64_t bridges = br[s.mask];
    std::uint64_t tgaps = true_gap_set(T, s, ord);

    // type-1: some true gap dominates no bridge of s
    bool type1 = false;
    for_each_bit(tgaps, [&](int m) {
        if ((below_mask(ord, m) & bridges) == 0) type1 = true;
    });

    // potentially-type-2: some bridge dominates no true gap of s
    bool pt2 = false;
    for_each_bit(bridges, [&](int b) {
        if ((below_mask(ord, b) & tgaps) == 0) pt2 = true;
    });

    if (type1 && pt2) throw internal_error("symbol classified both type-1 and potentially-type-2");
    if (type1) return SymbolClass::Type1;
    if (!pt2) return SymbolClass::Critical;

    // type-2: strictly smallest sbridge among all potentially-type-2 symbols
    // sharing the pruned base. A competitor tau = base + g must itself be
    // potentially-type-2 with sbridge(tau) = g.
    int sb = *sbridge(T, s, ord);
    Symbol base = s.without(sb);
    for (int g = 0; g < T.gen_count(); ++g) {
        if (g == sb || base.contains(g)) continue;
        if (!ord.greater(sb, g)) continue;  // only strictly smaller bridges beat s
        Symbol tau = base.with(g);
        std::uint64_t tau_bridges = br[tau.mask];
        if (!(tau_bridges & (std::uint64_t{1} << g))) continue;
        auto tau_sb = sbridge(T, tau, ord);
        if (!tau_sb || *tau_sb != g) continue;
        std::uint64_t tau_tgaps = true_gap_set(T, tau, ord);
        bool tau_pt2 = false;
        for_each_bit(tau_bridges, [&](int b) {
            if ((below_mask(ord, b) & tau_tgaps) == 0) tau_pt2 = true;
        });
        if (tau_pt2) return SymbolClass::PotentialType2Only;
    }
    return SymbolClass::Type2;
}

FriendlinessReport check_friendliness_criterion(const MonomialIdeal& I, const GenOrder& ord,
                                                const LcmTable* table) {
    std::optional<LcmTable> local;
    if (!table) {
        local.emplace(I);
        table = &*local;
    }
    const LcmTable& T = *table;
    FriendlinessReport rep;
    const auto& br = T.bridge_masks();
    for (std::size_t mask = 1; mask < T.symbol_count(); ++mask) {
        if (std::popcount(mask) < 3) continue;  // smaller symbols have no bridges
        Symbol s(mask);
        if (br[mask] == 0) continue;
        std::uint64_t tgaps = true_gap_set(T, s, ord);
        bool pt2 = false;
        for_each_bit(br[mask], [&](int b) {
            if ((below_mask(ord, b) & tgaps) == 0) pt2 = true;
        });
        if (!pt2) continue;
        int sb = *sbridge(T, s, ord);
        Symbol base = s.without(sb);
        std::uint64_t base_tgaps = true_gap_set(T, base, ord);
        bool bad = false;
        for_each_bit(base_tgaps & below_mask(ord, sb), [&](int m) {
            if (!bad && !(tgaps & (std::uint64_t{1} << m))) {
                rep.friendly = false;
                rep.witness = {s, m};
                bad = true;
            }
        });
        if (bad) return rep;
    }
    return rep;
}

}  // namespace bmres
