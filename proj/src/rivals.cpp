#include "bmres/rivals.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "bmres/morse.hpp"

namespace bmres {

RankVector taylor_ranks(const MonomialIdeal& I) {
    const int n = I.gen_count();
    RankVector r(static_cast<std::size_t>(n) + 1);
    r[0] = 1;
    for (int k = 1; k <= n; ++k)
        r[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k) - 1] * (n - k + 1) / k;
    return r;
}

RankVector ranks_from_criticals(const Matching& A, const LcmTable& T) {
    RankVector r;
    for (const auto& level : critical_symbols(A, T)) r.push_back(static_cast<long long>(level.size()));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

LyubeznikValue lyubeznik_value(Symbol s, const MonomialIdeal& I, const GenOrder& ord) {
    LyubeznikValue out;
    if (s.empty()) return out;
    std::vector<int> desc = s.indices();
    std::sort(desc.begin(), desc.end(), [&](int a, int b) { return ord.greater(a, b); });

    Monomial prefix = Monomial::one(I.ctx().var_count());
    std::optional<int> best_k;
    Monomial best_prefix = prefix;
    for (int k = 1; k <= static_cast<int>(desc.size()); ++k) {
        int mk = desc[static_cast<std::size_t>(k - 1)];
        prefix = lcm(prefix, I.gen(mk));
        for (int g = 0; g < I.gen_count(); ++g) {
            if (!ord.greater(mk, g)) continue;
            if (divides(I.gen(g), prefix)) {
                best_k = k;
                best_prefix = prefix;
                break;
            }
        }
    }
    if (!best_k) return out;
    out.v_L = best_k;
    std::optional<int> m;
    for (int g = 0; g < I.gen_count(); ++g)
        if (divides(I.gen(g), best_prefix) && (!m || ord.greater(*m, g))) m = g;
    out.m_L = m;
    return out;
}

Matching lyubeznik_matching(const LcmTable& T, const GenOrder& ord) {
    const MonomialIdeal& I = T.ideal();
    Matching A;
    A.n = T.gen_count();
    std::set<std::pair<std::uint64_t, std::uint64_t>> dedup;
    for (std::size_t mask = 1; mask < T.symbol_count(); ++mask) {
        Symbol s(mask);
        auto lv = lyubeznik_value(s, I, ord);
        if (!lv.v_L) continue;
        int m = *lv.m_L;
        Symbol src = s.with(m);
        Symbol tgt = s.without(m);
        if (dedup.insert({src.mask, tgt.mask}).second)
            A.edges.push_back(MatchEdge{src, tgt, m});
    }
    std::sort(A.edges.begin(), A.edges.end(), [](const MatchEdge& a, const MatchEdge& b) {
        return std::make_pair(-a.source.card(), a.source.mask) < std::make_pair(-b.source.card(), b.source.mask);
    });
    return A;
}

Matching lyubeznik_matching(const MonomialIdeal& I, const GenOrder& ord) {
    LcmTable T(I);
    return lyubeznik_matching(T, ord);
}

std::vector<std::vector<Symbol>> scarf_complex(const LcmTable& T) {
    std::vector<int> hits(static_cast<std::size_t>(T.distinct_lcm_count()), 0);
    for (std::size_t mask = 0; mask < T.symbol_count(); ++mask) {
        auto& h = hits[T.lcm_id(Symbol(mask))];
        if (h < 2) ++h;
    }
    std::vector<std::vector<Symbol>> out(static_cast<std::size_t>(T.gen_count()) + 1);
    for (std::size_t mask = 0; mask < T.symbol_count(); ++mask)
        if (hits[T.lcm_id(Symbol(mask))] == 1)
            out[static_cast<std::size_t>(std::popcount(mask))].emplace_back(mask);
    while (out.size() > 1 && out.back().empty()) out.pop_back();
    return out;
}

std::vector<std::vector<Symbol>> scarf_complex(const MonomialIdeal& I) {
    LcmTable T(I);
    return scarf_complex(T);
}

RankVector scarf_ranks(const LcmTable& T) {
    RankVector r;
    for (const auto& level : scarf_complex(T)) r.push_back(static_cast<long long>(level.size()));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

YuzvinskyReport yuzvinsky_condition(const MonomialIdeal& I, const LcmTable* table) {
    if (I.gen_count() > kOracleCap)
        throw capacity_error("Yuzvinsky condition check is capped at " + std::to_string(kOracleCap) + " generators");
    std::optional<LcmTable> local;
    if (!table) {
        local.emplace(I);
        table = &*local;
    }
    const LcmTable& T = *table;

    // Pairwise equality inside an lcm class is equivalent to the running
    // intersection staying in the class, so one sweep per class suffices.
    std::unordered_map<std::uint32_t, std::uint64_t> running;
    YuzvinskyReport rep;
    for (std::size_t mask = 0; mask < T.symbol_count(); ++mask) {
        std::uint32_t id = T.lcm_id(Symbol(mask));
        auto it = running.find(id);
        if (it == running.end()) {
            running.emplace(id, mask);
            continue;
        }
        std::uint64_t meet = it->second & mask;
        if (T.lcm_id(Symbol(meet)) != id) {
            rep.holds = false;
            rep.witness = {Symbol(it->second), Symbol(mask)};
            return rep;
        }
        it->second = meet;
    }
    return rep;
}

ComparisonReport compare_constructions(const MonomialIdeal& I, const GenOrder& ord) {
    LcmTable T(I);
    ComparisonReport rep;
    rep.taylor = taylor_ranks(I);
    rep.lyubeznik = ranks_from_criticals(lyubeznik_matching(T, ord), T);
    rep.scarf = scarf_ranks(T);
    Matching A = bridge_matching(T, ord);
    rep.barile_macchia = ranks_from_criticals(A, T);
    rep.barile_macchia_minimal = is_minimal(differential(A, T));
    return rep;
}

}  // namespace bmres
