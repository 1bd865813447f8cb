#include "bmres/matching.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace bmres {

void Matching::build_index() const {
    if (!source_index_.empty() || !target_index_.empty() || edges.empty()) return;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        source_index_.emplace(edges[static_cast<std::size_t>(i)].source.mask, i);
        target_index_.emplace(edges[static_cast<std::size_t>(i)].target.mask, i);
    }
}

bool Matching::is_matched(Symbol s) const {
    build_index();
    return source_index_.count(s.mask) || target_index_.count(s.mask);
}

std::optional<MatchEdge> Matching::edge_with_source(Symbol s) const {
    build_index();
    auto it = source_index_.find(s.mask);
    if (it == source_index_.end()) return std::nullopt;
    return edges[static_cast<std::size_t>(it->second)];
}

std::optional<MatchEdge> Matching::edge_with_target(Symbol s) const {
    build_index();
    auto it = target_index_.find(s.mask);
    if (it == target_index_.end()) return std::nullopt;
    return edges[static_cast<std::size_t>(it->second)];
}

namespace {

void canonicalize(Matching& A) {
    auto key = [](const Symbol& s) { return std::make_pair(-s.card(), s.mask); };
    std::sort(A.edges.begin(), A.edges.end(),
              [&](const MatchEdge& a, const MatchEdge& b) { return key(a.source) < key(b.source); });
    std::sort(A.potential_sources.begin(), A.potential_sources.end(),
              [&](const Symbol& a, const Symbol& b) { return key(a) < key(b); });
}

}  // namespace

Matching bridge_matching(const LcmTable& T, const GenOrder& ord,
                         const std::vector<std::uint32_t>* level_order) {
    const int n = T.gen_count();
    if (ord.size() != n) throw input_error("order size does not match generator count");
    const auto& bridges = T.bridge_masks();
    const auto& by_card = T.masks_by_card();

    Matching A;
    A.n = n;
    std::unordered_set<std::uint64_t> matched_target;

    std::size_t cursor = 0;  // consumes level_order across levels when provided
    for (int card = n; card >= 3; --card) {
        // proposals of this level, keyed by target
        std::map<std::uint64_t, std::vector<MatchEdge>> groups;
        const auto& level = by_card[static_cast<std::size_t>(card)];
        for (std::size_t k = 0; k < level.size(); ++k) {
            std::uint32_t mask = level[k];
            if (level_order) {
                if (cursor + k >= level_order->size()) throw input_error("level order too short");
                mask = (*level_order)[cursor + k];
                if (std::popcount(mask) != card) throw input_error("level order mixes cardinalities");
            }
            Symbol s(mask);
            if (matched_target.count(s.mask)) continue;
            std::uint64_t b = bridges[mask];
            if (!b) continue;
            int sb = -1;
            for_each_bit(b, [&](int g) {
                if (sb < 0 || ord.greater(sb, g)) sb = g;
            });
            Symbol t = s.without(sb);
            groups[t.mask].push_back(MatchEdge{s, t, sb});
            A.potential_sources.push_back(s);
        }
        cursor += level.size();
        for (auto& [tmask, props] : groups) {
            const MatchEdge* best = &props.front();
            for (const auto& e : props)
                if (ord.greater(best->removed_gen, e.removed_gen)) best = &e;
            A.edges.push_back(*best);
            matched_target.insert(tmask);
        }
    }
    canonicalize(A);
    return A;
}

Matching bridge_matching(const MonomialIdeal& I, const GenOrder& ord) {
    LcmTable T(I);
    return bridge_matching(T, ord);
}

Matching bridge_matching_eager(const LcmTable& T, const GenOrder& ord) {
    const int n = T.gen_count();
    if (ord.size() != n) throw input_error("order size does not match generator count");
    const auto& bridges = T.bridge_masks();
    const auto& by_card = T.masks_by_card();

    Matching A;
    A.n = n;
    std::unordered_map<std::uint64_t, MatchEdge> by_target;
    std::unordered_set<std::uint64_t> is_target;

    for (int card = n; card >= 3; --card) {
        // deliberately iterate in descending mask order: a different
        // processing order from the batched variant
        const auto& level = by_card[static_cast<std::size_t>(card)];
        for (auto it = level.rbegin(); it != level.rend(); ++it) {
            Symbol s(*it);
            if (is_target.count(s.mask)) continue;
            std::uint64_t b = bridges[s.mask];
            if (!b) continue;
            int sb = -1;
            for_each_bit(b, [&](int g) {
                if (sb < 0 || ord.greater(sb, g)) sb = g;
            });
            Symbol t = s.without(sb);
            A.potential_sources.push_back(s);
            auto found = by_target.find(t.mask);
            if (found == by_target.end() || ord.greater(found->second.removed_gen, sb))
                by_target[t.mask] = MatchEdge{s, t, sb};
            is_target.insert(t.mask);
        }
    }
    for (auto& [tmask, e] : by_target) A.edges.push_back(e);
    canonicalize(A);
    return A;
}

Matching bridge_matching_eager(const MonomialIdeal& I, const GenOrder& ord) {
    LcmTable T(I);
    return bridge_matching_eager(T, ord);
}

ValidationReport validate_matching(const Matching& A, const MonomialIdeal& I, const LcmTable* table) {
    std::optional<LcmTable> local;
    if (!table) {
        local.emplace(I);
        table = &*local;
    }
    const LcmTable& T = *table;
    ValidationReport rep;

    // matching axiom + edge shape
    std::unordered_set<std::uint64_t> seen;
    for (const auto& e : A.edges) {
        if ((e.source.mask >> I.gen_count()) || (e.target.mask >> I.gen_count()) ||
            e.removed_gen < 0 || e.removed_gen >= I.gen_count()) {
            rep.ok = rep.matching_axiom = false;
            rep.detail = "edge references generators outside the ideal";
            return rep;
        }
        if (!e.target.subset_of(e.source) || e.source.card() != e.target.card() + 1 ||
            (e.source.mask ^ e.target.mask) != (std::uint64_t{1} << e.removed_gen)) {
            rep.ok = rep.matching_axiom = false;
            rep.detail = "edge is not a facet edge of the Taylor simplex";
            return rep;
        }
        for (Symbol s : {e.source, e.target}) {
            if (!seen.insert(s.mask).second) {
                rep.ok = rep.matching_axiom = false;
                rep.duplicated_symbol = s;
                rep.detail = "symbol appears in two edges";
                return rep;
            }
        }
    }

    // homogeneity
    for (const auto& e : A.edges) {
        if (T.lcm_id(e.source) != T.lcm_id(e.target)) {
            rep.ok = rep.homogeneous = false;
            rep.detail = "edge joins symbols with different lcms";
            return rep;
        }
    }

    // acyclicity: a directed cycle in the Morse digraph must stay inside a
    // single lcm fiber, so it suffices to check each fiber separately.
    std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> fibers;
    for (const auto& e : A.edges) fibers[T.lcm_id(e.source)];  // only fibers touched by A can cycle
    if (!fibers.empty()) {
        for (std::size_t mask = 0; mask < T.symbol_count(); ++mask) {
            auto it = fibers.find(T.lcm_id(Symbol(mask)));
            if (it != fibers.end()) it->second.push_back(mask);
        }
        std::unordered_map<std::uint64_t, std::uint64_t> a_source_to_target;
        for (const auto& e : A.edges) a_source_to_target[e.source.mask] = e.target.mask;

        for (auto& [lcmid, members] : fibers) {
            // adjacency within the fiber
            std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> adj;
            for (std::uint64_t m : members) {
                Symbol s(m);
                auto a_it = a_source_to_target.find(m);
                for_each_bit(m, [&](int g) {
                    Symbol t = s.without(g);
                    if (T.lcm_id(t) != lcmid) return;
                    if (a_it != a_source_to_target.end() && a_it->second == t.mask)
                        adj[t.mask].push_back(m);  // reversed matched edge
                    else
                        adj[m].push_back(t.mask);
                });
            }
            // iterative DFS cycle detection
            std::unordered_map<std::uint64_t, int> state;  // 0 new, 1 open, 2 done
            for (std::uint64_t root : members) {
                if (state[root]) continue;
                std::vector<std::pair<std::uint64_t, std::size_t>> stack{{root, 0}};
                std::vector<std::uint64_t> path{root};
                state[root] = 1;
                while (!stack.empty()) {
                    auto& [v, next] = stack.back();
                    auto& out = adj[v];
                    if (next < out.size()) {
                        std::uint64_t w = out[next++];
                        if (state[w] == 1) {
                            rep.ok = rep.acyclic = false;
                            rep.detail = "Morse digraph has a directed cycle";
                            auto pos = std::find(path.begin(), path.end(), w);
                            for (auto p = pos; p != path.end(); ++p) rep.witness_cycle.emplace_back(*p);
                            return rep;
                        }
                        if (state[w] == 0) {
                            state[w] = 1;
                            stack.emplace_back(w, 0);
                            path.push_back(w);
                        }
                    } else {
                        state[v] = 2;
                        stack.pop_back();
                        path.pop_back();
                    }
                }
            }
        }
    }
    return rep;
}

std::vector<std::vector<Symbol>> critical_symbols(const Matching& A, const LcmTable& T) {
    std::unordered_set<std::uint64_t> matched;
    for (const auto& e : A.edges) {
        matched.insert(e.source.mask);
        matched.insert(e.target.mask);
    }
    std::vector<std::vector<Symbol>> out(static_cast<std::size_t>(T.gen_count()) + 1);
    for (std::size_t mask = 0; mask < T.symbol_count(); ++mask)
        if (!matched.count(mask)) out[static_cast<std::size_t>(std::popcount(mask))].emplace_back(mask);
    return out;
}

std::vector<SymbolClass> classify_by_run(const Matching& A, const LcmTable& T) {
    std::vector<SymbolClass> cls(T.symbol_count(), SymbolClass::Critical);
    for (const Symbol& s : A.potential_sources) cls[s.mask] = SymbolClass::PotentialType2Only;
    for (const auto& e : A.edges) {
        cls[e.source.mask] = SymbolClass::Type2;
        cls[e.target.mask] = SymbolClass::Type1;
    }
    return cls;
}

bool is_bridge_friendly(const LcmTable& T, const GenOrder& ord) {
    Matching A = bridge_matching(T, ord);
    return A.potential_sources.size() == A.edges.size();
}

bool is_bridge_friendly(const MonomialIdeal& I, const GenOrder& ord) {
    LcmTable T(I);
    return is_bridge_friendly(T, ord);
}

void for_each_morse_edge(const Matching& A, int n,
                         const std::function<void(Symbol, Symbol, bool)>& fn) {
    std::unordered_map<std::uint64_t, std::uint64_t> a_edge;
    for (const auto& e : A.edges) a_edge[e.source.mask] = e.target.mask;
    for_each_base_edge(n, [&](Symbol s, Symbol t) {
        auto it = a_edge.find(s.mask);
        if (it != a_edge.end() && it->second == t.mask)
            fn(t, s, true);
        else
            fn(s, t, false);
    });
}

}  // namespace bmres
