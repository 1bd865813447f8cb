#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bmres/bridges.hpp"
#include "bmres/symbols.hpp"

namespace bmres {

// One directed edge of a homogeneous matching: target = source minus the
// removed generator (the smallest bridge, for bridge matchings).
struct MatchEdge {
    Symbol source;
    Symbol target;
    int removed_gen = -1;

    bool operator==(const MatchEdge&) const = default;
};

struct Matching {
    int n = 0;
    // Final edges, ordered by (source cardinality descending, source mask ascending).
    std::vector<MatchEdge> edges;
    // Every symbol that was ever given an edge before conflict pruning,
    // same ordering. Sources of final edges are a subset of these.
    std::vector<Symbol> potential_sources;

    bool is_matched(Symbol s) const;
    std::optional<MatchEdge> edge_with_source(Symbol s) const;
    std::optional<MatchEdge> edge_with_target(Symbol s) const;

    bool operator==(const Matching& o) const {
        return n == o.n && edges == o.edges && potential_sources == o.potential_sources;
    }

  private:
    mutable std::unordered_map<std::uint64_t, int> source_index_, target_index_;
    void build_index() const;
};

// The bridge-matching algorithm, batched form: all candidate edges of a
// cardinality level are proposed, then conflicting edges (shared target)
// are resolved keeping the smallest bridge. `level_order`, when given,
// permutes the processing order inside each level; the result must not
// depend on it.
Matching bridge_matching(const LcmTable& T, const GenOrder& ord,
                         const std::vector<std::uint32_t>* level_order = nullptr);
Matching bridge_matching(const MonomialIdeal& I, const GenOrder& ord);

// The eager variant: conflicts are resolved immediately after each
// insertion. Produces the identical matching.
Matching bridge_matching_eager(const LcmTable& T, const GenOrder& ord);
Matching bridge_matching_eager(const MonomialIdeal& I, const GenOrder& ord);

// Acyclic-matching axioms for an arbitrary candidate matching.
struct ValidationReport {
    bool ok = true;
    bool matching_axiom = true;
    bool homogeneous = true;
    bool acyclic = true;
    std::string detail;
    std::optional<Symbol> duplicated_symbol;
    std::vector<Symbol> witness_cycle;
};

ValidationReport validate_matching(const Matching& A, const MonomialIdeal& I,
                                   const LcmTable* table = nullptr);

// All symbols appearing in no edge, grouped by cardinality (index = card).
// Includes the empty symbol at rank 0.
std::vector<std::vector<Symbol>> critical_symbols(const Matching& A, const LcmTable& T);

// Classification read off the run: sources of final edges are type-2,
// targets type-1, pruned proposers potential-type-2 only, the rest critical.
std::vector<SymbolClass> classify_by_run(const Matching& A, const LcmTable& T);

// True iff no proposed edge was pruned (every potentially-type-2 symbol is
// type-2 with respect to ord).
bool is_bridge_friendly(const LcmTable& T, const GenOrder& ord);
bool is_bridge_friendly(const MonomialIdeal& I, const GenOrder& ord);

// The Morse digraph: base digraph with matching edges reversed. Streams
// edges as (from, to, reversed).
void for_each_morse_edge(const Matching& A, int n,
                         const std::function<void(Symbol, Symbol, bool)>& fn);

}  // namespace bmres
