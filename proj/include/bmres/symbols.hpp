#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bmres/monomial.hpp"

namespace bmres {

// A Taylor symbol: a subset of generator indices as a bitmask. The empty
// mask is the rank-0 basis element.
struct Symbol {
    std::uint64_t mask = 0;

    Symbol() = default;
    explicit Symbol(std::uint64_t m) : mask(m) {}
    static Symbol from_indices(const std::vector<int>& idx);

    int card() const { return std::popcount(mask); }
    bool empty() const { return mask == 0; }
    bool contains(int g) const { return (mask >> g) & 1u; }
    Symbol with(int g) const { return Symbol(mask | (std::uint64_t{1} << g)); }
    Symbol without(int g) const { return Symbol(mask & ~(std::uint64_t{1} << g)); }
    bool subset_of(Symbol o) const { return (mask & ~o.mask) == 0; }
    std::vector<int> indices() const;

    auto operator<=>(const Symbol&) const = default;
};

// Iterate set bits low to high.
template <typename F>
inline void for_each_bit(std::uint64_t mask, F&& f) {
    while (mask) {
        int g = std::countr_zero(mask);
        f(g);
        mask &= mask - 1;
    }
}

// [sigma : sigma'] for the Taylor chain complex. Elements of sigma are
// ordered by ascending generator index; removing the element at sorted
// position k contributes (-1)^k. Zero unless sigma' is a facet of sigma.
inline int incidence(Symbol s, Symbol sp) {
    std::uint64_t diff = s.mask ^ sp.mask;
    if (std::popcount(diff) != 1 || (diff & sp.mask)) return 0;
    int g = std::countr_zero(diff);
    int below = std::popcount(s.mask & ((std::uint64_t{1} << g) - 1));
    return (below & 1) ? -1 : 1;
}

// lcm of the selected generators (the empty symbol gives 1). Works for any
// generator count up to the bitmask capacity; no table required.
Monomial symbol_lcm(Symbol s, const MonomialIdeal& I);

// Dense memo of symbol lcms for a fixed ideal: every mask gets an id into a
// pool of distinct lcm exponent vectors. Built once, read concurrently.
class LcmTable {
  public:
    explicit LcmTable(const MonomialIdeal& I);

    const MonomialIdeal& ideal() const { return *ideal_; }
    int gen_count() const { return n_; }
    int var_count() const { return nvars_; }
    std::size_t symbol_count() const { return std::size_t{1} << n_; }
    int distinct_lcm_count() const { return static_cast<int>(deg_.size()); }

    std::uint32_t lcm_id(Symbol s) const { return id_[s.mask]; }
    std::span<const Exponent> lcm_exps(std::uint32_t id) const {
        return {pool_.data() + std::size_t{id} * static_cast<std::size_t>(nvars_), static_cast<std::size_t>(nvars_)};
    }
    std::int64_t lcm_degree(std::uint32_t id) const { return deg_[id]; }
    Monomial lcm_monomial(std::uint32_t id) const;
    Monomial lcm_monomial(Symbol s) const { return lcm_monomial(lcm_id(s)); }
    std::int64_t symbol_degree(Symbol s) const { return deg_[lcm_id(s)]; }

    // Set of bridges of every symbol: g is a bridge of s iff g in s and
    // lcm(s \ g) = lcm(s). Order-free; built lazily on first use.
    const std::vector<std::uint64_t>& bridge_masks() const;

    // Masks grouped by cardinality, ascending mask order within a group.
    const std::vector<std::vector<std::uint32_t>>& masks_by_card() const;

  private:
    const MonomialIdeal* ideal_;
    int n_ = 0;
    int nvars_ = 0;
    std::vector<std::uint32_t> id_;
    std::vector<Exponent> pool_;
    std::vector<std::int64_t> deg_;
    mutable std::vector<std::uint64_t> bridges_;
    mutable std::vector<std::vector<std::uint32_t>> by_card_;
};

// The complete facet digraph of the Taylor simplex: one edge (s, s\g) per
// nonempty symbol s and g in s. Edge count is n * 2^(n-1).
struct BaseDigraph {
    int n = 0;
    std::uint64_t edge_count() const {
        return n == 0 ? 0 : static_cast<std::uint64_t>(n) << (n - 1);
    }
};

BaseDigraph base_digraph(const MonomialIdeal& I);

// Streams every edge of the base digraph in ascending source mask order.
void for_each_base_edge(int n, const std::function<void(Symbol, Symbol)>& fn);

// Enumerate symbols in ascending mask order; k restricts to one cardinality.
std::vector<Symbol> enumerate_symbols(const MonomialIdeal& I, int k = -1);

}  // namespace bmres

template <>
struct std::hash<bmres::Symbol> {
    std::size_t operator()(const bmres::Symbol& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.mask);
    }
};
