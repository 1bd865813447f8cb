#include "bmres/symbols.hpp"

#include <algorithm>
#include <unordered_map>

namespace bmres {

Symbol Symbol::from_indices(const std::vector<int>& idx) {
    std::uint64_t m = 0;
    for (int g : idx) {
        if (g < 0 || g >= kSymbolCapacity) throw input_error("generator index out of range");
        m |= std::uint64_t{1} << g;
    }
    return Symbol(m);
}

std::vector<int> Symbol::indices() const {
    std::vector<int> out;
    for_each_bit(mask, [&](int g) { out.push_back(g); });
    return out;
}

Monomial symbol_lcm(Symbol s, const MonomialIdeal& I) {
    if (s.mask >> I.gen_count()) throw input_error("symbol references generators outside the ideal");
    Monomial acc = Monomial::one(I.ctx().var_count());
    for_each_bit(s.mask, [&](int g) { acc = lcm(acc, I.gen(g)); });
    return acc;
}

LcmTable::LcmTable(const MonomialIdeal& I) : ideal_(&I), n_(I.gen_count()), nvars_(I.ctx().var_count()) {
    if (n_ > kEnumerationCap)
        throw capacity_error("full symbol enumeration is capped at " + std::to_string(kEnumerationCap) +
                             " generators (ideal has " + std::to_string(n_) + ")");
    const std::size_t total = std::size_t{1} << n_;
    id_.assign(total, 0);

    std::unordered_map<std::string, std::uint32_t> intern;
    std::vector<Exponent> scratch(static_cast<std::size_t>(nvars_));
    auto intern_exps = [&](const Exponent* e) -> std::uint32_t {
        std::string key(reinterpret_cast<const char*>(e), sizeof(Exponent) * static_cast<std::size_t>(nvars_));
        auto it = intern.find(key);
        if (it != intern.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(deg_.size());
        pool_.insert(pool_.end(), e, e + nvars_);
        std::int64_t d = 0;
        for (int v = 0; v < nvars_; ++v) d += e[v];
        deg_.push_back(d);
        intern.emplace(std::move(key), id);
        return id;
    };

    // DP over masks: lcm(mask) = lcm(mask without lowest bit) joined with that generator.
    std::fill(scratch.begin(), scratch.end(), 0);
    id_[0] = intern_exps(scratch.data());
    for (std::size_t mask = 1; mask < total; ++mask) {
        int g = std::countr_zero(mask);
        std::size_t rest = mask & (mask - 1);
        const Exponent* base = pool_.data() + std::size_t{id_[rest]} * static_cast<std::size_t>(nvars_);
        const Monomial& gen = I.gen(g);
        for (int v = 0; v < nvars_; ++v) scratch[static_cast<std::size_t>(v)] = std::max(base[v], gen.exp(v));
        id_[mask] = intern_exps(scratch.data());
    }
}

Monomial LcmTable::lcm_monomial(std::uint32_t id) const {
    auto e = lcm_exps(id);
    return Monomial(std::vector<Exponent>(e.begin(), e.end()));
}

const std::vector<std::uint64_t>& LcmTable::bridge_masks() const {
    if (bridges_.empty() && symbol_count() > 0) {
        bridges_.assign(symbol_count(), 0);
        for (std::size_t mask = 1; mask < symbol_count(); ++mask) {
            std::uint32_t full = id_[mask];
            std::uint64_t b = 0;
            for_each_bit(mask, [&](int g) {
                if (id_[mask & ~(std::uint64_t{1} << g)] == full) b |= std::uint64_t{1} << g;
            });
            bridges_[mask] = b;
        }
    }
    return bridges_;
}

const std::vector<std::vector<std::uint32_t>>& LcmTable::masks_by_card() const {
    if (by_card_.empty()) {
        by_card_.resize(static_cast<std::size_t>(n_) + 1);
        for (std::size_t mask = 0; mask < symbol_count(); ++mask)
            by_card_[static_cast<std::size_t>(std::popcount(mask))].push_back(static_cast<std::uint32_t>(mask));
    }
    return by_card_;
}

BaseDigraph base_digraph(const MonomialIdeal& I) {
    if (I.gen_count() > kEnumerationCap) throw capacity_error("base digraph enumeration capacity exceeded");
    return BaseDigraph{I.gen_count()};
}

void for_each_base_edge(int n, const std::function<void(Symbol, Symbol)>& fn) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        Symbol s(mask);
        for_each_bit(mask, [&](int g) { fn(s, s.without(g)); });
    }
}

std::vector<Symbol> enumerate_symbols(const MonomialIdeal& I, int k) {
    const int n = I.gen_count();
    if (n > kEnumerationCap) throw capacity_error("symbol enumeration capacity exceeded");
    if (k > n) return {};
    std::vector<Symbol> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (mask == 0 && k != 0) continue;  // nonempty symbols unless k = 0 requested
        if (k >= 0 && std::popcount(mask) != k) continue;
        out.emplace_back(mask);
    }
    return out;
}

}  // namespace bmres
