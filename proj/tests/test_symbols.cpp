#include <doctest.h>

#include <map>

#include "bmres/symbols.hpp"
#include "helpers.hpp"

using namespace bmres;
using bmres::testing::Rng;

TEST_CASE("symbol_lcm") {
    auto I = bmres::testing::four_cycle_ideal();
    const auto& ctx = I.ctx();
    CHECK(symbol_lcm(Symbol::from_indices({0, 1, 2, 3}), I) == parse_monomial("x*y*z*w", ctx));
    CHECK(symbol_lcm(Symbol(), I).is_one());
    CHECK(symbol_lcm(Symbol::from_indices({0, 1}), I) == parse_monomial("x*y*w", ctx));
}

TEST_CASE("symbol_lcm is monotone") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        auto I = bmres::testing::random_ideal(rng, 6, 4, 3);
        const std::uint64_t total = std::uint64_t{1} << I.gen_count();
        for (std::uint64_t m = 0; m < total; ++m)
            for (int g = 0; g < I.gen_count(); ++g) {
                Symbol s(m);
                if (s.contains(g)) continue;
                CHECK(divides(symbol_lcm(s, I), symbol_lcm(s.with(g), I)));
            }
    }
}

TEST_CASE("enumerate_symbols") {
    auto I = bmres::testing::four_cycle_ideal();
    CHECK(enumerate_symbols(I, 4).size() == 1);
    CHECK(enumerate_symbols(I).size() == 15);
    auto triples = enumerate_symbols(I, 3);
    CHECK(triples.size() == 4);
    CHECK(enumerate_symbols(I, 0).size() == 1);  // the empty symbol
    CHECK(enumerate_symbols(I, 5).empty());
}

TEST_CASE("incidence signs") {
    Symbol s01 = Symbol::from_indices({0, 1});
    CHECK(incidence(s01, Symbol::from_indices({1})) == 1);   // removing g0, position 0
    CHECK(incidence(s01, Symbol::from_indices({0})) == -1);  // removing g1, position 1
    CHECK(incidence(s01, Symbol::from_indices({0, 1})) == 0);
    CHECK(incidence(Symbol::from_indices({2}), Symbol()) == 1);
}

TEST_CASE("boundary squares to zero over the integers") {
    // brute force over all symbols for several sizes
    for (int n : {3, 4, 5, 6, 7}) {
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Symbol s(mask);
            if (s.card() < 2) continue;
            std::map<std::uint64_t, int> acc;
            for_each_bit(mask, [&](int g) {
                Symbol mid = s.without(g);
                int a = incidence(s, mid);
                for_each_bit(mid.mask, [&](int h) {
                    Symbol low = mid.without(h);
                    acc[low.mask] += a * incidence(mid, low);
                });
            });
            for (const auto& [low, sum] : acc) {
                (void)low;
                CHECK(sum == 0);
            }
        }
    }
}

TEST_CASE("LcmTable matches direct lcm computation") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        auto I = bmres::testing::random_ideal(rng, 7, 5, 3);
        LcmTable T(I);
        const std::uint64_t total = std::uint64_t{1} << I.gen_count();
        for (std::uint64_t m = 0; m < total; ++m)
            CHECK(T.lcm_monomial(Symbol(m)) == symbol_lcm(Symbol(m), I));
    }
}

TEST_CASE("base digraph edge counts") {
    auto I = bmres::testing::four_cycle_ideal();
    auto dg = base_digraph(I);
    CHECK(dg.edge_count() == 32);  // sum over k of k * C(4, k)

    std::uint64_t count = 0;
    std::uint64_t homogeneous_ok = 0;
    LcmTable T(I);
    for_each_base_edge(dg.n, [&](Symbol s, Symbol t) {
        ++count;
        CHECK(s.card() == t.card() + 1);
        if (divides(T.lcm_monomial(t), T.lcm_monomial(s))) ++homogeneous_ok;
    });
    CHECK(count == 32);
    CHECK(homogeneous_ok == count);  // facet lcm always divides

    // n = 2 explicit enumeration
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for_each_base_edge(2, [&](Symbol s, Symbol t) { edges.push_back({s.mask, t.mask}); });
    CHECK(edges == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 0}, {2, 0}, {3, 2}, {3, 1}});

    for (int n : {1, 3, 5, 8}) {
        std::uint64_t c = 0;
        for_each_base_edge(n, [&](Symbol, Symbol) { ++c; });
        CHECK(c == static_cast<std::uint64_t>(n) * (std::uint64_t{1} << (n - 1)));
    }
}

TEST_CASE("capacity guards") {
    std::vector<std::string> names;
    std::vector<Monomial> gens;
    for (int i = 0; i < 24; ++i) names.push_back("v" + std::to_string(i));
    RingContext ctx(names);
    for (int i = 0; i < 24; ++i) {
        std::vector<Exponent> e(24, 0);
        e[static_cast<std::size_t>(i)] = 1;
        gens.emplace_back(std::move(e));
    }
    MonomialIdeal I(ctx, gens);
    CHECK_THROWS_AS(LcmTable{I}, capacity_error);
    CHECK_NOTHROW(symbol_lcm(Symbol::from_indices({0, 23}), I));  // table-free path still works
}
