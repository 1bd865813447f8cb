#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmres/graphs.hpp"
#include "bmres/monomial.hpp"

namespace bmres::testing {

// xorshift64*: stable across compilers, so corpus instances are reproducible
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Named ideals from worked examples.

// I = (xw, xy, yz, zw) over {x, y, z, w}: the 4-cycle edge ideal with
// generators listed so that 0,1,2,3 is the order xw > xy > yz > zw.
inline MonomialIdeal four_cycle_ideal() {
    return parse_ideal_text("vars: x y z w\nx*w\nx*y\ny*z\nz*w\n");
}

// I = (x^2y^2, y^2z^2, xz^2, x^2z) over {x, y, z}.
inline MonomialIdeal order_dependent_ideal() {
    return parse_ideal_text("vars: x y z\nx^2*y^2\ny^2*z^2\nx*z^2\nx^2*z\n");
}

// Six-generator ideal with incomparable Lyubeznik and bridge resolutions.
inline MonomialIdeal six_generator_ideal() {
    return parse_ideal_text(
        "vars: x1 x2 x3 x4 x5 x6 x7 x8\n"
        "x1*x2*x3*x4\n"
        "x2*x3*x5*x6\n"
        "x1*x2*x5\n"
        "x1*x2*x7\n"
        "x2*x3*x8\n"
        "x7*x8\n");
}

// Six generators of degree five in ten variables whose Betti numbers depend
// on the characteristic.
inline MonomialIdeal char_dependent_ideal() {
    return parse_ideal_text(
        "vars: x1 x2 x3 x4 x5 x6 x7 x8 x9 x10\n"
        "x1*x2*x8*x9*x10\n"
        "x2*x3*x4*x5*x10\n"
        "x5*x6*x7*x8*x10\n"
        "x1*x4*x5*x6*x9\n"
        "x1*x2*x3*x6*x7\n"
        "x3*x4*x7*x8*x9\n");
}

inline MonomialIdeal cycle_edge_ideal(int n) { return edge_ideal(unweighted_cycle(n)).ideal; }

// Random minimal monomial ideal: gens <= max_gens over <= max_vars variables
// with exponents <= max_exp. Retries until the minimized system has at
// least two generators.
inline MonomialIdeal random_ideal(Rng& rng, int max_gens, int max_vars, int max_exp) {
    for (;;) {
        int nvars = 2 + rng.below(std::max(1, max_vars - 1));
        int raw = 2 + rng.below(std::max(1, max_gens - 1));
        std::vector<std::string> names;
        for (int v = 0; v < nvars; ++v) names.push_back("x" + std::to_string(v + 1));
        RingContext ctx(names);
        std::vector<Monomial> gens;
        for (int g = 0; g < raw; ++g) {
            std::vector<Exponent> e(static_cast<std::size_t>(nvars), 0);
            int support = 1 + rng.below(nvars);
            for (int s = 0; s < support; ++s) e[static_cast<std::size_t>(rng.below(nvars))] = 1 + rng.below(max_exp);
            if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) continue;
            gens.emplace_back(std::move(e));
        }
        if (gens.empty()) continue;
        try {
            auto I = minimize_generators(ctx, gens);
            if (I.gen_count() >= 2 && I.gen_count() <= max_gens) return I;
        } catch (const input_error&) {
        }
    }
}

// Random ideal in exactly two variables.
inline MonomialIdeal random_two_var_ideal(Rng& rng, int max_gens, int max_exp) {
    for (;;) {
        RingContext ctx({"x", "y"});
        std::vector<Monomial> gens;
        int raw = 2 + rng.below(max_gens);
        for (int g = 0; g < raw; ++g) {
            Exponent a = static_cast<Exponent>(rng.below(max_exp + 1));
            Exponent b = static_cast<Exponent>(rng.below(max_exp + 1));
            if (a == 0 && b == 0) continue;
            gens.push_back(Monomial(std::vector<Exponent>{a, b}));
        }
        if (gens.empty()) continue;
        try {
            auto I = minimize_generators(ctx, gens);
            if (I.gen_count() >= 2 && I.gen_count() <= max_gens) return I;
        } catch (const input_error&) {
        }
    }
}

// Random permutation as a GenOrder.
inline GenOrder random_order(Rng& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.below(i + 1))]);
    return GenOrder(p);
}

// Random weighted naturally oriented forest with up to max_edges edges.
inline WeightedOrientedGraph random_natural_forest(Rng& rng, int max_edges, int max_weight) {
    int edges = 1 + rng.below(max_edges);
    int vertices = edges + 1 + rng.below(2);  // possibly a second component root
    WeightedOrientedGraph D;
    for (int v = 0; v < vertices; ++v) D.vertex_names.push_back("v" + std::to_string(v + 1));
    D.weights.assign(static_cast<std::size_t>(vertices), 1);
    for (int v = 0; v < vertices; ++v) D.weights[static_cast<std::size_t>(v)] = 1 + rng.below(max_weight);
    // attach vertex v to a random earlier parent; skipping some vertices
    // leaves extra roots (a forest, not just a tree)
    int made = 0;
    for (int v = 1; v < vertices && made < edges; ++v) {
        if (v > 1 && rng.below(8) == 0) continue;  // new component
        int parent = rng.below(v);
        D.edges.push_back({parent, v});
        ++made;
    }
    if (D.edges.empty()) D.edges.push_back({0, 1});
    return D;
}

// Random weighted oriented cycle (arbitrary orientations) on n vertices.
inline WeightedOrientedGraph random_cycle(Rng& rng, int n, int max_weight) {
    WeightedOrientedGraph D;
    for (int i = 0; i < n; ++i) D.vertex_names.push_back("y" + std::to_string(i + 1));
    D.weights.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) D.weights[static_cast<std::size_t>(i)] = 1 + rng.below(max_weight);
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n;
        if (rng.below(2)) std::swap(a, b);
        D.edges.push_back({a, b});
    }
    return D;
}

// Random weighted oriented path with n edges.
inline WeightedOrientedGraph random_path(Rng& rng, int n, int max_weight) {
    WeightedOrientedGraph D;
    for (int i = 0; i <= n; ++i) D.vertex_names.push_back("y" + std::to_string(i + 1));
    D.weights.assign(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 0; i <= n; ++i) D.weights[static_cast<std::size_t>(i)] = 1 + rng.below(max_weight);
    for (int i = 0; i < n; ++i) {
        int a = i, b = i + 1;
        if (rng.below(2)) std::swap(a, b);
        D.edges.push_back({a, b});
    }
    return D;
}

}  // namespace bmres::testing
