#include "bmres/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "bmres/matching.hpp"
#include "bmres/morse.hpp"
#include "vendor_json.hpp"

namespace bmres {

void WeightedOrientedGraph::validate() const {
    if (weights.size() != vertex_names.size()) throw input_error("graph: one weight per vertex required");
    if (!edge_exponents.empty() && edge_exponents.size() != edges.size())
        throw input_error("graph: one exponent override slot per edge required");
    std::set<std::string> names(vertex_names.begin(), vertex_names.end());
    if (names.size() != vertex_names.size()) throw input_error("graph: duplicate vertex names");
    for (int w : weights)
        if (w < 1) throw input_error("graph: weights must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
            throw input_error("graph: edge references unknown vertex");
        if (a == b) throw input_error("graph: loops are not allowed");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second) throw input_error("graph: multi-edges are not allowed");
    }
    if (!edge_exponents.empty()) {
        for (const auto& ov : edge_exponents)
            if (ov && (ov->first < 1 || ov->second < 1)) throw input_error("graph: exponent overrides must be positive");
    }
}

namespace {

std::vector<std::vector<std::pair<int, int>>> undirected_adj(const WeightedOrientedGraph& D) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(D.vertex_count()));
    for (int e = 0; e < D.edge_count(); ++e) {
        auto [a, b] = D.edges[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(a)].push_back({b, e});
        adj[static_cast<std::size_t>(b)].push_back({a, e});
    }
    return adj;
}

WeightedOrientedGraph remove_vertices(const WeightedOrientedGraph& D, const std::vector<int>& victims) {
    std::vector<char> dead(static_cast<std::size_t>(D.vertex_count()), 0);
    for (int v : victims) dead[static_cast<std::size_t>(v)] = 1;
    WeightedOrientedGraph out;
    std::vector<int> remap(static_cast<std::size_t>(D.vertex_count()), -1);
    for (int v = 0; v < D.vertex_count(); ++v) {
        if (dead[static_cast<std::size_t>(v)]) continue;
        remap[static_cast<std::size_t>(v)] = out.vertex_count();
        out.vertex_names.push_back(D.vertex_names[static_cast<std::size_t>(v)]);
        out.weights.push_back(D.weights[static_cast<std::size_t>(v)]);
    }
    for (int e = 0; e < D.edge_count(); ++e) {
        auto [a, b] = D.edges[static_cast<std::size_t>(e)];
        if (dead[static_cast<std::size_t>(a)] || dead[static_cast<std::size_t>(b)]) continue;
        out.edges.push_back({remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]});
        if (!D.edge_exponents.empty()) out.edge_exponents.push_back(D.edge_exponents[static_cast<std::size_t>(e)]);
    }
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void require_no_overrides(const WeightedOrientedGraph& D, const char* what) {
    for (const auto& ov : D.edge_exponents)
        if (ov) throw input_error(std::string(what) + " is not defined for per-edge exponent overrides");
}

}  // namespace

EdgeIdealMap edge_ideal(const WeightedOrientedGraph& D) {
    D.validate();
    if (D.edge_count() == 0) throw input_error("edge ideal of an empty graph");
    RingContext ctx(D.vertex_names);
    std::vector<Monomial> gens;
    for (int e = 0; e < D.edge_count(); ++e) {
        auto [a, b] = D.edges[static_cast<std::size_t>(e)];
        std::vector<Exponent> exps(static_cast<std::size_t>(D.vertex_count()), 0);
        if (!D.edge_exponents.empty() && D.edge_exponents[static_cast<std::size_t>(e)]) {
            exps[static_cast<std::size_t>(a)] = D.edge_exponents[static_cast<std::size_t>(e)]->first;
            exps[static_cast<std::size_t>(b)] = D.edge_exponents[static_cast<std::size_t>(e)]->second;
        } else {
            exps[static_cast<std::size_t>(a)] = 1;
            exps[static_cast<std::size_t>(b)] = static_cast<Exponent>(D.weights[static_cast<std::size_t>(b)]);
        }
        gens.emplace_back(std::move(exps));
    }
    // the generators of an edge ideal must already form a minimal system
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && divides(gens[i], gens[j]))
                throw input_error("edge ideal generators are not minimal: " + to_string(gens[i], ctx) +
                                  " divides " + to_string(gens[j], ctx));
    return EdgeIdealMap{D, MonomialIdeal(ctx, std::move(gens))};
}

WeightedOrientedGraph sinking(const WeightedOrientedGraph& D) {
    D.validate();
    WeightedOrientedGraph out = D;
    std::vector<int> outdeg(static_cast<std::size_t>(D.vertex_count()), 0), deg(static_cast<std::size_t>(D.vertex_count()), 0);
    for (auto [a, b] : D.edges) {
        ++outdeg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    for (int v = 0; v < D.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] >= 1 && outdeg[static_cast<std::size_t>(v)] == 0)
            out.weights[static_cast<std::size_t>(v)] = 1;
    return out;
}

bool is_sunk(const WeightedOrientedGraph& D) {
    return sinking(D).weights == D.weights;
}

PathOrCycleView recognize_path_or_cycle(const WeightedOrientedGraph& D) {
    D.validate();
    if (D.edge_count() == 0) throw input_error("not a path or cycle: no edges");
    auto adj = undirected_adj(D);
    int used = 0;
    for (const auto& nb : adj) {
        if (nb.size() > 2) throw input_error("not a path or cycle: vertex of degree > 2");
        if (!nb.empty()) ++used;
    }
    // connectivity over vertices that carry edges
    std::vector<char> vis(static_cast<std::size_t>(D.vertex_count()), 0);
    int start = D.edges[0].first;
    std::queue<int> q;
    q.push(start);
    vis[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [u, e] : adj[static_cast<std::size_t>(v)])
            if (!vis[static_cast<std::size_t>(u)]) {
                vis[static_cast<std::size_t>(u)] = 1;
                ++reached;
                q.push(u);
            }
    }
    if (reached != used) throw input_error("not a path or cycle: disconnected");

    std::vector<int> ends;
    for (int v = 0; v < D.vertex_count(); ++v)
        if (adj[static_cast<std::size_t>(v)].size() == 1) ends.push_back(v);

    PathOrCycleView view;
    std::vector<int> indeg(static_cast<std::size_t>(D.vertex_count()), 0);
    for (auto [a, b] : D.edges) ++indeg[static_cast<std::size_t>(b)];

    auto walk = [&](int from, int via_edge) {
        view.vertices.push_back(from);
        int prev_edge = via_edge;
        int cur = from;
        while (true) {
            int next = -1, next_edge = -1;
            for (auto [u, e] : adj[static_cast<std::size_t>(cur)])
                if (e != prev_edge) {
                    next = u;
                    next_edge = e;
                    break;
                }
            if (next_edge < 0) break;
            view.eorder.push_back(next_edge);
            if (next == view.vertices.front()) break;  // closed the cycle
            view.vertices.push_back(next);
            prev_edge = next_edge;
            cur = next;
        }
    };

    if (ends.empty()) {
        view.is_cycle = true;
        // canonical start: smallest vertex id carrying edges; follow an
        // outgoing edge when one exists (smaller neighbor id breaks ties),
        // otherwise the smaller-id neighbor
        int s = -1;
        for (int v = 0; v < D.vertex_count(); ++v)
            if (!adj[static_cast<std::size_t>(v)].empty()) { s = v; break; }
        int chosen_edge = -1, chosen_nbr = -1;
        bool chosen_out = false;
        for (auto [u, e] : adj[static_cast<std::size_t>(s)]) {
            bool outgoing = D.edges[static_cast<std::size_t>(e)].first == s;
            if (chosen_edge < 0 || (outgoing && !chosen_out) || (outgoing == chosen_out && u < chosen_nbr)) {
                chosen_edge = e;
                chosen_nbr = u;
                chosen_out = outgoing;
            }
        }
        // pretend we came in along the other incident edge
        int other_edge = -1;
        for (auto [u, e] : adj[static_cast<std::size_t>(s)])
            if (e != chosen_edge) other_edge = e;
        walk(s, other_edge);
        if (static_cast<int>(view.eorder.size()) != D.edge_count())
            throw input_error("not a path or cycle: extra components");
    } else {
        if (ends.size() != 2 || D.edge_count() + 1 != used) throw input_error("not a path or cycle");
        // start at the in-degree-zero end when the orientation singles one out
        int s = -1;
        for (int v : ends)
            if (indeg[static_cast<std::size_t>(v)] == 0) { s = v; break; }
        if (s < 0) s = std::min(ends[0], ends[1]);
        walk(s, -1);
        if (static_cast<int>(view.eorder.size()) != D.edge_count()) throw input_error("not a path or cycle: extra components");
    }
    return view;
}

bool is_naturally_oriented(const WeightedOrientedGraph& D, const PathOrCycleView& view) {
    const int n = static_cast<int>(view.eorder.size());
    for (int i = 0; i < n; ++i) {
        int a = view.vertices[static_cast<std::size_t>(i)];
        int b = view.vertices[static_cast<std::size_t>((i + 1) % view.vertices.size())];
        if (D.edges[static_cast<std::size_t>(view.eorder[static_cast<std::size_t>(i)])] != std::make_pair(a, b)) return false;
    }
    return true;
}

WeightedOrientedGraph ironing(const WeightedOrientedGraph& D_sunk) {
    require_no_overrides(D_sunk, "ironing");
    if (!is_sunk(D_sunk)) throw input_error("ironing requires a sunk graph");
    auto view = recognize_path_or_cycle(D_sunk);
    WeightedOrientedGraph out = D_sunk;
    const int n = static_cast<int>(view.eorder.size());
    for (int i = 0; i < n; ++i) {
        int a = view.vertices[static_cast<std::size_t>(i)];
        int b = view.vertices[static_cast<std::size_t>((i + 1) % view.vertices.size())];
        int e = view.eorder[static_cast<std::size_t>(i)];
        int old_target = D_sunk.edges[static_cast<std::size_t>(e)].second;
        out.edges[static_cast<std::size_t>(e)] = {a, b};
        out.weights[static_cast<std::size_t>(b)] = D_sunk.weights[static_cast<std::size_t>(old_target)];
    }
    return out;
}

std::vector<int> blockends_cycle(const EdgeIdealMap& C) {
    auto view = recognize_path_or_cycle(C.graph);
    if (!view.is_cycle) throw input_error("blockends_cycle: not a cycle");
    const int n = static_cast<int>(view.eorder.size());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        const Monomial& m = C.ideal.gen(view.eorder[static_cast<std::size_t>(i)]);
        const Monomial& prev = C.ideal.gen(view.eorder[static_cast<std::size_t>((i + n - 1) % n)]);
        const Monomial& next = C.ideal.gen(view.eorder[static_cast<std::size_t>((i + 1) % n)]);
        if (!divides(m, lcm(prev, next))) out.push_back(view.eorder[static_cast<std::size_t>(i)]);
    }
    return out;
}

bool is_classic(const EdgeIdealMap& C) { return blockends_cycle(C).empty(); }

std::vector<std::vector<int>> blocks_cycle(const EdgeIdealMap& C) {
    auto view = recognize_path_or_cycle(C.graph);
    if (!view.is_cycle) throw input_error("blocks_cycle: not a cycle");
    const int n = static_cast<int>(view.eorder.size());
    auto be = blockends_cycle(C);
    std::unordered_set<int> be_set(be.begin(), be.end());
    std::vector<int> be_pos;
    for (int i = 0; i < n; ++i)
        if (be_set.count(view.eorder[static_cast<std::size_t>(i)])) be_pos.push_back(i);

    std::vector<std::vector<int>> blocks;
    if (be_pos.empty()) {
        blocks.push_back(view.eorder);  // classic: the whole cycle, by convention
    } else if (be_pos.size() == 1) {
        std::vector<int> blk;
        for (int i = 0; i < n; ++i) blk.push_back(view.eorder[static_cast<std::size_t>((be_pos[0] + i) % n)]);
        blocks.push_back(std::move(blk));
    } else {
        for (std::size_t k = 0; k < be_pos.size(); ++k) {
            int s = be_pos[k];
            int e = be_pos[(k + 1) % be_pos.size()];
            std::vector<int> blk;
            for (int i = s;; i = (i + 1) % n) {
                blk.push_back(view.eorder[static_cast<std::size_t>(i)]);
                if (i == e) break;
            }
            blocks.push_back(std::move(blk));
        }
    }
    return blocks;
}

bool is_forest(const WeightedOrientedGraph& D) {
    D.validate();
    // simple graph: forest iff no undirected cycle
    auto adj = undirected_adj(D);
    std::vector<char> vis(static_cast<std::size_t>(D.vertex_count()), 0);
    for (int root = 0; root < D.vertex_count(); ++root) {
        if (vis[static_cast<std::size_t>(root)]) continue;
        std::vector<std::pair<int, int>> stack{{root, -1}};
        vis[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto [v, in_edge] = stack.back();
            stack.pop_back();
            for (auto [u, e] : adj[static_cast<std::size_t>(v)]) {
                if (e == in_edge) continue;
                if (vis[static_cast<std::size_t>(u)]) return false;
                vis[static_cast<std::size_t>(u)] = 1;
                stack.push_back({u, e});
            }
        }
    }
    return true;
}

bool is_naturally_oriented_forest(const WeightedOrientedGraph& D) {
    if (!is_forest(D)) return false;
    std::vector<int> indeg(static_cast<std::size_t>(D.vertex_count()), 0);
    for (auto [a, b] : D.edges) ++indeg[static_cast<std::size_t>(b)];
    return std::all_of(indeg.begin(), indeg.end(), [](int d) { return d <= 1; });
}

std::vector<int> forest_ranks(const WeightedOrientedGraph& D) {
    if (!is_naturally_oriented_forest(D)) throw input_error("not a naturally oriented forest");
    std::vector<int> rank(static_cast<std::size_t>(D.vertex_count()), 0);
    std::vector<std::vector<int>> children(static_cast<std::size_t>(D.vertex_count()));
    std::vector<int> indeg(static_cast<std::size_t>(D.vertex_count()), 0);
    for (auto [a, b] : D.edges) {
        children[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }
    std::queue<int> q;
    for (int v = 0; v < D.vertex_count(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : children[static_cast<std::size_t>(v)]) {
            rank[static_cast<std::size_t>(u)] = rank[static_cast<std::size_t>(v)] + 1;
            q.push(u);
        }
    }
    return rank;
}

GenOrder natural_forest_order(const EdgeIdealMap& T) {
    auto rank = forest_ranks(T.graph);
    const auto& D = T.graph;
    // variable position: by (rank, listing index)
    std::vector<int> vorder(static_cast<std::size_t>(D.vertex_count()));
    std::iota(vorder.begin(), vorder.end(), 0);
    std::stable_sort(vorder.begin(), vorder.end(),
                     [&](int a, int b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; });
    std::vector<int> vpos(static_cast<std::size_t>(D.vertex_count()));
    for (int i = 0; i < D.vertex_count(); ++i) vpos[static_cast<std::size_t>(vorder[static_cast<std::size_t>(i)])] = i;

    std::vector<int> perm(static_cast<std::size_t>(D.edge_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int e, int f) {
        auto [a, b] = D.edges[static_cast<std::size_t>(e)];
        auto [c, d] = D.edges[static_cast<std::size_t>(f)];
        return std::make_pair(vpos[static_cast<std::size_t>(a)], vpos[static_cast<std::size_t>(b)]) <
               std::make_pair(vpos[static_cast<std::size_t>(c)], vpos[static_cast<std::size_t>(d)]);
    });
    return GenOrder(perm);
}

std::vector<int> blockends_forest(const EdgeIdealMap& T) {
    require_no_overrides(T.graph, "blockends_forest");
    const auto& D = T.graph;
    if (!is_naturally_oriented_forest(D)) throw input_error("blockends_forest: not a naturally oriented forest");
    auto adj = undirected_adj(D);
    std::vector<int> out;
    for (int e = 0; e < D.edge_count(); ++e) {
        auto [x, z] = D.edges[static_cast<std::size_t>(e)];
        bool leafy = adj[static_cast<std::size_t>(x)].size() == 1 || adj[static_cast<std::size_t>(z)].size() == 1;
        if (leafy || D.weights[static_cast<std::size_t>(z)] >= 2) out.push_back(e);
    }

    // cross-check against the maximality definition wherever blocks exist
    std::unordered_set<int> by_blocks;
    for (const auto& blk : blocks_forest(T)) {
        by_blocks.insert(blk.front());
        by_blocks.insert(blk.back());
    }
    std::vector<int> comp_edges(static_cast<std::size_t>(D.edge_count()), 0);
    // an edge participates in blocks iff its component has >= 2 edges
    for (int e = 0; e < D.edge_count(); ++e) {
        auto [x, z] = D.edges[static_cast<std::size_t>(e)];
        comp_edges[static_cast<std::size_t>(e)] =
            static_cast<int>(adj[static_cast<std::size_t>(x)].size() + adj[static_cast<std::size_t>(z)].size()) - 2;
    }
    for (int e = 0; e < D.edge_count(); ++e) {
        bool expected = std::find(out.begin(), out.end(), e) != out.end();
        bool found = by_blocks.count(e) != 0;
        if (comp_edges[static_cast<std::size_t>(e)] > 0 && expected != found)
            throw internal_error("blockend characterization disagrees with block maximality");
    }
    return out;
}

std::vector<std::vector<int>> blocks_forest(const EdgeIdealMap& T) {
    const auto& D = T.graph;
    if (!is_forest(D)) throw input_error("blocks_forest: not a forest");
    auto adj = undirected_adj(D);

    // vertex path between u and v in the forest, as edge ids; empty if disconnected
    auto edge_path = [&](int u, int v) -> std::vector<int> {
        std::vector<int> par_edge(static_cast<std::size_t>(D.vertex_count()), -2);
        std::vector<int> par(static_cast<std::size_t>(D.vertex_count()), -1);
        std::queue<int> q;
        q.push(u);
        par_edge[static_cast<std::size_t>(u)] = -1;
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            if (w == v) break;
            for (auto [x, e] : adj[static_cast<std::size_t>(w)])
                if (par_edge[static_cast<std::size_t>(x)] == -2) {
                    par_edge[static_cast<std::size_t>(x)] = e;
                    par[static_cast<std::size_t>(x)] = w;
                    q.push(x);
                }
        }
        if (par_edge[static_cast<std::size_t>(v)] == -2) return {};
        std::vector<int> path;
        for (int w = v; w != u; w = par[static_cast<std::size_t>(w)]) path.push_back(par_edge[static_cast<std::size_t>(w)]);
        std::reverse(path.begin(), path.end());
        return path;
    };

    // all potential blocks = edge paths with every interior generator
    // dividing the lcm of its neighbors
    std::vector<std::vector<int>> potential;
    for (int e = 0; e < D.edge_count(); ++e) {
        for (int f = e + 1; f < D.edge_count(); ++f) {
            auto [a, b] = D.edges[static_cast<std::size_t>(e)];
            auto [c, d] = D.edges[static_cast<std::size_t>(f)];
            std::vector<int> best;
            for (int u : {a, b})
                for (int v : {c, d}) {
                    auto p = edge_path(u, v);
                    if (p.size() > best.size()) best = p;
                }
            if (best.empty()) continue;
            if (best.front() != e && best.front() != f) continue;
            if (best.back() != e && best.back() != f) continue;
            bool ok = true;
            for (std::size_t i = 1; i + 1 < best.size() && ok; ++i)
                ok = divides(T.ideal.gen(best[i]),
                             lcm(T.ideal.gen(best[i - 1]), T.ideal.gen(best[i + 1])));
            if (ok) potential.push_back(best);
        }
    }
    // keep maximal ones under set inclusion
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < potential.size(); ++i) {
        std::set<int> si(potential[i].begin(), potential[i].end());
        bool maximal = true;
        for (std::size_t j = 0; j < potential.size() && maximal; ++j) {
            if (i == j) continue;
            std::set<int> sj(potential[j].begin(), potential[j].end());
            if (si != sj && std::includes(sj.begin(), sj.end(), si.begin(), si.end())) maximal = false;
        }
        if (maximal &&
            std::none_of(blocks.begin(), blocks.end(), [&](const std::vector<int>& b) {
                return std::set<int>(b.begin(), b.end()) == si;
            }))
            blocks.push_back(potential[i]);
    }
    return blocks;
}

namespace {

// Traversal of a naturally oriented non-classic cycle rotated so that the
// last generator is a blockend. Returns (vertex ids x_1..x_n, edge ids
// m_1..m_n) in the rotated traversal order.
std::pair<std::vector<int>, std::vector<int>> rotated_cycle(const EdgeIdealMap& C) {
    auto view = recognize_path_or_cycle(C.graph);
    if (!view.is_cycle) throw input_error("not a cycle");
    if (!is_naturally_oriented(C.graph, view)) throw input_error("cycle is not naturally oriented");
    auto be = blockends_cycle(C);
    if (be.empty()) throw input_error("classic cycle: no blockend to anchor the ordering");
    const int n = static_cast<int>(view.eorder.size());
    std::unordered_set<int> be_set(be.begin(), be.end());
    int anchor = -1;
    for (int i = 0; i < n; ++i)
        if (be_set.count(view.eorder[static_cast<std::size_t>(i)])) { anchor = i; break; }
    // rotate so that position anchor becomes the last generator
    int shift = (anchor + 1) % n;
    std::vector<int> vs(static_cast<std::size_t>(n)), es(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        vs[static_cast<std::size_t>(i)] = view.vertices[static_cast<std::size_t>((i + shift) % n)];
        es[static_cast<std::size_t>(i)] = view.eorder[static_cast<std::size_t>((i + shift) % n)];
    }
    return {vs, es};
}

}  // namespace

GenOrder blockend_last_order(const EdgeIdealMap& C) {
    auto [vs, es] = rotated_cycle(C);
    return GenOrder(es);
}

GenOrder kflip_order(const EdgeIdealMap& C, int k) {
    auto [vs, es] = rotated_cycle(C);
    const int n = static_cast<int>(es.size());
    // blockend positions, 1-based; the last is n by construction
    std::vector<int> b;
    auto be = blockends_cycle(C);
    std::unordered_set<int> be_set(be.begin(), be.end());
    for (int i = 0; i < n; ++i)
        if (be_set.count(es[static_cast<std::size_t>(i)])) b.push_back(i + 1);
    const int p = static_cast<int>(b.size());
    if (k < 1 || k > p) throw input_error("k-flip: block index out of range");
    int start = (k == 1) ? 0 : b[static_cast<std::size_t>(k - 2)];
    int end = b[static_cast<std::size_t>(k - 1)];
    if (end - start < 2) throw input_error("k-flip: block has fewer than three elements");
    std::swap(es[static_cast<std::size_t>(start)], es[static_cast<std::size_t>(start + 1)]);
    return GenOrder(es);
}

namespace {

// Graded table from the matching engine under a bridge-minimal order.
DegreeTable engine_degree_table(const EdgeIdealMap& E, const GenOrder& ord) {
    LcmTable T(E.ideal);
    Matching A = bridge_matching(T, ord);
    return betti_from_criticals(A, T).by_degree();
}

DegreeTable forest_engine_table(const WeightedOrientedGraph& D) {
    if (D.edge_count() == 0) return DegreeTable{{{0, 0}, 1}};
    auto E = edge_ideal(D);
    return engine_degree_table(E, natural_forest_order(E));
}

DegreeTable rec_graded(const WeightedOrientedGraph& D);

struct DeepestLeaf {
    int leaf = -1;
    int parent = -1;
    std::vector<int> parent_nbrs;
};

DeepestLeaf deepest_leaf(const WeightedOrientedGraph& D) {
    auto rank = forest_ranks(D);
    DeepestLeaf out;
    for (int v = 0; v < D.vertex_count(); ++v)
        if (out.leaf < 0 || rank[static_cast<std::size_t>(v)] > rank[static_cast<std::size_t>(out.leaf)]) out.leaf = v;
    for (auto [a, b] : D.edges)
        if (b == out.leaf) out.parent = a;
    if (out.parent < 0) throw internal_error("deepest leaf has no parent");
    for (auto [a, b] : D.edges) {
        if (a == out.parent) out.parent_nbrs.push_back(b);
        if (b == out.parent) out.parent_nbrs.push_back(a);
    }
    return out;
}

DegreeTable rec_graded(const WeightedOrientedGraph& D) {
    if (D.edge_count() == 0) return DegreeTable{{{0, 0}, 1}};
    auto dl = deepest_leaf(D);
    const int wv = D.weights[static_cast<std::size_t>(dl.parent)];
    if (wv >= 2) return forest_engine_table(D);  // grounded in the engine

    WeightedOrientedGraph T1 = remove_vertices(D, {dl.leaf});
    std::vector<int> victims = dl.parent_nbrs;
    victims.push_back(dl.parent);
    WeightedOrientedGraph T2 = remove_vertices(D, victims);
    DegreeTable a = rec_graded(T1);
    DegreeTable b = rec_graded(T2);

    // degree contribution of each optional edge at the parent
    std::vector<std::int64_t> contrib;
    for (int u : dl.parent_nbrs) {
        if (u == dl.leaf) continue;
        bool u_is_child = false;
        for (auto [x, y] : D.edges)
            if (x == dl.parent && y == u) u_is_child = true;
        contrib.push_back(u_is_child ? D.weights[static_cast<std::size_t>(u)] : 1);
    }

    DegreeTable out = a;
    const std::int64_t base = 1 + D.weights[static_cast<std::size_t>(dl.leaf)];
    const int m = static_cast<int>(contrib.size());
    for (std::uint32_t S = 0; S < (1u << m); ++S) {
        std::int64_t dprime = base;
        int cnt = 0;
        for (int i = 0; i < m; ++i)
            if (S & (1u << i)) {
                dprime += contrib[static_cast<std::size_t>(i)];
                ++cnt;
            }
        for (const auto& [key, count] : b)
            out[{key.first + cnt + 1, key.second + dprime}] += count;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

TotalsPd rec_total(const WeightedOrientedGraph& D) {
    if (D.edge_count() == 0) return TotalsPd{{1}, 0};
    auto dl = deepest_leaf(D);
    const int wv = D.weights[static_cast<std::size_t>(dl.parent)];
    WeightedOrientedGraph T1 = remove_vertices(D, {dl.leaf});
    TotalsPd a = rec_total(T1);
    TotalsPd out;
    if (wv == 1) {
        std::vector<int> victims = dl.parent_nbrs;
        victims.push_back(dl.parent);
        TotalsPd b = rec_total(remove_vertices(D, victims));
        const int n = static_cast<int>(dl.parent_nbrs.size());
        std::size_t len = std::max(a.betti.size(), b.betti.size() + static_cast<std::size_t>(n));
        out.betti.assign(len, 0);
        for (std::size_t r = 0; r < a.betti.size(); ++r) out.betti[r] += a.betti[r];
        for (int j = 0; j <= n - 1; ++j) {
            long long c = binomial(n - 1, j);
            for (std::size_t r = 0; r < b.betti.size(); ++r)
                out.betti[r + static_cast<std::size_t>(j) + 1] += c * b.betti[r];
        }
        out.pd = std::max(a.pd, n + b.pd);
    } else {
        out.betti.assign(a.betti.size() + 1, 0);
        for (std::size_t r = 0; r < a.betti.size(); ++r) {
            out.betti[r] += a.betti[r];
            out.betti[r + 1] += a.betti[r];
        }
        out.pd = a.pd + 1;
    }
    while (!out.betti.empty() && out.betti.back() == 0) out.betti.pop_back();
    return out;
}

}  // namespace

DegreeTable forest_betti_recursion_graded(const WeightedOrientedGraph& T) {
    require_no_overrides(T, "forest Betti recursion");
    if (!is_naturally_oriented_forest(T)) throw input_error("forest Betti recursion: not a naturally oriented forest");
    if (T.edge_count() == 0) return DegreeTable{{{0, 0}, 1}};
    auto dl = deepest_leaf(T);
    if (T.weights[static_cast<std::size_t>(dl.parent)] >= 2)
        throw input_error("graded forest recursion requires the deepest-leaf parent to have weight 1");
    return rec_graded(T);
}

TotalsPd forest_betti_recursion_total(const WeightedOrientedGraph& T) {
    require_no_overrides(T, "forest Betti recursion");
    if (!is_naturally_oriented_forest(T)) throw input_error("forest Betti recursion: not a naturally oriented forest");
    return rec_total(T);
}

TotalsPd cycle_betti_recursion_total(const WeightedOrientedGraph& C_in) {
    require_no_overrides(C_in, "cycle Betti recursion");
    WeightedOrientedGraph C = C_in;
    auto view = recognize_path_or_cycle(C);
    if (!view.is_cycle) throw input_error("cycle Betti recursion: not a cycle");
    if (!is_naturally_oriented(C, view)) {
        C = ironing(sinking(C));
        view = recognize_path_or_cycle(C);
    }
    auto E = edge_ideal(C);
    if (is_classic(E)) throw input_error("cycle Betti recursion: classic cycle");
    const int n = C.edge_count();

    if (n <= 4) {
        // index arithmetic below needs the four special generators distinct
        LcmTable T(E.ideal);
        Matching A = bridge_matching(T, blockend_last_order(E));
        TotalsPd out;
        for (const auto& level : critical_symbols(A, T)) out.betti.push_back(static_cast<long long>(level.size()));
        while (!out.betti.empty() && out.betti.back() == 0) out.betti.pop_back();
        out.pd = static_cast<int>(out.betti.size()) - 1;
        return out;
    }

    auto [vs, es] = rotated_cycle(E);
    auto vtx = [&](int i) { return vs[static_cast<std::size_t>(i)]; };  // 0-based x_{i+1}
    const int w_x2 = C.weights[static_cast<std::size_t>(vtx(1))];
    const int w_xn = C.weights[static_cast<std::size_t>(vtx(n - 1))];

    WeightedOrientedGraph P1 = C;
    P1.edges.erase(P1.edges.begin() + es[static_cast<std::size_t>(n - 1)]);
    if (!P1.edge_exponents.empty()) P1.edge_exponents.erase(P1.edge_exponents.begin() + es[static_cast<std::size_t>(n - 1)]);

    TotalsPd a = forest_betti_recursion_total(P1);
    TotalsPd out;
    auto combine = [&](const TotalsPd& b, int choices, int shift_extra) {
        std::size_t len = std::max(a.betti.size(), b.betti.size() + static_cast<std::size_t>(choices) + 1);
        out.betti.assign(len, 0);
        for (std::size_t r = 0; r < a.betti.size(); ++r) out.betti[r] += a.betti[r];
        for (int j = 0; j <= choices; ++j) {
            long long c = binomial(choices, j);
            for (std::size_t r = 0; r < b.betti.size(); ++r)
                out.betti[r + static_cast<std::size_t>(j) + 1] += c * b.betti[r];
        }
        while (!out.betti.empty() && out.betti.back() == 0) out.betti.pop_back();
        out.pd = std::max(a.pd, shift_extra + b.pd);
    };

    if (w_xn == 1 && w_x2 == 1) {
        TotalsPd b = forest_betti_recursion_total(
            remove_vertices(C, {vtx(n - 2), vtx(n - 1), vtx(0), vtx(1)}));
        combine(b, 2, 3);
    } else if (w_xn == 1 && w_x2 >= 2) {
        TotalsPd b = forest_betti_recursion_total(remove_vertices(C, {vtx(n - 2), vtx(n - 1)}));
        combine(b, 1, 2);
    } else if (w_xn >= 2 && w_x2 == 1) {
        TotalsPd b = forest_betti_recursion_total(remove_vertices(C, {vtx(0), vtx(1)}));
        combine(b, 1, 2);
    } else {
        out.betti.assign(a.betti.size() + 1, 0);
        for (std::size_t r = 0; r < a.betti.size(); ++r) {
            out.betti[r] += a.betti[r];
            out.betti[r + 1] += a.betti[r];
        }
        while (!out.betti.empty() && out.betti.back() == 0) out.betti.pop_back();
        out.pd = a.pd + 1;
    }
    return out;
}

WeightedOrientedGraph unweighted_cycle(int n) {
    if (n < 3) throw input_error("a simple cycle needs at least three vertices");
    WeightedOrientedGraph D;
    for (int i = 1; i <= n; ++i) D.vertex_names.push_back("x" + std::to_string(i));
    D.weights.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) D.edges.push_back({i, (i + 1) % n});
    return D;
}

WeightedOrientedGraph natural_path(const std::vector<int>& weights) {
    if (weights.size() < 2) throw input_error("a path needs at least one edge");
    WeightedOrientedGraph D;
    for (std::size_t i = 1; i <= weights.size(); ++i) D.vertex_names.push_back("x" + std::to_string(i));
    D.weights = weights;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) D.edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1});
    return D;
}

WeightedOrientedGraph path_cycle_transfer(const WeightedOrientedGraph& D_in) {
    require_no_overrides(D_in, "path/cycle transfer");
    WeightedOrientedGraph D = D_in;
    auto view = recognize_path_or_cycle(D);
    if (!is_naturally_oriented(D, view)) {
        D = ironing(sinking(D));
        view = recognize_path_or_cycle(D);
    }
    const int n = static_cast<int>(view.eorder.size());

    if (!view.is_cycle) {
        // path of length n -> n-cycle with w(y_1) = w(y_2) = 2
        WeightedOrientedGraph C = unweighted_cycle(n);
        C.weights[0] = C.weights[1] = 2;
        for (int i = 2; i < n; ++i)
            C.weights[static_cast<std::size_t>(i)] = D.weights[static_cast<std::size_t>(view.vertices[static_cast<std::size_t>(i)])];
        return C;
    }

    auto E = edge_ideal(D);
    auto be = blockends_cycle(E);
    std::unordered_set<int> be_set(be.begin(), be.end());
    std::vector<int> be_pos;
    for (int i = 0; i < n; ++i)
        if (be_set.count(view.eorder[static_cast<std::size_t>(i)])) be_pos.push_back(i);

    // adjacent blockends give a cardinality-2 block
    for (std::size_t k = 0; k < be_pos.size() && be_pos.size() >= 2; ++k) {
        int i = be_pos[k];
        int j = be_pos[(k + 1) % be_pos.size()];
        if ((i + 1) % n == j) {
            // rotate so these become m_n, m_1: path weights copy w(y_i)
            std::vector<int> w(static_cast<std::size_t>(n + 1));
            for (int t = 0; t < n; ++t)
                w[static_cast<std::size_t>(t)] =
                    D.weights[static_cast<std::size_t>(view.vertices[static_cast<std::size_t>((j + t) % n)])];
            w[static_cast<std::size_t>(n)] = w[0];
            return natural_path(w);
        }
    }

    if (n > 4) throw input_error("no Betti-identical path partner is known for this cycle");

    // small cycles without a cardinality-2 block
    if (n == 3) return natural_path({1, 1, 1, 1});
    if (be_pos.size() <= 1) return natural_path({1, 1, 1, 1, 1});
    return natural_path({1, 1, 2, 1, 1});  // two opposite blockends
}

WeightedOrientedGraph no_path_partner_cycle(int n) {
    if (n < 5) throw input_error("the witness family starts at five vertices");
    WeightedOrientedGraph C = unweighted_cycle(n);
    C.weights[0] = 2;  // I(C) = (y_1y_2, ..., y_{n-1}y_n, y_ny_1^2)
    return C;
}

std::pair<MonomialIdeal, GenOrder> disjoint_sum_order(const MonomialIdeal& I, const GenOrder& ordI,
                                                      const MonomialIdeal& J, const GenOrder& ordJ) {
    for (const auto& nm : J.ctx().var_names())
        if (I.ctx().index_of(nm)) throw input_error("disjoint sum requires disjoint variable sets");
    std::vector<std::string> names = I.ctx().var_names();
    names.insert(names.end(), J.ctx().var_names().begin(), J.ctx().var_names().end());
    RingContext ctx(names);
    std::vector<Monomial> gens;
    for (const auto& g : I.gens()) {
        std::vector<Exponent> e = g.exps();
        e.resize(static_cast<std::size_t>(ctx.var_count()), 0);
        gens.emplace_back(std::move(e));
    }
    for (const auto& g : J.gens()) {
        std::vector<Exponent> e(static_cast<std::size_t>(I.ctx().var_count()), 0);
        e.insert(e.end(), g.exps().begin(), g.exps().end());
        gens.emplace_back(std::move(e));
    }
    std::vector<int> perm = ordI.perm();
    for (int g : ordJ.perm()) perm.push_back(g + I.gen_count());
    return {MonomialIdeal(ctx, std::move(gens)), GenOrder(std::move(perm))};
}

std::vector<Monomial> intersect_gens(const MonomialIdeal& J, const MonomialIdeal& K) {
    if (J.ctx() != K.ctx()) throw input_error("intersection requires a shared ring context");
    std::vector<Monomial> raw;
    for (const auto& f : J.gens())
        for (const auto& g : K.gens()) raw.push_back(lcm(f, g));
    return minimize_generators(J.ctx(), raw).gens();
}

EkCycleSplit ek_split_cycle(int n) {
    if (n < 8) throw input_error("the nested cycle splitting requires at least eight vertices");
    RingContext ctx([&] {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        return names;
    }());
    auto mono = [&](std::initializer_list<int> vars) {
        std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
        for (int v : vars) e[static_cast<std::size_t>(v - 1)] += 1;
        return Monomial(std::move(e));
    };

    std::vector<Monomial> gens_I;
    for (int i = 1; i < n; ++i) gens_I.push_back(mono({i, i + 1}));
    gens_I.push_back(mono({n, 1}));

    std::vector<Monomial> gens_J;
    for (int i = 2; i < n; ++i) gens_J.push_back(mono({i, i + 1}));
    std::vector<Monomial> gens_K{mono({n, 1}), mono({1, 2})};

    std::vector<Monomial> gens_JK;
    std::vector<std::pair<Monomial, Monomial>> fn1;
    gens_JK.push_back(mono({1, n - 1, n}));
    fn1.push_back({mono({n - 1, n}), mono({1, n})});
    gens_JK.push_back(mono({1, 2, 3}));
    fn1.push_back({mono({2, 3}), mono({1, 2})});
    for (int i = 3; i <= n - 3; ++i) {
        gens_JK.push_back(mono({1, n, i, i + 1}));
        fn1.push_back({mono({i, i + 1}), mono({1, n})});
    }
    for (int j = 4; j <= n - 2; ++j) {
        gens_JK.push_back(mono({1, 2, j, j + 1}));
        fn1.push_back({mono({j, j + 1}), mono({1, 2})});
    }

    EkSplitting level1{MonomialIdeal(ctx, gens_I), MonomialIdeal(ctx, gens_J), MonomialIdeal(ctx, gens_K),
                       MonomialIdeal(ctx, gens_JK), fn1};

    std::vector<Monomial> gens_Jp{mono({1, n, n - 1})};
    for (int i = 3; i <= n - 3; ++i) gens_Jp.push_back(mono({1, n, i, i + 1}));
    std::vector<Monomial> gens_Kp{mono({1, 2, 3})};
    for (int j = 4; j <= n - 2; ++j) gens_Kp.push_back(mono({1, 2, j, j + 1}));

    std::vector<Monomial> gens_JpKp;
    std::vector<std::pair<Monomial, Monomial>> fn2;
    for (int i = 3; i <= n - 2; ++i) {
        gens_JpKp.push_back(mono({1, 2, n, i, i + 1}));
        Monomial phi = (i <= n - 3) ? mono({1, n, i, i + 1}) : mono({1, n, n - 1});
        Monomial psi = (i == 3) ? mono({1, 2, 3}) : mono({1, 2, i, i + 1});
        fn2.push_back({phi, psi});
    }
    gens_JpKp.push_back(mono({1, 2, n, 3, n - 1}));
    fn2.push_back({mono({1, n, n - 1}), mono({1, 2, 3})});

    EkSplitting level2{MonomialIdeal(ctx, gens_JK), MonomialIdeal(ctx, gens_Jp), MonomialIdeal(ctx, gens_Kp),
                       MonomialIdeal(ctx, gens_JpKp), fn2};

    return EkCycleSplit{std::move(level1), std::move(level2)};
}

EkReport validate_ek(const EkSplitting& S) {
    EkReport rep;
    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.detail = std::move(why);
        return rep;
    };

    // G(I) = G(J) disjoint-union G(K)
    std::set<Monomial> gi(S.I.gens().begin(), S.I.gens().end());
    std::set<Monomial> gj(S.J.gens().begin(), S.J.gens().end());
    std::set<Monomial> gk(S.K.gens().begin(), S.K.gens().end());
    for (const auto& m : gj)
        if (gk.count(m)) return fail("G(J) and G(K) are not disjoint");
    if (gj.size() + gk.size() != gi.size()) return fail("G(J) + G(K) does not partition G(I)");
    for (const auto& m : gi)
        if (!gj.count(m) && !gk.count(m)) return fail("generator of I missing from the parts");

    // the declared intersection generators must be correct
    auto jk = intersect_gens(S.J, S.K);
    std::set<Monomial> declared(S.JK.gens().begin(), S.JK.gens().end());
    if (declared != std::set<Monomial>(jk.begin(), jk.end()))
        return fail("declared generators of J intersect K are wrong");

    const int m = S.JK.gen_count();
    if (static_cast<std::size_t>(m) != S.fn.size()) return fail("splitting function arity mismatch");
    if (m > 20) throw capacity_error("splitting validation is capped at 20 intersection generators");
    for (int i = 0; i < m; ++i) {
        const auto& [phi, psi] = S.fn[static_cast<std::size_t>(i)];
        if (!gj.count(phi)) return fail("phi image is not a generator of J");
        if (!gk.count(psi)) return fail("psi image is not a generator of K");
        if (lcm(phi, psi) != S.JK.gen(i)) return fail("w != lcm(phi(w), psi(w))");
    }

    // every nonempty subset W: lcm(phi(W)) and lcm(psi(W)) strictly divide lcm(W)
    const int nv = S.I.ctx().var_count();
    std::vector<Monomial> w_stack{Monomial::one(nv)}, p_stack{Monomial::one(nv)}, q_stack{Monomial::one(nv)};
    bool ok = true;
    std::function<void(int, bool)> dfs = [&](int idx, bool nonempty) {
        if (!ok) return;
        if (idx == m) {
            if (!nonempty) return;
            const Monomial& W = w_stack.back();
            const Monomial& P = p_stack.back();
            const Monomial& Q = q_stack.back();
            if (!(divides(P, W) && P != W && divides(Q, W) && Q != W)) ok = false;
            return;
        }
        dfs(idx + 1, nonempty);
        w_stack.push_back(lcm(w_stack.back(), S.JK.gen(idx)));
        p_stack.push_back(lcm(p_stack.back(), S.fn[static_cast<std::size_t>(idx)].first));
        q_stack.push_back(lcm(q_stack.back(), S.fn[static_cast<std::size_t>(idx)].second));
        dfs(idx + 1, true);
        w_stack.pop_back();
        p_stack.pop_back();
        q_stack.pop_back();
    };
    dfs(0, false);
    if (!ok) return fail("a subset violates strict divisibility");
    return rep;
}

WeightedOrientedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

WeightedOrientedGraph read_graph(std::istream& in) {
    int c = in.peek();
    while (c != EOF && std::isspace(c)) { in.get(); c = in.peek(); }
    if (c == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("bad graph JSON: ") + e.what());
        }
        WeightedOrientedGraph D;
        D.vertex_names = j.at("vertices").get<std::vector<std::string>>();
        D.weights.assign(D.vertex_names.size(), 1);
        auto vid = [&](const std::string& nm) {
            for (std::size_t i = 0; i < D.vertex_names.size(); ++i)
                if (D.vertex_names[i] == nm) return static_cast<int>(i);
            throw input_error("graph JSON: unknown vertex " + nm);
        };
        for (const auto& e : j.at("edges"))
            D.edges.push_back({vid(e.at(0).get<std::string>()), vid(e.at(1).get<std::string>())});
        if (j.contains("weights"))
            for (const auto& [nm, w] : j.at("weights").items())
                D.weights[static_cast<std::size_t>(vid(nm))] = w.get<int>();
        if (j.contains("edge_exponents")) {
            for (const auto& row : j.at("edge_exponents")) {
                if (row.is_null())
                    D.edge_exponents.push_back(std::nullopt);
                else
                    D.edge_exponents.push_back(std::make_pair(row.at(0).get<Exponent>(), row.at(1).get<Exponent>()));
            }
        }
        D.validate();
        return D;
    }

    WeightedOrientedGraph D;
    std::map<std::string, int> ids;
    auto vid = [&](const std::string& nm) {
        auto it = ids.find(nm);
        if (it != ids.end()) return it->second;
        int id = D.vertex_count();
        ids.emplace(nm, id);
        D.vertex_names.push_back(nm);
        D.weights.push_back(1);
        return id;
    };
    std::vector<std::optional<std::pair<Exponent, Exponent>>> overrides;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertex") {
            std::string nm;
            while (ls >> nm) vid(nm);
        } else if (kw == "edge") {
            std::string a, arrow, b;
            if (!(ls >> a >> arrow)) throw input_error("graph: malformed edge line");
            if (arrow == "->") {
                if (!(ls >> b)) throw input_error("graph: malformed edge line");
            } else {
                b = arrow;
            }
            D.edges.push_back({vid(a), vid(b)});
            Exponent p, q;
            if (ls >> p >> q)
                overrides.push_back(std::make_pair(p, q));
            else
                overrides.push_back(std::nullopt);
        } else if (kw == "weight") {
            std::string nm;
            int w;
            if (!(ls >> nm >> w)) throw input_error("graph: malformed weight line");
            D.weights[static_cast<std::size_t>(vid(nm))] = w;
        } else {
            throw input_error("graph: unknown directive '" + kw + "'");
        }
    }
    if (std::any_of(overrides.begin(), overrides.end(), [](const auto& o) { return o.has_value(); }))
        D.edge_exponents = std::move(overrides);
    D.validate();
    return D;
}

WeightedOrientedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_graph(in);
}

std::string graph_to_text(const WeightedOrientedGraph& D) {
    std::string out = "vertex";
    for (const auto& nm : D.vertex_names) out += " " + nm;
    out += "\n";
    for (int e = 0; e < D.edge_count(); ++e) {
        auto [a, b] = D.edges[static_cast<std::size_t>(e)];
        out += "edge " + D.vertex_names[static_cast<std::size_t>(a)] + " -> " + D.vertex_names[static_cast<std::size_t>(b)];
        if (!D.edge_exponents.empty() && D.edge_exponents[static_cast<std::size_t>(e)])
            out += " " + std::to_string(D.edge_exponents[static_cast<std::size_t>(e)]->first) + " " +
                   std::to_string(D.edge_exponents[static_cast<std::size_t>(e)]->second);
        out += "\n";
    }
    for (int v = 0; v < D.vertex_count(); ++v)
        if (D.weights[static_cast<std::size_t>(v)] != 1)
            out += "weight " + D.vertex_names[static_cast<std::size_t>(v)] + " " +
                   std::to_string(D.weights[static_cast<std::size_t>(v)]) + "\n";
    return out;
}

}  // namespace bmres
