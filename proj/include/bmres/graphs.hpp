#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bmres/betti.hpp"
#include "bmres/monomial.hpp"

namespace bmres {

// A finite simple graph with directed edges and positive vertex weights.
// An optional per-edge exponent pair (p, q) overrides the weight rule and
// makes the generator src^p * tgt^q.
struct WeightedOrientedGraph {
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> edges;  // (source, target) vertex ids
    std::vector<int> weights;                // per vertex, >= 1
    std::vector<std::optional<std::pair<Exponent, Exponent>>> edge_exponents;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    void validate() const;
};

WeightedOrientedGraph parse_graph_text(const std::string& text);
WeightedOrientedGraph read_graph(std::istream& in);
WeightedOrientedGraph read_graph_file(const std::string& path);
std::string graph_to_text(const WeightedOrientedGraph& D);

// The edge ideal I(D) = ( x y^w(y) | (x,y) in E ), generator i <-> edge i.
struct EdgeIdealMap {
    WeightedOrientedGraph graph;
    MonomialIdeal ideal;
};

EdgeIdealMap edge_ideal(const WeightedOrientedGraph& D);

// Weights of sink vertices drop to 1; idempotent.
WeightedOrientedGraph sinking(const WeightedOrientedGraph& D);
bool is_sunk(const WeightedOrientedGraph& D);

// Canonical traversal of a graph that is a single path or cycle.
// For a path, vertices has edge_count()+1 entries; for a cycle,
// vertices[i] -- vertices[i+1 mod n] carries edge eorder[i].
struct PathOrCycleView {
    bool is_cycle = false;
    std::vector<int> vertices;
    std::vector<int> eorder;  // edge ids in traversal order
};

PathOrCycleView recognize_path_or_cycle(const WeightedOrientedGraph& D);

// Reorients every edge along the traversal direction, transporting the
// target-side exponent. Requires a sunk path or cycle.
WeightedOrientedGraph ironing(const WeightedOrientedGraph& D_sunk);

// Every edge oriented along the traversal (x_i, x_{i+1}).
bool is_naturally_oriented(const WeightedOrientedGraph& D, const PathOrCycleView& view);

// Blockends of a cycle: edges (as generator ids) whose monomial does not
// divide the lcm of its two cyclic neighbors. A cycle with no blockends is
// classic.
std::vector<int> blockends_cycle(const EdgeIdealMap& C);
bool is_classic(const EdgeIdealMap& C);
// Blocks as runs of generator ids in traversal order, blockend to blockend.
std::vector<std::vector<int>> blocks_cycle(const EdgeIdealMap& C);

// Forests. Natural orientation: every vertex has at most one incoming edge;
// roots are the in-degree-zero vertices.
bool is_forest(const WeightedOrientedGraph& D);
bool is_naturally_oriented_forest(const WeightedOrientedGraph& D);
// Vertex ranks = distance from the root of the containing tree.
std::vector<int> forest_ranks(const WeightedOrientedGraph& D);

// Generators ordered by (rank of source, source label, rank of target,
// target label); ties broken by vertex listing order.
GenOrder natural_forest_order(const EdgeIdealMap& T);

std::vector<int> blockends_forest(const EdgeIdealMap& T);
// Maximal potential blocks, each as the generator-id list along its path.
std::vector<std::vector<int>> blocks_forest(const EdgeIdealMap& T);

// The descending traversal order on a non-classic naturally oriented cycle,
// rotated so the last generator is a blockend.
GenOrder blockend_last_order(const EdgeIdealMap& C);
// Same, with the second and third generators of block k (1-based) swapped.
// Requires that block to have at least three elements.
GenOrder kflip_order(const EdgeIdealMap& C, int k);

struct TotalsPd {
    std::vector<long long> betti;  // index = homological degree, betti[0] = 1
    int pd = 0;

    bool operator==(const TotalsPd&) const = default;
};

using DegreeTable = std::map<std::pair<int, std::int64_t>, long long>;

// Recursive graded Betti numbers for a naturally oriented forest whose
// deepest-leaf parent has weight 1 (sub-instances violating the hypothesis
// fall back to the matching engine).
DegreeTable forest_betti_recursion_graded(const WeightedOrientedGraph& T);
TotalsPd forest_betti_recursion_total(const WeightedOrientedGraph& T);

// Recursive total Betti numbers and projective dimension for a non-classic
// weighted oriented cycle (sunk and ironed internally as needed).
TotalsPd cycle_betti_recursion_total(const WeightedOrientedGraph& C);

// A partner graph with identical total Betti numbers: cycle for a path, or
// path for a cycle with a cardinality-2 block or at most 4 edges.
WeightedOrientedGraph path_cycle_transfer(const WeightedOrientedGraph& D);
// The witness family with no Betti-identical path partner (n >= 5).
WeightedOrientedGraph no_path_partner_cycle(int n);

// Combined ideal on disjoint variable sets with every generator of the
// first ideal above every generator of the second.
std::pair<MonomialIdeal, GenOrder> disjoint_sum_order(const MonomialIdeal& I, const GenOrder& ordI,
                                                      const MonomialIdeal& J, const GenOrder& ordJ);

// Minimal generators of the intersection of two monomial ideals.
std::vector<Monomial> intersect_gens(const MonomialIdeal& J, const MonomialIdeal& K);

// An Eliahou-Kervaire splitting I = J + K with its splitting function,
// images aligned with the generators of J intersect K.
struct EkSplitting {
    MonomialIdeal I, J, K, JK;
    std::vector<std::pair<Monomial, Monomial>> fn;  // w -> (phi(w) in G(J), psi(w) in G(K))
};

// The two nested splittings of the n-cycle edge ideal (n >= 8).
struct EkCycleSplit {
    EkSplitting level1;  // I(C_n) = J + K
    EkSplitting level2;  // J cap K = J' + K'
};

EkCycleSplit ek_split_cycle(int n);

struct EkReport {
    bool ok = true;
    std::string detail;
};

EkReport validate_ek(const EkSplitting& S);

// n-cycle and path-of-length-n builders used by tests and the splitter.
WeightedOrientedGraph unweighted_cycle(int n);
WeightedOrientedGraph natural_path(const std::vector<int>& weights);  // weights[i] for vertex x_{i+1}

}  // namespace bmres
