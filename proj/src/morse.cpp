#include "bmres/morse.hpp"

#include <algorithm>
#include <map>

namespace bmres {

std::int64_t morse_edge_weight(Symbol from, Symbol to, const Matching& A) {
    if (from.card() + 1 == to.card()) {
        // reversed matching edge (to, from) in A
        auto e = A.edge_with_source(to);
        if (!e || e->target != from) throw input_error("not an edge of the Morse digraph");
        return -incidence(to, from);
    }
    if (from.card() == to.card() + 1) {
        auto e = A.edge_with_source(from);
        if (e && e->target == to) throw input_error("matched edge is reversed in the Morse digraph");
        return incidence(from, to);
    }
    throw input_error("not an edge of the Morse digraph");
}

namespace {

// Flow computation over the Morse digraph. Paths from a cardinality-k
// symbol reach critical cardinality-k symbols only through the alternating
// up/down pattern; anything that steps below level k is trapped among
// matched symbols and never ends at a critical one.
class FlowEngine {
  public:
    explicit FlowEngine(const Matching& A) {
        for (const auto& e : A.edges) {
            source_of_[e.source.mask] = e.target.mask;
            target_of_[e.target.mask] = e.source.mask;
        }
    }

    const GradientFlow& flow(Symbol a) {
        auto it = memo_.find(a.mask);
        if (it != memo_.end()) return it->second;
        // iterative post-order to avoid deep recursion on long alternating chains
        std::vector<std::uint64_t> stack{a.mask};
        while (!stack.empty()) {
            std::uint64_t v = stack.back();
            if (memo_.count(v)) {
                stack.pop_back();
                continue;
            }
            bool ready = true;
            auto tgt = target_of_.find(v);
            if (tgt != target_of_.end()) {
                Symbol rho(tgt->second);
                for_each_bit(rho.mask, [&](int g) {
                    Symbol ap = rho.without(g);
                    if (ap.mask != v && !memo_.count(ap.mask)) {
                        stack.push_back(ap.mask);
                        ready = false;
                    }
                });
            }
            if (!ready) continue;
            stack.pop_back();
            GradientFlow f;
            if (source_of_.count(v)) {
                // matched downward: no critical symbol of this level is reachable
            } else if (tgt == target_of_.end()) {
                f.emplace(Symbol(v), 1);  // critical: the empty path
            } else {
                Symbol av(v);
                Symbol rho(tgt->second);
                std::int64_t up = -static_cast<std::int64_t>(incidence(rho, av));
                for_each_bit(rho.mask, [&](int g) {
                    Symbol ap = rho.without(g);
                    if (ap.mask == v) return;
                    std::int64_t w = checked_mul(up, incidence(rho, ap));
                    for (const auto& [crit, c] : memo_.at(ap.mask))
                        f[crit] = checked_add(f[crit], checked_mul(w, c));
                });
                std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
            }
            memo_.emplace(v, std::move(f));
        }
        return memo_.at(a.mask);
    }

  private:
    std::unordered_map<std::uint64_t, std::uint64_t> source_of_, target_of_;
    std::unordered_map<std::uint64_t, GradientFlow> memo_;
};

}  // namespace

GradientFlow gradient_flow(Symbol start, const Matching& A) {
    FlowEngine eng(A);
    return eng.flow(start);
}

const Monomial& MorseDifferential::basis_lcm(int card, int idx) const {
    std::size_t off = 0;
    for (int c = 0; c < card; ++c) off += basis[static_cast<std::size_t>(c)].size();
    return basis_lcm_flat[off + static_cast<std::size_t>(idx)];
}

std::vector<long long> MorseDifferential::ranks() const {
    std::vector<long long> r;
    for (const auto& level : basis) r.push_back(static_cast<long long>(level.size()));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

MorseDifferential differential(const Matching& A, const LcmTable& T) {
    MorseDifferential D;
    D.basis = critical_symbols(A, T);
    while (D.basis.size() > 1 && D.basis.back().empty()) D.basis.pop_back();
    for (const auto& level : D.basis)
        for (Symbol s : level) D.basis_lcm_flat.push_back(T.lcm_monomial(s));

    std::vector<std::unordered_map<std::uint64_t, int>> index_by_card(D.basis.size());
    for (std::size_t c = 0; c < D.basis.size(); ++c)
        for (std::size_t i = 0; i < D.basis[c].size(); ++i) index_by_card[c][D.basis[c][i].mask] = static_cast<int>(i);

    FlowEngine eng(A);
    D.d.resize(D.basis.size());
    for (std::size_t r = 1; r < D.basis.size(); ++r) {
        MorseMatrix& M = D.d[r];
        M.rows = static_cast<int>(D.basis[r - 1].size());
        M.cols = static_cast<int>(D.basis[r].size());
        for (std::size_t ci = 0; ci < D.basis[r].size(); ++ci) {
            Symbol s = D.basis[r][ci];
            std::map<int, std::int64_t> acc;  // row -> coeff
            for_each_bit(s.mask, [&](int g) {
                Symbol sp = s.without(g);
                std::int64_t inc = incidence(s, sp);
                for (const auto& [crit, c] : eng.flow(sp)) {
                    int row = index_by_card[r - 1].at(crit.mask);
                    acc[row] = checked_add(acc[row], checked_mul(inc, c));
                }
            });
            Monomial s_lcm = T.lcm_monomial(s);
            for (const auto& [row, coeff] : acc) {
                if (coeff == 0) continue;
                const Monomial& row_lcm = D.basis_lcm(static_cast<int>(r) - 1,
                                                      row);
                if (!divides(row_lcm, s_lcm))
                    throw internal_error("Morse differential entry with non-monomial multiplier");
                M.entries.push_back(MorseEntry{row, static_cast<int>(ci), coeff, quotient(s_lcm, row_lcm)});
            }
        }
    }
    return D;
}

MinimalityReport minimality(const MorseDifferential& D) {
    MinimalityReport rep;
    for (std::size_t r = 1; r < D.d.size(); ++r) {
        for (const auto& e : D.d[r].entries) {
            if (e.coeff != 0 && e.multiplier.is_one()) {
                rep.minimal = false;
                if (!rep.unit_witness) {
                    rep.unit_witness = e;
                    rep.unit_witness_card = static_cast<int>(r);
                }
            }
        }
    }
    // the lcm-adjacency sufficient condition, reported separately
    for (std::size_t r = 1; r < D.basis.size() && rep.lcm_adjacency_ok; ++r) {
        for (std::size_t ci = 0; ci < D.basis[r].size() && rep.lcm_adjacency_ok; ++ci) {
            Symbol s = D.basis[r][ci];
            const Monomial& s_lcm = D.basis_lcm(static_cast<int>(r), static_cast<int>(ci));
            for (std::size_t ri = 0; ri < D.basis[r - 1].size(); ++ri) {
                Symbol sp = D.basis[r - 1][ri];
                if (!sp.subset_of(s)) continue;
                if (D.basis_lcm(static_cast<int>(r) - 1, static_cast<int>(ri)) == s_lcm) {
                    rep.lcm_adjacency_ok = false;
                    break;
                }
            }
        }
    }
    return rep;
}

bool composes_to_zero(const MorseDifferential& D) {
    for (std::size_t r = 1; r + 1 < D.d.size(); ++r) {
        const MorseMatrix& A = D.d[r];
        const MorseMatrix& B = D.d[r + 1];
        // rows of A indexed by card r-1, cols of B by card r+1
        std::vector<std::vector<std::pair<int, std::int64_t>>> a_by_col(static_cast<std::size_t>(A.cols));
        for (const auto& e : A.entries) a_by_col[static_cast<std::size_t>(e.col)].push_back({e.row, e.coeff});
        std::map<std::pair<int, int>, std::int64_t> prod;
        for (const auto& eb : B.entries)
            for (const auto& [row, ca] : a_by_col[static_cast<std::size_t>(eb.row)])
                prod[{row, eb.col}] = checked_add(prod[{row, eb.col}], checked_mul(ca, eb.coeff));
        for (const auto& [rc, v] : prod)
            if (v != 0) return false;
    }
    return true;
}

GradedBettiTable betti_from_criticals(const Matching& A, const LcmTable& T) {
    GradedBettiTable table;
    auto crit = critical_symbols(A, T);
    for (std::size_t c = 0; c < crit.size(); ++c)
        for (Symbol s : crit[c]) {
            auto e = T.lcm_exps(T.lcm_id(s));
            table.add(static_cast<int>(c), std::vector<Exponent>(e.begin(), e.end()), 1);
        }
    return table;
}

bool is_bridge_minimal(const LcmTable& T, const GenOrder& ord) {
    Matching A = bridge_matching(T, ord);
    return is_minimal(differential(A, T));
}

bool is_bridge_minimal(const MonomialIdeal& I, const GenOrder& ord) {
    LcmTable T(I);
    return is_bridge_minimal(T, ord);
}

}  // namespace bmres
