#include "bmres/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace bmres {

FieldSpec FieldSpec::prime(long long p) {
    if (p < 2 || p > (1LL << 31)) throw input_error("field characteristic out of range");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw input_error("field characteristic must be prime");
    return FieldSpec{p};
}

namespace {

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = static_cast<long long>((__int128)r * b % p);
        b = static_cast<long long>((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

int rank_mod_p(const IntMatrix& M, long long p) {
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(M.rows),
                                          std::vector<long long>(static_cast<std::size_t>(M.cols)));
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) {
            long long v = M.at(r, c) % p;
            if (v < 0) v += p;
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
    int rank = 0;
    for (int col = 0; col < M.cols && rank < M.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < M.rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        long long inv = mod_pow(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p - 2, p);
        for (int r = rank + 1; r < M.rows; ++r) {
            long long f = static_cast<long long>((__int128)a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv % p);
            if (f == 0) continue;
            for (int c = col; c < M.cols; ++c) {
                long long v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                              static_cast<long long>((__int128)f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] % p);
                if (v < 0) v += p;
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            }
        }
        ++rank;
    }
    return rank;
}

// Bareiss fraction-free elimination: division-exact, integer-preserving.
int rank_rational(const IntMatrix& M) {
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(M.rows),
                                          std::vector<mpz_class>(static_cast<std::size_t>(M.cols)));
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<long>(M.at(r, c));
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < M.cols && rank < M.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < M.rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < M.rows; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            for (int c = col + 1; c < M.cols; ++c) {
                mpz_class num = prow[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(c)] -
                                row[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(c)];
                mpz_divexact(row[static_cast<std::size_t>(c)].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = prow[static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

}  // namespace

int rank(const IntMatrix& M, const FieldSpec& field) {
    if (M.rows == 0 || M.cols == 0) return 0;
    return field.is_rational() ? rank_rational(M) : rank_mod_p(M, field.p);
}

std::vector<std::uint32_t> lcm_lattice_ids(const LcmTable& T) {
    // every lattice element is realized as the lcm of some symbol, so the
    // distinct id set over all masks is exactly the join-closure
    std::vector<char> seen(static_cast<std::size_t>(T.distinct_lcm_count()), 0);
    std::vector<std::uint32_t> ids;
    for (std::size_t mask = 0; mask < T.symbol_count(); ++mask) {
        std::uint32_t id = T.lcm_id(Symbol(mask));
        if (!seen[id]) {
            seen[id] = 1;
            ids.push_back(id);
            if (ids.size() > kLatticeCap) throw capacity_error("lcm lattice exceeds capacity");
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

GradedBettiTable tor_betti(const MonomialIdeal& I, const FieldSpec& field, const LcmTable* table) {
    if (I.gen_count() > kOracleCap) throw capacity_error("Betti oracle is capped at " + std::to_string(kOracleCap) + " generators");
    std::optional<LcmTable> local;
    if (!table) {
        local.emplace(I);
        table = &*local;
    }
    const LcmTable& T = *table;
    const int n = T.gen_count();

    // fibers: masks grouped by lcm id, then by cardinality
    std::unordered_map<std::uint32_t, std::vector<std::vector<std::uint64_t>>> fiber;
    for (std::size_t mask = 0; mask < T.symbol_count(); ++mask) {
        auto& f = fiber[T.lcm_id(Symbol(mask))];
        if (f.empty()) f.resize(static_cast<std::size_t>(n) + 1);
        f[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }

    GradedBettiTable out;
    for (auto& [lcmid, levels] : fiber) {
        // boundary matrices of the strand: card k -> card k-1 inside the fiber
        std::vector<int> ranks(static_cast<std::size_t>(n) + 2, 0);
        std::vector<std::unordered_map<std::uint64_t, int>> pos(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            for (std::size_t i = 0; i < levels[static_cast<std::size_t>(k)].size(); ++i)
                pos[static_cast<std::size_t>(k)][levels[static_cast<std::size_t>(k)][i]] = static_cast<int>(i);
        for (int k = 1; k <= n; ++k) {
            const auto& cols = levels[static_cast<std::size_t>(k)];
            const auto& rows = levels[static_cast<std::size_t>(k - 1)];
            if (cols.empty() || rows.empty()) continue;
            IntMatrix M(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                Symbol s(cols[c]);
                for_each_bit(s.mask, [&](int g) {
                    Symbol t = s.without(g);
                    if (T.lcm_id(t) != lcmid) return;
                    M.at(pos[static_cast<std::size_t>(k - 1)].at(t.mask), static_cast<int>(c)) = incidence(s, t);
                });
            }
            ranks[static_cast<std::size_t>(k)] = rank(M, field);
        }
        auto exps = T.lcm_exps(lcmid);
        for (int k = 0; k <= n; ++k) {
            long long dim = static_cast<long long>(levels[static_cast<std::size_t>(k)].size());
            long long h = dim - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)];
            if (h != 0) out.add(k, std::vector<Exponent>(exps.begin(), exps.end()), h);
        }
    }
    return out;
}

StrandReport strand_exactness(const MorseDifferential& D, const MonomialIdeal& I, const FieldSpec& field,
                              const LcmTable* table) {
    if (I.gen_count() > kOracleCap) throw capacity_error("strand exactness is capped at " + std::to_string(kOracleCap) + " generators");
    std::optional<LcmTable> local;
    if (!table) {
        local.emplace(I);
        table = &*local;
    }
    const LcmTable& T = *table;
    StrandReport rep;

    const int levels = static_cast<int>(D.basis.size());
    auto lattice = lcm_lattice_ids(T);
    for (std::uint32_t vid : lattice) {
        Monomial v = T.lcm_monomial(vid);
        // basis of the strand at position i: critical symbols whose lcm divides v
        std::vector<std::vector<int>> keep(static_cast<std::size_t>(levels));
        std::vector<std::vector<int>> colpos(static_cast<std::size_t>(levels));
        for (int i = 0; i < levels; ++i) {
            colpos[static_cast<std::size_t>(i)].assign(D.basis[static_cast<std::size_t>(i)].size(), -1);
            for (std::size_t j = 0; j < D.basis[static_cast<std::size_t>(i)].size(); ++j)
                if (divides(D.basis_lcm(i, static_cast<int>(j)), v)) {
                    colpos[static_cast<std::size_t>(i)][j] = static_cast<int>(keep[static_cast<std::size_t>(i)].size());
                    keep[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
                }
        }
        std::vector<int> ranks(static_cast<std::size_t>(levels) + 1, 0);
        for (int i = 1; i < levels; ++i) {
            if (keep[static_cast<std::size_t>(i)].empty() || keep[static_cast<std::size_t>(i - 1)].empty()) continue;
            IntMatrix M(static_cast<int>(keep[static_cast<std::size_t>(i - 1)].size()),
                        static_cast<int>(keep[static_cast<std::size_t>(i)].size()));
            for (const auto& e : D.d[static_cast<std::size_t>(i)].entries) {
                int c = colpos[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.col)];
                int r = colpos[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e.row)];
                if (c < 0) continue;
                if (r < 0) throw internal_error("strand column present but row lcm does not divide");
                M.at(r, c) = e.coeff;
            }
            ranks[static_cast<std::size_t>(i)] = rank(M, field);
        }
        bool v_in_ideal = false;
        for (int g = 0; g < I.gen_count() && !v_in_ideal; ++g)
            if (divides(I.gen(g), v)) v_in_ideal = true;
        for (int i = 0; i < levels; ++i) {
            long long dim = static_cast<long long>(keep[static_cast<std::size_t>(i)].size());
            long long h = dim - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i + 1)];
            long long expected = (i == 0 && !v_in_ideal) ? 1 : 0;
            if (h != expected) {
                rep.pass = false;
                rep.witness_multidegree = std::vector<Exponent>(v.exps().begin(), v.exps().end());
                rep.witness_position = i;
                rep.witness_defect = h;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace bmres
