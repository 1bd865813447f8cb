#include "bmres/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "bmres/morse.hpp"

namespace bmres {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(static_cast<std::int64_t>(f), i);
    return f;
}

std::vector<int> unrank_permutation(std::uint64_t rank, int n) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    std::uint64_t f = factorial(n);
    for (int i = n; i >= 1; --i) {
        f /= static_cast<std::uint64_t>(i);
        std::uint64_t q = rank / f;
        rank %= f;
        perm.push_back(pool[static_cast<std::size_t>(q)]);
        pool.erase(pool.begin() + static_cast<long>(q));
    }
    return perm;
}

namespace {

using Clock = std::chrono::steady_clock;

// Per-order bridge matching restricted to what the searches need: edge
// list, conflict flag, matched symbols. Reuses buffers across orders.
struct MatchScratch {
    std::vector<int> rank;                      // gen -> rank under the current order
    std::vector<std::pair<std::uint32_t, int>> proposals;  // (target, sbridge) per level
    std::vector<std::uint32_t> matched;         // matched symbols of the current order
    bool friendly = true;

    void run(const LcmTable& T, const std::vector<int>& perm) {
        const int n = T.gen_count();
        rank.assign(static_cast<std::size_t>(n), 0);
        for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] = r;
        matched.clear();
        friendly = true;
        const auto& bridges = T.bridge_masks();
        const auto& by_card = T.masks_by_card();
        static thread_local std::vector<char> is_target;  // reused dense flags
        static thread_local std::vector<std::uint32_t> touched;
        if (is_target.size() < T.symbol_count()) is_target.assign(T.symbol_count(), 0);
        touched.clear();

        for (int card = n; card >= 3; --card) {
            proposals.clear();
            std::vector<std::uint32_t> sources;
            for (std::uint32_t mask : by_card[static_cast<std::size_t>(card)]) {
                if (is_target[mask]) continue;
                std::uint64_t b = bridges[mask];
                if (!b) continue;
                int sb = -1;
                // the smallest bridge has the largest rank (rank 0 = largest generator)
                for_each_bit(b, [&](int g) {
                    if (sb < 0 || rank[static_cast<std::size_t>(g)] > rank[static_cast<std::size_t>(sb)]) sb = g;
                });
                proposals.push_back({static_cast<std::uint32_t>(mask & ~(std::uint64_t{1} << sb)), sb});
                sources.push_back(mask);
            }
            // group by target: proposals of one level are few, sort-based grouping
            std::vector<std::size_t> idx(proposals.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                return proposals[a].first < proposals[b].first;
            });
            for (std::size_t i = 0; i < idx.size();) {
                std::size_t j = i;
                std::size_t best = i;
                while (j < idx.size() && proposals[idx[j]].first == proposals[idx[i]].first) {
                    if (rank[static_cast<std::size_t>(proposals[idx[j]].second)] >
                        rank[static_cast<std::size_t>(proposals[idx[best]].second)])
                        best = j;
                    ++j;
                }
                if (j - i > 1) friendly = false;
                std::uint32_t tgt = proposals[idx[i]].first;
                is_target[tgt] = 1;
                touched.push_back(tgt);
                matched.push_back(tgt);
                matched.push_back(sources[idx[best]]);
                i = j;
            }
        }
        for (std::uint32_t m : touched) is_target[m] = 0;
    }
};

struct OrderStream {
    // exhaustive: ranks [0, limit) possibly restricted; random: seeded draws
    const SearchOptions& opt;
    int n;
    std::uint64_t limit;

    std::uint64_t count() const {
        if (opt.mode == SearchMode::Random) return opt.budget.max_orders ? opt.budget.max_orders : 10000;
        if (opt.restrict_ranks) return opt.restrict_ranks->size();
        return limit;
    }
};

SearchReport run_search(const MonomialIdeal& I, const SearchOptions& opt,
                        const std::function<bool(const LcmTable&, MatchScratch&, const std::vector<int>&)>& accept) {
    const int n = I.gen_count();
    if (opt.mode == SearchMode::Exhaustive && n > 10 && !opt.exhaustive_cap_override)
        throw capacity_error("exhaustive order search is guarded at 10 generators; pass the override to lift it");
    LcmTable T(I);
    T.bridge_masks();
    T.masks_by_card();

    SearchReport rep;
    rep.seed = opt.seed;
    auto t0 = Clock::now();

    OrderStream stream{opt, n, factorial(n)};
    const std::uint64_t total = stream.count();
    const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total / 64 + 1));
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> out_of_time{false};

    struct ChunkResult {
        std::uint64_t examined = 0;
        std::vector<std::pair<std::uint64_t, std::vector<int>>> hits;  // (position, perm)
    };
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;
    std::vector<ChunkResult> results(static_cast<std::size_t>(nchunks));

    auto worker = [&]() {
        MatchScratch scratch;
        std::mt19937_64 rng;
        while (true) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            if (opt.budget.max_seconds > 0) {
                double el = std::chrono::duration<double>(Clock::now() - t0).count();
                if (el > opt.budget.max_seconds) {
                    out_of_time.store(true);
                    break;
                }
            }
            ChunkResult& res = results[static_cast<std::size_t>(c)];
            std::uint64_t begin = c * chunk, end = std::min(total, begin + chunk);
            for (std::uint64_t pos = begin; pos < end; ++pos) {
                std::vector<int> perm;
                if (opt.mode == SearchMode::Random) {
                    rng.seed(opt.seed + pos);
                    perm.resize(static_cast<std::size_t>(n));
                    std::iota(perm.begin(), perm.end(), 0);
                    for (int i = n - 1; i > 0; --i) {
                        std::uint64_t j = rng() % static_cast<std::uint64_t>(i + 1);
                        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                    }
                } else {
                    std::uint64_t r = opt.restrict_ranks ? (*opt.restrict_ranks)[static_cast<std::size_t>(pos)] : pos;
                    perm = unrank_permutation(r, n);
                }
                ++res.examined;
                if (accept(T, scratch, perm)) res.hits.push_back({pos, perm});
            }
        }
    };

    int nthreads = std::max(1, opt.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (const auto& res : results) rep.orders_examined += res.examined;
    std::vector<std::pair<std::uint64_t, std::vector<int>>> hits;
    for (const auto& res : results)
        for (const auto& h : res.hits) hits.push_back(h);
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [pos, perm] : hits) {
        if (static_cast<int>(rep.witnesses.size()) >= opt.witness_cap) {
            rep.truncated_witnesses = true;
            break;
        }
        rep.witnesses.emplace_back(perm);
    }

    rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    bool exhausted_all = rep.orders_examined == total && !out_of_time.load();
    if (!hits.empty())
        rep.verdict = SearchVerdict::Found;
    else if (opt.mode == SearchMode::Exhaustive && exhausted_all)
        rep.verdict = SearchVerdict::ExhaustedNone;
    else
        rep.verdict = SearchVerdict::BudgetExceeded;  // inconclusive: budget ran out
    return rep;
}

}  // namespace

SearchReport search_friendly(const MonomialIdeal& I, const SearchOptions& opt) {
    auto accept = [](const LcmTable& T, MatchScratch& scratch, const std::vector<int>& perm) {
        scratch.run(T, perm);
        return scratch.friendly;
    };
    SearchReport rep = run_search(I, opt, accept);
    for (const auto& ord : rep.witnesses)
        if (!is_bridge_friendly(I, ord)) throw internal_error("friendly witness failed re-verification");
    return rep;
}

SearchReport search_minimal(const MonomialIdeal& I, const SearchOptions& opt, const FieldSpec& field) {
    LcmTable T0(I);
    GradedBettiTable oracle = tor_betti(I, field, &T0);
    // per-(cardinality, lcm id) target counts; criticals must match exactly
    std::map<std::pair<int, std::uint32_t>, long long> target;
    {
        // group oracle entries by lcm id via exponent lookup
        std::map<std::vector<Exponent>, std::uint32_t> id_of;
        for (std::size_t mask = 0; mask < T0.symbol_count(); ++mask) {
            std::uint32_t id = T0.lcm_id(Symbol(mask));
            auto e = T0.lcm_exps(id);
            id_of.emplace(std::vector<Exponent>(e.begin(), e.end()), id);
        }
        for (const auto& [key, count] : oracle.entries()) {
            auto it = id_of.find(key.second);
            if (it == id_of.end()) throw internal_error("oracle multidegree outside the lcm lattice");
            target[{key.first, it->second}] = count;
        }
    }
    // per-(cardinality, lcm id) counts over all symbols, computed once
    std::map<std::pair<int, std::uint32_t>, long long> all_counts;
    for (std::size_t mask = 0; mask < T0.symbol_count(); ++mask)
        ++all_counts[{std::popcount(mask), T0.lcm_id(Symbol(mask))}];

    auto accept = [&](const LcmTable& T, MatchScratch& scratch, const std::vector<int>& perm) {
        scratch.run(T, perm);
        // criticals = all symbols minus matched; compare against the oracle
        std::map<std::pair<int, std::uint32_t>, long long> counts = all_counts;
        for (std::uint32_t m : scratch.matched) --counts[{std::popcount(m), T.lcm_id(Symbol(m))}];
        std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
        return counts == target;
    };
    SearchReport rep = run_search(I, opt, accept);
    for (const auto& ord : rep.witnesses)
        if (!is_bridge_minimal(I, ord)) throw internal_error("minimal witness failed the differential check");
    return rep;
}

std::vector<std::uint64_t> cycle_symmetry_reduction(int n) {
    if (n < 3) throw input_error("cycle symmetry reduction needs n >= 3");
    if (n > 12) throw capacity_error("cycle symmetry reduction enumerates n! orders");
    // dihedral generator images on edge labels m_i = x_i x_{i+1} (0-based):
    // rotation i -> i+1; reflection through vertex x_1 maps edge i -> n-1-i.
    std::vector<std::vector<int>> group;
    for (int r = 0; r < n; ++r) {
        std::vector<int> rot(static_cast<std::size_t>(n)), rot_ref(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            rot[static_cast<std::size_t>(i)] = (i + r) % n;
            rot_ref[static_cast<std::size_t>(i)] = ((n - 1 - i) + r) % n;
        }
        group.push_back(rot);
        group.push_back(rot_ref);
    }
    std::vector<std::uint64_t> reps;
    const std::uint64_t total = factorial(n);
    std::vector<int> image(static_cast<std::size_t>(n));
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        std::vector<int> perm = unrank_permutation(rank, n);
        bool minimal = true;
        for (const auto& g : group) {
            for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            if (std::lexicographical_compare(image.begin(), image.end(), perm.begin(), perm.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) reps.push_back(rank);
    }
    return reps;
}

}  // namespace bmres
