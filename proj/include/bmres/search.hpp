#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bmres/matching.hpp"
#include "bmres/oracle.hpp"

namespace bmres {

enum class SearchMode { Exhaustive, Random };
enum class SearchVerdict { Found, ExhaustedNone, BudgetExceeded };

struct SearchBudget {
    std::uint64_t max_orders = 0;  // 0 = unlimited
    double max_seconds = 0.0;      // 0 = unlimited
};

struct SearchOptions {
    SearchMode mode = SearchMode::Exhaustive;
    SearchBudget budget;
    std::uint64_t seed = 1;
    int witness_cap = 4;
    int threads = 1;
    bool exhaustive_cap_override = false;  // lift the default n <= 10 guard
    // restrict the exhaustive sweep to these lex ranks (dihedral reduction)
    std::optional<std::vector<std::uint64_t>> restrict_ranks;
};

struct SearchReport {
    SearchVerdict verdict = SearchVerdict::ExhaustedNone;
    std::vector<GenOrder> witnesses;  // first witnesses in deterministic rank order
    std::uint64_t orders_examined = 0;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
    bool truncated_witnesses = false;
};

// lex-rank <-> permutation via the factorial number system
std::vector<int> unrank_permutation(std::uint64_t rank, int n);
std::uint64_t factorial(int n);

SearchReport search_friendly(const MonomialIdeal& I, const SearchOptions& opt);
// Pre-filters orders whose critical counts match the characteristic-zero
// oracle Betti numbers, then confirms with the differential.
SearchReport search_minimal(const MonomialIdeal& I, const SearchOptions& opt, const FieldSpec& field = FieldSpec::rationals());

// Lex ranks of one representative order per orbit of the dihedral action on
// an unweighted n-cycle's generator labels.
std::vector<std::uint64_t> cycle_symmetry_reduction(int n);

}  // namespace bmres
