#pragma once

#include <map>
#include <vector>

#include "bmres/monomial.hpp"

namespace bmres {

// Graded Betti data in the R/I convention: entry (0, 0-vector) = 1, entries
// at homological index 1 count generators. Keys are multidegrees.
class GradedBettiTable {
  public:
    using Key = std::pair<int, std::vector<Exponent>>;

    void add(int i, std::vector<Exponent> mdeg, long long count);
    long long at(int i, const std::vector<Exponent>& mdeg) const;
    const std::map<Key, long long>& entries() const { return mg_; }

    // beta_i totals, index = homological degree; trailing zeros trimmed.
    std::vector<long long> totals() const;
    // projection to (homological index, total degree)
    std::map<std::pair<int, std::int64_t>, long long> by_degree() const;
    int pd() const;

    bool operator==(const GradedBettiTable&) const = default;

    // componentwise a >= b on multigraded entries
    static bool dominates(const GradedBettiTable& a, const GradedBettiTable& b);

  private:
    std::map<Key, long long> mg_;
};

}  // namespace bmres
