#include "bmres/betti.hpp"

#include <numeric>

namespace bmres {

void GradedBettiTable::add(int i, std::vector<Exponent> mdeg, long long count) {
    if (count == 0) return;
    auto key = Key{i, std::move(mdeg)};
    auto it = mg_.find(key);
    if (it == mg_.end())
        mg_.emplace(std::move(key), count);
    else if ((it->second += count) == 0)
        mg_.erase(it);
}

long long GradedBettiTable::at(int i, const std::vector<Exponent>& mdeg) const {
    auto it = mg_.find(Key{i, mdeg});
    return it == mg_.end() ? 0 : it->second;
}

std::vector<long long> GradedBettiTable::totals() const {
    std::vector<long long> t;
    for (const auto& [key, count] : mg_) {
        if (static_cast<std::size_t>(key.first) >= t.size()) t.resize(static_cast<std::size_t>(key.first) + 1, 0);
        t[static_cast<std::size_t>(key.first)] += count;
    }
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

std::map<std::pair<int, std::int64_t>, long long> GradedBettiTable::by_degree() const {
    std::map<std::pair<int, std::int64_t>, long long> out;
    for (const auto& [key, count] : mg_) {
        std::int64_t d = std::accumulate(key.second.begin(), key.second.end(), std::int64_t{0});
        out[{key.first, d}] += count;
    }
    return out;
}

int GradedBettiTable::pd() const {
    int p = 0;
    for (const auto& [key, count] : mg_)
        if (count != 0) p = std::max(p, key.first);
    return p;
}

bool GradedBettiTable::dominates(const GradedBettiTable& a, const GradedBettiTable& b) {
    for (const auto& [key, count] : b.entries())
        if (a.at(key.first, key.second) < count) return false;
    return true;
}

}  // namespace bmres
