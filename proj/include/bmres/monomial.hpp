#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bmres/common.hpp"

namespace bmres {

// Named variable context for a polynomial ring k[x_1,...,x_N].
class RingContext {
  public:
    RingContext() = default;
    explicit RingContext(std::vector<std::string> var_names);

    int var_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(const std::string& name) const;

    bool operator==(const RingContext&) const = default;

  private:
    std::vector<std::string> names_;
};

// A monomial as an exponent vector over a ring context.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    static Monomial one(int var_count) { return Monomial(std::vector<Exponent>(static_cast<std::size_t>(var_count), 0)); }

    int var_count() const { return static_cast<int>(exps_.size()); }
    Exponent exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<Exponent>& exps() const { return exps_; }
    std::int64_t degree() const;
    bool is_one() const;

    bool operator==(const Monomial&) const = default;
    // Lexicographic on exponent vectors; used only for canonical container ordering.
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  private:
    std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
// Quotient a/b, defined when divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

// Grammar: monomial := factor ('*' factor)* | '1' ; factor := var ('^' positive-int)? .
// Exponents of repeated variables accumulate.
Monomial parse_monomial(const std::string& text, const RingContext& ctx);
std::string to_string(const Monomial& m, const RingContext& ctx);

// A monomial ideal presented by its minimal generating set, in a fixed
// listing order that defines generator indices 0..n-1.
class MonomialIdeal {
  public:
    // Requires gens to already be a minimal system (no duplicates, no unit,
    // no generator dividing another); throws input_error otherwise.
    MonomialIdeal(RingContext ctx, std::vector<Monomial> gens);

    const RingContext& ctx() const { return ctx_; }
    int gen_count() const { return static_cast<int>(gens_.size()); }
    const Monomial& gen(int i) const { return gens_.at(static_cast<std::size_t>(i)); }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool operator==(const MonomialIdeal&) const = default;

  private:
    RingContext ctx_;
    std::vector<Monomial> gens_;
};

// Removes duplicates and generators divisible by another; preserves the
// first-occurrence order of survivors. Rejects empty input and the
// degenerate ideal (1).
MonomialIdeal minimize_generators(const RingContext& ctx, const std::vector<Monomial>& raw);

// Total ordering on generators: perm[0] is the largest under >_I.
class GenOrder {
  public:
    GenOrder() = default;
    explicit GenOrder(std::vector<int> perm_largest_first);
    static GenOrder descending_listing(int n);  // gen 0 largest, gen n-1 smallest

    int size() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    // rank 0 = largest; g >_I h iff rank(g) < rank(h)
    int rank(int gen) const { return rank_.at(static_cast<std::size_t>(gen)); }
    bool greater(int g, int h) const { return rank_[static_cast<std::size_t>(g)] < rank_[static_cast<std::size_t>(h)]; }

    bool operator==(const GenOrder&) const = default;

  private:
    std::vector<int> perm_;
    std::vector<int> rank_;
};

// Ideal file formats.
//
// Text: a `vars: x y z w` line followed by one monomial per line; `#`
// starts a comment. JSON: {"vars": [...], "gens": [[e_1,...,e_N], ...]}.
MonomialIdeal read_ideal(std::istream& in);
MonomialIdeal read_ideal_file(const std::string& path);
MonomialIdeal parse_ideal_text(const std::string& text);
std::string ideal_to_text(const MonomialIdeal& I);

}  // namespace bmres
