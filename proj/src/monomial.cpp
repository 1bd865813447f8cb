#include "bmres/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "vendor_json.hpp"

namespace bmres {

RingContext::RingContext(std::vector<std::string> var_names) : names_(std::move(var_names)) {
    if (names_.empty()) throw input_error("ring context needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw input_error("empty variable name");
        if (!seen.insert(n).second) throw input_error("duplicate variable name: " + n);
    }
}

std::optional<int> RingContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (Exponent e : exps_) d = checked_add(d, e);
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

static void require_same_ctx(const Monomial& a, const Monomial& b, const char* op) {
    if (a.var_count() != b.var_count())
        throw input_error(std::string("ring context mismatch in ") + op);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ctx(a, b, "lcm");
    std::vector<Exponent> e(a.exps());
    for (int i = 0; i < b.var_count(); ++i) e[static_cast<std::size_t>(i)] = std::max(e[static_cast<std::size_t>(i)], b.exp(i));
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ctx(a, b, "divides");
    for (int i = 0; i < a.var_count(); ++i)
        if (a.exp(i) > b.exp(i)) return false;
    return true;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    require_same_ctx(a, b, "quotient");
    std::vector<Exponent> e(static_cast<std::size_t>(a.var_count()));
    for (int i = 0; i < a.var_count(); ++i) {
        if (b.exp(i) > a.exp(i)) throw input_error("quotient of non-divisible monomials");
        e[static_cast<std::size_t>(i)] = a.exp(i) - b.exp(i);
    }
    return Monomial(std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
    require_same_ctx(a, b, "product");
    std::vector<Exponent> e(static_cast<std::size_t>(a.var_count()));
    for (int i = 0; i < a.var_count(); ++i) {
        std::int64_t s = checked_add(a.exp(i), b.exp(i));
        if (s > std::numeric_limits<Exponent>::max()) throw capacity_error("exponent overflow in product");
        e[static_cast<std::size_t>(i)] = static_cast<Exponent>(s);
    }
    return Monomial(std::move(e));
}

Monomial parse_monomial(const std::string& text, const RingContext& ctx) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw input_error("empty monomial");
    if (s == "1") return Monomial::one(ctx.var_count());

    std::vector<Exponent> exps(static_cast<std::size_t>(ctx.var_count()), 0);
    std::size_t pos = 0;
    bool expect_factor = true;
    while (pos < s.size()) {
        if (!expect_factor) {
            if (s[pos] != '*') throw input_error("expected '*' in monomial: " + text);
            ++pos;
        }
        // variable names may contain any non-separator characters; match longest known name
        std::size_t best_len = 0;
        int best_var = -1;
        for (int v = 0; v < ctx.var_count(); ++v) {
            const std::string& nm = ctx.name(v);
            if (nm.size() > best_len && s.compare(pos, nm.size(), nm) == 0) {
                best_len = nm.size();
                best_var = v;
            }
        }
        if (best_var < 0) throw input_error("unknown variable at '" + s.substr(pos) + "' in monomial: " + text);
        pos += best_len;
        std::int64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw input_error("malformed exponent in monomial: " + text);
            e = std::stoll(s.substr(start, pos - start));
            if (e <= 0) throw input_error("exponent must be positive in monomial: " + text);
        }
        std::int64_t total = checked_add(exps[static_cast<std::size_t>(best_var)], e);
        if (total > std::numeric_limits<Exponent>::max()) throw capacity_error("exponent overflow");
        exps[static_cast<std::size_t>(best_var)] = static_cast<Exponent>(total);
        expect_factor = false;
    }
    if (expect_factor) throw input_error("empty monomial");
    return Monomial(std::move(exps));
}

std::string to_string(const Monomial& m, const RingContext& ctx) {
    std::string out;
    for (int i = 0; i < m.var_count(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (m.exp(i) > 1) out += "^" + std::to_string(m.exp(i));
    }
    return out.empty() ? "1" : out;
}

static void check_minimal_system(const RingContext& ctx, const std::vector<Monomial>& gens) {
    if (gens.empty()) throw input_error("ideal needs at least one generator");
    for (const auto& g : gens) {
        if (g.var_count() != ctx.var_count()) throw input_error("generator has wrong variable count");
        if (g.is_one()) throw input_error("degenerate ideal: the unit ideal has no Taylor complex");
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && divides(gens[i], gens[j]))
                throw input_error("generating set is not minimal: " + to_string(gens[i], ctx) +
                                  " divides " + to_string(gens[j], ctx));
}

MonomialIdeal::MonomialIdeal(RingContext ctx, std::vector<Monomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
    check_minimal_system(ctx_, gens_);
    if (gen_count() > kSymbolCapacity) throw capacity_error("too many generators for symbol bitmask capacity");
}

MonomialIdeal minimize_generators(const RingContext& ctx, const std::vector<Monomial>& raw) {
    if (raw.empty()) throw input_error("cannot minimize an empty generator list");
    std::vector<Monomial> kept;
    for (const auto& m : raw) {
        if (m.var_count() != ctx.var_count()) throw input_error("generator has wrong variable count");
        bool dominated = false;
        for (const auto& k : kept)
            if (divides(k, m)) { dominated = true; break; }
        if (dominated) continue;
        // m may absorb earlier survivors
        std::vector<Monomial> next;
        for (auto& k : kept)
            if (!divides(m, k) || m == k) next.push_back(std::move(k));
        next.push_back(m);
        kept = std::move(next);
    }
    // restore first-occurrence order
    std::vector<Monomial> ordered;
    for (const auto& m : raw) {
        if (std::find(kept.begin(), kept.end(), m) != kept.end() &&
            std::find(ordered.begin(), ordered.end(), m) == ordered.end())
            ordered.push_back(m);
    }
    return MonomialIdeal(ctx, std::move(ordered));
}

GenOrder::GenOrder(std::vector<int> perm_largest_first) : perm_(std::move(perm_largest_first)) {
    const int n = static_cast<int>(perm_.size());
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        int g = perm_[static_cast<std::size_t>(r)];
        if (g < 0 || g >= n || rank_[static_cast<std::size_t>(g)] != -1)
            throw input_error("order is not a permutation of generator indices");
        rank_[static_cast<std::size_t>(g)] = r;
    }
}

GenOrder GenOrder::descending_listing(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return GenOrder(std::move(p));
}

static std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

MonomialIdeal parse_ideal_text(const std::string& text) {
    std::istringstream in(text);
    return read_ideal(in);
}

MonomialIdeal read_ideal(std::istream& in) {
    // Sniff JSON.
    int c = in.peek();
    while (c != EOF && std::isspace(c)) { in.get(); c = in.peek(); }
    if (c == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("bad ideal JSON: ") + e.what());
        }
        if (!j.contains("vars") || !j.contains("gens")) throw input_error("ideal JSON needs \"vars\" and \"gens\"");
        RingContext ctx(j.at("vars").get<std::vector<std::string>>());
        std::vector<Monomial> gens;
        for (const auto& row : j.at("gens")) {
            auto exps = row.get<std::vector<Exponent>>();
            if (static_cast<int>(exps.size()) != ctx.var_count())
                throw input_error("ideal JSON: exponent row length != var count");
            for (Exponent e : exps)
                if (e < 0) throw input_error("ideal JSON: negative exponent");
            gens.emplace_back(std::move(exps));
        }
        return minimize_generators(ctx, gens);
    }

    std::string line;
    std::optional<RingContext> ctx;
    std::vector<Monomial> gens;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "vars:" || toks[0] == "vars") {
            std::vector<std::string> names(toks.begin() + 1, toks.end());
            if (toks[0] == "vars" && !names.empty() && names[0] == ":") names.erase(names.begin());
            ctx = RingContext(names);
            continue;
        }
        if (!ctx) throw input_error("ideal file must declare 'vars:' before generators");
        std::string joined;
        for (const auto& t : toks) joined += t;
        gens.push_back(parse_monomial(joined, *ctx));
    }
    if (!ctx) throw input_error("ideal file has no 'vars:' line");
    return minimize_generators(*ctx, gens);
}

MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open ideal file: " + path);
    return read_ideal(in);
}

std::string ideal_to_text(const MonomialIdeal& I) {
    std::string out = "vars:";
    for (const auto& n : I.ctx().var_names()) out += " " + n;
    out += "\n";
    for (const auto& g : I.gens()) out += to_string(g, I.ctx()) + "\n";
    return out;
}

}  // namespace bmres
