#include "bmres/json_io.hpp"

#include "bmres/bridges.hpp"
#include "vendor_json.hpp"

namespace bmres::json_io {

using nlohmann::json;

namespace {

json symbol_json(Symbol s) { return json(s.indices()); }

json rankvec_json(const std::vector<long long>& v) { return json(v); }

}  // namespace

std::string symbol_list(const std::vector<Symbol>& symbols) {
    json arr = json::array();
    for (Symbol s : symbols) arr.push_back(symbol_json(s));
    return arr.dump();
}

std::string matching_report(const Matching& A, const LcmTable& T, const GenOrder& ord) {
    json out;
    out["edges"] = json::array();
    for (const auto& e : A.edges)
        out["edges"].push_back(
            {{"source", symbol_json(e.source)}, {"target", symbol_json(e.target)}, {"sbridge", e.removed_gen}});
    out["critical"] = json::array();
    for (const auto& level : critical_symbols(A, T))
        for (Symbol s : level) out["critical"].push_back(symbol_json(s));
    auto cls = classify_by_run(A, T);
    json classes;
    classes["type1"] = json::array();
    classes["type2"] = json::array();
    classes["potential_type2_only"] = json::array();
    for (std::size_t mask = 0; mask < T.symbol_count(); ++mask) {
        switch (cls[mask]) {
            case SymbolClass::Type1: classes["type1"].push_back(symbol_json(Symbol(mask))); break;
            case SymbolClass::Type2: classes["type2"].push_back(symbol_json(Symbol(mask))); break;
            case SymbolClass::PotentialType2Only:
                classes["potential_type2_only"].push_back(symbol_json(Symbol(mask)));
                break;
            case SymbolClass::Critical: break;
        }
    }
    out["classes"] = classes;
    out["order"] = ord.perm();
    return out.dump(2);
}

std::string betti_report(const GradedBettiTable& table) {
    json out;
    out["totals"] = rankvec_json(table.totals());
    out["graded"] = json::array();
    for (const auto& [key, count] : table.by_degree())
        out["graded"].push_back({{"i", key.first}, {"deg", key.second}, {"count", count}});
    out["multigraded"] = json::array();
    for (const auto& [key, count] : table.entries())
        out["multigraded"].push_back({{"i", key.first}, {"mdeg", key.second}, {"count", count}});
    out["pd"] = table.pd();
    return out.dump(2);
}

std::string resolution_report(const MorseDifferential& D, const MonomialIdeal& I, bool minimal) {
    json out;
    out["ranks"] = rankvec_json(D.ranks());
    out["minimal"] = minimal;
    out["matrices"] = json::array();
    for (std::size_t r = 1; r < D.d.size(); ++r) {
        json mat;
        mat["degree"] = r;
        mat["rows"] = D.d[r].rows;
        mat["cols"] = D.d[r].cols;
        mat["entries"] = json::array();
        for (const auto& e : D.d[r].entries)
            mat["entries"].push_back({{"row", e.row},
                                      {"col", e.col},
                                      {"coeff", e.coeff},
                                      {"monomial", to_string(e.multiplier, I.ctx())}});
        out["matrices"].push_back(mat);
    }
    json basis = json::array();
    for (const auto& level : D.basis) {
        json lvl = json::array();
        for (Symbol s : level) lvl.push_back(symbol_json(s));
        basis.push_back(lvl);
    }
    out["basis"] = basis;
    return out.dump(2);
}

std::string comparison_report(const ComparisonReport& rep) {
    json out;
    out["taylor"] = rankvec_json(rep.taylor);
    out["lyubeznik"] = rankvec_json(rep.lyubeznik);
    out["scarf"] = rankvec_json(rep.scarf);
    out["barile_macchia"] = rankvec_json(rep.barile_macchia);
    out["barile_macchia_minimal"] = rep.barile_macchia_minimal;
    return out.dump(2);
}

std::string search_report(const SearchReport& rep) {
    json out;
    switch (rep.verdict) {
        case SearchVerdict::Found: out["verdict"] = "found"; break;
        case SearchVerdict::ExhaustedNone: out["verdict"] = "exhausted-none"; break;
        case SearchVerdict::BudgetExceeded: out["verdict"] = "budget-exceeded"; break;
    }
    out["orders_examined"] = rep.orders_examined;
    out["elapsed_seconds"] = rep.elapsed_seconds;
    out["seed"] = rep.seed;
    out["truncated_witnesses"] = rep.truncated_witnesses;
    out["witnesses"] = json::array();
    for (const auto& w : rep.witnesses) out["witnesses"].push_back(w.perm());
    return out.dump(2);
}

std::string validation_report(const ValidationReport& rep) {
    json out;
    out["ok"] = rep.ok;
    out["matching_axiom"] = rep.matching_axiom;
    out["homogeneous"] = rep.homogeneous;
    out["acyclic"] = rep.acyclic;
    if (!rep.detail.empty()) out["detail"] = rep.detail;
    if (rep.duplicated_symbol) out["duplicated_symbol"] = symbol_json(*rep.duplicated_symbol);
    if (!rep.witness_cycle.empty()) {
        out["witness_cycle"] = json::array();
        for (Symbol s : rep.witness_cycle) out["witness_cycle"].push_back(symbol_json(s));
    }
    return out.dump(2);
}

Matching parse_matching(const std::string& text, int gen_count) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("bad matching JSON: ") + e.what());
    }
    Matching A;
    A.n = gen_count;
    for (const auto& e : j.at("edges")) {
        MatchEdge edge;
        edge.source = Symbol::from_indices(e.at("source").get<std::vector<int>>());
        edge.target = Symbol::from_indices(e.at("target").get<std::vector<int>>());
        edge.removed_gen = e.at("sbridge").get<int>();
        A.edges.push_back(edge);
    }
    return A;
}

}  // namespace bmres::json_io
