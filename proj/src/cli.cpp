#include "bmres/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bmres/bridges.hpp"
#include "bmres/graphs.hpp"
#include "bmres/json_io.hpp"
#include "bmres/matching.hpp"
#include "bmres/morse.hpp"
#include "bmres/oracle.hpp"
#include "bmres/rivals.hpp"
#include "bmres/search.hpp"
#include "vendor_json.hpp"

namespace bmres::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct Common {
    std::string format = "text";
    int threads = 2;
    long long characteristic = 32003;

    bool json() const { return format == "json"; }
    FieldSpec field() const { return characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(characteristic); }
};

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw input_error("bad index '" + tok + "' in list");
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw input_error("bad index '" + tok + "' in list");
        }
    }
    return out;
}

GenOrder order_from_flag(const std::string& flag, int n) {
    if (flag.empty()) throw input_error("this command needs --order (generator indices, largest first)");
    auto idx = parse_index_list(flag);
    if (static_cast<int>(idx.size()) != n) throw input_error("--order must list every generator index exactly once");
    return GenOrder(idx);
}

std::string rankvec_text(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string symbol_text(Symbol s, const MonomialIdeal& I) {
    std::string out = "{";
    bool first = true;
    for (int g : s.indices()) {
        if (!first) out += ",";
        out += to_string(I.gen(g), I.ctx());
        first = false;
    }
    return out + "}";
}

void print_betti_text(std::ostream& out, const GradedBettiTable& t) {
    out << "totals " << rankvec_text(t.totals()) << "\n";
    out << "pd " << t.pd() << "\n";
    for (const auto& [key, count] : t.by_degree())
        out << "beta(" << key.first << ", deg " << key.second << ") = " << count << "\n";
}

struct SearchFlags {
    bool search = false;
    std::string mode = "exhaustive";
    std::uint64_t budget_orders = 0;
    double budget_seconds = 0.0;
    std::uint64_t seed = 1;
    int witness_cap = 4;
    bool dihedral = false;
    bool cap_override = false;

    SearchOptions options(const Common& common, int n) const {
        SearchOptions opt;
        opt.mode = (mode == "random") ? SearchMode::Random : SearchMode::Exhaustive;
        opt.budget.max_orders = budget_orders;
        opt.budget.max_seconds = budget_seconds;
        opt.seed = seed;
        opt.witness_cap = witness_cap;
        opt.threads = common.threads;
        opt.exhaustive_cap_override = cap_override;
        if (dihedral) opt.restrict_ranks = cycle_symmetry_reduction(n);
        return opt;
    }
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
    cmd->add_flag("--search", f.search, "search over all total orders");
    cmd->add_option("--mode", f.mode, "exhaustive|random")->check(CLI::IsMember({"exhaustive", "random"}));
    cmd->add_option("--budget-orders", f.budget_orders, "max orders to examine (random mode)");
    cmd->add_option("--budget-seconds", f.budget_seconds, "wall-clock budget");
    cmd->add_option("--seed", f.seed, "random mode seed");
    cmd->add_option("--witness-cap", f.witness_cap, "max witness orders to keep");
    cmd->add_flag("--dihedral", f.dihedral, "reduce by the dihedral symmetry of an unweighted cycle");
    cmd->add_flag("--lift-search-cap", f.cap_override, "allow exhaustive search past 10 generators");
}

int report_search(std::ostream& out, const Common& common, const SearchReport& rep, const char* what) {
    if (common.json()) {
        out << json_io::search_report(rep) << "\n";
    } else {
        const char* v = rep.verdict == SearchVerdict::Found
                            ? "found"
                            : rep.verdict == SearchVerdict::ExhaustedNone ? "exhausted-none" : "budget-exceeded";
        out << what << ": " << v << " after " << rep.orders_examined << " orders ("
            << rep.elapsed_seconds << " s)\n";
        for (const auto& w : rep.witnesses) {
            out << "witness order:";
            for (int g : w.perm()) out << " " << g;
            out << "\n";
        }
    }
    if (rep.verdict == SearchVerdict::Found) return kExitOk;
    if (rep.verdict == SearchVerdict::ExhaustedNone) return kExitNegative;
    return kExitCapacity;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Barile-Macchia resolutions of monomial ideals"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--format", common.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", common.threads, "worker threads for searches");
    app.add_option("--char", common.characteristic, "field characteristic for oracle ranks (0 = exact rationals)");

    std::string ideal_path, order_flag, symbol_flag, matching_kind = "bridge", json_path;
    int card = -1;
    bool use_oracle = false, eager = false, graded = false;
    int ek_n = 8, kflip = 0;
    std::string graph_path;
    SearchFlags sf;

    auto* symbols = app.add_subcommand("symbols", "list Taylor symbols");
    symbols->add_option("ideal", ideal_path)->required();
    symbols->add_option("--card", card, "restrict to one cardinality");

    auto* sbridge_cmd = app.add_subcommand("sbridge", "smallest bridge of a symbol");
    sbridge_cmd->add_option("ideal", ideal_path)->required();
    sbridge_cmd->add_option("--order", order_flag);
    sbridge_cmd->add_option("--symbol", symbol_flag, "comma-separated generator indices")->required();

    auto* base = app.add_subcommand("base-digraph", "facet digraph of the Taylor simplex");
    base->add_option("ideal", ideal_path)->required();

    auto* match = app.add_subcommand("matching", "bridge matching for an order");
    match->add_option("ideal", ideal_path)->required();
    match->add_option("--order", order_flag);
    match->add_flag("--eager", eager, "use the eager conflict-resolution variant");
    match->add_option("--validate-json", json_path, "re-ingest a matching report and validate it");

    auto* crit = app.add_subcommand("critical", "critical symbols of the bridge matching");
    crit->add_option("ideal", ideal_path)->required();
    crit->add_option("--order", order_flag);

    auto* morse_dg = app.add_subcommand("morse-digraph", "base digraph with matching edges reversed");
    morse_dg->add_option("ideal", ideal_path)->required();
    morse_dg->add_option("--order", order_flag);

    auto* types = app.add_subcommand("types", "type-1 / type-2 / potentially-type-2 report");
    types->add_option("ideal", ideal_path)->required();
    types->add_option("--order", order_flag);

    auto* friendly = app.add_subcommand("friendly", "bridge-friendliness verdict or search");
    friendly->add_option("ideal", ideal_path)->required();
    friendly->add_option("--order", order_flag);
    add_search_flags(friendly, sf);

    auto* minimal = app.add_subcommand("minimal", "bridge-minimality verdict or search");
    minimal->add_option("ideal", ideal_path)->required();
    minimal->add_option("--order", order_flag);
    add_search_flags(minimal, sf);

    auto* resolution = app.add_subcommand("resolution", "Morse differential of a matching");
    resolution->add_option("ideal", ideal_path)->required();
    resolution->add_option("--order", order_flag);
    resolution->add_option("--matching", matching_kind, "bridge|lyubeznik|taylor")
        ->check(CLI::IsMember({"bridge", "lyubeznik", "taylor"}));

    auto* betti = app.add_subcommand("betti", "Betti counts from criticals, or the oracle");
    betti->add_option("ideal", ideal_path)->required();
    betti->add_option("--order", order_flag);
    betti->add_flag("--oracle", use_oracle, "exact Betti numbers through the Taylor strands");

    auto* oracle_cmd = app.add_subcommand("oracle", "graded Betti numbers of R/I");
    oracle_cmd->add_option("ideal", ideal_path)->required();

    auto* compare = app.add_subcommand("compare", "Taylor / Lyubeznik / Scarf / Barile-Macchia ranks");
    compare->add_option("ideal", ideal_path)->required();
    compare->add_option("--order", order_flag);

    auto* graph = app.add_subcommand("graph", "weighted oriented graph operations");
    graph->require_subcommand(1);
    auto* g_ideal = graph->add_subcommand("edge-ideal", "generators of I(D)");
    g_ideal->add_option("graph", graph_path)->required();
    auto* g_sink = graph->add_subcommand("sink", "reduce sink weights to 1");
    g_sink->add_option("graph", graph_path)->required();
    auto* g_iron = graph->add_subcommand("iron", "sink, then reorient a path or cycle naturally");
    g_iron->add_option("graph", graph_path)->required();
    auto* g_blocks = graph->add_subcommand("blocks", "blockends and blocks");
    g_blocks->add_option("graph", graph_path)->required();
    auto* g_rec = graph->add_subcommand("recursion", "recursive Betti numbers for forests and cycles");
    g_rec->add_option("graph", graph_path)->required();
    g_rec->add_flag("--graded", graded, "graded recursion (forests, weight-1 case)");
    auto* g_ek = graph->add_subcommand("ek-split", "nested splittings of the n-cycle edge ideal");
    g_ek->add_option("--n", ek_n, "cycle length (>= 8)")->required();
    auto* g_kflip = graph->add_subcommand("kflip-order", "k-flip ordering of a non-classic cycle");
    g_kflip->add_option("graph", graph_path)->required();
    g_kflip->add_option("--k", kflip, "block index (1-based)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitInput;
    }

    try {
        auto load = [&] { return read_ideal_file(ideal_path); };

        if (symbols->parsed()) {
            auto I = load();
            auto syms = enumerate_symbols(I, card);
            if (common.json()) {
                out << json_io::symbol_list(syms) << "\n";
            } else {
                for (Symbol s : syms) out << symbol_text(s, I) << "\n";
                out << syms.size() << " symbols\n";
            }
            return kExitOk;
        }

        if (sbridge_cmd->parsed()) {
            auto I = load();
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            Symbol s = Symbol::from_indices(parse_index_list(symbol_flag));
            auto sb = sbridge(s, I, ord);
            if (common.json()) {
                out << (sb ? std::to_string(*sb) : "null") << "\n";
            } else if (sb) {
                out << "sbridge = " << to_string(I.gen(*sb), I.ctx()) << " (index " << *sb << ")\n";
            } else {
                out << "no bridge\n";
            }
            return sb ? kExitOk : kExitNegative;
        }

        if (base->parsed()) {
            auto I = load();
            auto dg = base_digraph(I);
            if (dg.edge_count() > (std::uint64_t{1} << 24)) throw capacity_error("base digraph too large to print");
            if (common.json()) {
                nlohmann::json arr = nlohmann::json::array();
                for_each_base_edge(dg.n, [&](Symbol s, Symbol t) {
                    arr.push_back({s.indices(), t.indices()});
                });
                out << arr.dump() << "\n";
            } else {
                for_each_base_edge(dg.n, [&](Symbol s, Symbol t) {
                    out << symbol_text(s, I) << " -> " << symbol_text(t, I) << "\n";
                });
                out << dg.edge_count() << " edges\n";
            }
            return kExitOk;
        }

        if (match->parsed()) {
            auto I = load();
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            LcmTable T(I);
            Matching A = eager ? bridge_matching_eager(T, ord) : bridge_matching(T, ord);
            if (!json_path.empty()) {
                std::ifstream in(json_path);
                if (!in) throw input_error("cannot open matching JSON: " + json_path);
                std::stringstream ss;
                ss << in.rdbuf();
                Matching B = json_io::parse_matching(ss.str(), I.gen_count());
                auto rep = validate_matching(B, I, &T);
                out << json_io::validation_report(rep) << "\n";
                return rep.ok ? kExitOk : kExitNegative;
            }
            if (common.json()) {
                out << json_io::matching_report(A, T, ord) << "\n";
            } else {
                for (const auto& e : A.edges)
                    out << symbol_text(e.source, I) << " -> " << symbol_text(e.target, I)
                        << "   (sbridge " << to_string(I.gen(e.removed_gen), I.ctx()) << ")\n";
                out << A.edges.size() << " edges, " << A.potential_sources.size() << " proposals\n";
            }
            return kExitOk;
        }

        if (crit->parsed()) {
            auto I = load();
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            LcmTable T(I);
            Matching A = bridge_matching(T, ord);
            auto crits = critical_symbols(A, T);
            if (common.json()) {
                std::vector<Symbol> flat;
                for (const auto& level : crits) flat.insert(flat.end(), level.begin(), level.end());
                out << json_io::symbol_list(flat) << "\n";
            } else {
                for (std::size_t c = 0; c < crits.size(); ++c) {
                    out << "cardinality " << c << " (" << crits[c].size() << "):";
                    for (Symbol s : crits[c]) out << " " << symbol_text(s, I);
                    out << "\n";
                }
                out << "ranks " << rankvec_text(ranks_from_criticals(A, T)) << "\n";
            }
            return kExitOk;
        }

        if (morse_dg->parsed()) {
            auto I = load();
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            LcmTable T(I);
            Matching A = bridge_matching(T, ord);
            if (base_digraph(I).edge_count() > (std::uint64_t{1} << 24))
                throw capacity_error("Morse digraph too large to print");
            for_each_morse_edge(A, I.gen_count(), [&](Symbol s, Symbol t, bool reversed) {
                out << symbol_text(s, I) << " -> " << symbol_text(t, I) << (reversed ? "   (reversed)" : "") << "\n";
            });
            return kExitOk;
        }

        if (types->parsed()) {
            auto I = load();
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            LcmTable T(I);
            Matching A = bridge_matching(T, ord);
            if (common.json()) {
                out << json_io::matching_report(A, T, ord) << "\n";
            } else {
                auto cls = classify_by_run(A, T);
                for (auto want : {SymbolClass::Type2, SymbolClass::Type1, SymbolClass::PotentialType2Only}) {
                    out << to_string(want) << ":";
                    for (std::size_t mask = 1; mask < T.symbol_count(); ++mask)
                        if (cls[mask] == want) out << " " << symbol_text(Symbol(mask), I);
                    out << "\n";
                }
            }
            return kExitOk;
        }

        if (friendly->parsed()) {
            auto I = load();
            if (sf.search) {
                auto rep = search_friendly(I, sf.options(common, I.gen_count()));
                return report_search(out, common, rep, "bridge-friendly search");
            }
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            LcmTable T(I);
            bool verdict = is_bridge_friendly(T, ord);
            auto criterion = check_friendliness_criterion(I, ord, &T);
            if (verdict != criterion.friendly) throw internal_error("friendliness routes disagree");
            if (common.json())
                out << (verdict ? "true" : "false") << "\n";
            else
                out << "bridge-friendly: " << (verdict ? "yes" : "no") << "\n";
            return verdict ? kExitOk : kExitNegative;
        }

        if (minimal->parsed()) {
            auto I = load();
            if (sf.search) {
                auto rep = search_minimal(I, sf.options(common, I.gen_count()), common.field());
                return report_search(out, common, rep, "bridge-minimal search");
            }
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            LcmTable T(I);
            Matching A = bridge_matching(T, ord);
            auto D = differential(A, T);
            bool verdict = is_minimal(D);
            if (common.json()) {
                nlohmann::json j{{"minimal", verdict}, {"ranks", D.ranks()}};
                out << j.dump() << "\n";
            } else {
                out << "bridge-minimal: " << (verdict ? "yes" : "no") << "\n";
                out << "ranks " << rankvec_text(D.ranks()) << "\n";
            }
            return verdict ? kExitOk : kExitNegative;
        }

        if (resolution->parsed()) {
            auto I = load();
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            LcmTable T(I);
            Matching A;
            if (matching_kind == "bridge")
                A = bridge_matching(T, ord);
            else if (matching_kind == "lyubeznik")
                A = lyubeznik_matching(T, ord);
            else
                A.n = I.gen_count();  // taylor: empty matching
            auto D = differential(A, T);
            bool min = is_minimal(D);
            if (common.json()) {
                out << json_io::resolution_report(D, I, min) << "\n";
            } else {
                out << "ranks " << rankvec_text(D.ranks()) << (min ? "  (minimal)" : "  (not minimal)") << "\n";
                for (std::size_t r = 1; r < D.d.size(); ++r) {
                    out << "d_" << r << " (" << D.d[r].rows << "x" << D.d[r].cols << "):\n";
                    for (const auto& e : D.d[r].entries)
                        out << "  [" << e.row << "," << e.col << "] = " << e.coeff << " * "
                            << to_string(e.multiplier, I.ctx()) << "\n";
                }
            }
            return kExitOk;
        }

        if (betti->parsed()) {
            auto I = load();
            GradedBettiTable table;
            if (use_oracle) {
                table = tor_betti(I, common.field());
            } else {
                GenOrder ord = order_from_flag(order_flag, I.gen_count());
                LcmTable T(I);
                table = betti_from_criticals(bridge_matching(T, ord), T);
            }
            if (common.json())
                out << json_io::betti_report(table) << "\n";
            else
                print_betti_text(out, table);
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            auto I = load();
            auto table = tor_betti(I, common.field());
            if (common.json())
                out << json_io::betti_report(table) << "\n";
            else
                print_betti_text(out, table);
            return kExitOk;
        }

        if (compare->parsed()) {
            auto I = load();
            GenOrder ord = order_from_flag(order_flag, I.gen_count());
            auto rep = compare_constructions(I, ord);
            if (common.json()) {
                out << json_io::comparison_report(rep) << "\n";
            } else {
                out << "taylor         " << rankvec_text(rep.taylor) << "\n";
                out << "lyubeznik      " << rankvec_text(rep.lyubeznik) << "\n";
                out << "scarf          " << rankvec_text(rep.scarf) << "\n";
                out << "barile-macchia " << rankvec_text(rep.barile_macchia)
                    << (rep.barile_macchia_minimal ? "  (minimal)" : "") << "\n";
            }
            return kExitOk;
        }

        if (graph->parsed()) {
            if (g_ek->parsed()) {
                auto split = ek_split_cycle(ek_n);
                auto r1 = validate_ek(split.level1);
                auto r2 = validate_ek(split.level2);
                out << "level 1 (I = J + K): " << (r1.ok ? "valid" : ("invalid: " + r1.detail)) << "\n";
                out << "level 2 (J^K = J' + K'): " << (r2.ok ? "valid" : ("invalid: " + r2.detail)) << "\n";
                out << "G(J^K):";
                for (const auto& g : split.level1.JK.gens()) out << " " << to_string(g, split.level1.JK.ctx());
                out << "\n";
                return (r1.ok && r2.ok) ? kExitOk : kExitNegative;
            }
            auto D = read_graph_file(graph_path);
            if (g_ideal->parsed()) {
                auto E = edge_ideal(D);
                out << ideal_to_text(E.ideal);
                return kExitOk;
            }
            if (g_sink->parsed()) {
                out << graph_to_text(sinking(D));
                return kExitOk;
            }
            if (g_iron->parsed()) {
                out << graph_to_text(ironing(sinking(D)));
                return kExitOk;
            }
            if (g_blocks->parsed()) {
                auto E = edge_ideal(D);
                bool cyclic = false;
                try {
                    cyclic = recognize_path_or_cycle(D).is_cycle;
                } catch (const input_error&) {
                    cyclic = false;  // branching forests are handled below
                }
                auto names = [&](const std::vector<int>& gens) {
                    std::string s;
                    for (int g : gens) s += (s.empty() ? "" : " ") + to_string(E.ideal.gen(g), E.ideal.ctx());
                    return s;
                };
                if (cyclic) {
                    out << "blockends: " << names(blockends_cycle(E)) << "\n";
                    out << (is_classic(E) ? "classic\n" : "non-classic\n");
                    for (const auto& blk : blocks_cycle(E)) out << "block: " << names(blk) << "\n";
                } else {
                    out << "blockends: " << names(blockends_forest(E)) << "\n";
                    for (const auto& blk : blocks_forest(E)) out << "block: " << names(blk) << "\n";
                }
                return kExitOk;
            }
            if (g_rec->parsed()) {
                bool cyclic = false;
                try {
                    cyclic = recognize_path_or_cycle(D).is_cycle;
                } catch (const input_error&) {
                    cyclic = false;
                }
                if (cyclic) {
                    auto tp = cycle_betti_recursion_total(D);
                    out << "totals " << rankvec_text(tp.betti) << "\npd " << tp.pd << "\n";
                } else if (graded) {
                    for (const auto& [key, count] : forest_betti_recursion_graded(D))
                        out << "beta(" << key.first << ", deg " << key.second << ") = " << count << "\n";
                } else {
                    auto tp = forest_betti_recursion_total(D);
                    out << "totals " << rankvec_text(tp.betti) << "\npd " << tp.pd << "\n";
                }
                return kExitOk;
            }
            if (g_kflip->parsed()) {
                auto E = edge_ideal(D);
                auto ord = kflip_order(E, kflip);
                out << "order:";
                for (int g : ord.perm()) out << " " << g;
                out << "\n";
                return kExitOk;
            }
        }

        err << "no subcommand\n";
        return kExitInput;
    } catch (const capacity_error& e) {
        err << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitCapacity;
    }
}

}  // namespace bmres::cli
