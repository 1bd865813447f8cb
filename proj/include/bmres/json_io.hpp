#pragma once

#include <string>

#include "bmres/betti.hpp"
#include "bmres/graphs.hpp"
#include "bmres/matching.hpp"
#include "bmres/morse.hpp"
#include "bmres/oracle.hpp"
#include "bmres/rivals.hpp"
#include "bmres/search.hpp"

// JSON report builders for the CLI, plus matching re-ingestion so that
// emitted reports can be validated round-trip. All functions return
// serialized JSON text.

namespace bmres::json_io {

std::string symbol_list(const std::vector<Symbol>& symbols);
std::string matching_report(const Matching& A, const LcmTable& T, const GenOrder& ord);
std::string betti_report(const GradedBettiTable& table);
std::string resolution_report(const MorseDifferential& D, const MonomialIdeal& I, bool minimal);
std::string comparison_report(const ComparisonReport& rep);
std::string search_report(const SearchReport& rep);
std::string validation_report(const ValidationReport& rep);

// Parses the edges of a matching_report back into a Matching.
Matching parse_matching(const std::string& text, int gen_count);

}  // namespace bmres::json_io
