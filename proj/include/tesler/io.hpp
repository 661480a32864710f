#pragma once

// Serialization: JSON matrices, JSON-lines, CSV census and sequences, DOT
// Hasse diagrams and quotient proof traces.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tesler/core.hpp"
#include "tesler/growth.hpp"
#include "tesler/poset.hpp"
#include "tesler/quotient.hpp"

namespace tesler {

/// {"n":3,"alpha":[1,1,1],"rows":[[0,1,0],[1,1],[2]]}; rows[i] holds a_{i,i..n-1}.
nlohmann::json matrix_to_json(const GTMatrix& m);
/// Validates shape and hook sums; throws std::invalid_argument.
GTMatrix matrix_from_json(const nlohmann::json& j);

/// One compact JSON object per line.
void write_jsonl(std::ostream& out, const std::vector<GTMatrix>& matrices);
std::vector<GTMatrix> read_jsonl(std::istream& in);

/// "alpha,count" header, alpha quoted because it contains commas.
std::string census_csv(const std::vector<std::pair<HookSumVector, BigInt>>& rows);

struct DotOptions {
  bool annotate_mobius = false;
  std::string graph_name = "P";
  std::size_t max_elements = 5000;
};

/// One node per element (label = flattened upper triangle), one edge per
/// cover, drawn bottom to top with a rank=same group per rank.
std::string export_dot(const Poset& p, const DotOptions& options = {});

/// "family,n,value,bound_low,bound_high,verdict" with empty cells for absent bounds.
std::string sequence_csv(const std::vector<SequenceReport>& reports);
std::string bounds_csv(const std::vector<BoundsReport>& reports);

nlohmann::json quotient_report_json(const QuotientReport& r);
nlohmann::json trace_json(const FactorizationTrace& t);
std::string trace_text(const FactorizationTrace& t);

}  // namespace tesler
