#pragma once

#include "ktorus/abelian_group.hpp"
#include "ktorus/ktheory.hpp"
#include "ktorus/matrix.hpp"
#include "ktorus/positivity.hpp"
#include "ktorus/rank_sequence.hpp"

#include <json.hpp>

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktorus {

using Json = nlohmann::ordered_json;

/// Malformed matrix file or JSON document.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MatrixFormat { text, json };

/// Text: first line n, then n lines of n whitespace-separated integers.
/// JSON: {"n": n, "rows": [[...], ...]} with integer (or decimal-string) entries.
IntMatrix parse_matrix_text(std::istream& in);
IntMatrix parse_matrix_json(std::istream& in);
IntMatrix parse_matrix(std::istream& in, MatrixFormat format);
/// Format from the extension unless given: ".json" is JSON, anything else text.
IntMatrix read_matrix_file(const std::filesystem::path& path,
                           std::optional<MatrixFormat> format = std::nullopt);
MatrixFormat parse_matrix_format(const std::string& name);

std::string write_matrix_text(const IntMatrix& m);

/// Integers that fit in int64 are JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// {"rank": free_rank, "torsion": [t1, t2, ...]}
Json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);

Json report_to_json(const KTheoryReport& r);
std::string render_report_text(const KTheoryReport& r);

Json trace_report_to_json(const TraceRangeReport& r);
std::string render_trace_report_text(const TraceRangeReport& r);

/// OEIS b-file body: one "n a(n)" line per entry.
std::string render_bfile(const std::vector<RankResult>& values);

}  // namespace ktorus
