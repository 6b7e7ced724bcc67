#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ktorus::cli {

/// Process exit codes.
enum Exit : int {
  ok = 0,
  usage_error = 1,          // bad arguments or unparsable input
  precondition_failed = 2,  // e.g. matrix not in GL(n, Z)
  check_failed = 3,         // a verification found a mismatch
};

/// Where a command gets its matrix from: a file, or the Anzai matrix 𝖲ₙ.
struct MatrixSource {
  std::optional<std::string> path;
  std::optional<std::string> format;  // "text" | "json"; default by extension
  std::optional<std::size_t> anzai_n;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_kgroups(const MatrixSource& src, bool json, const std::optional<std::string>& cache,
                Streams io);
int cmd_dn(std::size_t n, bool json, const std::optional<std::string>& cache, Streams io);
int cmd_verify_table1(std::size_t max_n, const std::optional<std::string>& cache, Streams io);
int cmd_rank_seq(std::size_t max_n, const std::vector<std::string>& methods,
                 std::size_t matrix_cap, const std::optional<std::string>& bfile, bool json,
                 Streams io);
int cmd_duality(const MatrixSource& src, bool json, Streams io);
int cmd_search_ascending(long long n, long long k_max, bool json, Streams io);
int cmd_trace_report(const MatrixSource& src, const std::string& theta_lo,
                     const std::string& theta_hi, bool json, Streams io);

}  // namespace ktorus::cli
