#include "ktorus/cli.hpp"

#include "ktorus/cache.hpp"
#include "ktorus/io.hpp"
#include "ktorus/ktheory.hpp"
#include "ktorus/positivity.hpp"
#include "ktorus/rank_sequence.hpp"
#include "ktorus/table1.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

namespace ktorus::cli {

namespace {

IntMatrix load(const MatrixSource& src) {
  if (src.anzai_n) {
    if (src.path) throw ParseError("give either --matrix or --anzai, not both");
    return anzai_matrix(*src.anzai_n).matrix();
  }
  if (!src.path) throw ParseError("no matrix given (use --matrix PATH or --anzai N)");
  std::optional<MatrixFormat> format;
  if (src.format) format = parse_matrix_format(*src.format);
  return read_matrix_file(*src.path, format);
}

std::unique_ptr<SmithCache> open_cache(const std::optional<std::string>& dir) {
  if (!dir) return nullptr;
  return std::make_unique<SmithCache>(*dir);
}

// Runs a command body, mapping the library's exception types to exit codes.
template <class Body>
int guarded(Streams io, Body&& body) {
  try {
    return body();
  } catch (const PreconditionError& e) {
    io.err << "error: " << e.what() << '\n';
    return precondition_failed;
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

void emit_report(const KTheoryReport& report, bool json, Streams io) {
  if (json)
    io.out << report_to_json(report).dump(2) << '\n';
  else
    io.out << render_report_text(report);
}

}  // namespace

int cmd_kgroups(const MatrixSource& src, bool json, const std::optional<std::string>& cache,
                Streams io) {
  return guarded(io, [&] {
    const TorusAutomorphism a(load(src));
    auto store = open_cache(cache);
    emit_report(k_groups(a, store.get()), json, io);
    return ok;
  });
}

int cmd_dn(std::size_t n, bool json, const std::optional<std::string>& cache, Streams io) {
  return guarded(io, [&] {
    if (n == 0) throw std::invalid_argument("--n must be >= 1");
    auto store = open_cache(cache);
    // Same computation as dn_k_groups, routed through the cache when given.
    emit_report(k_groups(anzai_matrix(n + 1), store.get()), json, io);
    return ok;
  });
}

int cmd_verify_table1(std::size_t max_n, const std::optional<std::string>& cache, Streams io) {
  return guarded(io, [&] {
    if (max_n < 1 || max_n > table1().size())
      throw std::invalid_argument("--max-n must be between 1 and 12");
    auto store = open_cache(cache);
    bool all = true;
    io.out << std::left << std::setw(4) << "n" << std::setw(6) << "a_n" << std::setw(6)
           << "K0" << std::setw(6) << "K1" << "groups\n";
    for (std::size_t n = 1; n <= max_n; ++n) {
      const Table1Row& row = table1()[n - 1];
      const KTheoryReport r = k_groups(anzai_matrix(n), store.get());
      const bool k0 = r.k0 == row.k0, k1 = r.k1 == row.k1;
      const bool rank = r.k0.free_rank == row.a_n && r.k1.free_rank == row.a_n;
      all = all && k0 && k1 && rank;
      io.out << std::setw(4) << n << std::setw(6) << (rank ? "PASS" : "FAIL") << std::setw(6)
             << (k0 ? "PASS" : "FAIL") << std::setw(6) << (k1 ? "PASS" : "FAIL")
             << "K0 = " << to_string(r.k0) << ";  K1 = " << to_string(r.k1) << '\n';
      if (!k0) io.out << "      expected K0 = " << to_string(row.k0) << '\n';
      if (!k1) io.out << "      expected K1 = " << to_string(row.k1) << '\n';
    }
    io.out << (all ? "all rows PASS\n" : "some rows FAIL\n");
    return all ? ok : check_failed;
  });
}

int cmd_rank_seq(std::size_t max_n, const std::vector<std::string>& method_names,
                 std::size_t matrix_cap, const std::optional<std::string>& bfile, bool json,
                 Streams io) {
  return guarded(io, [&] {
    if (max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
    std::vector<RankMethod> methods;
    for (const auto& name : method_names) methods.push_back(parse_rank_method(name));
    if (methods.empty())
      methods = {RankMethod::matrix, RankMethod::partition, RankMethod::constant_term,
                 RankMethod::subset_sum};

    bool all_agree = true;
    std::vector<RankResult> sequence;
    Json rows = Json::array();
    if (!json) {
      io.out << std::left << std::setw(5) << "n";
      for (RankMethod m : methods) io.out << std::setw(16) << to_string(m);
      io.out << "status\n";
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::vector<std::optional<BigInt>> cells;
      for (RankMethod m : methods) {
        if (m == RankMethod::matrix && n > matrix_cap)
          cells.emplace_back();
        else
          cells.emplace_back(a_n(n, m).value);
      }
      std::optional<BigInt> first;
      bool agree = true;
      for (const auto& c : cells) {
        if (!c) continue;
        if (!first)
          first = c;
        else if (*c != *first)
          agree = false;
      }
      all_agree = all_agree && agree;
      if (first) sequence.push_back({n, *first, RankMethod::partition});
      if (json) {
        Json row{{"n", n}};
        for (std::size_t i = 0; i < methods.size(); ++i)
          row[to_string(methods[i])] = cells[i] ? bigint_to_json(*cells[i]) : Json("skipped");
        row["status"] = agree ? "AGREE" : "DISAGREE";
        rows.push_back(row);
      } else {
        io.out << std::setw(5) << n;
        for (const auto& c : cells) io.out << std::setw(16) << (c ? c->str() : "skipped");
        io.out << (agree ? "AGREE" : "DISAGREE") << '\n';
      }
    }
    if (json) io.out << rows.dump(2) << '\n';
    if (bfile) {
      std::ofstream f(*bfile);
      if (!f) throw ParseError("cannot write " + *bfile);
      f << render_bfile(sequence);
    }
    return all_agree ? ok : check_failed;
  });
}

int cmd_duality(const MatrixSource& src, bool json, Streams io) {
  return guarded(io, [&] {
    const TorusAutomorphism a(load(src));
    const auto rows = poincare_check(a);
    bool all = true;
    Json out = Json::array();
    if (!json)
      io.out << std::left << std::setw(4) << "r" << std::setw(24) << "coker(r)"
             << std::setw(24) << "coker(n-r)" << "equal\n";
    for (const DualityRow& row : rows) {
      all = all && row.equal;
      if (json)
        out.push_back(Json{{"r", row.r},
                           {"coker_r", group_to_json(row.coker_r)},
                           {"coker_n_minus_r", group_to_json(row.coker_dual)},
                           {"equal", row.equal}});
      else
        io.out << std::setw(4) << row.r << std::setw(24) << to_string(row.coker_r)
               << std::setw(24) << to_string(row.coker_dual) << (row.equal ? "yes" : "NO")
               << '\n';
    }
    if (json) io.out << out.dump(2) << '\n';
    return all ? ok : check_failed;
  });
}

namespace {
std::string tuple_text(const std::vector<BigInt>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + k[i].str();
  return s + ")";
}
Json tuple_json(const std::vector<BigInt>& k) {
  Json j = Json::array();
  for (const BigInt& x : k) j.push_back(bigint_to_json(x));
  return j;
}
}  // namespace

int cmd_search_ascending(long long n, long long k_max, bool json, Streams io) {
  return guarded(io, [&] {
    if (n < 2) throw std::invalid_argument("--n must be >= 2");
    const AscendingSearch s = search_ascending(static_cast<std::size_t>(n), k_max);
    if (json) {
      Json entries = Json::array(), collisions = Json::array();
      for (const auto& e : s.entries)
        entries.push_back(
            Json{{"k", tuple_json(e.k)}, {"K0", group_to_json(e.k0)}, {"K1", group_to_json(e.k1)}});
      for (const auto& group : s.collisions) {
        Json g = Json::array();
        for (const auto& k : group) g.push_back(tuple_json(k));
        collisions.push_back(g);
      }
      io.out << Json{{"n", n}, {"k_max", k_max}, {"entries", entries}, {"collisions", collisions}}
                    .dump(2)
             << '\n';
      return ok;
    }
    for (const auto& e : s.entries)
      io.out << tuple_text(e.k) << "  K0 = " << to_string(e.k0) << ";  K1 = " << to_string(e.k1)
             << '\n';
    io.out << '\n' << s.collisions.size() << " collision group(s)\n";
    for (const auto& group : s.collisions) {
      for (std::size_t i = 0; i < group.size(); ++i) io.out << (i ? " ~ " : "  ") << tuple_text(group[i]);
      io.out << '\n';
    }
    return ok;
  });
}

int cmd_trace_report(const MatrixSource& src, const std::string& theta_lo,
                     const std::string& theta_hi, bool json, Streams io) {
  return guarded(io, [&] {
    const ThetaInterval theta(ThetaInterval::parse_rational(theta_lo),
                              ThetaInterval::parse_rational(theta_hi));
    const TorusAutomorphism a(load(src));
    const TraceRangeReport r = trace_range_report(a, theta);
    if (json) {
      for (const auto& w : r.warnings) io.err << "warning: " << w << '\n';
      io.out << trace_report_to_json(r).dump(2) << '\n';
    } else
      io.out << render_trace_report_text(r);
    return ok;
  });
}

}  // namespace ktorus::cli
