// Command-line front end for the K-theory and rank-sequence library.

#include "ktorus/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_matrix_options(CLI::App* cmd, ktorus::cli::MatrixSource& src) {
  cmd->add_option("--matrix", src.path, "Matrix file (text or JSON)");
  cmd->add_option("--format", src.format, "Matrix file format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--anzai", src.anzai_n, "Use the n x n Anzai matrix instead of a file")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = ktorus::cli;
  CLI::App app{"K-groups of crossed products C(T^n) x Z and the rank sequence a_n"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<std::string> cache;
  cli::MatrixSource src;

  auto* kgroups = app.add_subcommand("kgroups", "K0/K1 of C(T^n) x_A Z for a matrix A in GL(n,Z)");
  add_matrix_options(kgroups, src);
  kgroups->add_flag("--json", json, "Emit JSON");
  kgroups->add_option("--cache", cache, "Directory for cached Smith forms");

  std::size_t dn_n = 0;
  auto* dn = app.add_subcommand("dn", "K-groups of C*(D_n), via the Anzai matrix of size n+1");
  dn->add_option("--n", dn_n, "n")->required();
  dn->add_flag("--json", json, "Emit JSON");
  dn->add_option("--cache", cache, "Directory for cached Smith forms");

  std::size_t max_n = 12;
  auto* verify = app.add_subcommand("verify-table1", "Recompute the K-groups table for n = 1..max-n");
  verify->add_option("--max-n", max_n, "Largest n (1..12)");
  verify->add_option("--cache", cache, "Directory for cached Smith forms");

  std::size_t rank_max = 12, matrix_cap = 14;
  std::vector<std::string> methods;
  std::optional<std::string> bfile;
  auto* rank_seq = app.add_subcommand("rank-seq", "Compute a_n by several independent methods");
  rank_seq->add_option("--max-n", rank_max, "Largest n");
  rank_seq->add_option("--methods", methods,
                       "Comma-separated: matrix,partition,constant-term,subset-sum")
      ->delimiter(',');
  rank_seq->add_option("--matrix-cap", matrix_cap, "Largest n for the matrix method");
  rank_seq->add_option("--bfile", bfile, "Write an OEIS-style b-file");
  rank_seq->add_flag("--json", json, "Emit JSON");

  auto* duality = app.add_subcommand("duality", "Compare coker(L^r A - I) with coker(L^(n-r) A - I)");
  add_matrix_options(duality, src);
  duality->add_flag("--json", json, "Emit JSON");

  long long search_n = 0, k_max = 1;
  auto* search = app.add_subcommand("search-ascending",
                                    "Group ascending Furstenberg matrices by their K-groups");
  search->add_option("--n", search_n, "Torus dimension")->required();
  search->add_option("--k-max", k_max, "Largest superdiagonal parameter");
  search->add_flag("--json", json, "Emit JSON");

  std::string theta_lo, theta_hi;
  auto* trace = app.add_subcommand("trace-report", "K-groups, trace range and positive cone");
  add_matrix_options(trace, src);
  trace->add_option("--theta-lo", theta_lo, "Lower end of the theta enclosure (p/q or decimal)")
      ->required();
  trace->add_option("--theta-hi", theta_hi, "Upper end of the theta enclosure")->required();
  trace->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::usage_error;
  }

  const cli::Streams io{std::cout, std::cerr};
  if (*kgroups) return cli::cmd_kgroups(src, json, cache, io);
  if (*dn) return cli::cmd_dn(dn_n, json, cache, io);
  if (*verify) return cli::cmd_verify_table1(max_n, cache, io);
  if (*rank_seq) return cli::cmd_rank_seq(rank_max, methods, matrix_cap, bfile, json, io);
  if (*duality) return cli::cmd_duality(src, json, io);
  if (*search) return cli::cmd_search_ascending(search_n, k_max, json, io);
  if (*trace) return cli::cmd_trace_report(src, theta_lo, theta_hi, json, io);
  return cli::usage_error;
}
