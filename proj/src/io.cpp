#include "ktorus/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace ktorus {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> out;
  for (std::string t; ls >> t;) out.push_back(t);
  return out;
}

BigInt parse_entry(const std::string& token) {
  try {
    return parse_bigint(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

IntMatrix parse_matrix_text(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto t = tokens(line);
    if (!t.empty()) lines.push_back(std::move(t));
  }
  if (lines.empty()) throw ParseError("empty matrix file");
  if (lines[0].size() != 1) throw ParseError("first line must hold the dimension n");
  const BigInt n_big = parse_entry(lines[0][0]);
  if (n_big < 1 || n_big > 100000) throw ParseError("dimension out of range");
  const auto n = n_big.convert_to<std::size_t>();
  if (lines.size() - 1 != n)
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  IntMatrix m(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = lines[i + 1];
    if (row.size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m(Index(i), Index(j)) = parse_entry(row[j]);
  }
  return m;
}

IntMatrix parse_matrix_json(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw ParseError("matrix JSON needs \"n\" and \"rows\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError("\"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  const Json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != n)
    throw ParseError("\"rows\" must hold n arrays");
  IntMatrix m(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " must hold n entries");
    for (std::size_t k = 0; k < n; ++k) {
      try {
        m(Index(i), Index(k)) = bigint_from_json(rows[i][k]);
      } catch (const std::exception& e) {
        throw ParseError(e.what());
      }
    }
  }
  return m;
}

IntMatrix parse_matrix(std::istream& in, MatrixFormat format) {
  return format == MatrixFormat::json ? parse_matrix_json(in) : parse_matrix_text(in);
}

MatrixFormat parse_matrix_format(const std::string& name) {
  if (name == "text") return MatrixFormat::text;
  if (name == "json") return MatrixFormat::json;
  throw ParseError("unknown matrix format: " + name);
}

IntMatrix read_matrix_file(const std::filesystem::path& path, std::optional<MatrixFormat> format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  const MatrixFormat f =
      format.value_or(path.extension() == ".json" ? MatrixFormat::json : MatrixFormat::text);
  return parse_matrix(in, f);
}

std::string write_matrix_text(const IntMatrix& m) {
  return std::to_string(m.rows()) + "\n" + to_text(m);
}

Json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json group_to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const BigInt& t : g.torsion) torsion.push_back(bigint_to_json(t));
  return Json{{"rank", g.free_rank}, {"torsion", torsion}};
}

AbelianGroup group_from_json(const Json& j) {
  AbelianGroup g;
  const Json& rank = j.at("rank");
  if (!rank.is_number_unsigned()) throw std::invalid_argument("\"rank\" must be a count");
  g.free_rank = rank.get<std::size_t>();
  for (const Json& t : j.at("torsion")) g.torsion.push_back(bigint_from_json(t));
  g.validate();
  return g;
}

Json report_to_json(const KTheoryReport& r) {
  Json per_r = Json::array();
  for (const DegreeData& d : r.per_r)
    per_r.push_back(Json{{"r", d.r},
                         {"kernel_rank", d.kernel_rank},
                         {"cokernel", group_to_json(d.cokernel)}});
  return Json{{"n", r.n},
              {"det", r.det},
              {"K0", group_to_json(r.k0)},
              {"K1", group_to_json(r.k1)},
              {"per_r", per_r},
              {"unipotent_max_degree", r.unipotent_max_degree}};
}

std::string render_report_text(const KTheoryReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", det = " << r.det
     << ", unipotent of maximal degree: " << (r.unipotent_max_degree ? "yes" : "no") << "\n\n";
  os << std::left << std::setw(4) << "r" << std::setw(10) << "ker" << "coker\n";
  for (const DegreeData& d : r.per_r)
    os << std::setw(4) << d.r << std::setw(10) << to_string(AbelianGroup{d.kernel_rank, {}})
       << to_string(d.cokernel) << '\n';
  os << "\nK0 = " << to_string(r.k0) << "\nK1 = " << to_string(r.k1) << '\n';
  return os.str();
}

namespace {
std::string rational_text(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}
}  // namespace

Json trace_report_to_json(const TraceRangeReport& r) {
  Json j = report_to_json(r.k);
  j["rank"] = r.k.k0.free_rank;
  j["theta"] = Json{{"lo", rational_text(r.theta.lo)}, {"hi", rational_text(r.theta.hi)}};
  j["furstenberg_class"] = r.furstenberg_class;
  j["trace_range"] = r.trace_range;
  if (r.cone) j["positive_cone"] = *r.cone;
  j["warnings"] = r.warnings;
  return j;
}

std::string render_trace_report_text(const TraceRangeReport& r) {
  std::ostringstream os;
  for (const std::string& w : r.warnings) os << "warning: " << w << '\n';
  os << render_report_text(r.k);
  os << "\nrank = " << r.k.k0.free_rank << "\nK0 torsion = "
     << to_string(AbelianGroup{0, r.k.k0.torsion}) << "\nK1 torsion = "
     << to_string(AbelianGroup{0, r.k.k1.torsion}) << '\n';
  os << "theta in [" << rational_text(r.theta.lo) << ", " << rational_text(r.theta.hi) << "]\n";
  os << "trace range: tau_*(K0) = " << r.trace_range << '\n';
  if (r.cone) os << "positive cone: " << *r.cone << '\n';
  return os.str();
}

std::string render_bfile(const std::vector<RankResult>& values) {
  std::ostringstream os;
  for (const RankResult& v : values) os << v.n << ' ' << v.value << '\n';
  return os.str();
}

}  // namespace ktorus
