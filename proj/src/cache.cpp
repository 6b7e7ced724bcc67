#include "ktorus/cache.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace ktorus {

namespace {
std::string canonical_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n' << to_text(m);
  return os.str();
}
}  // namespace

SmithCache::SmithCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::uint64_t SmithCache::content_hash(const IntMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text(m)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path SmithCache::path_for(const IntMatrix& m) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << content_hash(m) << ".json";
  return dir_ / name.str();
}

std::optional<SmithForm> SmithCache::load(const IntMatrix& m) {
  std::ifstream in(path_for(m));
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("matrix").get<std::string>() != canonical_text(m)) {
      ++misses_;
      return std::nullopt;
    }
    SmithForm s;
    s.rank = j.at("rank").get<Index>();
    for (const auto& d : j.at("diag")) s.diag.emplace_back(d.get<std::string>());
    ++hits_;
    return s;
  } catch (const std::exception&) {
    ++misses_;
    return std::nullopt;
  }
}

void SmithCache::store(const IntMatrix& m, const SmithForm& s) {
  nlohmann::json j;
  j["matrix"] = canonical_text(m);
  j["rank"] = s.rank;
  j["diag"] = nlohmann::json::array();
  for (const BigInt& d : s.diag) j["diag"].push_back(d.str());
  const auto target = path_for(m);
  const auto tmp = std::filesystem::path(target).concat(".tmp");
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ktorus
