#pragma once

#include "ktorus/matrix.hpp"
#include "ktorus/smith.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>

namespace ktorus {

/// On-disk store of Smith diagonals keyed by a content hash of the matrix.
/// Each entry keeps the full matrix text, so a hash collision reads as a miss.
class SmithCache {
 public:
  explicit SmithCache(std::filesystem::path dir);

  std::optional<SmithForm> load(const IntMatrix& m);
  void store(const IntMatrix& m, const SmithForm& s);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

  /// 64-bit FNV-1a over the matrix dimensions and entries in decimal.
  static std::uint64_t content_hash(const IntMatrix& m);

 private:
  std::filesystem::path path_for(const IntMatrix& m) const;

  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace ktorus
