#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permdeg/subgroup_enum.hpp"

namespace permdeg {

inline constexpr int kCacheSchemaVersion = 1;

/// A cache file that exists but cannot be trusted: wrong schema, broken
/// JSON, or records that violate their invariants.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One subgroup class of Sym(degree), as stored on disk.
struct CacheRecord {
  int schema_version = kCacheSchemaVersion;
  int degree = 0;
  std::size_t class_id = 0;
  std::vector<std::string> generators;  // cycle notation
  std::uint64_t order = 1;
  std::uint64_t class_size = 1;
  std::string fingerprint;
  std::optional<bool> minemb;
  std::optional<std::uint64_t> ind;
  std::optional<std::string> comp_witness;

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

/// One JSON object per record, keys in declaration order.
std::string format_record(const CacheRecord& r);
CacheRecord parse_record(const std::string& line);

CacheRecord to_record(int degree, const SubgroupClass& c);
/// Rebuilds the class; the ambient order is needed for the normalizer order.
SubgroupClass from_record(const CacheRecord& r, std::uint64_t ambient_order);

std::string cache_path(const std::string& dir, int degree);

/// Writes `<dir>/sym<degree>.jsonl`, replacing any earlier file.
void save_cache(const std::vector<CacheRecord>& records, const std::string& dir, int degree);

/// Empty when the file does not exist. Throws CacheError when it exists but
/// fails validation.
std::optional<std::vector<CacheRecord>> load_cache(const std::string& dir, int degree);

}  // namespace permdeg
