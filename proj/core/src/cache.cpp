#include "permdeg/cache.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

namespace {

using nlohmann::ordered_json;

template <class T>
T field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw CacheError(std::string("cache record lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("cache record field '") + key + "': " + e.what());
  }
}

template <class T>
std::optional<T> optional_field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw CacheError(std::string("cache record lacks '") + key + "'");
  if (j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

}  // namespace

std::string format_record(const CacheRecord& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["degree"] = r.degree;
  j["class_id"] = r.class_id;
  j["generators"] = r.generators;
  j["order"] = r.order;
  j["class_size"] = r.class_size;
  j["fingerprint"] = r.fingerprint;
  j["minemb"] = r.minemb ? ordered_json(*r.minemb) : ordered_json(nullptr);
  j["ind"] = r.ind ? ordered_json(*r.ind) : ordered_json(nullptr);
  j["comp_witness"] = r.comp_witness ? ordered_json(*r.comp_witness) : ordered_json(nullptr);
  return j.dump();
}

CacheRecord parse_record(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw CacheError(std::string("malformed cache line: ") + e.what());
  }
  if (!j.is_object()) throw CacheError("cache line is not a JSON object");
  CacheRecord r;
  r.schema_version = field<int>(j, "schema_version");
  if (r.schema_version != kCacheSchemaVersion)
    throw CacheError("cache schema_version " + std::to_string(r.schema_version) + ", expected " +
                     std::to_string(kCacheSchemaVersion));
  r.degree = field<int>(j, "degree");
  r.class_id = field<std::size_t>(j, "class_id");
  r.generators = field<std::vector<std::string>>(j, "generators");
  r.order = field<std::uint64_t>(j, "order");
  r.class_size = field<std::uint64_t>(j, "class_size");
  r.fingerprint = field<std::string>(j, "fingerprint");
  r.minemb = optional_field<bool>(j, "minemb");
  r.ind = optional_field<std::uint64_t>(j, "ind");
  r.comp_witness = optional_field<std::string>(j, "comp_witness");
  return r;
}

CacheRecord to_record(int degree, const SubgroupClass& c) {
  CacheRecord r;
  r.degree = degree;
  r.class_id = c.class_id;
  r.generators = format_generators(c.representative);
  r.order = c.order;
  r.class_size = c.class_size;
  r.fingerprint = c.fingerprint.to_string();
  return r;
}

SubgroupClass from_record(const CacheRecord& r, std::uint64_t ambient_order) {
  SubgroupClass c;
  c.class_id = r.class_id;
  c.representative = parse_group(r.degree, r.generators);
  c.order = r.order;
  c.class_size = r.class_size;
  c.normalizer_order = ambient_order / r.class_size;
  c.fingerprint = Fingerprint::parse(r.fingerprint);
  return c;
}

std::string cache_path(const std::string& dir, int degree) {
  return (std::filesystem::path(dir) / ("sym" + std::to_string(degree) + ".jsonl")).string();
}

void save_cache(const std::vector<CacheRecord>& records, const std::string& dir, int degree) {
  std::filesystem::create_directories(dir);
  const std::string path = cache_path(dir, degree);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp);
    for (const auto& r : records) {
      if (r.degree != degree) throw std::invalid_argument("save_cache: record degree differs from file degree");
      out << format_record(r) << '\n';
    }
    if (!out) throw CacheError("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::vector<CacheRecord>> load_cache(const std::string& dir, int degree) {
  const std::string path = cache_path(dir, degree);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot read " + path);
  std::vector<CacheRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CacheRecord r = parse_record(line);
    const std::string where = path + " record " + std::to_string(records.size());
    if (r.degree != degree) throw CacheError(where + ": degree " + std::to_string(r.degree));
    if (r.class_id != records.size()) throw CacheError(where + ": class_id not contiguous from 0");
    try {
      const PermGroup g = parse_group(degree, r.generators);
      if (group_order(g) != r.order) throw CacheError(where + ": generators do not give the stated order");
      if (Fingerprint::parse(r.fingerprint).order != r.order)
        throw CacheError(where + ": fingerprint disagrees with order");
    } catch (const std::invalid_argument& e) {
      throw CacheError(where + ": " + e.what());
    }
    records.push_back(std::move(r));
  }
  if (records.empty()) throw CacheError(path + " holds no records");
  return records;
}

}  // namespace permdeg
