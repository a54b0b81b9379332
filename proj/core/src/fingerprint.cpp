#include "permdeg/fingerprint.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "permdeg/group_ops.hpp"

namespace permdeg {

namespace {

std::string join_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ',';
    out += std::to_string(k) + ':' + std::to_string(v);
  }
  return out;
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("fingerprint: bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::map<std::uint64_t, std::uint64_t> parse_map(std::string_view s) {
  std::map<std::uint64_t, std::uint64_t> m;
  for (auto item : split(s, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("fingerprint: bad histogram entry");
    m[to_u64(item.substr(0, colon))] = to_u64(item.substr(colon + 1));
  }
  return m;
}

std::vector<int> orbit_sizes_of(const PermGroup& g) {
  std::vector<int> sizes;
  std::vector<bool> seen(g.degree(), false);
  for (int a = 0; a < g.degree(); ++a) {
    if (seen[a]) continue;
    const auto orbit = orbit_of(g, a);
    for (int x : orbit) seen[x] = true;
    sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

std::string Fingerprint::to_string() const {
  std::string out = "o=" + std::to_string(order) + ";n=" + std::to_string(degree) + ";orb=";
  for (std::size_t i = 0; i < orbit_sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orbit_sizes[i]);
  }
  out += ";ct=" + join_map(cycle_types);
  out += ";eo=" + join_map(element_orders);
  out += ";ab=" + std::string(abelian ? "1" : "0");
  out += ";z=" + std::to_string(center_order);
  out += ";dr=" + std::to_string(derived_order);
  return out;
}

Fingerprint Fingerprint::parse(std::string_view text) {
  Fingerprint f;
  const auto fields = split(text, ';');
  const char* names[] = {"o", "n", "orb", "ct", "eo", "ab", "z", "dr"};
  if (fields.size() != std::size(names)) throw std::invalid_argument("fingerprint: wrong field count");
  std::vector<std::string_view> values;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto eq = fields[i].find('=');
    if (eq == std::string_view::npos || fields[i].substr(0, eq) != names[i])
      throw std::invalid_argument("fingerprint: expected field '" + std::string(names[i]) + "'");
    values.push_back(fields[i].substr(eq + 1));
  }
  f.order = to_u64(values[0]);
  f.degree = static_cast<int>(to_u64(values[1]));
  for (auto s : split(values[2], ',')) f.orbit_sizes.push_back(static_cast<int>(to_u64(s)));
  f.cycle_types = parse_map(values[3]);
  f.element_orders = parse_map(values[4]);
  if (values[5] != "0" && values[5] != "1") throw std::invalid_argument("fingerprint: bad abelian flag");
  f.abelian = values[5] == "1";
  f.center_order = to_u64(values[6]);
  f.derived_order = to_u64(values[7]);
  return f;
}

Fingerprint fingerprint(const PermGroup& g) { return fingerprint(StabChain(g)); }

Fingerprint fingerprint(const StabChain& chain) {
  Fingerprint f;
  const PermGroup g(chain.degree(), chain.strong_generators());
  f.order = chain.order();
  f.degree = chain.degree();
  f.orbit_sizes = orbit_sizes_of(g);
  chain.for_each_element([&](const Permutation& x) {
    ++f.cycle_types[x.cycle_type_key()];
    ++f.element_orders[element_order(x)];
    return true;
  });
  const auto& gens = chain.group().generators();
  for (std::size_t i = 0; i < gens.size() && f.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j])) {
        f.abelian = false;
        break;
      }

  if (f.abelian) {
    f.center_order = f.order;
    f.derived_order = 1;
    return f;
  }
  // Z(G) = C_Sym(n)(G) meet G; walk whichever side is smaller.
  const StabChain c(centralizer_in_sym(chain.group()));
  const StabChain& small = c.order() <= chain.order() ? c : chain;
  const StabChain& big = c.order() <= chain.order() ? chain : c;
  f.center_order = 0;
  small.for_each_element([&](const Permutation& x) {
    if (big.contains(x)) ++f.center_order;
    return true;
  });
  f.derived_order = StabChain(derived_subgroup(chain.group())).order();
  return f;
}

BucketKey bucket_key(const StabChain& chain) {
  return {chain.order(), orbit_sizes_of(PermGroup(chain.degree(), chain.strong_generators()))};
}

}  // namespace permdeg
