#include "permdeg/group_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "permdeg/conjugacy_search.hpp"

namespace permdeg {

namespace {

void require_same_degree(const PermGroup& a, const PermGroup& b, const char* what) {
  if (a.degree() != b.degree())
    throw std::invalid_argument(std::string(what) + ": degree mismatch (" +
                                std::to_string(a.degree()) + " vs " + std::to_string(b.degree()) +
                                ")");
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Orbits as point lists, ordered by smallest element, plus a point -> orbit index table.
std::vector<std::vector<int>> raw_orbits(const PermGroup& g, std::vector<int>* owner = nullptr) {
  std::vector<int> id(g.degree(), -1);
  std::vector<std::vector<int>> result;
  for (int a = 0; a < g.degree(); ++a) {
    if (id[a] >= 0) continue;
    std::vector<int> orbit = orbit_of(g, a);
    for (int x : orbit) id[x] = static_cast<int>(result.size());
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  if (owner) *owner = std::move(id);
  return result;
}

}  // namespace

std::vector<int> full_base(int degree) {
  std::vector<int> b(degree);
  std::iota(b.begin(), b.end(), 0);
  return b;
}

std::optional<std::vector<int>> equivariant_map(const PermGroup& g, int a, int b) {
  const int n = g.degree();
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("equivariant_map: point out of range");
  std::vector<int> phi(n, -1);
  std::vector<bool> hit(n, false);
  phi[a] = b;
  hit[b] = true;
  std::vector<int> queue{a};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (const auto& s : g.generators()) {
      const int y = s(x);
      const int target = s(phi[x]);
      if (phi[y] < 0) {
        if (hit[target]) return std::nullopt;
        phi[y] = target;
        hit[target] = true;
        queue.push_back(y);
      } else if (phi[y] != target) {
        return std::nullopt;
      }
    }
  }
  // phi must be onto orbit(b) as well
  if (orbit_of(g, b).size() != queue.size()) return std::nullopt;
  return phi;
}

std::optional<Permutation> intertwiner(const PermGroup& g, int a, int b) {
  auto phi = equivariant_map(g, a, b);
  if (!phi) return std::nullopt;
  const int n = g.degree();
  std::vector<int> table(n);
  std::iota(table.begin(), table.end(), 0);
  const bool same_orbit = (*phi)[b] >= 0;
  for (int x = 0; x < n; ++x) {
    if ((*phi)[x] < 0) continue;
    table[x] = (*phi)[x];
    if (!same_orbit) table[(*phi)[x]] = x;
  }
  return Permutation::from_images(table);
}

OrbitDecomposition orbits(const PermGroup& g) {
  OrbitDecomposition d;
  d.degree = g.degree();
  const StabChain chain(g);
  auto raw = raw_orbits(g);
  std::vector<std::size_t> type_reps;  // index of the first orbit of each type
  for (auto& pts : raw) {
    Orbit o;
    o.representative = pts.front();
    o.stabilizer = point_stabilizer(chain, o.representative);
    o.points = std::move(pts);
    o.type_key = -1;
    for (std::size_t t = 0; t < type_reps.size() && o.type_key < 0; ++t) {
      const Orbit& rep = d.orbits[type_reps[t]];
      if (rep.points.size() != o.points.size()) continue;
      for (int b : o.points)
        if (equivariant_map(g, rep.representative, b)) {
          o.type_key = static_cast<int>(t);
          break;
        }
    }
    if (o.type_key < 0) {
      o.type_key = static_cast<int>(type_reps.size());
      type_reps.push_back(d.orbits.size());
    }
    d.orbits.push_back(std::move(o));
  }
  return d;
}

namespace {

struct OrbitTypeData {
  std::vector<std::size_t> members;  // orbit indices
  std::vector<Permutation> self_maps;
  std::uint64_t self_map_count = 1;
};

std::vector<OrbitTypeData> collect_types(const PermGroup& g, const OrbitDecomposition& d) {
  std::vector<OrbitTypeData> types;
  for (std::size_t i = 0; i < d.orbits.size(); ++i) {
    const auto key = static_cast<std::size_t>(d.orbits[i].type_key);
    if (key >= types.size()) types.resize(key + 1);
    types[key].members.push_back(i);
  }
  for (auto& t : types) {
    const Orbit& first = d.orbits[t.members.front()];
    for (int b : first.points) {
      if (b == first.representative) continue;
      if (auto c = intertwiner(g, first.representative, b)) {
        t.self_maps.push_back(*c);
        ++t.self_map_count;
      }
    }
  }
  return types;
}

}  // namespace

std::uint64_t centralizer_order_formula(const PermGroup& g) {
  const OrbitDecomposition d = orbits(g);
  std::uint64_t order = 1;
  for (const auto& t : collect_types(g, d)) {
    for (std::size_t i = 0; i < t.members.size(); ++i) order *= t.self_map_count;
    order *= factorial(static_cast<int>(t.members.size()));
  }
  return order;
}

PermGroup centralizer_in_sym(const PermGroup& g) {
  const OrbitDecomposition d = orbits(g);
  std::vector<Permutation> gens;
  for (const auto& t : collect_types(g, d)) {
    gens.insert(gens.end(), t.self_maps.begin(), t.self_maps.end());
    for (std::size_t i = 1; i < t.members.size(); ++i) {
      const Orbit& prev = d.orbits[t.members[i - 1]];
      const Orbit& cur = d.orbits[t.members[i]];
      std::optional<Permutation> swap;
      for (int b : cur.points)
        if ((swap = intertwiner(g, prev.representative, b))) break;
      if (!swap) throw std::logic_error("centralizer: orbits of one type lack an intertwiner");
      gens.push_back(*swap);
    }
  }
  for (const auto& c : gens)
    for (const auto& x : g.generators())
      if (!commute(c, x)) throw std::logic_error("centralizer: generator fails to commute");
  return reduce_generators(PermGroup(g.degree(), std::move(gens)));
}

PermGroup normalizer_in_sym(const PermGroup& h) {
  return h.degree() <= 7 ? normalizer_in_sym_scan(h) : normalizer_in_sym_backtrack(h);
}

PermGroup normalizer_in_sym_scan(const PermGroup& h) {
  const int n = h.degree();
  const StabChain hc(h);
  std::vector<Permutation> found;
  StabChain current(PermGroup(n, h.generators()));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    const Permutation s = Permutation::from_images(images);
    bool normalizes = true;
    for (const auto& x : hc.strong_generators())
      if (!hc.contains(conjugate(x, s))) {
        normalizes = false;
        break;
      }
    if (normalizes && !current.contains(s)) {
      found.push_back(s);
      std::vector<Permutation> gens = h.generators();
      gens.insert(gens.end(), found.begin(), found.end());
      current = StabChain(PermGroup(n, std::move(gens)));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return reduce_generators(current.group());
}

PermGroup normalizer_in_sym_backtrack(const PermGroup& h) {
  return normalizer_backtrack(ConjugacyProfile(h));
}

PermGroup join(const PermGroup& g, const PermGroup& h) {
  require_same_degree(g, h, "join");
  std::vector<Permutation> gens = g.generators();
  gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  return PermGroup(g.degree(), std::move(gens));
}

bool is_subgroup(const StabChain& big, const PermGroup& small) {
  if (big.degree() != small.degree()) throw std::invalid_argument("is_subgroup: degree mismatch");
  for (const auto& x : small.generators())
    if (!big.contains(x)) return false;
  return true;
}

bool is_normal(const StabChain& h, const PermGroup& g) {
  for (const auto& x : h.strong_generators())
    for (const auto& s : g.generators())
      if (!h.contains(conjugate(x, s))) return false;
  return true;
}

std::uint64_t index(const PermGroup& big, const PermGroup& small) {
  require_same_degree(big, small, "index");
  const StabChain b(big);
  if (!is_subgroup(b, small)) throw std::invalid_argument("index: second group is not a subgroup of the first");
  return b.order() / StabChain(small).order();
}

namespace {

// Lexicographically least element of the coset Hx; `h` must carry the full base 0..n-1.
Permutation canonical_coset_rep(const StabChain& h, Permutation x) {
  for (const auto& level : h.levels()) {
    if (level.orbit.size() == 1) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < level.orbit.size(); ++i)
      if (x(level.orbit[i]) < x(level.orbit[best])) best = i;
    if (best != 0) x = compose(level.transversal[best], x);
  }
  return x;
}

}  // namespace

std::vector<Permutation> right_coset_representatives(const StabChain& g, const StabChain& h) {
  if (!is_subgroup(g, PermGroup(h.degree(), h.strong_generators())))
    throw std::invalid_argument("coset representatives: not a subgroup");
  const auto base = full_base(h.degree());
  const StabChain hf(PermGroup(h.degree(), h.strong_generators()), base);
  std::vector<Permutation> reps{canonical_coset_rep(hf, Permutation(h.degree()))};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{reps.front(), 0}};
  const std::uint64_t count = g.order() / h.order();
  for (std::size_t i = 0; i < reps.size() && reps.size() < count; ++i) {
    for (const auto& s : g.strong_generators()) {
      Permutation y = canonical_coset_rep(hf, compose(reps[i], s));
      if (seen.emplace(y, reps.size()).second) reps.push_back(y);
    }
  }
  return reps;
}

std::vector<Permutation> core_elements(const StabChain& g, const StabChain& h) {
  const auto reps = right_coset_representatives(g, h);
  std::vector<Permutation> inverses;
  for (const auto& x : reps) inverses.push_back(x.inverse());
  std::vector<Permutation> result;
  h.for_each_element([&](const Permutation& e) {
    for (std::size_t i = 1; i < reps.size(); ++i)
      if (!h.contains(compose(compose(reps[i], e), inverses[i]))) return true;
    result.push_back(e);
    return true;
  });
  return result;
}

PermGroup core(const PermGroup& g, const PermGroup& h) {
  require_same_degree(g, h, "core");
  const StabChain gc(g);
  if (!is_subgroup(gc, h)) throw std::invalid_argument("core: second group is not a subgroup of the first");
  return group_from_elements(g.degree(), core_elements(gc, StabChain(h)));
}

std::optional<Permutation> transporter_in_sym(const PermGroup& h1, const PermGroup& h2) {
  require_same_degree(h1, h2, "transporter_in_sym");
  auto c1 = std::make_shared<const StabChain>(h1);
  auto c2 = std::make_shared<const StabChain>(h2);
  if (c1->order() != c2->order()) return std::nullopt;
  return find_conjugator(ConjugacyProfile(c1), ConjugacyProfile(c2));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  for (const auto& e : elements)
    if (!e.is_identity()) gens.push_back(e);
  StabChain closure(PermGroup(g.degree(), gens));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(gens[i], s);
      if (!closure.contains(c)) {
        gens.push_back(c);
        closure = StabChain(PermGroup(g.degree(), gens));
      }
    }
  }
  return reduce_generators(PermGroup(g.degree(), std::move(gens)));
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> commutators;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = compose(compose(gens[i].inverse(), gens[j].inverse()), compose(gens[i], gens[j]));
      if (!c.is_identity()) commutators.push_back(c);
    }
  return normal_closure(g, commutators);
}

PermGroup reduce_generators(const PermGroup& g) {
  std::vector<Permutation> kept;
  StabChain current(PermGroup(g.degree()));
  for (const auto& x : g.generators()) {
    if (x.is_identity() || current.contains(x)) continue;
    kept.push_back(x);
    current = StabChain(PermGroup(g.degree(), kept));
  }
  return PermGroup(g.degree(), std::move(kept));
}

PermGroup group_from_elements(int degree, const std::vector<Permutation>& elements) {
  return reduce_generators(PermGroup(degree, elements));
}

}  // namespace permdeg
