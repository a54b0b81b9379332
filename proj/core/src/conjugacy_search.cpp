#include "permdeg/conjugacy_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permdeg/group_ops.hpp"

namespace permdeg {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

ConjugacyProfile::ConjugacyProfile(const PermGroup& g)
    : ConjugacyProfile(std::make_shared<const StabChain>(g)) {}

ConjugacyProfile::ConjugacyProfile(std::shared_ptr<const StabChain> chain) : chain_(std::move(chain)) {
  const int n = chain_->degree();
  const PermGroup strong(n, chain_->strong_generators());

  tests_ = chain_->strong_generators();
  std::stable_sort(tests_.begin(), tests_.end(), [](const Permutation& a, const Permutation& b) {
    return a.support().size() < b.support().size();
  });

  orbit_id_.assign(n, -1);
  labels_.assign(n, 0);
  int next_id = 0;
  for (int a = 0; a < n; ++a) {
    if (orbit_id_[a] >= 0) continue;
    const std::vector<int> orbit = orbit_of(strong, a);
    for (int x : orbit) orbit_id_[x] = next_id;
    ++next_id;

    std::uint64_t label = mix(0, orbit.size());
    if (orbit.size() > 1) {
      const PermGroup stab = point_stabilizer(*chain_, a);
      std::vector<int> seen(n, 0);
      std::vector<std::uint64_t> suborbits;
      for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        const auto sub = orbit_of(stab, x);
        for (int y : sub) seen[y] = 1;
        // only suborbits inside the orbit of a are intrinsic to its constituent
        suborbits.push_back(sub.size() * 2 + (orbit_id_[x] == orbit_id_[a] ? 1 : 0));
      }
      std::sort(suborbits.begin(), suborbits.end());
      for (auto s : suborbits) label = mix(label, s);

      // order of the transitive constituent
      std::vector<int> local(n, -1);
      for (std::size_t i = 0; i < orbit.size(); ++i) local[orbit[i]] = static_cast<int>(i);
      std::vector<Permutation> restricted;
      for (const auto& s : strong.generators()) {
        std::vector<int> images(orbit.size());
        for (std::size_t i = 0; i < orbit.size(); ++i) images[i] = local[s(orbit[i])];
        restricted.push_back(Permutation::from_images(images));
      }
      label = mix(label, StabChain(PermGroup(static_cast<int>(orbit.size()), restricted)).order());
      moved_.insert(moved_.end(), orbit.begin(), orbit.end());
    }
    for (int x : orbit) labels_[x] = label;
  }
  std::sort(moved_.begin(), moved_.end());
}

namespace {

class SearchState {
 public:
  SearchState(const ConjugacyProfile& src, const ConjugacyProfile& tgt) : src_(src), tgt_(tgt), n_(src.degree()) {
    const auto& tests = src_.test_elements();
    std::vector<bool> placed(n_, false);
    for (const auto& t : tests)
      for (int x : t.support())
        if (!placed[x]) {
          placed[x] = true;
          order_.push_back(x);
        }
    std::vector<int> depth_of(n_, -1);
    for (std::size_t d = 0; d < order_.size(); ++d) depth_of[order_[d]] = static_cast<int>(d);
    tests_at_.assign(order_.size(), {});
    for (std::size_t i = 0; i < tests.size(); ++i) {
      int deepest = -1;
      for (int x : tests[i].support()) deepest = std::max(deepest, depth_of[x]);
      if (deepest >= 0) tests_at_[deepest].push_back(i);
    }
    sigma_.assign(n_, -1);
    used_.assign(n_, false);
    orbit_map_.assign(n_, -1);
    orbit_rev_.assign(n_, -1);
    orbit_refs_.assign(n_, 0);
  }

  const std::vector<int>& order() const { return order_; }

  bool compatible(int a, int b) const {
    if (used_[b]) return false;
    if (src_.point_labels()[a] != tgt_.point_labels()[b]) return false;
    const int oa = src_.orbit_ids()[a];
    const int ob = tgt_.orbit_ids()[b];
    if (orbit_map_[oa] >= 0) return orbit_map_[oa] == ob;
    return orbit_rev_[ob] < 0;
  }

  void assign(int a, int b) {
    sigma_[a] = b;
    used_[b] = true;
    const int oa = src_.orbit_ids()[a];
    const int ob = tgt_.orbit_ids()[b];
    if (orbit_refs_[oa]++ == 0) {
      orbit_map_[oa] = ob;
      orbit_rev_[ob] = oa;
    }
  }

  void unassign(int a) {
    const int b = sigma_[a];
    sigma_[a] = -1;
    used_[b] = false;
    const int oa = src_.orbit_ids()[a];
    if (--orbit_refs_[oa] == 0) {
      orbit_rev_[orbit_map_[oa]] = -1;
      orbit_map_[oa] = -1;
    }
  }

  // Every test element whose support was completed at depth d maps into the target.
  bool tests_pass(std::size_t d) const {
    std::vector<int> images(n_);
    for (std::size_t i : tests_at_[d]) {
      const Permutation& t = src_.test_elements()[i];
      std::iota(images.begin(), images.end(), 0);
      for (int x : t.support()) images[sigma_[x]] = sigma_[t(x)];
      if (!tgt_.chain().contains(Permutation::from_images(images))) return false;
    }
    return true;
  }

  Permutation complete() const {
    std::vector<int> images(sigma_);
    std::vector<bool> used(used_);
    int next = 0;
    for (int a = 0; a < n_; ++a) {
      if (images[a] >= 0) continue;
      while (used[next]) ++next;
      images[a] = next;
      used[next] = true;
    }
    return Permutation::from_images(images);
  }

  bool first_solution(std::size_t d, Permutation& out) {
    if (d == order_.size()) {
      out = complete();
      return true;
    }
    const int a = order_[d];
    for (int b = 0; b < n_; ++b) {
      if (!compatible(a, b)) continue;
      assign(a, b);
      const bool ok = tests_pass(d) && first_solution(d + 1, out);
      unassign(a);
      if (ok) return true;
    }
    return false;
  }

 private:
  const ConjugacyProfile& src_;
  const ConjugacyProfile& tgt_;
  int n_;
  std::vector<int> order_;
  std::vector<std::vector<std::size_t>> tests_at_;
  std::vector<int> sigma_;
  std::vector<bool> used_;
  std::vector<int> orbit_map_;
  std::vector<int> orbit_rev_;
  std::vector<int> orbit_refs_;
};

bool same_label_multiset(const ConjugacyProfile& a, const ConjugacyProfile& b) {
  auto la = a.point_labels();
  auto lb = b.point_labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb;
}

}  // namespace

std::optional<Permutation> find_conjugator(const ConjugacyProfile& source, const ConjugacyProfile& target) {
  if (source.degree() != target.degree()) throw std::invalid_argument("find_conjugator: degree mismatch");
  if (source.chain().order() != target.chain().order()) return std::nullopt;
  if (source.moved_points().size() != target.moved_points().size()) return std::nullopt;
  if (!same_label_multiset(source, target)) return std::nullopt;
  SearchState state(source, target);
  Permutation result;
  if (state.first_solution(0, result)) return result;
  return std::nullopt;
}

PermGroup normalizer_backtrack(const ConjugacyProfile& h) {
  const int n = h.degree();
  SearchState state(h, h);
  const std::vector<int>& order = state.order();

  std::vector<Permutation> gens = h.chain().strong_generators();
  const PermGroup c = centralizer_in_sym(PermGroup(n, h.chain().strong_generators()));
  gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  std::vector<int> fixed;
  std::vector<bool> moved(n, false);
  for (int x : h.moved_points()) moved[x] = true;
  for (int x = 0; x < n; ++x)
    if (!moved[x]) fixed.push_back(x);
  if (fixed.size() >= 2) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::swap(images[fixed[0]], images[fixed[1]]);
    gens.push_back(Permutation::from_images(images));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t i = 0; i < fixed.size(); ++i) images[fixed[i]] = fixed[(i + 1) % fixed.size()];
    gens.push_back(Permutation::from_images(images));
  }
  StabChain known(PermGroup(n, gens), order);

  auto explore = [&](auto&& self, std::size_t d) -> void {
    if (d == order.size()) return;
    const int a = order[d];
    state.assign(a, a);
    self(self, d + 1);
    state.unassign(a);

    std::vector<bool> failed(n, false);
    for (int b = 0; b < n; ++b) {
      if (b == a || failed[b] || !state.compatible(a, b)) continue;
      if (known.levels()[d].position[b] >= 0) continue;
      state.assign(a, b);
      Permutation found;
      const bool ok = state.tests_pass(d) && state.first_solution(d + 1, found);
      state.unassign(a);
      if (ok) {
        gens.push_back(found);
        known = StabChain(PermGroup(n, gens), order);
      } else {
        for (int x : orbit_of(PermGroup(n, known.levels()[d].generators), b)) failed[x] = true;
      }
    }
  };
  explore(explore, 0);
  return reduce_generators(PermGroup(n, known.group().generators()));
}

}  // namespace permdeg
