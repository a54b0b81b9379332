#include "permdeg/stab_chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permdeg {

namespace {

bool fixes_all(const Permutation& p, std::span<const int> points) {
  for (int b : points)
    if (p(b) != b) return false;
  return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group order exceeds 64 bits");
  return r;
}

}  // namespace

StabChain::StabChain(const PermGroup& group, std::span<const int> base_prefix) : group_(group) {
  const int n = group.degree();
  std::vector<int> base;
  for (int b : base_prefix) {
    if (b < 0 || b >= n) throw std::invalid_argument("base point out of range");
    if (std::find(base.begin(), base.end(), b) != base.end())
      throw std::invalid_argument("repeated base point");
    base.push_back(b);
  }
  for (const auto& g : group.generators()) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    strong_.push_back(g);
    if (fixes_all(g, base)) base.push_back(g.smallest_moved_point());
  }
  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) levels_[i].base_point = base[i];

  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t cur = i - 1;
    rebuild_level(cur);
    bool extended = false;
    const ChainLevel& level = levels_[cur];
    for (std::size_t x = 0; !extended && x < level.orbit.size(); ++x) {
      for (const auto& s : level.generators) {
        const int y = s(level.orbit[x]);
        Permutation schreier =
            compose(compose(level.transversal[x], s), level.inverse_transversal[level.position[y]]);
        if (schreier.is_identity()) continue;
        SiftResult r = sift_from(schreier, cur + 1);
        if (r.residue.is_identity()) continue;
        strong_.push_back(r.residue);
        if (r.level == levels_.size()) {
          ChainLevel fresh;
          fresh.base_point = r.residue.smallest_moved_point();
          levels_.push_back(std::move(fresh));
        }
        i = r.level + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& level : levels_) order_ = checked_mul(order_, level.orbit.size());
}

void StabChain::rebuild_level(std::size_t i) {
  ChainLevel& level = levels_[i];
  std::vector<int> earlier;
  for (std::size_t j = 0; j < i; ++j) earlier.push_back(levels_[j].base_point);
  level.generators.clear();
  for (const auto& s : strong_)
    if (fixes_all(s, earlier)) level.generators.push_back(s);

  const int n = degree();
  level.position.fill(-1);
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation(n));
  level.position[level.base_point] = 0;
  for (std::size_t x = 0; x < level.orbit.size(); ++x) {
    for (const auto& s : level.generators) {
      const int y = s(level.orbit[x]);
      if (level.position[y] >= 0) continue;
      level.position[y] = static_cast<std::int16_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(compose(level.transversal[x], s));
    }
  }
  level.inverse_transversal.clear();
  for (const auto& t : level.transversal) level.inverse_transversal.push_back(t.inverse());
}

SiftResult StabChain::sift_from(Permutation p, std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    const ChainLevel& lv = levels_[l];
    const int pos = lv.position[p(lv.base_point)];
    if (pos < 0) return {p, l};
    if (pos != 0) p = compose(p, lv.inverse_transversal[pos]);
  }
  return {p, levels_.size()};
}

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  for (const auto& level : levels_) b.push_back(level.base_point);
  return b;
}

SiftResult StabChain::sift(const Permutation& p) const {
  if (p.degree() != degree())
    throw std::invalid_argument("sift: degree " + std::to_string(p.degree()) +
                                " differs from chain degree " + std::to_string(degree()));
  return sift_from(p, 0);
}

bool StabChain::contains(const Permutation& p) const { return sift(p).residue.is_identity(); }

std::uint64_t StabChain::rank(const Permutation& p) const {
  if (p.degree() != degree()) throw std::invalid_argument("rank: degree mismatch");
  std::uint64_t r = 0;
  Permutation h = p;
  for (const auto& lv : levels_) {
    const int pos = lv.position[h(lv.base_point)];
    if (pos < 0) throw std::invalid_argument("rank: element not in group");
    r = r * lv.orbit.size() + static_cast<std::uint64_t>(pos);
    if (pos != 0) h = compose(h, lv.inverse_transversal[pos]);
  }
  if (!h.is_identity()) throw std::invalid_argument("rank: element not in group");
  return r;
}

Permutation StabChain::unrank(std::uint64_t rank) const {
  if (rank >= order_) throw std::out_of_range("unrank: rank exceeds group order");
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t l = levels_.size(); l-- > 0;) {
    digits[l] = rank % levels_[l].orbit.size();
    rank /= levels_[l].orbit.size();
  }
  Permutation g(degree());
  for (std::size_t l = 0; l < levels_.size(); ++l) g = compose(levels_[l].transversal[digits[l]], g);
  return g;
}

bool StabChain::verify() const {
  for (const auto& g : group_.generators())
    if (!contains(g)) return false;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const ChainLevel& level = levels_[i];
    for (std::size_t x = 0; x < level.orbit.size(); ++x) {
      if (level.transversal[x](level.base_point) != level.orbit[x]) return false;
      for (const auto& s : level.generators) {
        const int y = s(level.orbit[x]);
        if (level.position[y] < 0) return false;
        Permutation schreier =
            compose(compose(level.transversal[x], s), level.inverse_transversal[level.position[y]]);
        if (!sift_from(schreier, i + 1).residue.is_identity()) return false;
      }
    }
  }
  return true;
}

ElementWalker::ElementWalker(const StabChain& chain)
    : chain_(&chain), digits_(chain.levels().size(), 0), partial_(chain.levels().size()) {
  if (!digits_.empty()) refresh_from(0);
}

void ElementWalker::refresh_from(std::size_t level) {
  const auto& levels = chain_->levels();
  for (std::size_t l = level; l < levels.size(); ++l) {
    const Permutation& t = levels[l].transversal[digits_[l]];
    partial_[l] = l == 0 ? t : compose(t, partial_[l - 1]);
  }
}

std::optional<Permutation> ElementWalker::next() {
  if (done_) return std::nullopt;
  const auto& levels = chain_->levels();
  if (!started_) {
    started_ = true;
    if (levels.empty()) {
      done_ = true;
      return Permutation(chain_->degree());
    }
    return partial_.back();
  }
  std::size_t l = levels.size();
  while (l > 0 && static_cast<std::size_t>(digits_[l - 1]) + 1 >= levels[l - 1].orbit.size()) --l;
  if (l == 0) {
    done_ = true;
    return std::nullopt;
  }
  ++digits_[l - 1];
  for (std::size_t j = l; j < digits_.size(); ++j) digits_[j] = 0;
  refresh_from(l - 1);
  return partial_.back();
}

ElementsOfOrder::ElementsOfOrder(const StabChain& chain, std::uint64_t k) : walker_(chain), k_(k) {
  if (k < 1) throw std::invalid_argument("elements_of_order: k must be >= 1");
}

std::optional<Permutation> ElementsOfOrder::next() {
  while (auto g = walker_.next())
    if (element_order(*g) == k_) return g;
  return std::nullopt;
}

std::uint64_t group_order(const StabChain& chain) { return chain.order(); }
std::uint64_t group_order(const PermGroup& g) { return StabChain(g).order(); }

bool contains(const StabChain& chain, const Permutation& p) { return chain.contains(p); }

std::vector<int> orbit_of(const PermGroup& g, int point) {
  if (point < 0 || point >= g.degree()) throw std::invalid_argument("orbit_of: point out of range");
  std::vector<int> orbit{point};
  std::vector<bool> seen(g.degree(), false);
  seen[point] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : g.generators()) {
      const int y = s(orbit[i]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  return orbit;
}

PermGroup point_stabilizer(const StabChain& chain, int point) {
  if (point < 0 || point >= chain.degree())
    throw std::invalid_argument("point_stabilizer: point " + std::to_string(point + 1) +
                                " out of range");
  const int prefix[] = {point};
  StabChain rebased(PermGroup(chain.degree(), chain.strong_generators()), prefix);
  if (rebased.levels().size() < 2) return PermGroup(chain.degree());
  return PermGroup(chain.degree(), rebased.levels()[1].generators);
}

}  // namespace permdeg
