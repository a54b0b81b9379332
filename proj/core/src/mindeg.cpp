#include "permdeg/mindeg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "permdeg/group_ops.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Bits meet(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

Bits element_bits(const StabChain& g, const std::vector<Permutation>& elements) {
  Bits b((g.order() + 63) / 64, 0);
  for (const auto& x : elements) {
    const std::uint64_t r = g.rank(x);
    b[r / 64] |= std::uint64_t{1} << (r % 64);
  }
  return b;
}

struct Option {
  std::size_t class_index;
  std::uint64_t degree;
  Bits core;
};

class MuSearch {
 public:
  MuSearch(std::vector<Option> options, std::size_t max_depth, std::uint64_t bound)
      : options_(std::move(options)), max_depth_(max_depth), best_(bound) {}

  void run(const Bits& whole) { descend(0, 0, whole); }

  std::uint64_t best() const { return best_; }
  const std::vector<std::size_t>& best_choice() const { return best_choice_; }

 private:
  void descend(std::size_t start, std::uint64_t sum, const Bits& current) {
    if (popcount(current) == 1) {
      if (sum < best_) {
        best_ = sum;
        best_choice_ = chosen_;
      }
      return;
    }
    if (chosen_.size() == max_depth_) return;
    for (std::size_t i = start; i < options_.size(); ++i) {
      if (sum + options_[i].degree >= best_) break;  // options ascend by degree
      Bits next = meet(current, options_[i].core);
      if (next == current) continue;
      chosen_.push_back(i);
      descend(i + 1, sum + options_[i].degree, next);
      chosen_.pop_back();
    }
  }

  std::vector<Option> options_;
  std::size_t max_depth_;
  std::uint64_t best_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_choice_;
};

}  // namespace

MuResult mu(const PermGroup& g, const MuOptions& options) {
  const StabChain gc(g);
  const std::uint64_t order = gc.order();
  if (order > kMuOrderCap)
    throw OrderCapExceeded("mu: group order " + std::to_string(order) + " exceeds " + std::to_string(kMuOrderCap));
  MuResult result;
  if (order == 1) return result;

  const auto classes = subgroup_classes(g, options.enumeration);

  std::vector<Option> opts;
  std::vector<Bits> normals;
  std::vector<Bits> seen_cores;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const SubgroupClass& c = classes[i];
    const StabChain hc(c.representative);
    if (c.class_size == 1) {
      std::vector<Permutation> elements;
      hc.for_each_element([&](const Permutation& x) {
        elements.push_back(x);
        return true;
      });
      normals.push_back(element_bits(gc, elements));
    }
    if (c.order == order) continue;
    opts.push_back({i, order / c.order, element_bits(gc, core_elements(gc, hc))});
  }
  std::stable_sort(opts.begin(), opts.end(), [](const Option& a, const Option& b) { return a.degree < b.degree; });
  // of several classes with one core only the smallest index can help
  std::vector<Option> distinct;
  for (auto& o : opts) {
    if (std::find(seen_cores.begin(), seen_cores.end(), o.core) != seen_cores.end()) continue;
    seen_cores.push_back(o.core);
    distinct.push_back(std::move(o));
  }

  std::size_t minimal_normals = 0;
  for (const auto& n : normals) {
    if (popcount(n) == 1) continue;
    bool minimal = true;
    for (const auto& m : normals)
      if (popcount(m) > 1 && m != n && subset(m, n)) {
        minimal = false;
        break;
      }
    if (minimal) ++minimal_normals;
  }

  // the given action is faithful, so its moved points bound the answer
  std::uint64_t moved = 0;
  for (int a = 0; a < g.degree(); ++a)
    for (const auto& s : g.generators())
      if (s(a) != a) {
        ++moved;
        break;
      }
  Bits whole((order + 63) / 64, 0);
  for (std::uint64_t r = 0; r < order; ++r) whole[r / 64] |= std::uint64_t{1} << (r % 64);

  MuSearch search(distinct, minimal_normals, moved + 1);
  search.run(whole);
  if (search.best_choice().empty()) throw std::logic_error("mu: no faithful collection found");
  result.value = search.best();
  for (std::size_t i : search.best_choice()) {
    result.witness.push_back(classes[distinct[i].class_index]);
    result.degrees.push_back(distinct[i].degree);
  }
  return result;
}

MinEmbFilter::MinEmbFilter(int degree, std::vector<SubgroupClass> smaller_classes)
    : degree_(degree), smaller_(std::move(smaller_classes)) {
  if (degree < 2) throw std::invalid_argument("minimal embedding: degree must be at least 2");
  for (const auto& c : smaller_)
    if (c.representative.degree() != degree - 1)
      throw std::invalid_argument("minimal embedding: comparison classes must live on " +
                                  std::to_string(degree - 1) + " points");
}

bool MinEmbFilter::minimally_embedded(const PermGroup& g) {
  if (g.degree() != degree_) throw std::invalid_argument("minimal embedding: degree mismatch");
  // a fixed point puts g inside a copy of Sym(m-1)
  for (int a = 0; a < degree_; ++a) {
    bool fixed = true;
    for (const auto& s : g.generators())
      if (s(a) != a) {
        fixed = false;
        break;
      }
    if (fixed) return false;
  }
  const std::uint64_t order = group_order(g);
  std::shared_ptr<PreparedGroup> mine;
  for (const auto& c : smaller_) {
    if (c.order != order) continue;
    if (!mine) mine = std::make_shared<PreparedGroup>(g);
    auto& other = prepared_[c.class_id];
    if (!other) other = std::make_shared<PreparedGroup>(c.representative);
    if (find_isomorphism(*mine, *other)) return false;
  }
  return true;
}

bool is_minimally_embedded(const PermGroup& g, MinEmbMethod method) {
  const int m = g.degree();
  if (method == MinEmbMethod::direct_mu) return mu(g).value == static_cast<std::uint64_t>(m);
  if (m < 2) return false;
  MinEmbFilter filter(m, subgroup_classes(symmetric_group(m - 1)));
  return filter.minimally_embedded(g);
}

}  // namespace permdeg
