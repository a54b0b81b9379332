#include "permdeg/iso.hpp"

#include <numeric>
#include <string>

#include "permdeg/group_ops.hpp"

namespace permdeg {

namespace {

Permutation pair_perm(const Permutation& g, const Permutation& h) {
  const int dg = g.degree();
  std::vector<int> images(dg + h.degree());
  for (int i = 0; i < dg; ++i) images[i] = g(i);
  for (int j = 0; j < h.degree(); ++j) images[dg + j] = dg + h(j);
  return Permutation::from_images(images);
}

struct GraphOrders {
  std::uint64_t graph = 0;
  std::uint64_t kernel = 0;
};

GraphOrders graph_orders(int dg, int dh, const std::vector<Permutation>& src, const std::vector<Permutation>& img) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < src.size(); ++i) gens.push_back(pair_perm(src[i], img[i]));
  const StabChain c(PermGroup(dg + dh, gens), full_base(dg));
  GraphOrders r{c.order(), 1};
  for (std::size_t l = static_cast<std::size_t>(dg); l < c.levels().size(); ++l) r.kernel *= c.levels()[l].orbit.size();
  return r;
}

std::uint64_t generated_order(int degree, const std::vector<Permutation>& gens) {
  return StabChain(PermGroup(degree, gens)).order();
}

}  // namespace

bool IsoProfile::same_invariants(const IsoProfile& o) const {
  return order == o.order && element_orders == o.element_orders && abelian == o.abelian &&
         center_order == o.center_order && derived_series == o.derived_series && class_sizes == o.class_sizes;
}

PreparedGroup::PreparedGroup(const PermGroup& g) : group_(g), chain_(std::make_shared<const StabChain>(g)) {
  const std::uint64_t order = chain_->order();
  if (order > kIsoOrderCap)
    throw OrderCapExceeded("isomorphism test: group order " + std::to_string(order) + " exceeds " +
                           std::to_string(kIsoOrderCap));
  const int n = g.degree();
  IsoProfile& p = profile_;
  p.order = order;

  // conjugacy classes by orbits of the generators acting by conjugation
  class_of_.assign(order, UINT32_MAX);
  std::vector<Permutation> queue;
  for (std::uint64_t r = 0; r < order; ++r) {
    if (class_of_[r] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(class_size_.size());
    class_of_[r] = id;
    queue.assign(1, chain_->unrank(r));
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : g.generators()) {
        const Permutation y = conjugate(queue[i], s);
        const std::uint64_t ry = chain_->rank(y);
        if (class_of_[ry] == UINT32_MAX) {
          class_of_[ry] = id;
          queue.push_back(y);
        }
      }
    class_size_.push_back(queue.size());
    class_reps_.push_back(queue.front());
    ++p.class_sizes[queue.size()];
  }
  chain_->for_each_element([&](const Permutation& x) {
    ++p.element_orders[element_order(x)];
    return true;
  });
  p.center_order = p.class_sizes.count(1) ? p.class_sizes.at(1) : 0;
  p.abelian = p.center_order == order;

  PermGroup level = g;
  std::uint64_t level_order = order;
  p.derived_series.push_back(level_order);
  while (level_order > 1) {
    PermGroup next = derived_subgroup(level);
    const std::uint64_t next_order = generated_order(n, next.generators());
    if (next_order == level_order) break;
    p.derived_series.push_back(next_order);
    level = std::move(next);
    level_order = next_order;
  }

  // greedy generating tuple: a class representative of largest order, then
  // the element (among the first few outside the current subgroup) that
  // enlarges it most
  if (order > 1) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < class_reps_.size(); ++i)
      if (element_order(class_reps_[i]) > element_order(class_reps_[best])) best = i;
    p.generating_tuple.push_back(class_reps_[best]);
    std::uint64_t current = generated_order(n, p.generating_tuple);
    while (current < order) {
      const StabChain sub(PermGroup(n, p.generating_tuple));
      std::optional<Permutation> pick;
      std::uint64_t pick_order = 0;
      std::size_t tried = 0;
      ElementWalker walk(*chain_);
      while (auto x = walk.next()) {
        if (sub.contains(*x)) continue;
        std::vector<Permutation> trial = p.generating_tuple;
        trial.push_back(*x);
        const std::uint64_t o = generated_order(n, trial);
        if (o > pick_order) {
          pick = *x;
          pick_order = o;
        }
        if (o == order || ++tried >= 256) break;
      }
      p.generating_tuple.push_back(*pick);
      current = pick_order;
    }
  }
}

std::uint64_t PreparedGroup::class_size_of(const Permutation& x) const {
  return class_size_[class_of_[chain_->rank(x)]];
}

IsoProfile invariant_profile(const PermGroup& g) { return PreparedGroup(g).profile(); }

class IsoSearch {
 public:
  IsoSearch(const PreparedGroup& g, const PreparedGroup& h) : g_(g), h_(h) {
    const auto& tuple = g.profile().generating_tuple;
    const int n = g.group().degree();
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      prefix_orders_.push_back(
          generated_order(n, std::vector<Permutation>(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(i) + 1)));
      const std::uint64_t ord = element_order(tuple[i]);
      const std::uint64_t cls = g.class_size_of(tuple[i]);
      std::vector<Permutation> options;
      if (i == 0) {
        for (const auto& r : h.class_reps_)
          if (element_order(r) == ord && h.class_size_of(r) == cls) options.push_back(r);
      } else {
        h.chain().for_each_element([&](const Permutation& x) {
          if (element_order(x) == ord && h.class_size_of(x) == cls) options.push_back(x);
          return true;
        });
      }
      options_.push_back(std::move(options));
    }
  }

  std::optional<IsoCertificate> run() {
    const auto& tuple = g_.profile().generating_tuple;
    if (tuple.empty()) {
      IsoCertificate c;
      c.graph_order = c.kernel_order = c.image_order = 1;
      return c;
    }
    std::vector<Permutation> chosen;
    if (!descend(chosen)) return std::nullopt;
    IsoCertificate c;
    c.source = tuple;
    c.image = chosen;
    const auto orders = graph_orders(g_.group().degree(), h_.group().degree(), c.source, c.image);
    c.graph_order = orders.graph;
    c.kernel_order = orders.kernel;
    c.image_order = generated_order(h_.group().degree(), c.image);
    return c;
  }

 private:
  bool descend(std::vector<Permutation>& chosen) {
    const std::size_t i = chosen.size();
    const auto& tuple = g_.profile().generating_tuple;
    if (i == tuple.size()) return true;
    const std::vector<Permutation> src(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (const auto& x : options_[i]) {
      chosen.push_back(x);
      if (generated_order(h_.group().degree(), chosen) == prefix_orders_[i]) {
        const auto orders = graph_orders(g_.group().degree(), h_.group().degree(), src, chosen);
        if (orders.graph == prefix_orders_[i] && orders.kernel == 1 && descend(chosen)) return true;
      }
      chosen.pop_back();
    }
    return false;
  }

  const PreparedGroup& g_;
  const PreparedGroup& h_;
  std::vector<std::uint64_t> prefix_orders_;
  std::vector<std::vector<Permutation>> options_;
};

std::optional<IsoCertificate> find_isomorphism(const PreparedGroup& g, const PreparedGroup& h) {
  if (!g.profile().same_invariants(h.profile())) return std::nullopt;
  return IsoSearch(g, h).run();
}

std::optional<IsoCertificate> find_isomorphism(const PermGroup& g, const PermGroup& h) {
  const StabChain gc(g), hc(h);
  if (gc.order() != hc.order()) return std::nullopt;
  return find_isomorphism(PreparedGroup(g), PreparedGroup(h));
}

bool is_isomorphic(const PermGroup& g, const PermGroup& h) { return find_isomorphism(g, h).has_value(); }

bool check_certificate(const PermGroup& g, const PermGroup& h, const IsoCertificate& cert) {
  if (cert.source.size() != cert.image.size()) return false;
  const std::uint64_t go = group_order(g);
  const std::uint64_t ho = group_order(h);
  if (generated_order(g.degree(), cert.source) != go) return false;
  const StabChain hc(h);
  for (const auto& x : cert.image)
    if (!hc.contains(x)) return false;
  if (generated_order(h.degree(), cert.image) != ho) return false;
  const auto orders = graph_orders(g.degree(), h.degree(), cert.source, cert.image);
  return orders.graph == go && orders.kernel == 1 && go == ho;
}

}  // namespace permdeg
