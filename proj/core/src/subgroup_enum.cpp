#include "permdeg/subgroup_enum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "permdeg/conjugacy_search.hpp"
#include "permdeg/group_ops.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

namespace {

using Clock = std::chrono::steady_clock;

bool is_prime_power(std::uint64_t k) {
  if (k < 2) return false;
  std::uint64_t p = 2;
  while (k % p) ++p;
  while (k % p == 0) k /= p;
  return k == 1;
}

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t p = 2; p * p <= k; ++p)
    if (k % p == 0) return false;
  return true;
}

bool is_even(const Permutation& p) {
  int transpositions = 0;
  for (int len : p.cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

Permutation lexmin_in_coset(const StabChain& full, Permutation x, std::size_t start) {
  const auto& levels = full.levels();
  for (std::size_t l = start; l < levels.size(); ++l) {
    const ChainLevel& level = levels[l];
    if (level.orbit.size() == 1) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < level.orbit.size(); ++i)
      if (x(level.orbit[i]) < x(level.orbit[best])) best = i;
    if (best != 0) x = compose(level.transversal[best], x);
  }
  return x;
}

// `full` must have base 0..n-1.
std::string key_of(const StabChain& full) {
  std::string key;
  const int n = full.degree();
  const auto& levels = full.levels();
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const ChainLevel& level = levels[l];
    if (level.orbit.size() == 1) continue;
    std::vector<std::size_t> idx(level.orbit.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return level.orbit[a] < level.orbit[b]; });
    key.push_back(static_cast<char>(l));
    key.push_back(static_cast<char>(level.orbit.size()));
    for (std::size_t i : idx) {
      if (i == 0) continue;
      const Permutation c = lexmin_in_coset(full, level.transversal[i], l + 1);
      for (int a = 0; a < n; ++a) key.push_back(static_cast<char>(c(a)));
    }
  }
  return key;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Dense indexing of the ambient group's elements: Lehmer codes for the full
// symmetric group, chain ranks otherwise.
class AmbientIndex {
 public:
  explicit AmbientIndex(const PermGroup& a) : chain_(a), n_(a.degree()) {
    symmetric_ = chain_.order() == factorial(n_);
    fact_.resize(n_ + 1);
    for (int i = 0; i <= n_; ++i) fact_[i] = factorial(i);
  }

  bool symmetric() const { return symmetric_; }
  std::uint64_t size() const { return chain_.order(); }
  const StabChain& chain() const { return chain_; }

  std::uint64_t rank(const Permutation& p) const {
    if (!symmetric_) return chain_.rank(p);
    std::uint64_t r = 0;
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j)
        if (p(j) < p(i)) ++smaller;
      r += static_cast<std::uint64_t>(smaller) * fact_[n_ - 1 - i];
    }
    return r;
  }

  Permutation unrank(std::uint64_t r) const {
    if (!symmetric_) return chain_.unrank(r);
    std::vector<int> avail(n_);
    for (int i = 0; i < n_; ++i) avail[i] = i;
    std::vector<int> images(n_);
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t f = fact_[n_ - 1 - i];
      const auto d = static_cast<std::size_t>(r / f);
      r %= f;
      images[i] = avail[d];
      avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation::from_images(images);
  }

 private:
  StabChain chain_;
  int n_;
  bool symmetric_ = false;
  std::vector<std::uint64_t> fact_;
};

struct Candidate {
  PermGroup group;
  std::shared_ptr<const StabChain> chain;  // full base
  std::string key;
};

struct ClassData {
  PermGroup rep;
  std::shared_ptr<const StabChain> chain;
  Fingerprint fp;
  std::shared_ptr<const ConjugacyProfile> profile;
  PermGroup normalizer;
  std::shared_ptr<const StabChain> normalizer_chain;
};

template <class Work>
void parallel_for(std::size_t count, int threads, Work&& work) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

class Enumerator {
 public:
  Enumerator(const PermGroup& ambient, const EnumerationOptions& options)
      : ambient_(ambient), index_(ambient), options_(options), n_(ambient.degree()), start_(Clock::now()) {}

  std::vector<SubgroupClass> run() {
    std::vector<std::size_t> frontier;
    frontier.push_back(*merge(make_candidate({})));
    if (options_.strategy == EnumerationStrategy::cyclic_extension)
      for (auto& c : perfect_seeds())
        if (auto id = merge(std::move(c))) frontier.push_back(*id);

    while (!frontier.empty()) {
      std::vector<std::vector<Candidate>> found(frontier.size());
      parallel_for(frontier.size(), options_.threads, [&](std::size_t i) {
        ClassData& h = classes_[frontier[i]];
        compute_normalizer(h);
        found[i] = options_.strategy == EnumerationStrategy::element_bfs ? extend_by_elements(h)
                                                                          : extend_cyclic(h);
      });
      std::vector<std::size_t> next;
      for (auto& list : found)
        for (auto& c : list)
          if (auto id = merge(std::move(c))) next.push_back(*id);
      frontier = std::move(next);
    }

    std::vector<SubgroupClass> out;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const ClassData& c = classes_[i];
      SubgroupClass s;
      s.class_id = i;
      s.representative = c.rep;
      s.order = c.chain->order();
      s.normalizer_order = c.normalizer_chain->order();
      s.class_size = index_.size() / s.normalizer_order;
      s.fingerprint = c.fp;
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  void check_time() const {
    if (options_.time_limit_seconds <= 0) return;
    const std::chrono::duration<double> elapsed = Clock::now() - start_;
    if (elapsed.count() > options_.time_limit_seconds)
      throw ResourceLimitExceeded("subgroup enumeration exceeded its time budget of " +
                                  std::to_string(options_.time_limit_seconds) + " s");
  }

  Candidate make_candidate(std::vector<Permutation> gens) const {
    Candidate c;
    c.group = PermGroup(n_, std::move(gens));
    c.chain = std::make_shared<const StabChain>(c.group, full_base(n_));
    c.key = key_of(*c.chain);
    return c;
  }

  void compute_normalizer(ClassData& h) const {
    if (index_.symmetric()) {
      h.normalizer = normalizer_in_sym(h.rep);
    } else {
      std::vector<Permutation> gens = h.rep.generators();
      StabChain found(PermGroup(n_, gens));
      ElementWalker walk(index_.chain());
      std::size_t steps = 0;
      while (auto a = walk.next()) {
        if ((++steps & 1023) == 0) check_time();
        if (found.contains(*a)) continue;
        bool normalizes = true;
        for (const auto& x : h.chain->strong_generators())
          if (!h.chain->contains(conjugate(x, *a))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        gens.push_back(*a);
        found = StabChain(PermGroup(n_, gens));
      }
      h.normalizer = reduce_generators(PermGroup(n_, gens));
    }
    h.normalizer_chain = std::make_shared<const StabChain>(h.normalizer);
  }

  bool conjugate_in_ambient(const Candidate& c, std::shared_ptr<const ConjugacyProfile>& c_profile,
                            ClassData& target) const {
    if (index_.symmetric()) {
      if (!c_profile) c_profile = std::make_shared<const ConjugacyProfile>(c.chain);
      if (!target.profile) target.profile = std::make_shared<const ConjugacyProfile>(target.chain);
      return find_conjugator(*c_profile, *target.profile).has_value();
    }
    ElementWalker walk(index_.chain());
    while (auto a = walk.next()) {
      bool maps = true;
      for (const auto& x : c.chain->strong_generators())
        if (!target.chain->contains(conjugate(x, *a))) {
          maps = false;
          break;
        }
      if (maps) return true;
    }
    return false;
  }

  // Index of a newly created class, or nothing when c is conjugate to a known one.
  std::optional<std::size_t> merge(Candidate&& c) {
    if (exact_.count(c.key)) return std::nullopt;
    check_time();
    auto& bucket = buckets_[bucket_key(*c.chain)];
    std::optional<Fingerprint> fp;
    if (!bucket.empty()) {
      fp = fingerprint(*c.chain);
      std::shared_ptr<const ConjugacyProfile> profile;
      for (std::size_t id : bucket) {
        if (classes_[id].fp != *fp) continue;
        if (conjugate_in_ambient(c, profile, classes_[id])) {
          exact_.emplace(std::move(c.key), id);
          return std::nullopt;
        }
      }
    } else {
      fp = fingerprint(*c.chain);
    }
    if (classes_.size() >= options_.max_classes)
      throw ResourceLimitExceeded("subgroup enumeration exceeded its budget of " +
                                  std::to_string(options_.max_classes) + " classes");
    const std::size_t id = classes_.size();
    ClassData d;
    d.rep = reduce_generators(c.group);
    d.chain = c.chain;
    d.fp = std::move(*fp);
    classes_.push_back(std::move(d));
    exact_.emplace(std::move(c.key), id);
    bucket.push_back(id);
    return id;
  }

  std::vector<Candidate> extend_by_elements(const ClassData& h) const {
    std::vector<bool> seen(index_.size(), false);
    h.chain->for_each_element([&](const Permutation& x) {
      seen[index_.rank(x)] = true;
      return true;
    });
    const auto& hgens = h.rep.generators();
    const auto& ngens = h.normalizer.generators();
    std::vector<Candidate> out;
    std::unordered_set<std::string> keys;
    std::vector<Permutation> queue;
    std::size_t steps = 0;
    for (std::uint64_t r = 0; r < index_.size(); ++r) {
      if (seen[r]) continue;
      seen[r] = true;
      queue.assign(1, index_.unrank(r));
      std::optional<Permutation> pick;
      auto visit = [&](const Permutation& z) {
        const std::uint64_t rz = index_.rank(z);
        if (!seen[rz]) {
          seen[rz] = true;
          queue.push_back(z);
        }
      };
      for (std::size_t i = 0; i < queue.size(); ++i) {
        if ((++steps & 4095) == 0) check_time();
        const Permutation y = queue[i];
        if (!pick && is_prime_power(element_order(y))) pick = y;
        for (const auto& g : hgens) {
          visit(compose(g, y));
          visit(compose(y, g));
        }
        for (const auto& g : ngens) visit(conjugate(y, g));
      }
      if (!pick) continue;
      std::vector<Permutation> gens = hgens;
      gens.push_back(*pick);
      Candidate c = make_candidate(std::move(gens));
      if (keys.insert(c.key).second) out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<Candidate> extend_cyclic(const ClassData& h) const {
    const StabChain& nc = *h.normalizer_chain;
    std::vector<bool> seen(nc.order(), false);
    h.chain->for_each_element([&](const Permutation& x) {
      seen[nc.rank(x)] = true;
      return true;
    });
    const auto& hgens = h.rep.generators();
    const auto& ngens = h.normalizer.generators();
    std::vector<Candidate> out;
    std::unordered_set<std::string> keys;
    std::vector<Permutation> queue;
    std::size_t steps = 0;
    for (std::uint64_t r = 0; r < nc.order(); ++r) {
      if (seen[r]) continue;
      seen[r] = true;
      const Permutation z = nc.unrank(r);
      queue.assign(1, z);
      auto visit = [&](const Permutation& y) {
        const std::uint64_t ry = nc.rank(y);
        if (!seen[ry]) {
          seen[ry] = true;
          queue.push_back(y);
        }
      };
      for (std::size_t i = 0; i < queue.size(); ++i) {
        if ((++steps & 4095) == 0) check_time();
        const Permutation y = queue[i];
        for (const auto& g : hgens) visit(compose(y, g));
        for (const auto& g : ngens) visit(conjugate(y, g));
      }
      // order of the coset Hz in N/H
      std::uint64_t k = 1;
      Permutation power = z;
      while (!h.chain->contains(power)) {
        power = compose(power, z);
        ++k;
      }
      if (!is_prime(k)) continue;
      std::vector<Permutation> gens = hgens;
      gens.push_back(z);
      Candidate c = make_candidate(std::move(gens));
      if (keys.insert(c.key).second) out.push_back(std::move(c));
    }
    return out;
  }

  // Perfect subgroups <a, b> of order at least 60, with a running over
  // conjugacy class representatives and b over orbits of C(a) x <a>.
  std::vector<Candidate> perfect_seeds() const {
    const std::uint64_t size = index_.size();
    std::vector<Permutation> reps;
    {
      std::vector<bool> seen(size, false);
      std::vector<Permutation> queue;
      for (std::uint64_t r = 0; r < size; ++r) {
        if (seen[r]) continue;
        seen[r] = true;
        queue.assign(1, index_.unrank(r));
        for (std::size_t i = 0; i < queue.size(); ++i)
          for (const auto& g : ambient_.generators()) {
            const Permutation y = conjugate(queue[i], g);
            const std::uint64_t ry = index_.rank(y);
            if (!seen[ry]) {
              seen[ry] = true;
              queue.push_back(y);
            }
          }
        reps.push_back(queue.front());
      }
    }

    std::vector<Candidate> out;
    std::unordered_set<std::string> keys;
    std::size_t steps = 0;
    for (const auto& a : reps) {
      if (a.is_identity() || !is_even(a)) continue;
      const PermGroup cyclic(n_, {a});
      PermGroup centralizer;
      if (index_.symmetric()) {
        centralizer = centralizer_in_sym(cyclic);
      } else {
        std::vector<Permutation> gens;
        ElementWalker walk(index_.chain());
        while (auto x = walk.next())
          if (commute(*x, a)) gens.push_back(*x);
        centralizer = reduce_generators(PermGroup(n_, gens));
      }
      std::vector<bool> seen(size, false);
      std::vector<Permutation> queue;
      for (std::uint64_t r = 0; r < size; ++r) {
        if (seen[r]) continue;
        const Permutation b = index_.unrank(r);
        if (!is_even(b)) continue;  // every orbit element has b's parity
        seen[r] = true;
        queue.assign(1, b);
        for (std::size_t i = 0; i < queue.size(); ++i) {
          if ((++steps & 4095) == 0) check_time();
          auto visit = [&](const Permutation& y) {
            const std::uint64_t ry = index_.rank(y);
            if (!seen[ry]) {
              seen[ry] = true;
              queue.push_back(y);
            }
          };
          visit(compose(a, queue[i]));
          for (const auto& g : centralizer.generators()) visit(conjugate(queue[i], g));
        }
        const PermGroup k(n_, {a, b});
        const StabChain kc(k);
        if (kc.order() < 60) continue;
        if (StabChain(derived_subgroup(k)).order() != kc.order()) continue;
        Candidate c = make_candidate({a, b});
        if (keys.insert(c.key).second) out.push_back(std::move(c));
      }
    }
    return out;
  }

  const PermGroup& ambient_;
  AmbientIndex index_;
  EnumerationOptions options_;
  int n_;
  Clock::time_point start_;
  std::vector<ClassData> classes_;
  std::unordered_map<std::string, std::size_t> exact_;
  std::map<BucketKey, std::vector<std::size_t>> buckets_;
};

}  // namespace

std::string exact_subgroup_key(const PermGroup& g) {
  return key_of(StabChain(g, full_base(g.degree())));
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& ambient, const EnumerationOptions& options) {
  return Enumerator(ambient, options).run();
}

std::vector<PermGroup> brute_force_subgroups(const PermGroup& ambient) {
  const StabChain chain(ambient);
  const std::uint64_t order = chain.order();
  if (order > 5040)
    throw OrderCapExceeded("brute_force_subgroups: ambient order " + std::to_string(order) + " exceeds 5040");
  const auto size = static_cast<std::size_t>(order);
  std::vector<Permutation> elements(size);
  for (std::size_t i = 0; i < size; ++i) elements[i] = chain.unrank(i);
  std::vector<std::uint16_t> mul(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      mul[i * size + j] = static_cast<std::uint16_t>(chain.rank(compose(elements[i], elements[j])));

  using Bits = std::vector<std::uint64_t>;
  const std::size_t words = (size + 63) / 64;
  auto has = [](const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; };
  auto closure = [&](const std::vector<std::size_t>& gens) {
    Bits bits(words, 0);
    std::vector<std::size_t> list{0};  // rank 0 is the identity
    bits[0] |= 1;
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t g : gens) {
        const std::size_t y = mul[list[i] * size + g];
        if (!has(bits, y)) {
          bits[y / 64] |= std::uint64_t{1} << (y % 64);
          list.push_back(y);
        }
      }
    return bits;
  };
  struct BitsHash {
    std::size_t operator()(const Bits& b) const {
      std::size_t h = 0;
      for (auto w : b) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
      return h;
    }
  };

  std::vector<std::pair<Bits, std::vector<std::size_t>>> found;
  std::unordered_set<Bits, BitsHash> seen;
  found.emplace_back(closure({}), std::vector<std::size_t>{});
  seen.insert(found.front().first);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 1; g < size; ++g) {
      if (has(found[i].first, g)) continue;
      std::vector<std::size_t> gens = found[i].second;
      gens.push_back(g);
      Bits b = closure(gens);
      if (seen.insert(b).second) found.emplace_back(std::move(b), std::move(gens));
    }
  }

  std::vector<PermGroup> out;
  for (const auto& [bits, gens] : found) {
    std::vector<Permutation> g;
    for (std::size_t x : gens) g.push_back(elements[x]);
    out.emplace_back(ambient.degree(), std::move(g));
  }
  return out;
}

}  // namespace permdeg
