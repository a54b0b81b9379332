#include "permdeg/pipeline.hpp"

#include <stdexcept>
#include <string>

#include "permdeg/cache.hpp"
#include "permdeg/group_ops.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<SubgroupClass> classes_from(const std::vector<CacheRecord>& records, int m) {
  std::vector<SubgroupClass> out;
  for (const auto& r : records) out.push_back(from_record(r, factorial(m)));
  return out;
}

SurveyEntry examine(const SubgroupClass& c) {
  SurveyEntry e;
  e.subgroup = c;
  const PermGroup& g = c.representative;
  const StabChain gc(g);
  const PermGroup centralizer = centralizer_in_sym(g);
  const StabChain cc(centralizer);
  e.centralizer_order = cc.order();
  e.ind = StabChain(join(g, centralizer)).order() / gc.order();
  for (std::uint64_t p : prime_divisors(e.ind)) {
    auto stream = elements_of_order(cc, p);
    while (auto x = stream.next())
      if (!gc.contains(*x)) {
        e.comp_witness = *x;
        break;
      }
    if (e.comp_witness) break;
  }
  return e;
}

}  // namespace

std::vector<SubgroupClass> symmetric_classes(int m, const SurveyOptions& options) {
  if (m < 1) throw std::invalid_argument("symmetric_classes: degree must be positive");
  if (!options.cache_dir.empty())
    if (auto records = load_cache(options.cache_dir, m)) return classes_from(*records, m);
  auto classes = subgroup_classes(symmetric_group(m), options.enumeration);
  if (!options.cache_dir.empty()) {
    std::vector<CacheRecord> records;
    for (const auto& c : classes) records.push_back(to_record(m, c));
    save_cache(records, options.cache_dir, m);
  }
  return classes;
}

DegreeReport survey_degree(int m, const SurveyOptions& options) {
  if (m < 2 || m > 9) throw std::invalid_argument("survey_degree: degree must lie in 2..9");
  std::optional<std::vector<CacheRecord>> cached;
  if (!options.cache_dir.empty()) cached = load_cache(options.cache_dir, m);
  const auto classes = cached ? classes_from(*cached, m) : symmetric_classes(m, options);
  std::vector<CacheRecord> records;
  if (cached) {
    records = *cached;
  } else {
    for (const auto& c : classes) records.push_back(to_record(m, c));
  }

  bool known = true;
  for (const auto& r : records) known = known && r.minemb.has_value();

  std::vector<bool> minemb(classes.size(), false);
  if (known) {
    for (std::size_t i = 0; i < classes.size(); ++i) minemb[i] = *records[i].minemb;
  } else {
    MinEmbFilter filter(m, symmetric_classes(m - 1, options));
    for (std::size_t i = 0; i < classes.size(); ++i)
      minemb[i] = classes[i].order > 1 && filter.minimally_embedded(classes[i].representative);
  }

  DegreeReport report;
  report.degree = m;
  report.total_classes = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    records[i].minemb = minemb[i];
    records[i].ind.reset();
    records[i].comp_witness.reset();
    if (!minemb[i]) continue;
    SurveyEntry e = examine(classes[i]);
    records[i].ind = e.ind;
    if (e.comp_witness) {
      records[i].comp_witness = format_perm(*e.comp_witness);
      report.comp_nonempty = true;
    }
    ++report.ind_multiset[e.ind];
    report.classes.push_back(std::move(e));
  }
  if (!options.cache_dir.empty() && (!cached || !known || records != *cached))
    save_cache(records, options.cache_dir, m);
  return report;
}

Verdict verify_up_to(int max_degree, const SurveyOptions& options) {
  if (max_degree < 2 || max_degree > 9) throw std::invalid_argument("verify_up_to: degree must lie in 2..9");
  Verdict v;
  for (int m = 2; m <= max_degree; ++m) {
    v.reports.push_back(survey_degree(m, options));
    if (v.reports.back().comp_nonempty) v.holds = false;
  }
  return v;
}

WitnessReport witness_degree_10(const MuOptions& options) {
  WitnessReport w;
  w.group = make_gppq(2, 5);
  const StabChain gc(w.group);
  w.group_order = gc.order();
  w.mu_detail = mu(w.group, options);
  w.mu_value = w.mu_detail.value;
  w.centralizer = centralizer_in_sym(w.group);
  const StabChain cc(w.centralizer);
  w.centralizer_order = cc.order();
  auto stream = elements_of_order(cc, 2);
  while (auto z = stream.next())
    if (!gc.contains(*z)) {
      w.witness_element = *z;
      break;
    }
  w.mu_c2 = mu(cyclic_group(2), options).value;
  if (w.witness_element) {
    const PermGroup product = join(w.group, PermGroup(10, {*w.witness_element}));
    w.join_order = group_order(product);
    w.product_mu = mu(product, options).value;
  }
  w.certified = w.group_order == 1920 && w.mu_value == 10 && w.witness_element.has_value() &&
                w.join_order == 2 * w.group_order && w.product_mu < w.mu_value + w.mu_c2;
  return w;
}

}  // namespace permdeg
