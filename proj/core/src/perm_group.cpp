#include "permdeg/perm_group.hpp"

#include <stdexcept>

namespace permdeg {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("group degree " + std::to_string(degree) + " outside [0, " +
                                std::to_string(kMaxDegree) + "]");
  for (const auto& g : generators_)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " differs from group degree " + std::to_string(degree));
}

bool PermGroup::has_trivial_generators() const {
  for (const auto& g : generators_)
    if (!g.is_identity()) return false;
  return true;
}

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

Permutation cycle_on(int degree, int first, int length, int step = 1) {
  std::vector<int> images(degree);
  for (int a = 0; a < degree; ++a) images[a] = a;
  for (int i = 0; i < length; ++i)
    images[first + i] = first + ((i + step) % length + length) % length;
  return Permutation::from_images(images);
}

}  // namespace

PermGroup symmetric_group(int n) {
  require_positive(n, "symmetric_group");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(cycle_on(n, 0, 2));
    if (n >= 3) gens.push_back(cycle_on(n, 0, n));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(int n) {
  require_positive(n, "alternating_group");
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> images(n);
    for (int a = 0; a < n; ++a) images[a] = a;
    images[0] = 1;
    images[1] = k;
    images[k] = 0;
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(int n) {
  require_positive(n, "cyclic_group");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_on(n, 0, n));
  return PermGroup(n, std::move(gens));
}

PermGroup make_named(NamedKind kind, int n) {
  switch (kind) {
    case NamedKind::symmetric: return symmetric_group(n);
    case NamedKind::alternating: return alternating_group(n);
    case NamedKind::cyclic: return cyclic_group(n);
  }
  throw std::invalid_argument("unknown group kind");
}

PermGroup make_gppq(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("make_gppq: p and q must be >= 2");
  const int n = p * q;
  if (n > kMaxDegree) throw std::invalid_argument("make_gppq: degree p*q too large");
  std::vector<Permutation> gens;
  for (int j = 0; j + 1 < q; ++j) {
    std::vector<int> images(n);
    for (int a = 0; a < n; ++a) images[a] = a;
    for (int i = 0; i < p; ++i) {
      images[j * p + i] = (j + 1) * p + i;
      images[(j + 1) * p + i] = j * p + i;
    }
    gens.push_back(Permutation::from_images(images));
  }
  std::vector<int> images(n);
  for (int a = 0; a < n; ++a) images[a] = a;
  for (int i = 0; i < p; ++i) {
    images[i] = (i + 1) % p;
    images[p + i] = p + (i + p - 1) % p;
  }
  gens.push_back(Permutation::from_images(images));
  return PermGroup(n, std::move(gens));
}

PermGroup direct_product_disjoint(const PermGroup& g, const PermGroup& h) {
  const int n = g.degree() + h.degree();
  if (n > kMaxDegree) throw std::invalid_argument("direct product degree too large");
  std::vector<Permutation> gens;
  std::vector<int> images(n);
  for (const auto& x : g.generators()) {
    for (int a = 0; a < n; ++a) images[a] = a < g.degree() ? x(a) : a;
    gens.push_back(Permutation::from_images(images));
  }
  for (const auto& y : h.generators()) {
    for (int a = 0; a < n; ++a) images[a] = a < g.degree() ? a : g.degree() + y(a - g.degree());
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(n, std::move(gens));
}

std::vector<std::string> format_generators(const PermGroup& g) {
  std::vector<std::string> out;
  for (const auto& x : g.generators()) out.push_back(format_perm(x));
  return out;
}

PermGroup parse_group(int degree, const std::vector<std::string>& generators) {
  std::vector<Permutation> gens;
  for (const auto& text : generators) gens.push_back(parse_perm(text, degree));
  return PermGroup(degree, std::move(gens));
}

}  // namespace permdeg
