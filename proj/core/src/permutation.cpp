#include "permdeg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace permdeg {

Permutation::Permutation(int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree " + std::to_string(degree) +
                                " outside [0, " + std::to_string(kMaxDegree) +
                                "]");
  degree_ = static_cast<std::uint8_t>(degree);
  for (int a = 0; a < degree; ++a) images_[a] = static_cast<std::uint8_t>(a);
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t a = 0; a < images.size(); ++a) {
    int b = images[a];
    if (b < 0 || b >= p.degree_ || seen[b])
      throw std::invalid_argument("image list is not a bijection");
    seen[b] = true;
    p.images_[a] = static_cast<std::uint8_t>(b);
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int a = 0; a < degree_; ++a)
    if (images_[a] != a) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (int a = 0; a < degree_; ++a) r.images_[images_[a]] = static_cast<std::uint8_t>(a);
  return r;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result(degree_);
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int a = 0; a < degree_; ++a)
    if (images_[a] != a) s.push_back(a);
  return s;
}

int Permutation::smallest_moved_point() const {
  for (int a = 0; a < degree_; ++a)
    if (images_[a] != a) return a;
  return -1;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::array<bool, kMaxDegree> seen{};
  for (int a = 0; a < degree_; ++a) {
    if (seen[a]) continue;
    int len = 0;
    for (int b = a; !seen[b]; b = images_[b]) {
      seen[b] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t Permutation::cycle_type_key() const {
  std::array<int, kMaxDegree + 1> count{};
  std::array<bool, kMaxDegree> seen{};
  for (int a = 0; a < degree_; ++a) {
    if (seen[a]) continue;
    int len = 0;
    for (int b = a; !seen[b]; b = images_[b]) {
      seen[b] = true;
      ++len;
    }
    ++count[len];
  }
  // mixed radix: the count of l-cycles is at most n / l
  std::uint64_t key = 0;
  for (int len = degree_; len >= 1; --len)
    key = key * static_cast<std::uint64_t>(degree_ / len + 1) +
          static_cast<std::uint64_t>(count[len]);
  return key;
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ degree_;
  for (int a = 0; a < degree_; ++a) {
    h ^= images_[a];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree_ != q.degree_)
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(p.degree_) + " vs " +
                                std::to_string(q.degree_) + ")");
  Permutation r;
  r.degree_ = p.degree_;
  for (int a = 0; a < p.degree_; ++a) r.images_[a] = q.images_[p.images_[a]];
  return r;
}

Permutation conjugate(const Permutation& k, const Permutation& s) {
  if (k.degree_ != s.degree_)
    throw std::invalid_argument("conjugate: degree mismatch");
  Permutation r;
  r.degree_ = k.degree_;
  for (int a = 0; a < k.degree_; ++a) r.images_[s.images_[a]] = s.images_[k.images_[a]];
  return r;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (int len : p.cycle_type()) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

bool commute(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("commute: degree mismatch");
  for (int a = 0; a < p.degree(); ++a)
    if (q(p(a)) != p(q(a))) return false;
  return true;
}

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

}  // namespace

Permutation parse_perm(std::string_view text, int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw ParseError("degree " + std::to_string(degree) + " outside [1, " +
                     std::to_string(kMaxDegree) + "]");
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::size_t last = text.find_last_not_of(" \t\r\n");
  std::string_view body = first == std::string_view::npos ? std::string_view{}
                                                          : text.substr(first, last - first + 1);
  Permutation result(degree);
  if (body.empty())
    throw ParseError("empty permutation text");
  if (body == "id" || body == "()") return result;

  std::array<int, kMaxDegree> images{};
  for (int a = 0; a < degree; ++a) images[a] = a;
  std::array<bool, kMaxDegree> used{};

  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse permutation \"" + std::string(text) + "\": " + why);
  };
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    if (body[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      while (i < body.size() && is_separator(body[i])) ++i;
      if (i >= body.size()) fail("unterminated cycle");
      if (body[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[i]))) fail("unexpected character");
      long value = 0;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
        value = value * 10 + (body[i] - '0');
        if (value > 1000000) fail("point too large");
        ++i;
      }
      if (value < 1 || value > degree)
        fail("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
      int point = static_cast<int>(value) - 1;
      if (used[point]) fail("repeated point " + std::to_string(value));
      used[point] = true;
      cycle.push_back(point);
    }
    if (cycle.empty()) continue;
    for (std::size_t c = 0; c < cycle.size(); ++c)
      images[cycle[c]] = cycle[(c + 1) % cycle.size()];
  }
  return Permutation::from_images(std::span<const int>(images.data(), degree));
}

std::string format_perm(const Permutation& p) {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int a = 0; a < p.degree(); ++a) {
    if (seen[a] || p(a) == a) continue;
    out += '(';
    for (int b = a; !seen[b]; b = p(b)) {
      seen[b] = true;
      if (b != a) out += ' ';
      out += std::to_string(b + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace permdeg
