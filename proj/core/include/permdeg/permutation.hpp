#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permdeg {

/// Largest degree a Permutation can hold. Every group in this library lives
/// on at most a few dozen points, so images are stored inline.
inline constexpr int kMaxDegree = 32;

/// Raised for malformed cycle notation, out-of-range points and repeated
/// points.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of {0, ..., n-1}. Points are 0-based in the C++ API and
/// 1-based in every textual form (cycle notation, reports, caches).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);

  /// Builds from a 0-based image list; throws std::invalid_argument when the
  /// list is not a bijection.
  static Permutation from_images(std::span<const int> images);

  int degree() const { return degree_; }
  int operator()(int point) const { return images_[point]; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// Points moved by the permutation, ascending.
  std::vector<int> support() const;
  int smallest_moved_point() const;  // -1 for the identity

  /// Cycle lengths in descending order, fixed points included as 1s.
  std::vector<int> cycle_type() const;

  /// Injective 64-bit encoding of cycle_type() for a fixed degree.
  std::uint64_t cycle_type_key() const;

  std::size_t hash() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation conjugate(const Permutation& k, const Permutation& s);

  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

/// Right action: the result maps a to q(p(a)), i.e. apply p first.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// s^-1 k s, which sends s(a) to s(k(a)).
Permutation conjugate(const Permutation& k, const Permutation& s);

/// Least k >= 1 with p^k = 1 (lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& p);

bool commute(const Permutation& p, const Permutation& q);

/// Parses disjoint-cycle notation over 1..degree: "(1 2)(3,4,5)", "()" or
/// "id".
Permutation parse_perm(std::string_view text, int degree);

/// Disjoint-cycle notation with 1-based points; "()" for the identity.
std::string format_perm(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace permdeg
