#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfbrauer {

/// Permutation of the points {1..n}. Stored 0-based internally.
///
/// Composition is right-to-left: (a * b)(i) = a(b(i)).
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;
  explicit Perm(std::size_t degree);
  /// `images[i]` is the 0-based image of point i. Throws if not a bijection.
  explicit Perm(std::vector<Point> images);

  /// Parses cycle notation such as "(1 2 3)(4 5)" or "()" (1-based points).
  static Perm parse(std::string_view text, std::size_t degree);
  /// Builds a permutation from 1-based cycles.
  static Perm from_cycles(const std::vector<std::vector<std::size_t>>& cycles,
                          std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  const std::vector<Point>& images() const { return images_; }

  /// Image of a 0-based point.
  Point operator[](std::size_t i) const { return images_[i]; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long k) const;
  std::size_t order() const;

  /// Cycle notation with 1-based points, identity as "()".
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Least k >= 1 with g^k = 1 (lcm of the cycle lengths).
std::size_t element_order(const Perm& g);

struct PParts {
  Perm unipotent;  // p-part u
  Perm regular;    // p'-part s
};

/// Splits g = u * s = s * u with u a p-element and s of order prime to p.
PParts p_parts(const Perm& g, unsigned p);

struct PermHash {
  std::size_t operator()(const Perm& g) const noexcept;
};

}  // namespace hopfbrauer
