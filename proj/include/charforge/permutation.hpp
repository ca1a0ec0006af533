#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charforge {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image list.
///
/// Products act on the right: (a * b)(x) = b(a(x)), so a point is first
/// moved by a and then by b.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint or overlapping cycles, composed left to right.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::uint64_t order() const;

  /// Cycle notation with 0-based points, identity printed as "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace charforge
