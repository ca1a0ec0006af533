#include "charforge/permutation.hpp"

#include <numeric>

#include "charforge/error.hpp"

namespace charforge {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw InvalidPermutation("image list is not a bijection on {0.." +
                               std::to_string(images_.size()) + "-1}");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> in_cycle(degree, false);
    for (Point x : cycle) {
      if (x >= degree) {
        throw InvalidPermutation("cycle point " + std::to_string(x) + " outside degree " +
                                 std::to_string(degree));
      }
      if (in_cycle[x]) {
        throw InvalidPermutation("point " + std::to_string(x) + " repeated inside one cycle");
      }
      in_cycle[x] = true;
    }
    Permutation c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * c;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InvalidPermutation("cannot compose permutations of different degree");
  }
  Permutation c;
  c.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) c.images_[i] = b.images_[a.images_[i]];
  return c;
}

}  // namespace charforge
