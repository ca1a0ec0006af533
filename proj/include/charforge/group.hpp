#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "charforge/permutation.hpp"

namespace charforge {

using ElementIndex = std::uint32_t;
using ClassIndex = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 20000;
/// Groups up to this order carry a full Cayley table.
inline constexpr std::size_t kCayleyTableLimit = 4096;

/// Partition of a group into conjugacy classes.
///
/// Class indices follow the ascending order of their representatives, and
/// each representative is the smallest element index in its class, so the
/// identity class is always class 0.
struct ConjugacyClassSet {
  std::vector<ClassIndex> class_of;
  std::vector<ElementIndex> representatives;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> rep_orders;
  std::vector<std::vector<ElementIndex>> members;
  /// inverse_class[c] is the class containing the inverses of class c.
  std::vector<ClassIndex> inverse_class;

  std::size_t count() const noexcept { return representatives.size(); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A permutation group enumerated element by element.
///
/// Elements are numbered in breadth-first order from the identity, trying
/// generators in the order given, so index 0 is the identity and the
/// numbering depends only on the generator list.
class FiniteGroup {
 public:
  /// Throws InvalidPermutation on a generator of the wrong degree and
  /// ClosureTooLarge once more than `cap` elements are found.
  static GroupPtr generate(std::size_t degree, std::vector<Permutation> generators,
                           std::size_t cap = kDefaultClosureCap);

  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::span<const ElementIndex> generator_indices() const noexcept { return generator_indices_; }

  std::span<const Point> images(ElementIndex e) const noexcept {
    return {points_.data() + static_cast<std::size_t>(e) * degree_, degree_};
  }
  Permutation element(ElementIndex e) const;
  std::optional<ElementIndex> find(std::span<const Point> images) const;

  ElementIndex mult(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const noexcept { return inverse_[a]; }
  /// g^-1 x g.
  ElementIndex conjugate(ElementIndex x, ElementIndex g) const {
    return mult(mult(inverse_[g], x), g);
  }
  ElementIndex power(ElementIndex a, std::uint64_t k) const;
  std::uint32_t element_order(ElementIndex a) const noexcept { return orders_[a]; }

  /// BFS tree: every non-identity element is bfs_parent(e) * generator bfs_generator(e).
  ElementIndex bfs_parent(ElementIndex e) const noexcept { return bfs_parent_[e]; }
  std::uint32_t bfs_generator(ElementIndex e) const noexcept { return bfs_generator_[e]; }

  const ConjugacyClassSet& classes() const noexcept { return classes_; }
  bool has_cayley_table() const noexcept { return !table_.empty(); }

 private:
  FiniteGroup() = default;

  ElementIndex compose_lookup(ElementIndex a, ElementIndex b) const;
  std::size_t slot_for(std::span<const Point> images) const;
  void build_classes();

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementIndex> generator_indices_;
  std::vector<Point> points_;
  std::vector<ElementIndex> hash_slots_;  // element index + 1, 0 = empty
  std::vector<std::uint16_t> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<ElementIndex> bfs_parent_;
  std::vector<std::uint32_t> bfs_generator_;
  ConjugacyClassSet classes_;
};

/// A subgroup stored as a sorted list of parent element indices.
///
/// Copies share a write-once cache holding the subgroup realized as a group
/// of its own, which is what restriction and induction need for class data.
class Subgroup {
 public:
  /// Members must contain the identity and be closed; this is checked.
  Subgroup(GroupPtr parent, std::vector<ElementIndex> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::span<const ElementIndex> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  bool contains(ElementIndex e) const noexcept { return in_subgroup_[e]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }

  /// The subgroup as a standalone permutation group on the parent's points.
  const GroupPtr& as_group() const;
  ElementIndex to_parent(ElementIndex local) const;
  ElementIndex to_local(ElementIndex parent_element) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  /// Lexicographic order on the sorted member lists.
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.members_ < b.members_; }

 private:
  struct Structure;
  GroupPtr parent_;
  std::vector<ElementIndex> members_;
  std::vector<bool> in_subgroup_;
  std::shared_ptr<Structure> structure_;
};

struct Quotient {
  GroupPtr source;
  GroupPtr group;
  /// projection[e] is the quotient element containing source element e.
  std::vector<ElementIndex> projection;
};

struct SylowFactor {
  std::uint64_t prime;
  Subgroup subgroup;
};

const ConjugacyClassSet& conjugacy_classes(const FiniteGroup& g);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementIndex> elements);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const GroupPtr& g, std::span<const ElementIndex> elements);

/// All subgroups of index p in a p-group, in lexicographic member order.
/// Throws NotPGroup unless the order is a prime power.
std::vector<Subgroup> maximal_subgroups_index_p(const GroupPtr& g);

/// Throws NotNormal when n is not normal in g.
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

std::uint64_t exponent(const FiniteGroup& g);
std::uint32_t element_order(const FiniteGroup& g, ElementIndex e);

/// Normal Sylow subgroups, one per prime divisor of |G| in increasing
/// order. Throws NotNilpotent when some Sylow subgroup is not normal.
std::vector<SylowFactor> sylow_decomposition(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);

/// The prime p when |G| = p^k with k >= 1.
std::optional<std::uint64_t> p_group_prime(const FiniteGroup& g);

}  // namespace charforge
