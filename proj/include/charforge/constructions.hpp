#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "charforge/group.hpp"

namespace charforge {

enum class ExtraspecialKind { ExponentP, ExponentP2 };

/// Parsed form of a group description.
///
/// Grammar, with `*` the only binary operator (left associative):
///
///     cyclic:<n>
///     abelian:<n1>x<n2>x...
///     extraspecial:p=<p>,exp=<p|p2>
///     wreath:p=<p>
///     perm:degree=<n>;gens=<cycles>;<cycles>...
///     <spec>*<spec>
///
/// where <cycles> is a whitespace separated list like "(0 1 2)(3 4)".
struct GroupSpec {
  struct Cyclic {
    std::uint64_t n;
  };
  struct Abelian {
    std::vector<std::uint64_t> factors;
  };
  struct Extraspecial {
    std::uint64_t p;
    ExtraspecialKind kind;
  };
  struct Wreath {
    std::uint64_t p;
  };
  struct Perm {
    std::size_t degree;
    std::vector<Permutation> generators;
  };
  struct Product {
    std::shared_ptr<const GroupSpec> left;
    std::shared_ptr<const GroupSpec> right;
  };

  std::variant<Cyclic, Abelian, Extraspecial, Wreath, Perm, Product> kind;

  /// Canonical text; parse_group_spec(to_string()) reproduces the spec.
  std::string to_string() const;
};

struct BuildOptions {
  std::size_t cap = kDefaultClosureCap;
  /// Enables the large stretch targets (currently the order-15625 wreath product).
  bool stretch = false;
};

/// G1 x G2 acting on disjoint point sets, with both factor embeddings.
struct DirectProduct {
  GroupPtr group;
  GroupPtr left;
  GroupPtr right;
  std::vector<ElementIndex> embed_left;
  std::vector<ElementIndex> embed_right;
  /// Component of each product element in the left and right factor.
  std::vector<ElementIndex> left_component;
  std::vector<ElementIndex> right_component;
};

struct WreathGroup {
  GroupPtr group;
  /// The base subgroup C_p^p of index p.
  Subgroup base;
};

/// A group built from a spec, keeping the structure that the spec exposes.
struct BuiltGroup {
  GroupSpec spec;
  GroupPtr group;
  std::optional<Subgroup> wreath_base;
  std::shared_ptr<const BuiltGroup> left;
  std::shared_ptr<const BuiltGroup> right;
  std::shared_ptr<const DirectProduct> product;
};

GroupPtr cyclic(std::uint64_t n, std::size_t cap = kDefaultClosureCap);
GroupPtr abelian(const std::vector<std::uint64_t>& factors, std::size_t cap = kDefaultClosureCap);

/// Extraspecial group of order p^3 on p^2 points. Throws UnsupportedPrime
/// unless p is an odd prime no larger than kMaxExtraspecialPrime.
GroupPtr extraspecial(std::uint64_t p, ExtraspecialKind kind, std::size_t cap = kDefaultClosureCap);
inline constexpr std::uint64_t kMaxExtraspecialPrime = 5;

/// C_p wr C_p in its imprimitive action on p^2 points. p = 5 requires
/// `stretch`; larger primes are unsupported.
WreathGroup wreath_cyclic(std::uint64_t p, bool stretch = false,
                          std::size_t cap = kDefaultClosureCap);

DirectProduct direct_product(const GroupPtr& left, const GroupPtr& right,
                             std::size_t cap = kDefaultClosureCap);

/// Throws ParseError carrying the offending character position.
GroupSpec parse_group_spec(std::string_view text);

BuiltGroup build_group(const GroupSpec& spec, const BuildOptions& options = {});
BuiltGroup build_group(std::string_view text, const BuildOptions& options = {});

}  // namespace charforge
