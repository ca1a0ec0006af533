#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "charforge/chartable.hpp"
#include "charforge/cyclotomic.hpp"
#include "charforge/group.hpp"

namespace charforge {

/// A function on a group that is constant on conjugacy classes, stored as
/// one value per class.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction from_row(const CharacterTable& table, std::size_t row);
  static ClassFunction trivial(const GroupPtr& group);

  const GroupPtr& group() const noexcept { return group_; }
  std::span<const Cyclotomic> values() const noexcept { return values_; }
  const Cyclotomic& operator[](ClassIndex c) const { return values_[c]; }
  const Cyclotomic& at_element(ElementIndex e) const { return values_[group_->classes().class_of[e]]; }

  /// Value at the identity; throws NotACharacter unless it is a positive integer.
  std::uint64_t degree() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const Rational& s);

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

struct Constituent {
  std::size_t row;
  std::uint64_t multiplicity;
  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Constituents sorted by table row, multiplicities positive.
struct Decomposition {
  std::vector<Constituent> constituents;

  /// Number of distinct irreducible constituents.
  std::size_t eta() const noexcept { return constituents.size(); }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Pointwise product. Throws GroupMismatch for functions on different groups.
ClassFunction product(const ClassFunction& f, const ClassFunction& g);
ClassFunction conjugate_char(const ClassFunction& f);

/// (1/|G|) sum over classes of |C| f(c) conj(g(c)), exactly.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Multiplicities <f, theta_i> for every row; throws NotACharacter when one
/// of them is not a nonnegative integer.
Decomposition decompose(const ClassFunction& f, const CharacterTable& table);

/// The class function sum_i m_i theta_i.
ClassFunction recompose(const Decomposition& d, const CharacterTable& table);

/// Induction from a subgroup; f lives on h.as_group().
ClassFunction induce(const GroupPtr& g, const Subgroup& h, const ClassFunction& f);
/// Restriction to a subgroup; the result lives on h.as_group().
ClassFunction restrict(const ClassFunction& f, const Subgroup& h);

/// {g : f(g) = f(1)}.
Subgroup kernel(const ClassFunction& f);
/// {g : |f(g)| = f(1)}, tested as f(g) conj(f(g)) = f(1)^2.
Subgroup character_center(const ClassFunction& f);
bool is_faithful(const ClassFunction& f);

/// Inflation of a class function of G/N to G. Throws GroupMismatch when
/// theta is not a function on q.group.
ClassFunction lift_character(const Quotient& q, const ClassFunction& theta);

/// Lin(G) in canonical order: the rows of the table of G/[G,G], lifted.
std::vector<ClassFunction> linear_characters(const GroupPtr& g);

struct MonomialSource {
  Subgroup subgroup;
  ClassFunction linear;
};

/// Finds (H, xi) with H of index p and xi linear on H inducing to chi.
/// Caches the maximal subgroups of one p-group and their linear characters.
class MonomialSourceFinder {
 public:
  explicit MonomialSourceFinder(GroupPtr g);

  /// Throws HypothesisViolation unless chi(1) = p, and NoSourceFound if no
  /// maximal subgroup carries a source.
  MonomialSource find(const ClassFunction& chi) const;

 private:
  struct Candidate {
    Subgroup subgroup;
    std::vector<ClassFunction> linear;
  };
  GroupPtr group_;
  std::uint64_t prime_ = 0;
  std::vector<Candidate> candidates_;
};

MonomialSource monomial_source(const GroupPtr& g, const ClassFunction& chi);

/// Stabilizer in G of a linear character lambda of the normal subgroup h.
Subgroup inertia_group(const GroupPtr& g, const Subgroup& h, const ClassFunction& lambda);

}  // namespace charforge
