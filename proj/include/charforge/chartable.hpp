#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "charforge/constructions.hpp"
#include "charforge/cyclotomic.hpp"
#include "charforge/group.hpp"

namespace charforge {

/// Integer matrix in row-major order.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduction of a table modulo a prime ell = 1 (mod conductor), with
/// zeta_conductor sent to omega.
struct ModularTable {
  std::uint64_t ell = 0;
  std::uint64_t omega = 0;
  /// rows() x classes() values, row-major.
  std::vector<std::uint32_t> values;
};

/// The complete table of irreducible characters of a finite group.
///
/// Rows are sorted by degree, then trivial character first, then by the
/// lexicographic order of their canonical values class by class; row 0 is
/// therefore always the trivial character.
class CharacterTable {
 public:
  struct FactorRows {
    std::size_t left;
    std::size_t right;
  };

  /// Sorts the rows into canonical order and checks the row count and the
  /// degree-square sum; throws VerificationError on failure.
  CharacterTable(GroupPtr group, std::uint32_t conductor,
                 std::vector<std::vector<Cyclotomic>> rows,
                 std::optional<std::vector<FactorRows>> factors = std::nullopt);

  const GroupPtr& group() const noexcept { return group_; }
  const ConjugacyClassSet& classes() const noexcept { return group_->classes(); }
  std::uint32_t conductor() const noexcept { return conductor_; }
  std::size_t size() const noexcept { return rows_.size(); }

  std::span<const Cyclotomic> row(std::size_t i) const { return rows_.at(i); }
  const Cyclotomic& value(std::size_t i, ClassIndex c) const { return rows_[i][c]; }
  std::uint64_t degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::uint64_t>& degrees() const noexcept { return degrees_; }

  /// Row whose values equal `values` exactly.
  std::optional<std::size_t> find_row(std::span<const Cyclotomic> values) const;

  /// For tables built as outer tensor products, the factor rows of each row.
  const std::optional<std::vector<FactorRows>>& factor_rows() const noexcept { return factors_; }

  /// Image of the table in F_ell, ell = choose_dixon_prime(group).
  const ModularTable& modular() const noexcept { return modular_; }

 private:
  GroupPtr group_;
  std::uint32_t conductor_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<std::uint64_t> degrees_;
  std::optional<std::vector<FactorRows>> factors_;
  ModularTable modular_;
};

/// Entry (j, k) counts pairs (x, y) with x in class i, y in class j and
/// x y equal to the representative of class k.
IntMatrix class_matrix(const FiniteGroup& g, const ConjugacyClassSet& classes, ClassIndex i);

/// Smallest prime ell = 1 (mod exponent(G)) with ell > 2 sqrt(|G|).
std::uint64_t choose_dixon_prime(const FiniteGroup& g);

/// Irreducible characters by common eigenvectors of the class matrices over
/// F_ell followed by lifting each character to exact cyclotomic values.
CharacterTable character_table(const GroupPtr& g);

/// Table of a built group; direct products are assembled from their
/// factors with tensor_table_of_product.
CharacterTable character_table(const BuiltGroup& built);

/// Table of G1 x G2 from the factor tables: all outer products chi1 x chi2.
CharacterTable tensor_table_of_product(const CharacterTable& left, const CharacterTable& right,
                                       const DirectProduct& product);

struct OrthogonalityReport {
  bool first = false;
  bool second = false;
  bool degree_sum = false;
  bool ok() const noexcept { return first && second && degree_sum; }
};

/// Exact check of both orthogonality relations and sum of squared degrees.
OrthogonalityReport check_orthogonality(const CharacterTable& table);

}  // namespace charforge
