#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charforge/charops.hpp"
#include "charforge/chartable.hpp"

namespace charforge {

/// The four possible shapes of chi*psi for chi(1) = p, psi(1) prime in a
/// nilpotent group.
enum class TheoremCase {
  SumOfLinears,           // (i)   p^2 distinct linear characters
  MixedLinearAndDegreeP,  // (ii)  p linear + (p-1) degree-p, all distinct
  AllDegreeP,             // (iii) only degree-p constituents
  Irreducible,            // (iv)  chi*psi irreducible
};

std::string_view case_name(TheoremCase c);
std::string_view case_label(TheoremCase c);  // "i", "ii", "iii", "iv"

struct TheoremACase {
  TheoremCase tag;
  std::size_t eta;
  Decomposition constituents;
  /// Constituent degree -> number of distinct constituents of that degree.
  std::map<std::uint64_t, std::size_t> degree_histogram;
};

/// Shared data for decomposing many products over one table.
///
/// Large tables are decomposed through their reduction mod ell: each
/// multiplicity is an integer in [0, chi(1) psi(1)], so when that bound is
/// below ell the residue is the multiplicity itself.
class ProductContext {
 public:
  enum class Route { Automatic, Exact, Modular };
  /// Under Route::Automatic, tables with more classes than this go modular.
  static constexpr std::size_t kModularThreshold = 200;

  explicit ProductContext(const CharacterTable& table, Route route = Route::Automatic);

  const CharacterTable& table() const noexcept { return *table_; }
  bool nilpotent() const noexcept { return nilpotent_; }
  std::optional<std::uint64_t> p_group_prime() const noexcept { return prime_; }

  Decomposition decompose_product(std::size_t chi, std::size_t psi) const;

 private:
  Decomposition decompose_modular(std::size_t chi, std::size_t psi) const;

  const CharacterTable* table_;
  bool nilpotent_ = false;
  std::optional<std::uint64_t> prime_;
  bool use_modular_ = false;
  /// weights_[i * r + c] = |C_c| theta_i(c^-1) mod ell.
  std::vector<std::uint32_t> weights_;
};

/// Classifies chi*psi into the case it realizes. Throws HypothesisViolation
/// when chi(1) != p, psi(1) is not prime or G is not nilpotent, and
/// TheoremViolation when no case matches.
TheoremACase classify_product(const ProductContext& ctx, std::size_t chi, std::size_t psi,
                              std::uint64_t p);
TheoremACase classify_product(const CharacterTable& table, std::size_t chi, std::size_t psi,
                              std::uint64_t p);

struct PairResult {
  std::size_t chi;
  std::size_t psi;
  /// Ordered pairs folded into this entry (1 or 2).
  std::size_t ordered;
  std::optional<TheoremACase> result;
  std::string violation;
};

struct VerificationReport {
  std::string group;
  std::uint64_t prime = 0;
  std::size_t group_order = 0;
  std::size_t ordered_pairs = 0;
  /// One entry per unordered pair, sorted by (chi, psi).
  std::vector<PairResult> pairs;
  std::vector<std::string> violations;
  std::vector<std::string> skipped;
  double seconds = 0;

  bool pass() const noexcept { return violations.empty(); }
};

/// Sweeps every ordered pair (chi, psi) with chi(1) = p and psi(1) prime.
VerificationReport verify_theorem_A(const ProductContext& ctx, std::uint64_t p,
                                    std::string group_label = {}, unsigned jobs = 1);

enum class SelfProductShape { AllLinear, LinearAndDegreeP };
std::string_view shape_name(SelfProductShape s);

/// Checks chi*conj(chi) against the two permitted shapes for a degree-p
/// character of a p-group. Throws TheoremViolation when neither fits.
SelfProductShape verify_self_product_lemma(const ProductContext& ctx, std::size_t chi);

struct LinearShiftResult {
  bool pass = true;
  std::size_t linear_constituents = 0;
  std::string witness;
};

/// For every linear constituent alpha of chi*psi: psi*conj(alpha) = conj(chi),
/// and chi*conj(chi) = conj(alpha) * (chi*psi) constituent by constituent.
LinearShiftResult verify_linear_shift_lemma(const ProductContext& ctx, std::size_t chi,
                                            std::size_t psi);

struct EtaWitness {
  std::size_t chi;
  std::size_t psi;
  std::size_t ordered_pairs;
};

/// Distinct eta over ordered pairs of degree-p characters, with the first
/// pair realizing each value.
std::map<std::size_t, EtaWitness> eta_spectrum(const ProductContext& ctx, std::uint64_t p);

struct ExampleCheck {
  std::string id;
  std::string group;
  std::string claim;
  bool pass = false;
  std::vector<std::string> evidence;
};

struct ExamplesReport {
  std::uint64_t prime = 0;
  std::vector<ExampleCheck> checks;
  bool pass() const noexcept;
};

/// Runs the reproducible worked examples for the prime p: the extraspecial
/// products phi*conj(phi) and phi*phi, the induced pair on C_p wr C_p, and
/// the factor characters of Q x Q. p = 5 requires `stretch`.
ExamplesReport reproduce_examples(std::uint64_t p = 3, bool stretch = false);

}  // namespace charforge
