#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace charforge {

using Rational = mpq_class;

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// Values are kept in the power basis 1, z, ..., z^(phi(m)-1) of
/// Q(zeta_m) = Q[z]/Phi_m(z) with only the nonzero coefficients stored, so
/// two values of the same conductor are equal iff their term lists are.
/// The conductor is whatever the value was built in; it is never shrunk to
/// the smallest field containing the value. Binary operations lift both
/// operands to the lcm of their conductors.
class Cyclotomic {
 public:
  struct Term {
    std::uint32_t exponent;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Cyclotomic() = default;
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);                       // NOLINT(google-explicit-constructor)

  /// zeta_m^k; k may be negative.
  static Cyclotomic root_of_unity(std::uint32_t m, std::int64_t k);
  /// sum_k coeffs[k] * zeta_m^k for any k, reduced to canonical form.
  static Cyclotomic from_powers(std::uint32_t m, std::vector<Rational> coeffs);
  /// Builds from already canonical terms; exponents must be sorted, below
  /// phi(m), with nonzero coefficients.
  static Cyclotomic from_canonical_terms(std::uint32_t m, std::vector<Term> terms);

  std::uint32_t conductor() const noexcept { return conductor_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Throws NotRational when the value is not in Q.
  Rational as_rational() const;

  /// Complex conjugation, zeta_m -> zeta_m^(m-1).
  Cyclotomic conjugate() const;
  /// The same value written in Q(zeta_M); M must be a multiple of the conductor.
  Cyclotomic lifted(std::uint32_t m) const;

  /// Image under Z[zeta_m] -> F_ell sending zeta_omega_order to omega.
  /// The conductor must divide omega_order and denominators must be prime to ell.
  std::uint64_t modular_image(std::uint64_t ell, std::uint64_t omega,
                              std::uint32_t omega_order) const;

  /// Floating-point approximation, for display only.
  std::pair<double, double> approximate() const;
  /// Text such as "2*E(9)^3-1", following the common E(m)^k convention.
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic order on canonical coefficients (exponent ascending),
  /// after lifting to a common conductor.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint32_t m, std::vector<Term> terms) : conductor_(m), terms_(std::move(terms)) {}

  std::uint32_t conductor_ = 1;
  std::vector<Term> terms_;
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(std::uint32_t m);

}  // namespace charforge
