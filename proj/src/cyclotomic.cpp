#include "charforge/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "charforge/error.hpp"
#include "charforge/numeric.hpp"

namespace charforge {

namespace {

struct Reducer {
  std::uint32_t phi = 0;
  /// Nonzero coefficients a_j of Phi_m below the leading term.
  std::vector<std::pair<std::uint32_t, long>> lower;
};

std::vector<long> compute_cyclotomic_polynomial(std::uint32_t m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quotient(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      long q = num[i];  // divisor is monic
      quotient[i - dd] = q;
      if (q != 0) {
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
      }
      if (i == dd) break;
    }
    num = std::move(quotient);
  }
  return num;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

const Reducer& reducer(std::uint32_t m) {
  static std::map<std::uint32_t, std::unique_ptr<Reducer>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  const auto& poly = cyclotomic_polynomial(m);
  auto r = std::make_unique<Reducer>();
  r->phi = static_cast<std::uint32_t>(poly.size() - 1);
  for (std::uint32_t j = 0; j < r->phi; ++j) {
    if (poly[j] != 0) r->lower.emplace_back(j, poly[j]);
  }
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(m, std::move(r));
  return *it->second;
}

std::vector<Rational>& scratch(std::size_t size) {
  thread_local std::vector<Rational> buffer;
  if (buffer.size() < size) buffer.resize(size);
  return buffer;
}

/// Reduces dense[0..len) modulo Phi_m, moving the result into canonical
/// terms and leaving dense zeroed. Exponents must already be below m... or
/// at least below len, which may exceed m.
std::vector<Cyclotomic::Term> reduce_dense(std::vector<Rational>& dense, std::size_t len,
                                           std::uint32_t m) {
  // Fold exponents >= m first: zeta^m = 1.
  for (std::size_t e = m; e < len; ++e) {
    if (dense[e] != 0) {
      dense[e % m] += dense[e];
      dense[e] = 0;
    }
  }
  const std::size_t top = std::min<std::size_t>(len, m);
  const Reducer& r = reducer(m);
  Rational t;
  for (std::size_t e = top; e-- > r.phi;) {
    if (dense[e] == 0) continue;
    t = dense[e];
    dense[e] = 0;
    const std::size_t shift = e - r.phi;
    for (auto [j, a] : r.lower) {
      if (a == 1) {
        dense[shift + j] -= t;
      } else if (a == -1) {
        dense[shift + j] += t;
      } else {
        dense[shift + j] -= t * a;
      }
    }
  }
  std::vector<Cyclotomic::Term> terms;
  for (std::uint32_t e = 0; e < std::min<std::size_t>(r.phi, len); ++e) {
    if (dense[e] != 0) {
      terms.push_back({e, dense[e]});
      dense[e] = 0;
    }
  }
  return terms;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % mod);
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t ell) {
  mpz_class num = q.get_num() % ell;
  if (num < 0) num += ell;
  mpz_class den = q.get_den() % ell;
  if (den == 0) throw UsageError("denominator divisible by the modulus");
  std::uint64_t d = den.get_ui();
  return static_cast<std::uint64_t>((num.get_ui() * powmod(d, ell - 2, ell)) % ell);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw UsageError("conductor must be positive");
  static std::map<std::uint32_t, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<std::vector<long>>(
      m == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic_polynomial(m));
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(m, std::move(poly));
  return *it->second;
}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (value != 0) terms_.push_back({0, value});
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t m, std::int64_t k) {
  if (m == 0) throw UsageError("conductor must be positive");
  auto e = static_cast<std::uint32_t>(((k % static_cast<std::int64_t>(m)) + m) % m);
  auto& dense = scratch(m);
  dense[e] = 1;
  return Cyclotomic(m, reduce_dense(dense, m, m));
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t m, std::vector<Rational> coeffs) {
  if (m == 0) throw UsageError("conductor must be positive");
  std::size_t len = std::max<std::size_t>(coeffs.size(), m);
  coeffs.resize(len);
  return Cyclotomic(m, reduce_dense(coeffs, len, m));
}

Cyclotomic Cyclotomic::from_canonical_terms(std::uint32_t m, std::vector<Term> terms) {
  return Cyclotomic(m, std::move(terms));
}

bool Cyclotomic::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw NotRational("value " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (is_rational()) return *this;
  auto& dense = scratch(conductor_);
  for (const auto& t : terms_) dense[(conductor_ - t.exponent) % conductor_] += t.coeff;
  return Cyclotomic(conductor_, reduce_dense(dense, conductor_, conductor_));
}

Cyclotomic Cyclotomic::lifted(std::uint32_t m) const {
  if (m % conductor_ != 0) throw UsageError("lift target is not a multiple of the conductor");
  if (m == conductor_) return *this;
  if (is_rational()) return Cyclotomic(m, terms_);
  const std::uint32_t step = m / conductor_;
  auto& dense = scratch(m);
  for (const auto& t : terms_) dense[t.exponent * step] += t.coeff;
  return Cyclotomic(m, reduce_dense(dense, m, m));
}

std::uint64_t Cyclotomic::modular_image(std::uint64_t ell, std::uint64_t omega,
                                        std::uint32_t omega_order) const {
  if (omega_order % conductor_ != 0) throw UsageError("conductor does not divide root order");
  const std::uint64_t w = powmod(omega, omega_order / conductor_, ell);
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    acc = (acc + rational_mod(t.coeff, ell) * powmod(w, t.exponent, ell)) % ell;
  }
  return acc;
}

std::pair<double, double> Cyclotomic::approximate() const {
  double re = 0;
  double im = 0;
  for (const auto& t : terms_) {
    double angle = 2 * std::numbers::pi * t.exponent / conductor_;
    double c = t.coeff.get_d();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.exponent == 0) {
      piece = t.coeff.get_str();
    } else {
      std::string root = "E(" + std::to_string(conductor_) + ")";
      if (t.exponent != 1) root += "^" + std::to_string(t.exponent);
      if (t.coeff == 1) {
        piece = root;
      } else if (t.coeff == -1) {
        piece = "-" + root;
      } else {
        piece = t.coeff.get_str() + "*" + root;
      }
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

namespace {

std::vector<Cyclotomic::Term> merge_add(const std::vector<Cyclotomic::Term>& a,
                                        const std::vector<Cyclotomic::Term>& b, bool subtract) {
  std::vector<Cyclotomic::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (conductor_ != rhs.conductor_) {
    std::uint32_t m = std::lcm(conductor_, rhs.conductor_);
    *this = lifted(m);
    terms_ = merge_add(terms_, rhs.lifted(m).terms_, false);
    return *this;
  }
  terms_ = merge_add(terms_, rhs.terms_, false);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (conductor_ != rhs.conductor_) {
    std::uint32_t m = std::lcm(conductor_, rhs.conductor_);
    *this = lifted(m);
    terms_ = merge_add(terms_, rhs.lifted(m).terms_, true);
    return *this;
  }
  terms_ = merge_add(terms_, rhs.terms_, true);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  *this = *this * rhs;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.terms_.empty() || b.terms_.empty()) {
    return Cyclotomic(std::lcm(a.conductor_, b.conductor_), {});
  }
  if (a.is_rational()) {
    Cyclotomic r = b.lifted(std::lcm(a.conductor_, b.conductor_));
    return r *= a.terms_.front().coeff;
  }
  if (b.is_rational()) {
    Cyclotomic r = a.lifted(std::lcm(a.conductor_, b.conductor_));
    return r *= b.terms_.front().coeff;
  }
  if (a.conductor_ != b.conductor_) {
    std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m) * b.lifted(m);
  }
  const std::uint32_t m = a.conductor_;
  const std::size_t len = 2 * static_cast<std::size_t>(m);
  auto& dense = scratch(len);
  Rational t;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(t.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      dense[x.exponent + y.exponent] += t;
    }
  }
  return Cyclotomic(m, reduce_dense(dense, len, m));
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_ || a.is_rational() || b.is_rational()) {
    if (a.is_rational() != b.is_rational()) return false;
    return a.terms_ == b.terms_;
  }
  std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(m).terms_ == b.lifted(m).terms_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m) <=> b.lifted(m);
  }
  std::size_t i = 0;
  std::size_t j = 0;
  static const Rational zero(0);
  while (i < a.terms_.size() || j < b.terms_.size()) {
    std::uint32_t ea = i < a.terms_.size() ? a.terms_[i].exponent : ~0u;
    std::uint32_t eb = j < b.terms_.size() ? b.terms_[j].exponent : ~0u;
    std::uint32_t e = std::min(ea, eb);
    const Rational& ca = ea == e ? a.terms_[i].coeff : zero;
    const Rational& cb = eb == e ? b.terms_[j].coeff : zero;
    int c = cmp(ca, cb);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ea == e) ++i;
    if (eb == e) ++j;
  }
  return std::strong_ordering::equal;
}

}  // namespace charforge
