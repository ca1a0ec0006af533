#include "charforge/modular.hpp"

#include <utility>

#include "charforge/error.hpp"
#include "charforge/numeric.hpp"

namespace charforge::modular {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t ell) {
  a %= ell;
  if (a == 0) throw UsageError("zero has no inverse modulo " + std::to_string(ell));
  return pow_mod(a, ell - 2, ell);
}

std::uint64_t smallest_primitive_root_of_unity(std::uint64_t m, std::uint64_t ell) {
  if ((ell - 1) % m != 0) throw UsageError("root order does not divide ell - 1");
  auto primes = factorize(m);
  for (std::uint64_t w = 1; w < ell; ++w) {
    if (pow_mod(w, m, ell) != 1) continue;
    bool primitive = true;
    for (auto [q, e] : primes) {
      if (pow_mod(w, m / q, ell) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return w;
  }
  throw UsageError("no primitive root of unity found");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::size_t> rref(Matrix& m, std::uint64_t ell) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    auto prow = m.row(rank);
    const std::uint64_t inv = inv_mod(prow[c], ell);
    for (std::size_t j = c; j < cols; ++j) prow[j] = prow[j] * inv % ell;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto row = m.row(r);
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = ell - f;
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = (row[j] + neg * prow[j]) % ell;
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  Matrix reduced(rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t j = 0; j < cols; ++j) reduced(r, j) = m(r, j);
  }
  m = std::move(reduced);
  return pivots;
}

Matrix nullspace(const Matrix& m, std::uint64_t ell) {
  Matrix work = m;
  auto pivots = rref(work, ell);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(cols - pivots.size(), cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(out, pivots[r]) = (ell - work(r, free)) % ell;
    }
    ++out;
  }
  return basis;
}

std::vector<std::uint64_t> characteristic_polynomial(const Matrix& a, std::uint64_t ell) {
  const std::size_t n = a.rows();
  Matrix h = a;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const std::uint64_t inv = inv_mod(h(m, m - 1), ell);
    for (i = m + 1; i < n; ++i) {
      const std::uint64_t u = h(i, m - 1) * inv % ell;
      if (u == 0) continue;
      const std::uint64_t neg = ell - u;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = (h(i, j) + neg * h(m, j)) % ell;
      for (std::size_t j = 0; j < n; ++j) h(j, m) = (h(j, m) + u * h(j, i)) % ell;
    }
  }
  // p_{k+1} = (x - h_kk) p_k - sum_{i<k} (prod_{j=i+1..k} h_{j,j-1}) h_{ik} p_i
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next(k + 2, 0);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = (next[d + 1] + p[k][d]) % ell;
      next[d] = (next[d] + (ell - h(k, k)) * p[k][d]) % ell;
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = prod * h(i + 1, i) % ell;
      if (prod == 0) break;
      const std::uint64_t coef = prod * h(i, k) % ell;
      if (coef == 0) continue;
      const std::uint64_t neg = ell - coef;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = (next[d] + neg * p[i][d]) % ell;
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> roots(std::span<const std::uint64_t> poly, std::uint64_t ell) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < ell; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % ell;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

}  // namespace charforge::modular
