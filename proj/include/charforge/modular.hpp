#pragma once

#include <cstdint>
#include <span>
#include <vector>

/// Arithmetic and dense linear algebra over a prime field F_ell, ell < 2^32.
namespace charforge::modular {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t ell);

/// Smallest element of F_ell (by integer value) of multiplicative order exactly m.
/// Requires m | ell - 1.
std::uint64_t smallest_primitive_root_of_unity(std::uint64_t m, std::uint64_t ell);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row and drops zero rows.
std::vector<std::size_t> rref(Matrix& m, std::uint64_t ell);

/// Basis of {x : m x = 0}, one vector per row of the result.
Matrix nullspace(const Matrix& m, std::uint64_t ell);

/// Characteristic polynomial of a square matrix, constant term first.
std::vector<std::uint64_t> characteristic_polynomial(const Matrix& a, std::uint64_t ell);

/// Distinct roots in F_ell, ascending.
std::vector<std::uint64_t> roots(std::span<const std::uint64_t> poly, std::uint64_t ell);

}  // namespace charforge::modular
