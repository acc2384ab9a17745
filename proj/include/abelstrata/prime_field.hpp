// Arithmetic in F_p for word-size primes and rank of dense matrices over F_p.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace abelstrata {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using Element = std::uint64_t;

  /// Throws FieldError unless p is a prime below 2^32 (products fit in 64 bits).
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Element reduce(long long a) const;
  Element add(Element a, Element b) const { return a + b >= p_ ? a + b - p_ : a + b; }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element pow(Element a, std::uint64_t e) const;
  /// Throws FieldError on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

 private:
  std::uint64_t p_;
};

/// Row-major dense matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

/// Rank by Gaussian elimination; the argument is consumed as scratch space.
std::size_t rank(const PrimeField& field, FpMatrix m);

/// Dimension of the right kernel: cols - rank.
std::size_t nullity(const PrimeField& field, const FpMatrix& m);

}  // namespace abelstrata
