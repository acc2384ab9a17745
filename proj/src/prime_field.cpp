#include "abelstrata/prime_field.hpp"

#include <string>
#include <utility>

namespace abelstrata {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 7; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32)) throw FieldError("prime must be below 2^32");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::reduce(long long a) const {
  const auto p = static_cast<long long>(p_);
  long long r = a % p;
  if (r < 0) r += p;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1 % p_;
  a %= p_;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw FieldError("inverse of zero");
  return pow(a, p_ - 2);
}

std::size_t rank(const PrimeField& field, FpMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m.at(pivot, k), m.at(r, k));
    }
    const auto inv = field.inv(m.at(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) = field.mul(m.at(r, k), inv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const auto f = m.at(i, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < m.cols(); ++k) {
        m.at(i, k) = field.sub(m.at(i, k), field.mul(f, m.at(r, k)));
      }
    }
    ++r;
  }
  return r;
}

std::size_t nullity(const PrimeField& field, const FpMatrix& m) { return m.cols() - rank(field, m); }

}  // namespace abelstrata
