#pragma once

#include <cstdint>
#include <string>

namespace arsubcat {

using Residue = std::uint32_t;

/// The prime field GF(p). Only the modulus is stored; elements are plain
/// residues in [0, p).
class PrimeField {
 public:
  /// Throws PreconditionError unless 2 <= p <= 2^31 - 1 and p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }

  Residue reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// Multiplicative inverse; `a` must be nonzero.
  Residue inv(Residue a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace arsubcat
