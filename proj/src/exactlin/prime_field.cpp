#include "arsubcat/exactlin/prime_field.hpp"

#include "arsubcat/errors.hpp"

namespace arsubcat {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact below 3.3e24.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p > 2147483647ull || !is_prime(p)) {
    throw PreconditionError("field modulus " + std::to_string(p) + " is not a prime in [2, 2^31-1]");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  return static_cast<Residue>(powmod(a, e, p_));
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvariantError("inverse of zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

}  // namespace arsubcat
