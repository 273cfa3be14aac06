#pragma once

#include <random>
#include <utility>
#include <vector>

#include "arsubcat/exactlin/prime_field.hpp"

namespace arsubcat::poly {

/// Coefficients low to high, no trailing zeros. The zero polynomial is {}.
using Poly = std::vector<Residue>;

void normalize(Poly& f);
inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }
Poly monic(const PrimeField& k, Poly f);

Poly add(const PrimeField& k, const Poly& f, const Poly& g);
Poly sub(const PrimeField& k, const Poly& f, const Poly& g);
Poly mul(const PrimeField& k, const Poly& f, const Poly& g);
/// (quotient, remainder); g must be nonzero.
std::pair<Poly, Poly> divmod(const PrimeField& k, const Poly& f, const Poly& g);
Poly mod(const PrimeField& k, const Poly& f, const Poly& g);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const PrimeField& k, Poly f, Poly g);
Poly lcm(const PrimeField& k, const Poly& f, const Poly& g);
Poly derivative(const PrimeField& k, const Poly& f);
Poly powmod(const PrimeField& k, Poly base, std::uint64_t e, const Poly& m);

/// The distinct monic irreducible factors of f (deg f >= 1), sorted.
/// Equal-degree splitting is randomized; the factor set is not.
std::vector<Poly> irreducible_factors(const PrimeField& k, const Poly& f, std::mt19937_64& rng);

}  // namespace arsubcat::poly
