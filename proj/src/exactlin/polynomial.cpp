#include "arsubcat/exactlin/polynomial.hpp"

#include <algorithm>

#include "arsubcat/errors.hpp"

namespace arsubcat::poly {

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly monic(const PrimeField& k, Poly f) {
  normalize(f);
  if (f.empty()) return f;
  Residue c = k.inv(f.back());
  for (auto& x : f) x = k.mul(x, c);
  return f;
}

Poly add(const PrimeField& k, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = k.add(r[i], g[i]);
  normalize(r);
  return r;
}

Poly sub(const PrimeField& k, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = k.sub(r[i], g[i]);
  normalize(r);
  return r;
}

Poly mul(const PrimeField& k, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(f[i], g[j]));
  }
  normalize(r);
  return r;
}

std::pair<Poly, Poly> divmod(const PrimeField& k, const Poly& f, const Poly& g) {
  Poly gg = g;
  normalize(gg);
  if (gg.empty()) throw InvariantError("polynomial division by zero");
  Poly r = f;
  normalize(r);
  if (r.size() < gg.size()) return {{}, r};
  Poly q(r.size() - gg.size() + 1, 0);
  Residue lead_inv = k.inv(gg.back());
  while (!r.empty() && r.size() >= gg.size()) {
    std::size_t shift = r.size() - gg.size();
    Residue c = k.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t j = 0; j < gg.size(); ++j) r[shift + j] = k.sub(r[shift + j], k.mul(c, gg[j]));
    normalize(r);
  }
  normalize(q);
  return {q, r};
}

Poly mod(const PrimeField& k, const Poly& f, const Poly& g) { return divmod(k, f, g).second; }

Poly gcd(const PrimeField& k, Poly f, Poly g) {
  normalize(f);
  normalize(g);
  while (!g.empty()) {
    Poly r = mod(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(k, f);
}

Poly lcm(const PrimeField& k, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly d = gcd(k, f, g);
  return monic(k, mul(k, divmod(k, f, d).first, g));
}

Poly derivative(const PrimeField& k, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = k.mul(f[i], k.reduce(static_cast<std::int64_t>(i)));
  normalize(d);
  return d;
}

Poly powmod(const PrimeField& k, Poly base, std::uint64_t e, const Poly& m) {
  Poly r = mod(k, Poly{1}, m);
  base = mod(k, base, m);
  while (e) {
    if (e & 1) r = mod(k, mul(k, r, base), m);
    base = mod(k, mul(k, base, base), m);
    e >>= 1;
  }
  return r;
}

namespace {

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

// f(x) = g(x^p) when f' = 0; over GF(p) this is h(x)^p with h having the
// coefficients of g.
Poly pth_root(const PrimeField& k, const Poly& f) {
  const std::size_t p = k.modulus();
  Poly h;
  for (std::size_t i = 0; i < f.size(); i += p) h.push_back(f[i]);
  normalize(h);
  return h;
}

Poly random_poly(const PrimeField& k, int deg_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, k.modulus() - 1);
  Poly a(static_cast<std::size_t>(deg_below));
  for (auto& c : a) c = dist(rng);
  normalize(a);
  return a;
}

// Splits a monic squarefree g whose irreducible factors all have degree d.
void equal_degree_split(const PrimeField& k, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = k.modulus();
  for (;;) {
    Poly a = random_poly(k, degree(g), rng);
    if (degree(a) < 1) continue;
    Poly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly t = a;
      Poly acc = a;
      for (int i = 1; i < d; ++i) {
        t = mod(k, mul(k, t, t), g);
        acc = add(k, acc, t);
      }
      b = acc;
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
      Poly t = a;
      Poly norm = a;
      for (int i = 1; i < d; ++i) {
        t = powmod(k, t, p, g);
        norm = mod(k, mul(k, norm, t), g);
      }
      b = sub(k, powmod(k, norm, (p - 1) / 2, g), Poly{1});
    }
    Poly h = gcd(k, b, g);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(k, h, d, rng, out);
      equal_degree_split(k, monic(k, divmod(k, g, h).first), d, rng, out);
      return;
    }
  }
}

void squarefree_factors(const PrimeField& k, Poly f, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::uint64_t p = k.modulus();
  Poly x{0, 1};
  Poly h = x;
  for (int d = 1; degree(f) >= 2 * d; ++d) {
    h = powmod(k, h, p, f);
    Poly g = gcd(k, sub(k, h, x), f);
    if (!is_one(g)) {
      equal_degree_split(k, g, d, rng, out);
      f = monic(k, divmod(k, f, g).first);
      h = mod(k, h, f);
    }
  }
  if (degree(f) > 0) out.push_back(monic(k, f));
}

void collect_factors(const PrimeField& k, Poly f, std::mt19937_64& rng, std::vector<Poly>& out) {
  f = monic(k, f);
  if (degree(f) < 1) return;
  Poly df = derivative(k, f);
  if (df.empty()) {
    collect_factors(k, pth_root(k, f), rng, out);
    return;
  }
  Poly g = gcd(k, f, df);
  if (is_one(g)) {
    squarefree_factors(k, f, rng, out);
    return;
  }
  collect_factors(k, divmod(k, f, g).first, rng, out);
  collect_factors(k, g, rng, out);
}

}  // namespace

std::vector<Poly> irreducible_factors(const PrimeField& k, const Poly& f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  collect_factors(k, f, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace arsubcat::poly
