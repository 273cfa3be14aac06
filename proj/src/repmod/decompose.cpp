#include "arsubcat/repmod/decompose.hpp"

#include <algorithm>

#include "arsubcat/errors.hpp"
#include "arsubcat/exactlin/polynomial.hpp"
#include "arsubcat/repmod/projectives.hpp"

namespace arsubcat {

namespace {

std::size_t max_vertex_dim(const Representation& m) {
  std::size_t d = 0;
  for (auto x : m.dims()) d = std::max(d, x);
  return d;
}

Matrix block_diagonal(const ModuleMap& f) {
  Matrix acc(f.source().field(), 0, 0);
  for (auto& m : f.maps()) acc = direct_sum(acc, m);
  return acc;
}

bool is_invertible_map(const ModuleMap& f) {
  for (auto& m : f.maps())
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

bool is_nilpotent_map(const ModuleMap& f) {
  for (auto& m : f.maps())
    if (!is_nilpotent(m)) return false;
  return true;
}

ModuleMap apply_polynomial(const poly::Poly& g, const ModuleMap& phi) {
  std::vector<Matrix> maps;
  for (auto& m : phi.maps()) maps.push_back(evaluate_polynomial(g, m));
  return ModuleMap::trusted(phi.source(), phi.target(), std::move(maps));
}

// p^t <= limit without overflow.
bool small_space(std::uint64_t p, std::size_t t, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < t; ++i) {
    acc *= p;
    if (acc > limit) return false;
  }
  return true;
}

std::vector<Residue> random_coeffs(const PrimeField& k, std::size_t t, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, k.modulus() - 1);
  std::vector<Residue> c(t);
  for (auto& x : c) x = dist(rng);
  return c;
}

// Calls visit on one representative of every line in k^t (first nonzero
// coordinate equal to 1) until it returns true.
template <class F>
bool for_each_line(const PrimeField& k, std::size_t t, F&& visit) {
  const Residue p = k.modulus();
  for (std::size_t lead = 0; lead < t; ++lead) {
    std::vector<Residue> c(t, 0);
    c[lead] = 1;
    while (true) {
      if (visit(c)) return true;
      std::size_t i = lead + 1;
      while (i < t && c[i] == p - 1) c[i++] = 0;
      if (i >= t) break;
      ++c[i];
    }
  }
  return false;
}

// A non-nilpotent, non-invertible polynomial in phi, if the minimal
// polynomial of phi has two distinct irreducible factors.
std::optional<ModuleMap> primary_splitter(const ModuleMap& phi, Rng& rng) {
  const PrimeField& k = phi.source().field();
  poly::Poly mp = minimal_polynomial(block_diagonal(phi));
  if (poly::degree(mp) < 1) return std::nullopt;
  auto factors = poly::irreducible_factors(k, mp, rng);
  if (factors.size() < 2) return std::nullopt;
  return apply_polynomial(factors.front(), phi);
}

enum class SplitSearch { Found, NoneExact, NoneRandom };

SplitSearch search_splitter(const Representation& m, const HomSpace& end, Rng& rng, const DecomposeOptions& opts,
                            std::optional<ModuleMap>& out) {
  const PrimeField& k = m.field();
  const std::size_t t = end.dim();
  if (small_space(k.modulus(), t, opts.exact_limit)) {
    bool found = for_each_line(k, t, [&](const std::vector<Residue>& c) {
      ModuleMap phi = end.combination(c);
      if (is_invertible_map(phi) || is_nilpotent_map(phi)) return false;
      out = phi;
      return true;
    });
    return found ? SplitSearch::Found : SplitSearch::NoneExact;
  }
  for (int tries = 0; tries < opts.budget; ++tries) {
    ModuleMap phi = end.combination(random_coeffs(k, t, rng));
    if (auto s = primary_splitter(phi, rng)) {
      out = std::move(s);
      return SplitSearch::Found;
    }
  }
  return SplitSearch::NoneRandom;
}

std::optional<std::string> shortcut_evidence(const Representation& m) {
  if (m.total_dim() == 1) return "dimension one";
  auto top = top_dims(m);
  std::size_t t = 0;
  for (auto x : top) t += x;
  if (t == 1) return "simple top";
  auto soc = socle_dims(m);
  std::size_t s = 0;
  for (auto x : soc) s += x;
  if (s == 1) return "simple socle";
  return std::nullopt;
}

}  // namespace

DirectSum fitting_split(const ModuleMap& phi) {
  const Representation& m = phi.source();
  const std::size_t n = max_vertex_dim(m);
  std::vector<Matrix> u, w;
  for (auto& f : phi.maps()) {
    Matrix fn = power(f, n);
    u.push_back(kernel_basis(fn));
    w.push_back(column_space(fn));
  }
  return split_module(m, u, w);
}

std::optional<ModuleMap> splitting_endomorphism(const Representation& m, Rng& rng, const DecomposeOptions& opts) {
  if (m.total_dim() <= 1) return std::nullopt;
  HomSpace end(m, m);
  std::optional<ModuleMap> out;
  search_splitter(m, end, rng, opts, out);
  return out;
}

DecompositionCertificate decompose(const Representation& m, Rng& rng, const DecomposeOptions& opts) {
  DecompositionCertificate cert;
  struct Item {
    Representation module;
    ModuleMap inclusion;
    ModuleMap projection;
  };
  std::vector<Item> work;
  if (!m.is_zero()) work.push_back({m, ModuleMap::identity(m), ModuleMap::identity(m)});
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    const Representation& x = it.module;
    if (auto ev = shortcut_evidence(x)) {
      cert.summands.push_back(x);
      cert.inclusions.push_back(it.inclusion);
      cert.projections.push_back(it.projection);
      cert.evidence.push_back(*ev);
      continue;
    }
    HomSpace end(x, x);
    std::optional<ModuleMap> phi;
    SplitSearch res = end.dim() == 1 ? SplitSearch::NoneExact : search_splitter(x, end, rng, opts, phi);
    if (res == SplitSearch::Found) {
      DirectSum parts = fitting_split(*phi);
      ARSUBCAT_CHECK(!parts.inclusions[0].source().is_zero() && !parts.inclusions[1].source().is_zero(),
                     "Fitting split of a splitting endomorphism is trivial");
      // Reverse so summands come out in the order ker, im.
      for (int s = 1; s >= 0; --s) {
        work.push_back({parts.inclusions[s].source(), compose(it.inclusion, parts.inclusions[s]),
                        compose(parts.projections[s], it.projection)});
      }
      continue;
    }
    cert.summands.push_back(x);
    cert.inclusions.push_back(it.inclusion);
    cert.projections.push_back(it.projection);
    if (end.dim() == 1) {
      cert.evidence.push_back("End is the ground field");
    } else if (res == SplitSearch::NoneExact) {
      cert.evidence.push_back("End local: every one of " + std::to_string(end.dim()) +
                              "-dim End checked nilpotent or invertible");
    } else {
      cert.evidence.push_back("primary minimal polynomial for " + std::to_string(opts.budget) +
                              " random endomorphisms");
      cert.certified = false;
    }
  }
  return cert;
}

bool is_indecomposable(const Representation& m, Rng& rng, const DecomposeOptions& opts) {
  if (m.is_zero()) return false;
  if (shortcut_evidence(m)) return true;
  HomSpace end(m, m);
  if (end.dim() == 1) return true;
  std::optional<ModuleMap> phi;
  return search_splitter(m, end, rng, opts, phi) != SplitSearch::Found;
}

std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n, Rng& rng,
                                          const IsoOptions& opts) {
  if (!same_algebra(m.algebra(), n.algebra())) throw PreconditionError("is_isomorphic: different algebras");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return ModuleMap::zero(m, n);
  if (top_dims(m) != top_dims(n) || socle_dims(m) != socle_dims(n)) return std::nullopt;
  HomSpace h(m, n);
  const std::size_t t = h.dim();
  if (t == 0) return std::nullopt;
  const PrimeField& k = m.field();
  for (int i = 0; i < opts.random_tries; ++i) {
    ModuleMap f = h.combination(random_coeffs(k, t, rng));
    if (is_invertible_map(f)) return f;
  }
  if (hom_dim(m, m) != t || hom_dim(n, n) != t) return std::nullopt;
  if (!small_space(k.modulus(), t, opts.exact_limit)) return std::nullopt;
  std::optional<ModuleMap> out;
  for_each_line(k, t, [&](const std::vector<Residue>& c) {
    ModuleMap f = h.combination(c);
    if (!is_invertible_map(f)) return false;
    out = f;
    return true;
  });
  return out;
}

bool is_isomorphic(const Representation& m, const Representation& n, Rng& rng, const IsoOptions& opts) {
  return find_isomorphism(m, n, rng, opts).has_value();
}

namespace {

Representation sum_of(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  if (parts.empty()) return Representation::zero(alg);
  return direct_sum(parts).sum;
}

}  // namespace

Representation strip_projective_summands(const Representation& m, Rng& rng) {
  std::vector<Representation> keep;
  for (auto& s : decompose(m, rng).summands)
    if (!is_projective(s)) keep.push_back(s);
  return sum_of(m.algebra_ptr(), keep);
}

Representation strip_injective_summands(const Representation& m, Rng& rng) {
  std::vector<Representation> keep;
  for (auto& s : decompose(m, rng).summands)
    if (!is_injective(s)) keep.push_back(s);
  return sum_of(m.algebra_ptr(), keep);
}

bool same_summands(const std::vector<Representation>& a, const std::vector<Representation>& b, Rng& rng) {
  std::vector<Representation> xs, ys;
  for (auto& m : a)
    for (auto& s : decompose(m, rng).summands) xs.push_back(s);
  for (auto& m : b)
    for (auto& s : decompose(m, rng).summands) ys.push_back(s);
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (auto& x : xs) {
    bool matched = false;
    for (std::size_t j = 0; j < ys.size() && !matched; ++j) {
      if (used[j] || x.dims() != ys[j].dims()) continue;
      if (is_isomorphic(x, ys[j], rng)) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace arsubcat
