#pragma once

#include <random>
#include <vector>

#include "arsubcat/homalg/homalg.hpp"
#include "arsubcat/repmod/decompose.hpp"

namespace arsubcat::testing {

inline AlgebraPtr truncated_loop(std::size_t n, std::uint32_t p = 5) {
  Quiver q(1, {{"x", 0, 0}});
  return BoundQuiverAlgebra::build(PrimeField(p), q, {{{1, std::vector<std::size_t>(n, 0)}}}, 32,
                                   "kx" + std::to_string(n));
}

inline AlgebraPtr a2_path(std::uint32_t p = 5) {
  Quiver q(2, {{"a", 0, 1}});
  return BoundQuiverAlgebra::build(PrimeField(p), q, {}, 32, "A2");
}

// 0 -a-> 1 -b-> 2 with ab = 0: global dimension 2.
inline AlgebraPtr a3_zero_relation(std::uint32_t p = 5) {
  Quiver q(3, {{"a", 0, 1}, {"b", 1, 2}});
  return BoundQuiverAlgebra::build(PrimeField(p), q, {{{1, {0, 1}}}}, 32, "A3/ab");
}

// Two loops x, y at one vertex with x^2 = y^2 = xy = yx = 0 (local, dim 3).
inline AlgebraPtr two_loops_radical_square_zero(std::uint32_t p = 5) {
  Quiver q(1, {{"x", 0, 0}, {"y", 0, 0}});
  return BoundQuiverAlgebra::build(PrimeField(p), q,
                                   {{{1, {0, 0}}}, {{1, {1, 1}}}, {{1, {0, 1}}}, {{1, {1, 0}}}}, 32, "kxy");
}

inline Matrix random_matrix(const PrimeField& k, std::size_t r, std::size_t c, Rng& rng) {
  std::uniform_int_distribution<Residue> pick(0, k.modulus() - 1);
  Matrix m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = pick(rng);
  return m;
}

inline std::vector<std::size_t> random_vertices(const AlgebraPtr& alg, std::size_t max_count, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(1, max_count), vertex(0, alg->vertex_count() - 1);
  std::vector<std::size_t> v(count(rng));
  for (auto& x : v) x = vertex(rng);
  return v;
}

/// Coker of a random map between random sums of indecomposable projectives.
/// Coefficients on trivial paths are dropped with probability 1/2 so that
/// non-projective results are common.
inline Representation random_module(const AlgebraPtr& alg, Rng& rng, std::size_t max_gens = 3) {
  ProjectiveSum p0 = projective_sum(alg, random_vertices(alg, max_gens, rng));
  ProjectiveSum p1 = projective_sum(alg, random_vertices(alg, max_gens, rng));
  std::uniform_int_distribution<Residue> pick(0, alg->field().modulus() - 1);
  std::bernoulli_distribution keep_trivial(0.5);
  ElementMatrix x(p0.vertices.size(), std::vector<Element>(p1.vertices.size()));
  for (std::size_t l = 0; l < p0.vertices.size(); ++l)
    for (std::size_t k = 0; k < p1.vertices.size(); ++k) {
      Element e = alg->zero_element();
      for (auto b : alg->basis_between(p0.vertices[l], p1.vertices[k]))
        if (alg->basis()[b].length() > 0 || keep_trivial(rng)) e[b] = pick(rng);
      x[l][k] = e;
    }
  return cokernel(map_from_elements(p1, p0, x)).module;
}

inline ModuleMap random_hom(const Representation& m, const Representation& n, Rng& rng) {
  HomSpace h(m, n);
  std::uniform_int_distribution<Residue> pick(0, m.field().modulus() - 1);
  std::vector<Residue> c(h.dim());
  for (auto& x : c) x = pick(rng);
  return h.combination(c);
}

// ---- Oracles. These rebuild the linear systems from scratch instead of
// going through HomSpace and the resolution machinery.

/// Kernel of the intertwining system N(a) X_s - X_t M(a) = 0, built with
/// explicit Kronecker-style coefficients.
inline Matrix hom_solutions(const Representation& m, const Representation& n) {
  const auto& q = m.algebra().quiver();
  const PrimeField& k = m.field();
  std::vector<std::size_t> off(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  std::vector<std::vector<std::int64_t>> rows;
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return off[v] + r * m.dim(v) + c; };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    const Matrix& ma = m.arrow_map(a);
    const Matrix& na = n.arrow_map(a);
    // entry (r, c) of N(a) X_s - X_t M(a), r < n_t, c < m_s
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < m.dim(s); ++c) {
        std::vector<std::int64_t> row(off.back(), 0);
        for (std::size_t j = 0; j < n.dim(s); ++j) row[var(s, j, c)] += na(r, j);
        for (std::size_t j = 0; j < m.dim(t); ++j) row[var(t, r, j)] -= ma(j, c);
        rows.push_back(row);
      }
  }
  Matrix sys = Matrix::from_rows(k, rows, off.back());
  if (rows.empty()) return Matrix::identity(k, off.back());
  return kernel_basis(sys);
}

inline std::size_t hom_dim_oracle(const Representation& m, const Representation& n) {
  return hom_solutions(m, n).cols();
}

/// dim Ext^1(M, N) from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(ΩM,N) -> Ext^1(M,N) -> 0.
inline std::size_t ext1_dim_oracle(const Representation& m, const Representation& n) {
  ProjectiveCover cov = projective_cover(m);
  Representation omega = kernel(cov.map).module;
  return hom_dim_oracle(omega, n) + hom_dim_oracle(m, n) - hom_dim_oracle(cov.projective.module, n);
}

/// dim of Hom(M,N) modulo the span of all g∘h with h: M -> Λ, g: Λ -> N.
inline std::size_t stable_hom_dim_oracle(const Representation& m, const Representation& n) {
  Representation lam = regular_module(m.algebra_ptr()).module;
  HomSpace mn(m, n);
  auto hs = hom_basis(m, lam);
  auto gs = hom_basis(lam, n);
  Matrix span(m.field(), mn.ambient_dim(), 0);
  for (auto& h : hs)
    for (auto& g : gs) span = hstack(span, mn.flatten(compose(g, h)));
  return mn.dim() - rank(span);
}

}  // namespace arsubcat::testing
