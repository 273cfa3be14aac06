#include "arsubcat/repmod/projectives.hpp"

#include "arsubcat/errors.hpp"

namespace arsubcat {

namespace {

std::size_t arrow_basis_index(const BoundQuiverAlgebra& alg, std::size_t a) {
  Element e = alg.reduce_path(alg.quiver().arrow(a).source, {a});
  for (std::size_t b = 0; b < e.size(); ++b)
    if (e[b] != 0) return b;
  throw InvariantError("arrow does not survive in the path basis");
}

// Adds scale * (coordinates of y on basis_between(s, t)) into column col, from row0 down.
void scatter_block(const BoundQuiverAlgebra& alg, const Element& y, std::size_t s, std::size_t t, Residue scale,
                   Matrix& into, std::size_t row0, std::size_t col) {
  const PrimeField& k = alg.field();
  const auto& blk = alg.basis_between(s, t);
  for (std::size_t r = 0; r < blk.size(); ++r) {
    Residue c = y[blk[r]];
    if (c == 0) continue;
    Residue& e = into(row0 + r, col);
    e = k.add(e, k.mul(scale, c));
  }
}

}  // namespace

Representation indecomposable_projective(const AlgebraPtr& alg, std::size_t i) {
  const Quiver& q = alg->quiver();
  const std::size_t n = q.vertex_count();
  ARSUBCAT_REQUIRE(i < n, "indecomposable_projective: vertex out of range");
  std::vector<std::size_t> dims(n);
  for (std::size_t j = 0; j < n; ++j) dims[j] = alg->basis_between(i, j).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    const std::size_t ab = arrow_basis_index(*alg, a);
    Matrix m(alg->field(), dims[t], dims[s]);
    const auto& from = alg->basis_between(i, s);
    for (std::size_t c = 0; c < from.size(); ++c) scatter_block(*alg, alg->multiply_basis(from[c], ab), i, t, 1, m, 0, c);
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Representation indecomposable_injective(const AlgebraPtr& alg, std::size_t i) {
  const Quiver& q = alg->quiver();
  const std::size_t n = q.vertex_count();
  ARSUBCAT_REQUIRE(i < n, "indecomposable_injective: vertex out of range");
  std::vector<std::size_t> dims(n);
  for (std::size_t j = 0; j < n; ++j) dims[j] = alg->basis_between(j, i).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    const std::size_t ab = arrow_basis_index(*alg, a);
    Matrix m(alg->field(), dims[t], dims[s]);
    // (phi . a)(q) = phi(a q)
    const auto& to = alg->basis_between(t, i);
    const auto& from = alg->basis_between(s, i);
    for (std::size_t r = 0; r < to.size(); ++r) {
      const Element& prod = alg->multiply_basis(ab, to[r]);
      for (std::size_t c = 0; c < from.size(); ++c) m(r, c) = prod[from[c]];
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Matrix ProjectiveSum::generator(std::size_t k) const {
  const std::size_t u = vertices.at(k);
  Matrix g(alg->field(), module.dim(u), 1);
  g(offset[k][u] + alg->position_in_block(alg->trivial(u)), 0) = 1;
  return g;
}

ProjectiveSum projective_sum(const AlgebraPtr& alg, std::vector<std::size_t> vertices) {
  const std::size_t n = alg->vertex_count();
  std::vector<Representation> parts;
  std::vector<std::vector<std::size_t>> offset;
  std::vector<std::size_t> running(n, 0);
  for (auto u : vertices) {
    parts.push_back(indecomposable_projective(alg, u));
    offset.push_back(running);
    for (std::size_t v = 0; v < n; ++v) running[v] += alg->basis_between(u, v).size();
  }
  Representation sum = parts.empty() ? Representation::zero(alg) : direct_sum(parts).sum;
  return {alg, std::move(vertices), std::move(sum), std::move(offset)};
}

ProjectiveSum regular_module(const AlgebraPtr& alg) {
  std::vector<std::size_t> all;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) all.push_back(v);
  return projective_sum(alg, std::move(all));
}

ModuleMap map_from_elements(const ProjectiveSum& src, const ProjectiveSum& dst, const ElementMatrix& x) {
  const BoundQuiverAlgebra& alg = *src.alg;
  const std::size_t n = alg.vertex_count();
  ARSUBCAT_REQUIRE(x.size() == dst.vertices.size(), "element matrix has the wrong number of rows");
  for (auto& row : x) ARSUBCAT_REQUIRE(row.size() == src.vertices.size(), "element matrix has the wrong number of columns");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < n; ++v) maps.emplace_back(alg.field(), dst.module.dim(v), src.module.dim(v));
  for (std::size_t l = 0; l < dst.vertices.size(); ++l) {
    const std::size_t w = dst.vertices[l];
    for (std::size_t k = 0; k < src.vertices.size(); ++k) {
      const std::size_t u = src.vertices[k];
      const Element& e = x[l][k];
      for (std::size_t b = 0; b < e.size(); ++b) {
        if (e[b] == 0) continue;
        if (alg.basis()[b].source != w || alg.basis()[b].target != u)
          throw PreconditionError("element matrix entry is not in e_w Λ e_u");
        for (std::size_t v = 0; v < n; ++v) {
          const auto& paths = alg.basis_between(u, v);
          for (std::size_t c = 0; c < paths.size(); ++c)
            scatter_block(alg, alg.multiply_basis(b, paths[c]), w, v, e[b], maps[v], dst.offset[l][v],
                          src.offset[k][v] + c);
        }
      }
    }
  }
  return ModuleMap::trusted(src.module, dst.module, std::move(maps));
}

ElementMatrix elements_of_map(const ProjectiveSum& src, const ProjectiveSum& dst, const ModuleMap& f) {
  const BoundQuiverAlgebra& alg = *src.alg;
  ElementMatrix x(dst.vertices.size(), std::vector<Element>(src.vertices.size(), alg.zero_element()));
  for (std::size_t k = 0; k < src.vertices.size(); ++k) {
    const std::size_t u = src.vertices[k];
    const std::size_t col = src.offset[k][u] + alg.position_in_block(alg.trivial(u));
    for (std::size_t l = 0; l < dst.vertices.size(); ++l) {
      const auto& blk = alg.basis_between(dst.vertices[l], u);
      for (std::size_t r = 0; r < blk.size(); ++r) x[l][k][blk[r]] = f.at(u)(dst.offset[l][u] + r, col);
    }
  }
  return x;
}

ModuleMap map_from_generators(const ProjectiveSum& src, const Representation& n, const std::vector<Matrix>& images) {
  const BoundQuiverAlgebra& alg = *src.alg;
  const std::size_t nv = alg.vertex_count();
  ARSUBCAT_REQUIRE(images.size() == src.vertices.size(), "one generator image per summand");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < nv; ++v) maps.emplace_back(alg.field(), n.dim(v), src.module.dim(v));
  for (std::size_t k = 0; k < src.vertices.size(); ++k) {
    const std::size_t u = src.vertices[k];
    ARSUBCAT_REQUIRE(images[k].rows() == n.dim(u) && images[k].cols() == 1, "generator image has the wrong shape");
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& paths = alg.basis_between(u, v);
      for (std::size_t c = 0; c < paths.size(); ++c)
        maps[v].set_block(0, src.offset[k][v] + c, n.basis_action(paths[c]) * images[k]);
    }
  }
  return ModuleMap::trusted(src.module, n, std::move(maps));
}

std::vector<Matrix> radical_basis(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix acc(m.field(), m.dim(v), 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).target == v) acc = hstack(acc, m.arrow_map(a));
    out.push_back(column_space(acc));
  }
  return out;
}

std::vector<Matrix> top_generators(const Representation& m) {
  std::vector<Matrix> out;
  for (auto& rad : radical_basis(m)) out.push_back(complement_columns(rad));
  return out;
}

std::vector<std::size_t> top_dims(const Representation& m) {
  std::vector<std::size_t> out;
  for (auto& rad : radical_basis(m)) out.push_back(rad.rows() - rad.cols());
  return out;
}

std::vector<Matrix> socle_basis(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix acc(m.field(), 0, m.dim(v));
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).source == v) acc = vstack(acc, m.arrow_map(a));
    out.push_back(kernel_basis(acc));
  }
  return out;
}

std::vector<std::size_t> socle_dims(const Representation& m) {
  std::vector<std::size_t> out;
  for (auto& s : socle_basis(m)) out.push_back(s.cols());
  return out;
}

ProjectiveCover projective_cover(const Representation& m) {
  auto gens = top_generators(m);
  std::vector<std::size_t> vertices;
  std::vector<Matrix> images;
  for (std::size_t v = 0; v < gens.size(); ++v) {
    for (std::size_t c = 0; c < gens[v].cols(); ++c) {
      vertices.push_back(v);
      images.push_back(gens[v].column_at(c));
    }
  }
  ProjectiveSum p = projective_sum(m.algebra_ptr(), std::move(vertices));
  ModuleMap map = map_from_generators(p, m, images);
  return {std::move(p), std::move(map)};
}

Representation injective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return Representation::zero(alg);
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(indecomposable_injective(alg, v));
  return direct_sum(parts).sum;
}

InjectiveEnvelope injective_envelope(const Representation& m) {
  const AlgebraPtr& alg = m.algebra_ptr();
  const PrimeField& k = m.field();
  const std::size_t n = alg->vertex_count();
  auto soc = socle_basis(m);
  std::vector<std::size_t> vertices;
  std::vector<Matrix> functionals;  // 1 x dim M_j each
  for (std::size_t j = 0; j < n; ++j) {
    if (soc[j].cols() == 0) continue;
    auto lt = solve(soc[j].transpose(), Matrix::identity(k, soc[j].cols()));
    ARSUBCAT_CHECK(lt.has_value(), "socle basis is not independent");
    Matrix l = lt->transpose();
    for (std::size_t r = 0; r < l.rows(); ++r) {
      vertices.push_back(j);
      functionals.push_back(l.block(r, 0, 1, l.cols()));
    }
  }
  Representation inj = injective_sum(alg, vertices);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix mv(k, 0, m.dim(v));
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      const auto& paths = alg->basis_between(v, vertices[s]);
      Matrix blk(k, paths.size(), m.dim(v));
      for (std::size_t r = 0; r < paths.size(); ++r)
        blk.set_block(r, 0, functionals[s] * m.basis_action(paths[r]));
      mv = vstack(mv, blk);
    }
    maps.push_back(std::move(mv));
  }
  ModuleMap map = ModuleMap::trusted(m, inj, std::move(maps));
  return {std::move(vertices), std::move(inj), std::move(map)};
}

bool is_projective(const Representation& m) {
  auto top = top_dims(m);
  std::size_t total = 0;
  const auto& alg = m.algebra();
  for (std::size_t v = 0; v < top.size(); ++v)
    for (std::size_t w = 0; w < top.size(); ++w) total += top[v] * alg.basis_between(v, w).size();
  return total == m.total_dim();
}

bool is_injective(const Representation& m) {
  auto soc = socle_dims(m);
  std::size_t total = 0;
  const auto& alg = m.algebra();
  for (std::size_t v = 0; v < soc.size(); ++v)
    for (std::size_t w = 0; w < soc.size(); ++w) total += soc[v] * alg.basis_between(w, v).size();
  return total == m.total_dim();
}

}  // namespace arsubcat
