#include "arsubcat/homalg/homalg.hpp"

#include "arsubcat/errors.hpp"

namespace arsubcat {

Representation syzygy(const Representation& m) { return kernel(projective_cover(m).map).module; }

Representation cosyzygy(const Representation& m) { return cokernel(injective_envelope(m).map).module; }

Representation syzygy_power(const Representation& m, std::size_t n) {
  Representation x = m;
  for (std::size_t i = 0; i < n && !x.is_zero(); ++i) x = syzygy(x);
  return x;
}

Representation k_dual(const Representation& m) {
  std::vector<Matrix> maps;
  for (auto& a : m.arrow_maps()) maps.push_back(a.transpose());
  return Representation(m.algebra().opposite(), m.dims(), std::move(maps));
}

ModuleMap k_dual(const ModuleMap& f) {
  std::vector<Matrix> maps;
  for (auto& a : f.maps()) maps.push_back(a.transpose());
  return ModuleMap::trusted(k_dual(f.target()), k_dual(f.source()), std::move(maps));
}

MinimalPresentation minimal_presentation(const Representation& m) {
  ProjectiveCover c0 = projective_cover(m);
  Subobject k0 = kernel(c0.map);
  ProjectiveCover c1 = projective_cover(k0.module);
  ModuleMap d = compose(k0.inclusion, c1.map);
  ElementMatrix x = elements_of_map(c1.projective, c0.projective, d);
  return {m, c1.projective, c0.projective, d, c0.map, std::move(x)};
}

MinimalResolution minimal_resolution(const Representation& m, std::size_t length) {
  ProjectiveCover c0 = projective_cover(m);
  MinimalResolution res{m, {c0.projective}, {}, {}, c0.map};
  Subobject k = kernel(c0.map);
  for (std::size_t i = 1; i <= length; ++i) {
    ProjectiveCover c = projective_cover(k.module);
    ModuleMap d = compose(k.inclusion, c.map);
    res.differential_elements.push_back(elements_of_map(c.projective, res.terms.back(), d));
    res.differentials.push_back(std::move(d));
    res.terms.push_back(c.projective);
    k = kernel(c.map);
  }
  return res;
}

ModuleMap dual_projective_map(const ProjectiveSum& src, const ProjectiveSum& dst, const ElementMatrix& x,
                              ProjectiveSum& dual_src, ProjectiveSum& dual_dst) {
  const BoundQuiverAlgebra& alg = *src.alg;
  AlgebraPtr op = alg.opposite();
  dual_src = projective_sum(op, dst.vertices);
  dual_dst = projective_sum(op, src.vertices);
  ElementMatrix y(src.vertices.size(), std::vector<Element>(dst.vertices.size()));
  for (std::size_t k = 0; k < src.vertices.size(); ++k)
    for (std::size_t l = 0; l < dst.vertices.size(); ++l) y[k][l] = to_opposite(x[l][k], alg, *op);
  return map_from_elements(dual_src, dual_dst, y);
}

Representation projective_dual(const Representation& p) {
  ARSUBCAT_REQUIRE(is_projective(p), "NotProjective: projective_dual needs a projective module");
  auto top = top_dims(p);
  std::vector<std::size_t> vertices;
  for (std::size_t v = 0; v < top.size(); ++v) vertices.insert(vertices.end(), top[v], v);
  return projective_sum(p.algebra().opposite(), vertices).module;
}

Representation transpose(const Representation& m) {
  MinimalPresentation pres = minimal_presentation(m);
  AlgebraPtr op = m.algebra().opposite();
  ProjectiveSum p0d{op, {}, Representation::zero(op), {}};
  ProjectiveSum p1d = p0d;
  ModuleMap dd = dual_projective_map(pres.p1, pres.p0, pres.d_elements, p0d, p1d);
  return cokernel(dd).module;
}

Representation ar_translate(const Representation& m) { return k_dual(transpose(m)); }

Representation ar_translate_inverse(const Representation& m) { return transpose(k_dual(m)); }

namespace {

// A lift P -> Q of the composite P -> N along the surjection q: Q -> N,
// chosen generator by generator.
ModuleMap lift_along(const ProjectiveSum& p, const ModuleMap& to_n, const ProjectiveSum& q, const ModuleMap& onto_n) {
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    const std::size_t u = p.vertices[k];
    auto y = solve(onto_n.at(u), to_n.at(u) * p.generator(k));
    ARSUBCAT_CHECK(y.has_value(), "lift_along: target map does not cover the image");
    images.push_back(*y);
  }
  return map_from_generators(p, q.module, images);
}

// The map coker(a) -> coker(b) induced by s with s·im(a) inside im(b).
ModuleMap induced_on_cokernels(const Quotient& from, const Quotient& to, const ModuleMap& s) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < s.maps().size(); ++v) {
    auto r = solve(from.projection.at(v), Matrix::identity(s.source().field(), from.module.dim(v)));
    ARSUBCAT_CHECK(r.has_value(), "cokernel projection is not surjective");
    maps.push_back(to.projection.at(v) * s.at(v) * *r);
  }
  return ModuleMap(from.module, to.module, std::move(maps));
}

}  // namespace

ModuleMap ar_translate_map(const ModuleMap& g) {
  MinimalPresentation pb = minimal_presentation(g.source());
  MinimalPresentation pc = minimal_presentation(g.target());
  ModuleMap g0 = lift_along(pb.p0, compose(g, pb.eps), pc.p0, pc.eps);
  ModuleMap g1 = lift_along(pb.p1, compose(g0, pb.d), pc.p1, pc.d);
  AlgebraPtr op = g.source().algebra().opposite();
  const ProjectiveSum blank{op, {}, Representation::zero(op), {}};
  ProjectiveSum p0b = blank, p1b = blank, p0c = blank, p1c = blank, tmp0 = blank, tmp1 = blank;
  ModuleMap db = dual_projective_map(pb.p1, pb.p0, pb.d_elements, p0b, p1b);
  ModuleMap dc = dual_projective_map(pc.p1, pc.p0, pc.d_elements, p0c, p1c);
  // g1* : P1(C)* -> P1(B)*
  ModuleMap g1d = dual_projective_map(pb.p1, pc.p1, elements_of_map(pb.p1, pc.p1, g1), tmp0, tmp1);
  ModuleMap tr_g = induced_on_cokernels(cokernel(dc), cokernel(db), g1d);
  return k_dual(tr_g);
}

StableHomSpace stable_hom_proj(const Representation& m, const Representation& n) {
  HomSpace h(m, n);
  ProjectiveCover cov = projective_cover(n);
  HomSpace hp(m, cov.projective.module);
  Matrix span(m.field(), h.ambient_dim(), 0);
  for (std::size_t i = 0; i < hp.dim(); ++i) span = hstack(span, h.flatten(compose(cov.map, hp.map(i))));
  Matrix basis = column_space(span);
  return {h.dim(), basis.cols(), h.dim() - basis.cols(), basis};
}

StableHomSpace stable_hom_inj(const Representation& m, const Representation& n) {
  HomSpace h(m, n);
  InjectiveEnvelope env = injective_envelope(m);
  HomSpace hi(env.injective, n);
  Matrix span(m.field(), h.ambient_dim(), 0);
  for (std::size_t i = 0; i < hi.dim(); ++i) span = hstack(span, h.flatten(compose(hi.map(i), env.map)));
  Matrix basis = column_space(span);
  return {h.dim(), basis.cols(), h.dim() - basis.cols(), basis};
}

namespace {

std::vector<std::size_t> cochain_offsets(const ProjectiveSum& p, const Representation& n, std::size_t& total) {
  std::vector<std::size_t> off;
  total = 0;
  for (auto u : p.vertices) {
    off.push_back(total);
    total += n.dim(u);
  }
  return off;
}

}  // namespace

Matrix cochain_differential(const MinimalResolution& res, const Representation& n, std::size_t k) {
  ARSUBCAT_REQUIRE(k >= 1 && k < res.terms.size(), "cochain_differential: degree outside the resolution");
  const ProjectiveSum& pk = res.terms[k];
  const ProjectiveSum& pprev = res.terms[k - 1];
  std::size_t rows = 0, cols = 0;
  auto roff = cochain_offsets(pk, n, rows);
  auto coff = cochain_offsets(pprev, n, cols);
  Matrix delta(n.field(), rows, cols);
  const ElementMatrix& x = res.differential_elements[k - 1];
  for (std::size_t j = 0; j < pk.vertices.size(); ++j)
    for (std::size_t l = 0; l < pprev.vertices.size(); ++l)
      delta.set_block(roff[j], coff[l], n.element_action(x[l][j], pprev.vertices[l], pk.vertices[j]));
  return delta;
}

ExtGroup ext(const Representation& m, const Representation& n, std::size_t degree) {
  ARSUBCAT_REQUIRE(degree >= 1, "ext: degree must be at least 1");
  ARSUBCAT_REQUIRE(same_algebra(m.algebra(), n.algebra()), "ext: modules over different algebras");
  MinimalResolution res = minimal_resolution(m, degree + 1);
  Matrix next = cochain_differential(res, n, degree + 1);
  Matrix prev = cochain_differential(res, n, degree);
  Matrix cocycles = kernel_basis(next);
  Matrix coboundaries = column_space(prev);
  Matrix reps(n.field(), cocycles.rows(), 0);
  Matrix acc = coboundaries;
  std::size_t r = acc.cols();
  for (std::size_t c = 0; c < cocycles.cols(); ++c) {
    Matrix trial = hstack(acc, cocycles.column_at(c));
    std::size_t tr = rank(trial);
    if (tr > r) {
      acc = std::move(trial);
      r = tr;
      reps = hstack(reps, cocycles.column_at(c));
    }
  }
  ExtGroup g{degree, reps.cols(), cocycles, coboundaries, reps, std::move(res)};
  ARSUBCAT_CHECK(g.dim == cocycles.cols() - coboundaries.cols(), "Ext: coboundaries are not cocycles");
  return g;
}

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t degree) {
  return ext(m, n, degree).dim;
}

ModuleMap cochain_map(const ProjectiveSum& p, const Representation& n, const Matrix& c) {
  std::size_t total = 0;
  auto off = cochain_offsets(p, n, total);
  ARSUBCAT_REQUIRE(c.rows() == total && c.cols() == 1, "cochain_map: cochain has the wrong shape");
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) images.push_back(c.block(off[k], 0, n.dim(p.vertices[k]), 1));
  return map_from_generators(p, n, images);
}

Extension extension_from_cocycle(const MinimalResolution& res, const Representation& n, const Matrix& c) {
  ARSUBCAT_REQUIRE(res.terms.size() >= 2, "extension_from_cocycle: resolution too short");
  const PrimeField& k = n.field();
  ModuleMap cm = cochain_map(res.terms[1], n, c);
  ModuleMap g = vstack(cm.scaled(k.neg(1)), res.differentials[0]);
  std::vector<Representation> parts{n, res.terms[0].module};
  DirectSum ds = direct_sum(parts);
  Quotient e = cokernel(g);
  ModuleMap incl = compose(e.projection, ds.inclusions[0]);
  ModuleMap down = compose(res.augmentation, ds.projections[1]);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < n.dims().size(); ++v) {
    auto r = solve(e.projection.at(v), Matrix::identity(k, e.module.dim(v)));
    ARSUBCAT_CHECK(r.has_value(), "cokernel projection is not surjective");
    maps.push_back(down.at(v) * *r);
  }
  return {e.module, incl, ModuleMap(e.module, res.module, std::move(maps))};
}

namespace {

// Coefficient vectors (columns, in End(x) coordinates) of {z : h z = 0}.
Matrix annihilator_coeffs(const ModuleMap& h, const HomSpace& end, const HomSpace& hom) {
  Matrix a(h.source().field(), hom.ambient_dim(), 0);
  for (std::size_t i = 0; i < end.dim(); ++i) a = hstack(a, hom.flatten(compose(h, end.map(i))));
  return kernel_basis(a);
}

bool is_nilpotent_map(const ModuleMap& f) {
  for (auto& m : f.maps())
    if (!is_nilpotent(m)) return false;
  return true;
}

// The chain Z ⊇ Z^2 ⊇ ... as flattened spans; returns the stable term.
Matrix stable_power(const HomSpace& end, const Matrix& z_flat) {
  Matrix w = z_flat;
  while (w.cols() > 0) {
    Matrix next(end.source().field(), end.ambient_dim(), 0);
    for (std::size_t i = 0; i < w.cols(); ++i) {
      ModuleMap wi = end.unflatten(w.column_at(i));
      for (std::size_t j = 0; j < z_flat.cols(); ++j)
        next = hstack(next, end.flatten(compose(wi, end.unflatten(z_flat.column_at(j)))));
    }
    next = column_space(next);
    if (next.cols() == w.cols()) return w;
    w = std::move(next);
  }
  return w;
}

}  // namespace

bool is_right_minimal(const ModuleMap& h) {
  HomSpace end(h.source(), h.source());
  HomSpace hom(h.source(), h.target());
  Matrix z = end.basis() * annihilator_coeffs(h, end, hom);
  return stable_power(end, z).cols() == 0;
}

RightMinimalization right_minimalize(const ModuleMap& h, Rng& rng) {
  const Representation& src = h.source();
  const PrimeField& k = src.field();
  ModuleMap incl = ModuleMap::identity(src);
  std::vector<ModuleMap> split_incls;
  while (true) {
    const Representation& x = incl.source();
    if (x.is_zero()) break;
    ModuleMap hx = compose(h, incl);
    HomSpace end(x, x);
    HomSpace hom(x, h.target());
    Matrix z = end.basis() * annihilator_coeffs(hx, end, hom);
    Matrix w = stable_power(end, z);
    if (w.cols() == 0) break;
    // A nonzero idempotent-stable power contains a non-nilpotent element.
    std::optional<ModuleMap> found;
    for (std::size_t i = 0; i < w.cols() && !found; ++i) {
      ModuleMap c = end.unflatten(w.column_at(i));
      if (!is_nilpotent_map(c)) found = c;
    }
    std::uniform_int_distribution<std::uint32_t> dist(0, k.modulus() - 1);
    for (int t = 0; t < 1000 && !found; ++t) {
      Matrix coeffs(k, w.cols(), 1);
      for (std::size_t i = 0; i < w.cols(); ++i) coeffs(i, 0) = dist(rng);
      ModuleMap c = end.unflatten(w * coeffs);
      if (!is_nilpotent_map(c)) found = c;
    }
    ARSUBCAT_CHECK(found.has_value(), "right_minimalize: no non-nilpotent element in a non-nilpotent ideal");
    DirectSum parts = fitting_split(*found);
    // The image part lies in ker h and splits off.
    split_incls.push_back(compose(incl, parts.inclusions[1]));
    incl = compose(incl, parts.inclusions[0]);
  }
  RightMinimalization out{incl.source(), compose(h, incl), Representation::zero(src.algebra_ptr()), incl,
                          ModuleMap::zero(Representation::zero(src.algebra_ptr()), src)};
  if (!split_incls.empty()) {
    std::vector<Representation> parts;
    for (auto& s : split_incls) parts.push_back(s.source());
    Representation m2 = direct_sum(parts).sum;
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < src.dims().size(); ++v) {
      Matrix acc(k, src.dim(v), 0);
      for (auto& s : split_incls) acc = hstack(acc, s.at(v));
      maps.push_back(std::move(acc));
    }
    out.m2 = m2;
    out.inclusion2 = ModuleMap::trusted(m2, src, std::move(maps));
  }
  return out;
}

Representation nakayama(const Representation& p) {
  ARSUBCAT_REQUIRE(is_projective(p), "NotProjective: nakayama needs a projective module");
  auto top = top_dims(p);
  std::vector<std::size_t> vertices;
  for (std::size_t v = 0; v < top.size(); ++v) vertices.insert(vertices.end(), top[v], v);
  return injective_sum(p.algebra_ptr(), vertices);
}

std::optional<std::size_t> projective_dimension(const Representation& m, std::size_t cap) {
  Representation x = m;
  for (std::size_t n = 0; n <= cap; ++n) {
    if (is_projective(x)) return n;
    x = syzygy(x);
  }
  return std::nullopt;
}

std::optional<std::size_t> injective_dimension(const Representation& m, std::size_t cap) {
  Representation x = m;
  for (std::size_t n = 0; n <= cap; ++n) {
    if (is_injective(x)) return n;
    x = cosyzygy(x);
  }
  return std::nullopt;
}

}  // namespace arsubcat
