#include "arsubcat/morphcat/morphcat.hpp"

#include "arsubcat/errors.hpp"

namespace arsubcat {

bool MorphMap::commutes(const MorphObject& from, const MorphObject& to) const {
  for (std::size_t v = 0; v < from.f.maps().size(); ++v)
    if (to.f.at(v) * sigma1.at(v) != sigma2.at(v) * from.f.at(v)) return false;
  return true;
}

Representation to_t2_module(const T2Algebra& t2, const MorphObject& obj) {
  ARSUBCAT_REQUIRE(same_algebra(obj.a.algebra(), *t2.base), "to_t2_module: object over another algebra");
  const std::size_t n = t2.n;
  const Quiver& q = t2.base->quiver();
  std::vector<std::size_t> dims(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    dims[i] = obj.a.dim(i);
    dims[i + n] = obj.b.dim(i);
  }
  std::vector<Matrix> maps(t2.t2->quiver().arrow_count(), Matrix(obj.a.field(), 0, 0));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    maps[t2.domain_arrow[a]] = obj.a.arrow_map(a);
    maps[t2.codomain_arrow[a]] = obj.b.arrow_map(a);
  }
  for (std::size_t i = 0; i < n; ++i) maps[t2.connecting_arrow[i]] = obj.f.at(i);
  return Representation(t2.t2, std::move(dims), std::move(maps));
}

MorphObject from_t2_module(const T2Algebra& t2, const Representation& m) {
  ARSUBCAT_REQUIRE(same_algebra(m.algebra(), *t2.t2), "from_t2_module: module is not over T2");
  const std::size_t n = t2.n;
  const Quiver& q = t2.base->quiver();
  std::vector<std::size_t> da(m.dims().begin(), m.dims().begin() + n), db(m.dims().begin() + n, m.dims().end());
  std::vector<Matrix> ma, mb, f;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ma.push_back(m.arrow_map(t2.domain_arrow[a]));
    mb.push_back(m.arrow_map(t2.codomain_arrow[a]));
  }
  for (std::size_t i = 0; i < n; ++i) f.push_back(m.arrow_map(t2.connecting_arrow[i]));
  Representation a(t2.base, std::move(da), std::move(ma));
  Representation b(t2.base, std::move(db), std::move(mb));
  return MorphObject(ModuleMap(std::move(a), std::move(b), std::move(f)));
}

MorphMap from_t2_map(const T2Algebra& t2, const ModuleMap& g) {
  MorphObject s = from_t2_module(t2, g.source());
  MorphObject t = from_t2_module(t2, g.target());
  std::vector<Matrix> m1(g.maps().begin(), g.maps().begin() + t2.n), m2(g.maps().begin() + t2.n, g.maps().end());
  return {ModuleMap::trusted(s.a, t.a, std::move(m1)), ModuleMap::trusted(s.b, t.b, std::move(m2))};
}

ModuleMap to_t2_map(const T2Algebra& t2, const MorphObject& from, const MorphObject& to, const MorphMap& s) {
  std::vector<Matrix> maps = s.sigma1.maps();
  maps.insert(maps.end(), s.sigma2.maps().begin(), s.sigma2.maps().end());
  return ModuleMap(to_t2_module(t2, from), to_t2_module(t2, to), std::move(maps));
}

bool is_mono(const MorphObject& obj) { return obj.f.is_injective(); }

MimoResult mimo(const MorphObject& obj) {
  const PrimeField& k = obj.a.field();
  Subobject ker = kernel(obj.f);
  InjectiveEnvelope env = injective_envelope(ker.module);
  HomSpace ext_space(obj.a, env.injective);
  HomSpace restricted(ker.module, env.injective);
  Matrix cons(k, restricted.ambient_dim(), 0);
  for (std::size_t i = 0; i < ext_space.dim(); ++i)
    cons = hstack(cons, restricted.flatten(compose(ext_space.map(i), ker.inclusion)));
  auto coeffs = solve(cons, restricted.flatten(env.map));
  ARSUBCAT_CHECK(coeffs.has_value(), "mimo: envelope does not extend along the kernel inclusion");
  ModuleMap e = ext_space.unflatten(ext_space.basis() * *coeffs);
  ModuleMap fe = vstack(obj.f, e);
  std::vector<Matrix> proj;
  for (std::size_t v = 0; v < obj.b.dims().size(); ++v)
    proj.push_back(hstack(Matrix::identity(k, obj.b.dim(v)), Matrix(k, obj.b.dim(v), env.injective.dim(v))));
  MorphMap canonical{ModuleMap::identity(obj.a), ModuleMap::trusted(fe.target(), obj.b, std::move(proj))};
  return {MorphObject(std::move(fe)), std::move(canonical)};
}

MorphObject imin(const Representation& n) {
  InjectiveEnvelope e0 = injective_envelope(n);
  Quotient c = cokernel(e0.map);
  InjectiveEnvelope e1 = injective_envelope(c.module);
  return MorphObject(compose(e1.map, c.projection));
}

MorphObject pmin(const Representation& n) { return MorphObject(minimal_presentation(n).d); }

bool is_gp_in_h(const MorphObject& obj, const GpTest& gp_test) {
  if (!is_mono(obj)) return false;
  return gp_test(obj.a) && gp_test(obj.b) && gp_test(cokernel(obj.f).module);
}

bool is_self_injective(const AlgebraPtr& alg, Rng& rng) {
  const std::size_t n = alg->vertex_count();
  std::vector<Representation> inj;
  for (std::size_t j = 0; j < n; ++j) inj.push_back(indecomposable_injective(alg, j));
  for (std::size_t i = 0; i < n; ++i) {
    Representation p = indecomposable_projective(alg, i);
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) found = is_isomorphic(p, inj[j], rng);
    if (!found) return false;
  }
  return true;
}

MorphObject tau_s_lambda(const MorphObject& obj, Rng& rng) {
  if (!is_self_injective(obj.a.algebra_ptr(), rng)) throw PreconditionError("NotSelfInjective: tau_s_lambda needs Λ self-injective");
  if (!is_mono(obj)) throw PreconditionError("NotMono: tau_s_lambda needs a monomorphism");
  Quotient c = cokernel(obj.f);
  return mimo(MorphObject(ar_translate_map(c.projection))).object;
}

bool all_maps_factor(const T2Algebra& t2, const MorphObject& g, const MimoResult& through, const MorphObject& target) {
  Representation gm = to_t2_module(t2, g);
  Representation tm = to_t2_module(t2, target);
  Representation mm = to_t2_module(t2, through.object);
  ModuleMap c = to_t2_map(t2, through.object, target, through.canonical);
  HomSpace direct(gm, tm);
  HomSpace via(gm, mm);
  Matrix span(gm.field(), direct.ambient_dim(), 0);
  for (std::size_t i = 0; i < via.dim(); ++i) span = hstack(span, direct.flatten(compose(c, via.map(i))));
  return rank(span) == direct.dim();
}

}  // namespace arsubcat
