#include "arsubcat/repmod/hom.hpp"

#include "arsubcat/errors.hpp"

namespace arsubcat {

HomSpace::HomSpace(Representation source, Representation target)
    : source_(std::move(source)), target_(std::move(target)), basis_(source_.field(), 0, 0) {
  if (!same_algebra(source_.algebra(), target_.algebra())) throw PreconditionError("Hom between different algebras");
  const Quiver& q = source_.algebra().quiver();
  const std::size_t n = q.vertex_count();
  std::size_t unknowns = 0;
  offsets_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    offsets_[v] = unknowns;
    unknowns += target_.dim(v) * source_.dim(v);
  }
  std::size_t equations = 0;
  for (auto& a : q.arrows()) equations += target_.dim(a.target) * source_.dim(a.source);

  const PrimeField& k = source_.field();
  Matrix sys(k, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const std::size_t s = q.arrow(ai).source, t = q.arrow(ai).target;
    const Matrix& na = target_.arrow_map(ai);
    const Matrix& ma = source_.arrow_map(ai);
    const std::size_t ms = source_.dim(s), nt = target_.dim(t), ns = target_.dim(s), mt = source_.dim(t);
    // N(a) X_s - X_t M(a) = 0, entry (r, c).
    for (std::size_t r = 0; r < nt; ++r) {
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        for (std::size_t x = 0; x < ns; ++x) {
          Residue coef = na(r, x);
          if (coef == 0) continue;
          Residue& e = sys(row, offsets_[s] + x * ms + c);
          e = k.add(e, coef);
        }
        for (std::size_t x = 0; x < mt; ++x) {
          Residue coef = ma(x, c);
          if (coef == 0) continue;
          Residue& e = sys(row, offsets_[t] + r * mt + x);
          e = k.sub(e, coef);
        }
      }
    }
  }
  basis_ = kernel_basis(sys);
}

ModuleMap HomSpace::unflatten(const Matrix& column) const {
  const std::size_t n = offsets_.size();
  std::vector<Matrix> maps;
  maps.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    Matrix m(source_.field(), target_.dim(v), source_.dim(v));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = column(offsets_[v] + r * m.cols() + c, 0);
    maps.push_back(std::move(m));
  }
  return ModuleMap::trusted(source_, target_, std::move(maps));
}

Matrix HomSpace::flatten(const ModuleMap& f) const {
  Matrix col(source_.field(), ambient_dim(), 1);
  for (std::size_t v = 0; v < offsets_.size(); ++v) {
    const Matrix& m = f.at(v);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) col(offsets_[v] + r * m.cols() + c, 0) = m(r, c);
  }
  return col;
}

ModuleMap HomSpace::map(std::size_t i) const { return unflatten(basis_.column_at(i)); }

ModuleMap HomSpace::combination(std::span<const Residue> coeffs) const {
  ARSUBCAT_REQUIRE(coeffs.size() == dim(), "HomSpace::combination: wrong coefficient count");
  Matrix c(source_.field(), dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) c(i, 0) = coeffs[i];
  return unflatten(basis_ * c);
}

std::vector<ModuleMap> HomSpace::maps() const {
  std::vector<ModuleMap> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(map(i));
  return out;
}

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) { return HomSpace(m, n).maps(); }

std::size_t hom_dim(const Representation& m, const Representation& n) { return HomSpace(m, n).dim(); }

Subobject submodule(const Representation& m, const std::vector<Matrix>& spans) {
  const Quiver& q = m.algebra().quiver();
  const std::size_t n = q.vertex_count();
  ARSUBCAT_REQUIRE(spans.size() == n, "submodule: one span per vertex");
  std::vector<Matrix> u;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < n; ++v) {
    ARSUBCAT_REQUIRE(spans[v].rows() == m.dim(v), "submodule: span has the wrong height");
    u.push_back(column_space(spans[v]));
    dims.push_back(u.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    auto x = solve(u[t], m.arrow_map(a) * u[s]);
    if (!x) throw PreconditionError("submodule: spans are not stable under arrow '" + q.arrow(a).id + "'");
    maps.push_back(std::move(*x));
  }
  Representation sub(m.algebra_ptr(), dims, std::move(maps));
  return {sub, ModuleMap::trusted(sub, m, std::move(u))};
}

Subobject generated_submodule(const Representation& m, const std::vector<Matrix>& generators) {
  const Quiver& q = m.algebra().quiver();
  const std::size_t n = q.vertex_count();
  std::vector<Matrix> u;
  for (std::size_t v = 0; v < n; ++v) u.push_back(column_space(generators.at(v)));
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
      Matrix next = column_space(hstack(u[t], m.arrow_map(a) * u[s]));
      if (next.cols() > u[t].cols()) {
        u[t] = std::move(next);
        grew = true;
      }
    }
  }
  return submodule(m, u);
}

Quotient quotient(const Representation& m, const std::vector<Matrix>& spans) {
  const Quiver& q = m.algebra().quiver();
  const std::size_t n = q.vertex_count();
  ARSUBCAT_REQUIRE(spans.size() == n, "quotient: one span per vertex");
  const PrimeField& k = m.field();
  std::vector<Matrix> proj, right_inv;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix c = cokernel_projection(spans[v]);
    auto r = solve(c, Matrix::identity(k, c.rows()));
    ARSUBCAT_CHECK(r.has_value(), "cokernel projection is not surjective");
    dims.push_back(c.rows());
    proj.push_back(std::move(c));
    right_inv.push_back(std::move(*r));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    if (!(proj[t] * m.arrow_map(a) * spans[s]).is_zero())
      throw PreconditionError("quotient: spans are not stable under arrow '" + q.arrow(a).id + "'");
    maps.push_back(proj[t] * m.arrow_map(a) * right_inv[s]);
  }
  Representation quo(m.algebra_ptr(), dims, std::move(maps));
  return {quo, ModuleMap::trusted(m, quo, std::move(proj))};
}

Subobject kernel(const ModuleMap& f) {
  std::vector<Matrix> spans;
  for (auto& m : f.maps()) spans.push_back(kernel_basis(m));
  return submodule(f.source(), spans);
}

Quotient cokernel(const ModuleMap& f) { return quotient(f.target(), f.maps()); }

ImageFactorization image(const ModuleMap& f) {
  Subobject im = submodule(f.target(), f.maps());
  std::vector<Matrix> epi;
  for (std::size_t v = 0; v < f.maps().size(); ++v) {
    auto x = solve(im.inclusion.at(v), f.at(v));
    ARSUBCAT_CHECK(x.has_value(), "image: map does not land in its column space");
    epi.push_back(std::move(*x));
  }
  return {im.module, ModuleMap::trusted(f.source(), im.module, std::move(epi)), im.inclusion};
}

ModuleMap restrict_map(const ModuleMap& f, const ModuleMap& inclusion) { return compose(f, inclusion); }

DirectSum split_module(const Representation& m, const std::vector<Matrix>& u, const std::vector<Matrix>& w) {
  const std::size_t n = m.algebra().vertex_count();
  std::vector<Matrix> inv;
  for (std::size_t v = 0; v < n; ++v) {
    auto i = inverse(hstack(u[v], w[v]));
    if (!i) throw PreconditionError("split_module: the two families do not form a direct sum");
    inv.push_back(std::move(*i));
  }
  Subobject su = submodule(m, u);
  Subobject sw = submodule(m, w);
  std::vector<Matrix> pu, pw;
  for (std::size_t v = 0; v < n; ++v) {
    pu.push_back(inv[v].block(0, 0, u[v].cols(), m.dim(v)));
    pw.push_back(inv[v].block(u[v].cols(), 0, w[v].cols(), m.dim(v)));
  }
  return {m,
          {su.inclusion, sw.inclusion},
          {ModuleMap::trusted(m, su.module, std::move(pu)), ModuleMap::trusted(m, sw.module, std::move(pw))}};
}

}  // namespace arsubcat
