#include "arsubcat/repmod/representation.hpp"

#include <numeric>

#include "arsubcat/errors.hpp"

namespace arsubcat {

namespace {

Matrix path_product(const std::vector<Matrix>& maps, const std::vector<std::size_t>& dims, const Quiver& q,
                    std::size_t source, const std::vector<std::size_t>& arrows, const PrimeField& k) {
  Matrix acc = Matrix::identity(k, dims[source]);
  for (auto a : arrows) acc = maps[a] * acc;
  (void)q;
  return acc;
}

}  // namespace

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  return &a == &b || a.same_presentation(b);
}

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(arrow_maps)), cache_(std::make_shared<Cache>()) {
  const Quiver& q = alg_->quiver();
  if (dims_.size() != q.vertex_count()) throw PreconditionError("dimension vector length != vertex count");
  if (maps_.size() != q.arrow_count()) throw PreconditionError("arrow map count != arrow count");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
      throw PreconditionError("arrow '" + ar.id + "' matrix has the wrong shape");
    if (maps_[a].field() != alg_->field()) throw PreconditionError("arrow '" + ar.id + "' matrix over another field");
  }
  const PrimeField& k = alg_->field();
  for (std::size_t g = 0; g < alg_->relations().size(); ++g) {
    const Relation& rel = alg_->relations()[g];
    const std::size_t s = q.arrow(rel.front().path.front()).source;
    const std::size_t t = q.arrow(rel.front().path.back()).target;
    Matrix acc(k, dims_[t], dims_[s]);
    for (auto& term : rel) acc += path_product(maps_, dims_, q, s, term.path, k).scaled(term.coeff);
    if (!acc.is_zero()) throw PreconditionError("representation violates relation " + std::to_string(g));
  }
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps.emplace_back(alg->field(), 0, 0);
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  return Representation(std::move(alg), std::move(dims), std::move(maps));
}

Representation Representation::simple(AlgebraPtr alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  if (v >= q.vertex_count()) throw PreconditionError("simple: vertex out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.emplace_back(alg->field(), dims[q.arrow(a).target], dims[q.arrow(a).source]);
  return Representation(std::move(alg), std::move(dims), std::move(maps));
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

const Matrix& Representation::basis_action(std::size_t b) const {
  std::call_once(cache_->once, [this] {
    const auto& basis = alg_->basis();
    cache_->actions.reserve(basis.size());
    for (const Path& p : basis)
      cache_->actions.push_back(path_product(maps_, dims_, alg_->quiver(), p.source, p.arrows, alg_->field()));
  });
  return cache_->actions.at(b);
}

Matrix Representation::element_action(const Element& x, std::size_t s, std::size_t t) const {
  Matrix acc(field(), dims_[t], dims_[s]);
  for (auto b : alg_->basis_between(s, t))
    if (x[b] != 0) acc += basis_action(b).scaled(x[b]);
  return acc;
}

bool Representation::same_data(const Representation& o) const {
  return same_algebra(*alg_, *o.alg_) && dims_ == o.dims_ && maps_ == o.maps_;
}

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Matrix> maps)
    : ModuleMap(std::move(source), std::move(target), std::move(maps), true) {}

ModuleMap ModuleMap::trusted(Representation source, Representation target, std::vector<Matrix> maps) {
  return ModuleMap(std::move(source), std::move(target), std::move(maps), false);
}

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Matrix> maps, bool check)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  if (!same_algebra(source_.algebra(), target_.algebra()))
    throw PreconditionError("module map between modules over different algebras");
  const std::size_t n = source_.algebra().vertex_count();
  if (maps_.size() != n) throw PreconditionError("module map needs one matrix per vertex");
  for (std::size_t v = 0; v < n; ++v) {
    if (maps_[v].rows() != target_.dim(v) || maps_[v].cols() != source_.dim(v))
      throw PreconditionError("module map matrix at vertex " + std::to_string(v) + " has the wrong shape");
  }
  if (check && !intertwines()) throw PreconditionError("module map does not commute with the arrow actions");
}

bool ModuleMap::intertwines() const {
  const Quiver& q = source_.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    if (target_.arrow_map(a) * maps_[s] != maps_[t] * source_.arrow_map(a)) return false;
  }
  return true;
}

ModuleMap ModuleMap::identity(const Representation& m) {
  std::vector<Matrix> maps;
  for (auto d : m.dims()) maps.push_back(Matrix::identity(m.field(), d));
  return trusted(m, m, std::move(maps));
}

ModuleMap ModuleMap::zero(const Representation& source, const Representation& target) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < source.dims().size(); ++v) maps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return ModuleMap(source, target, std::move(maps), false);
}

bool ModuleMap::is_zero() const {
  for (auto& m : maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMap::is_injective() const {
  for (auto& m : maps_)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool ModuleMap::is_surjective() const {
  for (auto& m : maps_)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool ModuleMap::is_isomorphism() const {
  for (auto& m : maps_)
    if (!is_invertible(m)) return false;
  return true;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + o.maps_[v]);
  return trusted(source_, target_, std::move(maps));
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] - o.maps_[v]);
  return trusted(source_, target_, std::move(maps));
}

ModuleMap ModuleMap::scaled(Residue c) const {
  std::vector<Matrix> maps;
  for (auto& m : maps_) maps.push_back(m.scaled(c));
  return trusted(source_, target_, std::move(maps));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (f.target().dims() != g.source().dims()) throw PreconditionError("compose: incompatible modules");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(g.at(v) * f.at(v));
  return ModuleMap::trusted(f.source(), g.target(), std::move(maps));
}

DirectSum direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw PreconditionError("direct_sum of an empty list needs an algebra");
  const AlgebraPtr& alg = parts.front().algebra_ptr();
  const Quiver& q = alg->quiver();
  const PrimeField& k = alg->field();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> dims(n, 0);
  std::vector<std::vector<std::size_t>> offsets(parts.size(), std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!same_algebra(parts[i].algebra(), *alg)) throw PreconditionError("direct_sum over different algebras");
    for (std::size_t v = 0; v < n; ++v) {
      offsets[i][v] = dims[v];
      dims[v] += parts[i].dim(v);
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    Matrix m(k, dims[t], dims[s]);
    for (std::size_t i = 0; i < parts.size(); ++i) m.set_block(offsets[i][t], offsets[i][s], parts[i].arrow_map(a));
    maps.push_back(std::move(m));
  }
  Representation sum(alg, dims, std::move(maps));
  DirectSum out{sum, {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Matrix> inc, proj;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix in(k, dims[v], parts[i].dim(v));
      Matrix pr(k, parts[i].dim(v), dims[v]);
      for (std::size_t j = 0; j < parts[i].dim(v); ++j) {
        in(offsets[i][v] + j, j) = 1;
        pr(j, offsets[i][v] + j) = 1;
      }
      inc.push_back(std::move(in));
      proj.push_back(std::move(pr));
    }
    out.inclusions.push_back(ModuleMap::trusted(parts[i], sum, std::move(inc)));
    out.projections.push_back(ModuleMap::trusted(sum, parts[i], std::move(proj)));
  }
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  std::vector<Representation> parts{a, b};
  return direct_sum(parts).sum;
}

ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(arsubcat::direct_sum(f.at(v), g.at(v)));
  return ModuleMap::trusted(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), std::move(maps));
}

ModuleMap hstack(const ModuleMap& f, const ModuleMap& g) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(arsubcat::hstack(f.at(v), g.at(v)));
  return ModuleMap::trusted(direct_sum(f.source(), g.source()), f.target(), std::move(maps));
}

ModuleMap vstack(const ModuleMap& f, const ModuleMap& g) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(arsubcat::vstack(f.at(v), g.at(v)));
  return ModuleMap::trusted(f.source(), direct_sum(f.target(), g.target()), std::move(maps));
}

}  // namespace arsubcat
