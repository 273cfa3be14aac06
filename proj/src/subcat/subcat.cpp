#include "arsubcat/subcat/subcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "arsubcat/errors.hpp"
#include "arsubcat/parallel/duality_grid.hpp"

namespace arsubcat {

GorensteinProfile gorenstein_profile(const AlgebraPtr& alg, std::size_t cap, Rng& rng) {
  ARSUBCAT_REQUIRE(cap >= 1, "gorenstein_profile: cap must be at least 1");
  GorensteinProfile g;
  g.alg = alg;
  g.cap = cap;
  g.right_injdim = injective_dimension(regular_module(alg).module, cap);
  g.left_injdim = injective_dimension(regular_module(alg->opposite()).module, cap);
  g.is_selfinjective = is_self_injective(alg, rng);
  g.is_d_gorenstein = g.right_injdim.has_value() && g.left_injdim.has_value();
  if (g.is_d_gorenstein) g.d = std::max(*g.right_injdim, *g.left_injdim);
  ARSUBCAT_CHECK(!g.is_selfinjective || (g.is_d_gorenstein && g.d == 0),
                 "self-injective algebra with positive injective dimension");
  return g;
}

bool is_gorenstein_projective(const Representation& m, const GorensteinProfile& profile) {
  if (!profile.is_d_gorenstein)
    throw PreconditionError("NotGorensteinWithinCap: injective dimension of the algebra exceeds the cap");
  ARSUBCAT_REQUIRE(same_algebra(m.algebra(), *profile.alg), "is_gorenstein_projective: module over another algebra");
  if (profile.is_selfinjective || m.is_zero()) return true;
  const Representation lam = regular_module(profile.alg).module;
  for (std::size_t i = 1; i <= profile.d; ++i)
    if (ext_dim(m, lam, i) != 0) return false;
  return true;
}

std::optional<std::size_t> has_finite_projdim(const Representation& m, std::size_t cap) {
  return projective_dimension(m, cap);
}

Representation tau_gprj(const Representation& g, const GorensteinProfile& profile) {
  if (!is_gorenstein_projective(g, profile))
    throw PreconditionError("NotGorensteinProjective: tau_gprj needs a Gorenstein projective module");
  Representation tr = transpose(g);
  return syzygy_power(k_dual(syzygy_power(tr, profile.d)), profile.d);
}

Representation tau_pfin(const Representation& m, const GorensteinProfile& profile, Rng& rng) {
  if (!profile.is_d_gorenstein || profile.d > 1)
    throw PreconditionError("NotOneGorenstein: tau_pfin needs a Gorenstein algebra of dimension at most 1");
  ARSUBCAT_REQUIRE(same_algebra(m.algebra(), *profile.alg), "tau_pfin: module over another algebra");
  if (!projective_dimension(m, profile.d))
    throw PreconditionError("InfiniteProjectiveDimension: tau_pfin needs a module of finite projective dimension");
  Representation x = strip_projective_summands(m, rng);
  Representation t = ar_translate(x);
  if (t.is_zero()) return t;
  MinimalPresentation pres = minimal_presentation(t);
  MimoResult mm = mimo(MorphObject(pres.d));
  Quotient c = cokernel(mm.object.f);
  // h: Coker(Mimo f) -> Coker f = τM, induced by the canonical map.
  ModuleMap down = compose(pres.eps, mm.canonical.sigma2);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < t.dims().size(); ++v) {
    auto r = solve(c.projection.at(v), Matrix::identity(t.field(), c.module.dim(v)));
    ARSUBCAT_CHECK(r.has_value(), "cokernel projection is not surjective");
    maps.push_back(down.at(v) * *r);
  }
  ModuleMap h(c.module, t, std::move(maps));
  return right_minimalize(h, rng).m1;
}

MorphObject tr_p_lambda(const MorphObject& obj, Rng& rng) {
  if (!is_self_injective(obj.a.algebra_ptr(), rng))
    throw PreconditionError("NotSelfInjective: tr_p_lambda needs Λ self-injective");
  if (!is_projective(obj.a) || !is_projective(obj.b))
    throw PreconditionError("NotLocallyProjective: tr_p_lambda needs A and B projective");
  RightMinimalization rm = right_minimalize(obj.f, rng);
  Representation tr = transpose(cokernel(obj.f).module);
  Representation q1 = rm.m2.is_zero() ? Representation::zero(tr.algebra_ptr()) : projective_dual(rm.m2);
  return imin(direct_sum(tr, q1));
}

namespace {

std::vector<std::size_t> add_dims(std::vector<std::size_t> a, const std::vector<std::size_t>& b, std::size_t times) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += times * b[i];
  return a;
}

bool within(const std::vector<std::size_t>& a, const std::vector<std::size_t>& bound) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > bound[i]) return false;
  return true;
}

// Row bases (m x e, reduced echelon) of every m-dimensional subspace of k^e.
std::vector<Matrix> subspaces(const PrimeField& k, std::size_t e, std::size_t m) {
  std::vector<Matrix> out;
  if (m > e) return out;
  std::vector<std::size_t> piv(m);
  std::iota(piv.begin(), piv.end(), 0);
  const Residue p = k.modulus();
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = piv[r] + 1; c < e; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    std::vector<Residue> vals(free.size(), 0);
    while (true) {
      Matrix b(k, m, e);
      for (std::size_t r = 0; r < m; ++r) b(r, piv[r]) = 1;
      for (std::size_t f = 0; f < free.size(); ++f) b(free[f].first, free[f].second) = vals[f];
      out.push_back(std::move(b));
      std::size_t i = 0;
      while (i < vals.size() && vals[i] == p - 1) vals[i++] = 0;
      if (i == vals.size()) break;
      ++vals[i];
    }
    // Next pivot combination.
    std::size_t r = m;
    while (r > 0 && piv[r - 1] == e - m + (r - 1)) --r;
    if (r == 0) break;
    ++piv[r - 1];
    for (std::size_t j = r; j < m; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

// Middle term of 0 -> S -> E -> ⊕X_j -> 0 with components classes[j].
Representation glue(const Representation& s, const std::vector<const ExtGroup*>& groups,
                    const std::vector<Matrix>& classes) {
  const AlgebraPtr& alg = s.algebra_ptr();
  const PrimeField& k = s.field();
  const std::size_t n = alg->vertex_count();
  std::vector<Representation> p1s, targets{s};
  for (auto* g : groups) {
    p1s.push_back(g->resolution.terms[1].module);
    targets.push_back(g->resolution.terms[0].module);
  }
  Representation src = direct_sum(p1s).sum;
  Representation dst = direct_sum(targets).sum;
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix m(k, dst.dim(v), src.dim(v));
    std::size_t col = 0, row = s.dim(v);
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const MinimalResolution& res = groups[j]->resolution;
      ModuleMap c = cochain_map(res.terms[1], s, groups[j]->representatives * classes[j]);
      m.set_block(0, col, c.at(v).scaled(k.neg(1)));
      m.set_block(row, col, res.differentials[0].at(v));
      col += res.terms[1].module.dim(v);
      row += res.terms[0].module.dim(v);
    }
    maps.push_back(std::move(m));
  }
  return cokernel(ModuleMap::trusted(src, dst, std::move(maps))).module;
}

}  // namespace

std::vector<Representation> enumerate_indecomposables(const AlgebraPtr& alg, const EnumerationOptions& opts,
                                                      Rng& rng) {
  const std::size_t n = alg->vertex_count();
  const PrimeField& k = alg->field();
  ARSUBCAT_REQUIRE(opts.dim_bound.size() == n, "enumerate_indecomposables: one bound per vertex");
  const std::size_t total_bound = std::accumulate(opts.dim_bound.begin(), opts.dim_bound.end(), std::size_t{0});

  std::vector<Representation> found;
  std::vector<std::size_t> totals;
  std::vector<Representation> simples;
  for (std::size_t v = 0; v < n; ++v) {
    simples.push_back(Representation::simple(alg, v));
    if (opts.dim_bound[v] >= 1) {
      found.push_back(simples.back());
      totals.push_back(1);
    }
  }
  // ext_cache[i][v]: Ext^1(found[i], S_v).
  std::vector<std::vector<std::optional<ExtGroup>>> ext_cache;
  auto ext_of = [&](std::size_t i, std::size_t v) -> const ExtGroup& {
    if (ext_cache.size() < found.size()) ext_cache.resize(found.size(), std::vector<std::optional<ExtGroup>>(n));
    auto& slot = ext_cache[i][v];
    if (!slot) slot = ext(found[i], simples[v], 1);
    return *slot;
  };

  std::size_t candidates = 0;
  for (std::size_t d = 2; d <= total_bound; ++d) {
    const std::size_t known = found.size();
    std::vector<Representation> level;
    for (std::size_t v = 0; v < n; ++v) {
      if (opts.dim_bound[v] == 0) continue;
      std::vector<std::size_t> room = opts.dim_bound;
      room[v] -= 1;
      // Candidate quotients: multisets {found[i]^m_i} of total dimension d - 1.
      std::vector<std::size_t> mult(known, 0);
      std::vector<std::size_t> eligible;
      for (std::size_t i = 0; i < known; ++i)
        if (totals[i] < d && ext_of(i, v).dim > 0) eligible.push_back(i);
      std::vector<std::size_t> zero(n, 0);
      std::function<void(std::size_t, std::vector<std::size_t>, std::size_t)> dfs =
          [&](std::size_t pos, std::vector<std::size_t> dims, std::size_t total) {
            if (total == d - 1) {
              // Cartesian product of subspace choices per isotypic block.
              std::vector<std::size_t> blocks;
              std::vector<std::vector<Matrix>> choices;
              for (auto i : eligible) {
                if (mult[i] == 0) continue;
                blocks.push_back(i);
                choices.push_back(subspaces(k, ext_of(i, v).dim, mult[i]));
              }
              std::vector<std::size_t> pick(blocks.size(), 0);
              while (true) {
                if (++candidates > opts.max_candidates)
                  throw CapExceeded("enumerate_indecomposables: more than " + std::to_string(opts.max_candidates) +
                                    " candidate extensions");
                std::vector<const ExtGroup*> groups;
                std::vector<Matrix> classes;
                for (std::size_t b = 0; b < blocks.size(); ++b) {
                  const Matrix& basis = choices[b][pick[b]];
                  for (std::size_t r = 0; r < basis.rows(); ++r) {
                    groups.push_back(&ext_of(blocks[b], v));
                    classes.push_back(basis.block(r, 0, 1, basis.cols()).transpose());
                  }
                }
                Representation e = glue(simples[v], groups, classes);
                if (is_indecomposable(e, rng)) {
                  bool seen = false;
                  for (auto& other : level) {
                    if (other.dims() == e.dims() && is_isomorphic(other, e, rng)) {
                      seen = true;
                      break;
                    }
                  }
                  if (!seen) level.push_back(std::move(e));
                }
                std::size_t b = 0;
                while (b < pick.size() && pick[b] + 1 == choices[b].size()) pick[b++] = 0;
                if (b == pick.size()) break;
                ++pick[b];
              }
              return;
            }
            if (pos == eligible.size()) return;
            const std::size_t i = eligible[pos];
            const std::size_t cap = ext_of(i, v).dim;
            for (std::size_t m = 0; m <= cap; ++m) {
              auto nd = add_dims(dims, found[i].dims(), m);
              if (!within(nd, room) || total + m * totals[i] > d - 1) break;
              mult[i] = m;
              dfs(pos + 1, nd, total + m * totals[i]);
            }
            mult[i] = 0;
          };
      dfs(0, zero, 0);
    }
    for (auto& e : level) {
      found.push_back(std::move(e));
      totals.push_back(d);
    }
  }
  // Deterministic order: total dimension, then dimension vector, then discovery.
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (totals[a] != totals[b]) return totals[a] < totals[b];
    return found[a].dims() < found[b].dims();
  });
  std::vector<Representation> out;
  for (auto i : order) out.push_back(found[i]);
  return out;
}

std::string to_string(SubcategoryTag t) {
  switch (t) {
    case SubcategoryTag::Full: return "FULL";
    case SubcategoryTag::Gprj: return "GPRJ";
    case SubcategoryTag::Pfin: return "PFIN";
  }
  return "?";
}

std::string to_string(GpType t) {
  switch (t) {
    case GpType::AIdentity: return "A_IDENTITY";
    case GpType::BCosocle: return "B_COSOCLE";
    case GpType::CSyzygy: return "C_SYZYGY";
    case GpType::Other: return "OTHER";
  }
  return "?";
}

DualityReport verify_ar_duality(const GorensteinProfile& profile, SubcategoryTag tag,
                                const std::vector<NamedModule>& objects, Rng& rng) {
  DualityReport report;
  report.tag = tag;
  std::vector<Representation> xs, taus, ys;
  std::vector<std::string> x_ids;
  for (auto& o : objects) ys.push_back(o.module);
  for (auto& o : objects) {
    if (is_projective(o.module)) continue;
    Representation t = [&] {
      switch (tag) {
        case SubcategoryTag::Gprj: return tau_gprj(o.module, profile);
        case SubcategoryTag::Pfin: return tau_pfin(o.module, profile, rng);
        case SubcategoryTag::Full: break;
      }
      return ar_translate(o.module);
    }();
    for (auto& s : decompose(t, rng).summands) {
      bool listed = false;
      for (auto& y : ys)
        if (y.dims() == s.dims() && is_isomorphic(y, s, rng)) {
          listed = true;
          break;
        }
      if (!listed) report.closure_failures.push_back(o.id);
    }
    xs.push_back(o.module);
    taus.push_back(std::move(t));
    x_ids.push_back(o.id);
  }
  auto grid = duality_grid(xs, taus, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const GridCell& c = grid[i * ys.size() + j];
      report.pairs.push_back({x_ids[i], objects[j].id, c.lhs, c.rhs, c.lhs == c.rhs});
      if (c.lhs != c.rhs) report.all_equal = false;
    }
  }
  return report;
}

GpCensus classify_gp_census(const T2Algebra& t2, const std::vector<Representation>& base,
                            const std::vector<NamedModule>& gp_objects, Rng& rng) {
  std::vector<Representation> type_c, type_a, type_b;
  for (auto& g : base) {
    if (!is_projective(g)) {
      ProjectiveCover cov = projective_cover(g);
      type_c.push_back(to_t2_module(t2, MorphObject(kernel(cov.map).inclusion)));
    }
    type_a.push_back(to_t2_module(t2, MorphObject(ModuleMap::identity(g))));
    type_b.push_back(to_t2_module(t2, MorphObject(ModuleMap::zero(Representation::zero(g.algebra_ptr()), g))));
  }
  auto matches = [&](const Representation& m, const std::vector<Representation>& list) {
    for (auto& x : list)
      if (x.dims() == m.dims() && is_isomorphic(x, m, rng)) return true;
    return false;
  };
  GpCensus census;
  for (auto t : {GpType::AIdentity, GpType::BCosocle, GpType::CSyzygy, GpType::Other}) census.counts[t] = 0;
  for (auto& o : gp_objects) {
    GpType t = GpType::Other;
    if (matches(o.module, type_c))
      t = GpType::CSyzygy;
    else if (matches(o.module, type_a))
      t = GpType::AIdentity;
    else if (matches(o.module, type_b))
      t = GpType::BCosocle;
    census.objects.push_back({o.id, o.module, t});
    ++census.counts[t];
  }
  return census;
}

GpCensus classify_gp_census(const T2Algebra& t2, const std::vector<std::size_t>& bound, Rng& rng) {
  GorensteinProfile base_profile = gorenstein_profile(t2.base, 4, rng);
  if (!base_profile.is_selfinjective) throw PreconditionError("NotSelfInjective: census needs Λ self-injective");
  auto base = enumerate_indecomposables(t2.base, {bound}, rng);
  std::vector<std::size_t> t2_bound = bound;
  t2_bound.insert(t2_bound.end(), bound.begin(), bound.end());
  auto all = enumerate_indecomposables(t2.t2, {t2_bound}, rng);
  GpTest gp = [&](const Representation& m) { return is_gorenstein_projective(m, base_profile); };
  std::vector<NamedModule> gp_objects;
  for (auto& m : all)
    if (is_gp_in_h(from_t2_module(t2, m), gp)) gp_objects.push_back({"H" + std::to_string(gp_objects.size()), m});
  return classify_gp_census(t2, base, gp_objects, rng);
}

TauSyzygyReport check_tau_is_syzygy(const GorensteinProfile& profile, const std::vector<NamedModule>& objects,
                                    Rng& rng) {
  TauSyzygyReport report;
  for (auto& o : objects) {
    if (is_projective(o.module) || !is_gorenstein_projective(o.module, profile)) continue;
    ++report.checked;
    Representation t = tau_gprj(o.module, profile);
    Representation s = syzygy(o.module);
    Representation ts = strip_projective_summands(t, rng);
    Representation ss = strip_projective_summands(s, rng);
    if (ts.dims() == ss.dims() && is_isomorphic(ts, ss, rng)) continue;
    report.holds = false;
    report.witnesses.push_back({o.id, o.module.dims(), t.total_dim(), s.total_dim()});
  }
  return report;
}

}  // namespace arsubcat
