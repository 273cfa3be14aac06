#include "arsubcat/quivalg/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "arsubcat/errors.hpp"

namespace arsubcat {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kPathLimit = 200000;
}  // namespace

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows) : vertices_(vertices), arrows_(std::move(arrows)) {
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.source >= vertices_ || ar.target >= vertices_)
      throw PreconditionError("arrow '" + ar.id + "' has an endpoint outside the vertex range");
    if (!by_id_.emplace(ar.id, a).second) throw PreconditionError("duplicate arrow id '" + ar.id + "'");
  }
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

BoundQuiverAlgebra::BoundQuiverAlgebra(PrimeField field, Quiver quiver, std::vector<Relation> relations,
                                       std::size_t cap, std::string name)
    : field_(field), quiver_(std::move(quiver)), relations_(std::move(relations)), degree_cap_(cap),
      name_(std::move(name)) {}

std::shared_ptr<BoundQuiverAlgebra> BoundQuiverAlgebra::build_mutable(PrimeField field, Quiver quiver,
                                                                     std::vector<Relation> relations,
                                                                     std::size_t degree_cap, std::string name) {
  if (degree_cap < 2) throw PreconditionError("degree_cap must be at least 2");
  // Validate and canonicalize each generator.
  std::vector<Relation> canon;
  for (std::size_t g = 0; g < relations.size(); ++g) {
    const Relation& rel = relations[g];
    std::map<std::vector<std::size_t>, Residue> merged;
    std::size_t len = npos, src = npos, tgt = npos;
    for (const auto& term : rel) {
      if (term.path.size() < 2) throw MalformedRelation("relation " + std::to_string(g) + " has a term of length < 2");
      for (auto a : term.path)
        if (a >= quiver.arrow_count()) throw MalformedRelation("relation " + std::to_string(g) + " names an unknown arrow");
      for (std::size_t k = 0; k + 1 < term.path.size(); ++k) {
        if (quiver.arrow(term.path[k]).target != quiver.arrow(term.path[k + 1]).source)
          throw MalformedRelation("relation " + std::to_string(g) + " has a non-composable path");
      }
      std::size_t s = quiver.arrow(term.path.front()).source;
      std::size_t t = quiver.arrow(term.path.back()).target;
      if (len == npos) {
        len = term.path.size();
        src = s;
        tgt = t;
      } else if (len != term.path.size()) {
        throw MalformedRelation("relation " + std::to_string(g) + " is not length-homogeneous");
      } else if (s != src || t != tgt) {
        throw MalformedRelation("relation " + std::to_string(g) + " has non-parallel terms");
      }
      Residue& c = merged[term.path];
      c = field.add(c, field.reduce(term.coeff));
    }
    Relation out;
    for (auto& [path, c] : merged)
      if (c != 0) out.push_back({c, path});
    if (!out.empty()) canon.push_back(std::move(out));
  }
  std::shared_ptr<BoundQuiverAlgebra> alg(
      new BoundQuiverAlgebra(field, std::move(quiver), std::move(canon), degree_cap, std::move(name)));
  alg->compute_basis();
  return alg;
}

AlgebraPtr BoundQuiverAlgebra::build(PrimeField field, Quiver quiver, std::vector<Relation> relations,
                                     std::size_t degree_cap, std::string name) {
  return build_mutable(field, std::move(quiver), std::move(relations), degree_cap, std::move(name));
}

void BoundQuiverAlgebra::compute_basis() {
  const PrimeField& k = field_;
  const std::size_t n = quiver_.vertex_count();
  const std::size_t na = quiver_.arrow_count();

  // Lexicographic order on arrow ids.
  std::vector<std::size_t> order(na);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return quiver_.arrow(a).id < quiver_.arrow(b).id; });
  arrow_rank_.assign(na, 0);
  for (std::size_t r = 0; r < na; ++r) arrow_rank_[order[r]] = r;

  std::ostringstream fp;
  fp << "p=" << k.modulus() << ";n=" << n << ";";
  for (auto& a : quiver_.arrows()) fp << a.id << ":" << a.source << ">" << a.target << ",";
  fp << ";";
  for (auto& rel : relations_) {
    for (auto& t : rel) {
      fp << t.coeff << "*";
      for (auto a : t.path) fp << quiver_.arrow(a).id << ".";
      fp << "+";
    }
    fp << "|";
  }
  fingerprint_ = fp.str();

  auto lex_greater = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      if (arrow_rank_[x[i]] != arrow_rank_[y[i]]) return arrow_rank_[x[i]] > arrow_rank_[y[i]];
    }
    return x.size() > y.size();
  };

  // Degree 0: trivial paths.
  basis_.clear();
  trivial_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    trivial_[v] = basis_.size();
    basis_.push_back(Path{v, v, {}});
  }
  degrees_.assign(1, DegreeData{{}, {}, {}, Matrix(k, 0, 0), {}, {}});

  std::vector<std::vector<std::size_t>> prev_paths;  // all paths of previous degree
  for (std::size_t a = 0; a < na; ++a) prev_paths.push_back({a});
  bool finished = false;
  for (std::size_t d = 1; d <= degree_cap_; ++d) {
    std::vector<std::vector<std::size_t>> paths;
    if (d == 1) {
      paths = prev_paths;
    } else {
      for (auto& p : prev_paths) {
        std::size_t t = quiver_.arrow(p.back()).target;
        for (std::size_t a = 0; a < na; ++a) {
          if (quiver_.arrow(a).source != t) continue;
          auto q = p;
          q.push_back(a);
          paths.push_back(std::move(q));
        }
      }
      if (paths.size() > kPathLimit)
        throw NotFiniteDimensional("path enumeration exceeded " + std::to_string(kPathLimit) + " paths at degree " +
                                   std::to_string(d));
    }
    std::sort(paths.begin(), paths.end(), lex_greater);

    DegreeData dd{paths, {}, {}, Matrix(k, 0, paths.size()), {}, {}};
    for (std::size_t c = 0; c < paths.size(); ++c) {
      dd.column_of.emplace(paths[c], c);
      dd.path_source.push_back(quiver_.arrow(paths[c].front()).source);
    }

    std::vector<std::vector<Residue>> rows;
    for (auto& rel : relations_) {
      if (rel.front().path.size() != d) continue;
      std::vector<Residue> row(paths.size(), 0);
      for (auto& t : rel) row[dd.column_of.at(t.path)] = t.coeff;
      rows.push_back(std::move(row));
    }
    if (d >= 2) {
      const DegreeData& pd = degrees_[d - 1];
      for (std::size_t r = 0; r < pd.ideal.rows(); ++r) {
        auto src_row = pd.ideal.row(r);
        std::size_t first = 0;
        while (first < src_row.size() && src_row[first] == 0) ++first;
        if (first == src_row.size()) continue;
        const std::size_t s = pd.path_source[first];
        const std::size_t t = quiver_.arrow(pd.paths[first].back()).target;
        for (std::size_t a = 0; a < na; ++a) {
          if (quiver_.arrow(a).target == s) {
            std::vector<Residue> row(paths.size(), 0);
            for (std::size_t c = 0; c < src_row.size(); ++c) {
              if (src_row[c] == 0) continue;
              std::vector<std::size_t> q{a};
              q.insert(q.end(), pd.paths[c].begin(), pd.paths[c].end());
              row[dd.column_of.at(q)] = src_row[c];
            }
            rows.push_back(std::move(row));
          }
          if (quiver_.arrow(a).source == t) {
            std::vector<Residue> row(paths.size(), 0);
            for (std::size_t c = 0; c < src_row.size(); ++c) {
              if (src_row[c] == 0) continue;
              auto q = pd.paths[c];
              q.push_back(a);
              row[dd.column_of.at(q)] = src_row[c];
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    Matrix span(k, rows.size(), paths.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < paths.size(); ++c) span(r, c) = rows[r][c];
    Rref rr = rref(span);
    dd.ideal = rr.reduced.block(0, 0, rr.rank(), paths.size());
    dd.pivot_row_of_column.assign(paths.size(), npos);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) dd.pivot_row_of_column[rr.pivots[i]] = i;
    dd.basis_of_column.assign(paths.size(), npos);

    // Normal paths, added in ascending lex order.
    std::vector<std::size_t> normal_cols;
    for (std::size_t c = 0; c < paths.size(); ++c)
      if (dd.pivot_row_of_column[c] == npos) normal_cols.push_back(c);
    std::reverse(normal_cols.begin(), normal_cols.end());
    for (auto c : normal_cols) {
      dd.basis_of_column[c] = basis_.size();
      basis_.push_back(Path{dd.path_source[c], quiver_.arrow(paths[c].back()).target, paths[c]});
    }
    degrees_.push_back(std::move(dd));
    prev_paths = std::move(paths);
    if (normal_cols.empty()) {
      top_degree_ = d - 1;
      finished = true;
      break;
    }
  }
  if (!finished) {
    throw NotFiniteDimensional("paths of length " + std::to_string(degree_cap_) +
                               " survive; the algebra is not finite dimensional within the degree cap");
  }

  // Per-(source,target) blocks; basis_ is already degree-major and lex sorted.
  between_.assign(n * n, {});
  block_pos_.assign(basis_.size(), 0);
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    auto& blk = between_[basis_[b].source * n + basis_[b].target];
    block_pos_[b] = blk.size();
    blk.push_back(b);
  }

  const std::size_t dim = basis_.size();
  table_.assign(dim * dim, Element(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (basis_[i].target != basis_[j].source) continue;
      std::vector<std::size_t> q = basis_[i].arrows;
      q.insert(q.end(), basis_[j].arrows.begin(), basis_[j].arrows.end());
      table_[i * dim + j] = reduce_path(basis_[i].source, q);
    }
  }
}

Element BoundQuiverAlgebra::reduce_path(std::size_t source, const std::vector<std::size_t>& arrows) const {
  Element out(dimension(), 0);
  if (arrows.empty()) {
    out[trivial_.at(source)] = 1;
    return out;
  }
  const std::size_t d = arrows.size();
  if (d > top_degree_) return out;
  const DegreeData& dd = degrees_[d];
  auto it = dd.column_of.find(arrows);
  if (it == dd.column_of.end()) throw PreconditionError("reduce_path: not a path of the quiver");
  const std::size_t c = it->second;
  if (dd.basis_of_column[c] != npos) {
    out[dd.basis_of_column[c]] = 1;
    return out;
  }
  auto row = dd.ideal.row(dd.pivot_row_of_column[c]);
  for (std::size_t c2 = 0; c2 < row.size(); ++c2) {
    if (c2 == c || row[c2] == 0) continue;
    // Every other nonzero entry of an RREF row sits in a non-pivot column.
    out[dd.basis_of_column[c2]] = field_.neg(row[c2]);
  }
  return out;
}

Element BoundQuiverAlgebra::multiply(const Element& x, const Element& y) const {
  const std::size_t dim = dimension();
  Element out(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Element& prod = table_[i * dim + j];
      const Residue c = field_.mul(x[i], y[j]);
      for (std::size_t b = 0; b < dim; ++b)
        if (prod[b] != 0) out[b] = field_.add(out[b], field_.mul(c, prod[b]));
    }
  }
  return out;
}

Element BoundQuiverAlgebra::basis_element(std::size_t b) const {
  Element e(dimension(), 0);
  e.at(b) = 1;
  return e;
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
  if (auto o = origin_.lock()) return o;
  std::call_once(opposite_once_, [this] {
    std::vector<Arrow> arrows;
    for (auto& a : quiver_.arrows()) arrows.push_back({a.id, a.target, a.source});
    std::vector<Relation> rels;
    for (auto& rel : relations_) {
      Relation r;
      for (auto& t : rel) r.push_back({t.coeff, std::vector<std::size_t>(t.path.rbegin(), t.path.rend())});
      rels.push_back(std::move(r));
    }
    std::string nm = name_;
    if (nm.size() >= 3 && nm.compare(nm.size() - 3, 3, "^op") == 0)
      nm.resize(nm.size() - 3);
    else
      nm += "^op";
    auto op = build_mutable(field_, Quiver(quiver_.vertex_count(), std::move(arrows)), std::move(rels),
                            degree_cap_, nm);
    op->origin_ = shared_from_this();
    opposite_ = op;
  });
  return opposite_;
}

Element to_opposite(const Element& x, const BoundQuiverAlgebra& from, const BoundQuiverAlgebra& to) {
  const PrimeField& k = from.field();
  Element out(to.dimension(), 0);
  for (std::size_t b = 0; b < from.dimension(); ++b) {
    if (x[b] == 0) continue;
    const Path& p = from.basis()[b];
    std::vector<std::size_t> rev(p.arrows.rbegin(), p.arrows.rend());
    Element r = to.reduce_path(p.target, rev);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (r[i] != 0) out[i] = k.add(out[i], k.mul(x[b], r[i]));
  }
  return out;
}

T2Algebra t2_of(const AlgebraPtr& alg) {
  const std::size_t n = alg->vertex_count();
  const Quiver& q = alg->quiver();
  const PrimeField& k = alg->field();
  T2Algebra out;
  out.base = alg;
  out.n = n;
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    out.domain_arrow.push_back(arrows.size());
    arrows.push_back({q.arrow(a).id, q.arrow(a).source, q.arrow(a).target});
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    out.codomain_arrow.push_back(arrows.size());
    arrows.push_back({q.arrow(a).id + "'", q.arrow(a).source + n, q.arrow(a).target + n});
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.connecting_arrow.push_back(arrows.size());
    arrows.push_back({"eps" + std::to_string(i), i, i + n});
    out.vertex_correspondence.emplace_back(i, i + n);
  }
  std::vector<Relation> rels;
  for (const auto* copy : {&out.domain_arrow, &out.codomain_arrow}) {
    for (auto& rel : alg->relations()) {
      Relation r;
      for (auto& t : rel) {
        std::vector<std::size_t> path;
        for (auto a : t.path) path.push_back((*copy)[a]);
        r.push_back({t.coeff, path});
      }
      rels.push_back(std::move(r));
    }
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t i = q.arrow(a).source, j = q.arrow(a).target;
    rels.push_back({{1, {out.domain_arrow[a], out.connecting_arrow[j]}},
                    {k.neg(1), {out.connecting_arrow[i], out.codomain_arrow[a]}}});
  }
  std::string nm = "T2(" + (alg->name().empty() ? std::string("A") : alg->name()) + ")";
  out.t2 = BoundQuiverAlgebra::build(k, Quiver(2 * n, std::move(arrows)), std::move(rels), alg->degree_cap(), nm);
  if (out.t2->dimension() != 3 * alg->dimension()) {
    throw InvariantError("dim T2(A) = " + std::to_string(out.t2->dimension()) + " but 3 dim A = " +
                         std::to_string(3 * alg->dimension()));
  }
  return out;
}

}  // namespace arsubcat
