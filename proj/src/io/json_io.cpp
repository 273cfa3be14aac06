#include "arsubcat/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "arsubcat/errors.hpp"

namespace arsubcat::io {

namespace {

template <class T>
T get(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(what + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

AlgebraPtr algebra_from_json(const Json& j, std::size_t degree_cap) {
  const std::string what = "algebra";
  const auto p = get<std::int64_t>(j, "field_p", what);
  const auto vertices = get<std::int64_t>(j, "vertices", what);
  if (p < 2) throw ParseError("algebra: field_p must be at least 2");
  if (vertices < 0) throw ParseError("algebra: negative vertex count");
  PrimeField k(static_cast<std::uint64_t>(p));
  std::vector<Arrow> arrows;
  const Json arr = j.value("arrows", Json::array());
  if (!arr.is_array()) throw ParseError("algebra: 'arrows' must be a list");
  for (auto& a : arr) {
    auto s = get<std::int64_t>(a, "source", "arrow"), t = get<std::int64_t>(a, "target", "arrow");
    if (s < 0 || t < 0) throw ParseError("arrow: negative endpoint");
    arrows.push_back({get<std::string>(a, "id", "arrow"), static_cast<std::size_t>(s), static_cast<std::size_t>(t)});
  }
  Quiver q(static_cast<std::size_t>(vertices), std::move(arrows));
  std::vector<Relation> rels;
  const Json rj = j.value("relations", Json::array());
  if (!rj.is_array()) throw ParseError("algebra: 'relations' must be a list");
  for (auto& gen : rj) {
    if (!gen.is_array()) throw ParseError("algebra: each relation is a list of terms");
    Relation rel;
    for (auto& term : gen) {
      auto coeff = get<std::int64_t>(term, "coeff", "relation term");
      auto ids = get<std::vector<std::string>>(term, "path", "relation term");
      std::vector<std::size_t> path;
      for (auto& id : ids) {
        auto a = q.find_arrow(id);
        if (!a) throw MalformedRelation("relation names unknown arrow '" + id + "'");
        path.push_back(*a);
      }
      rel.push_back({k.reduce(coeff), std::move(path)});
    }
    rels.push_back(std::move(rel));
  }
  return BoundQuiverAlgebra::build(k, std::move(q), std::move(rels), degree_cap, j.value("name", std::string()));
}

Json algebra_to_json(const BoundQuiverAlgebra& alg) {
  Json j;
  if (!alg.name().empty()) j["name"] = alg.name();
  j["field_p"] = alg.field().modulus();
  j["vertices"] = alg.vertex_count();
  j["arrows"] = Json::array();
  for (auto& a : alg.quiver().arrows()) j["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  j["relations"] = Json::array();
  for (auto& rel : alg.relations()) {
    Json g = Json::array();
    for (auto& t : rel) {
      Json path = Json::array();
      for (auto a : t.path) path.push_back(alg.quiver().arrow(a).id);
      g.push_back({{"coeff", t.coeff}, {"path", path}});
    }
    j["relations"].push_back(g);
  }
  return j;
}

Json t2_to_json(const T2Algebra& t2) {
  Json j = algebra_to_json(*t2.t2);
  Json corr = Json::array();
  for (auto& [i, ip] : t2.vertex_correspondence) corr.push_back({i, ip});
  j["vertex_correspondence"] = corr;
  j["dimension"] = t2.t2->dimension();
  return j;
}

std::string algebra_id(const BoundQuiverAlgebra& alg) { return alg.name().empty() ? "algebra" : alg.name(); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const PrimeField& k, std::size_t rows, std::size_t cols,
                        const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": matrix must be a list of rows");
  Matrix m(k, rows, cols);
  if (rows == 0 || cols == 0) {
    // Accept [] or a list of `rows` empty rows.
    for (auto& r : j)
      if (!r.is_array() || !r.empty()) throw ParseError(what + ": expected an empty matrix");
    if (!j.empty() && j.size() != rows) throw ParseError(what + ": wrong number of rows");
    return m;
  }
  if (j.size() != rows) throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError(what + ": row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) throw ParseError(what + ": entries must be integers");
      m.set(r, c, j[r][c].get<std::int64_t>());
    }
  }
  return m;
}

Representation module_from_json(const Json& j, const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  auto dims_raw = get<std::vector<std::int64_t>>(j, "dims", "module");
  if (dims_raw.size() != q.vertex_count())
    throw ParseError("module: 'dims' has " + std::to_string(dims_raw.size()) + " entries, algebra has " +
                     std::to_string(q.vertex_count()) + " vertices");
  std::vector<std::size_t> dims;
  for (auto d : dims_raw) {
    if (d < 0) throw ParseError("module: negative dimension");
    dims.push_back(static_cast<std::size_t>(d));
  }
  const Json maps_j = j.value("arrow_maps", Json::object());
  if (!maps_j.is_object()) throw ParseError("module: 'arrow_maps' must be an object keyed by arrow id");
  for (auto it = maps_j.begin(); it != maps_j.end(); ++it)
    if (!q.find_arrow(it.key())) throw ParseError("module: unknown arrow '" + it.key() + "'");
  std::vector<Matrix> maps;
  for (auto& a : q.arrows()) {
    const std::size_t r = dims[a.target], c = dims[a.source];
    if (!maps_j.contains(a.id)) {
      if (r != 0 && c != 0) throw ParseError("module: missing matrix for arrow '" + a.id + "'");
      maps.emplace_back(alg->field(), r, c);
      continue;
    }
    maps.push_back(matrix_from_json(maps_j.at(a.id), alg->field(), r, c, "arrow '" + a.id + "'"));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Json module_to_json(const Representation& m) {
  Json j;
  j["algebra"] = algebra_id(m.algebra());
  j["dims"] = m.dims();
  Json maps = Json::object();
  const Quiver& q = m.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrow(a).id] = matrix_to_json(m.arrow_map(a));
  j["arrow_maps"] = maps;
  return j;
}

bool is_morph_json(const Json& j) { return j.is_object() && j.contains("A") && j.contains("B") && j.contains("f"); }

MorphObject morph_from_json(const Json& j, const AlgebraPtr& alg) {
  if (!is_morph_json(j)) throw ParseError("morphism object needs fields 'A', 'B' and 'f'");
  Representation a = module_from_json(j.at("A"), alg);
  Representation b = module_from_json(j.at("B"), alg);
  const Json& f = j.at("f");
  if (!f.is_object() || !f.contains("vertex_maps") || !f.at("vertex_maps").is_object())
    throw ParseError("morphism object: 'f' needs an object 'vertex_maps'");
  const Json& vm = f.at("vertex_maps");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    const std::string key = std::to_string(v);
    if (!vm.contains(key)) {
      if (a.dim(v) != 0 && b.dim(v) != 0) throw ParseError("morphism object: missing vertex map '" + key + "'");
      maps.emplace_back(alg->field(), b.dim(v), a.dim(v));
      continue;
    }
    maps.push_back(matrix_from_json(vm.at(key), alg->field(), b.dim(v), a.dim(v), "vertex map " + key));
  }
  return MorphObject(ModuleMap(std::move(a), std::move(b), std::move(maps)));
}

Json morph_to_json(const MorphObject& obj) {
  Json vm = Json::object();
  for (std::size_t v = 0; v < obj.f.maps().size(); ++v) vm[std::to_string(v)] = matrix_to_json(obj.f.at(v));
  Json j;
  j["A"] = module_to_json(obj.a);
  j["B"] = module_to_json(obj.b);
  j["f"] = {{"vertex_maps", vm}};
  return j;
}

}  // namespace arsubcat::io
