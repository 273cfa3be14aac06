#include "arsubcat/io/verify.hpp"

#include <sstream>

#include "arsubcat/errors.hpp"

namespace arsubcat::io {

namespace {

std::string dims_string(const std::vector<std::size_t>& d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << "]";
  return os.str();
}

const std::vector<std::string> kSuites = {"ar-full", "ar-gprj", "ar-pfin", "gp-census", "tau-syzygy"};

}  // namespace

Manifest load_manifest(const std::filesystem::path& path) {
  Json j = load_json(path);
  const auto dir = path.parent_path();
  Manifest m;
  if (!j.is_object() || !j.contains("algebra") || !j["algebra"].is_string())
    throw ParseError("manifest: missing 'algebra' file");
  m.name = j.value("name", path.stem().string());
  m.algebra_file = dir / j["algebra"].get<std::string>();
  m.alg = algebra_from_json(load_json(m.algebra_file));
  m.t2 = t2_of(m.alg);
  const std::string base_id = algebra_id(*m.alg), t2_id = algebra_id(*m.t2.t2);
  if (j.contains("modules")) {
    if (!j["modules"].is_object()) throw ParseError("manifest: 'modules' must map names to files");
    for (auto it = j["modules"].begin(); it != j["modules"].end(); ++it) {
      if (!it.value().is_string()) throw ParseError("manifest: module '" + it.key() + "' must name a file");
      Json mj = load_json(dir / it.value().get<std::string>());
      const std::string id = mj.value("algebra", base_id);
      if (id == t2_id)
        m.t2_modules.push_back({it.key(), module_from_json(mj, m.t2.t2)});
      else if (id == base_id)
        m.base_modules.push_back({it.key(), module_from_json(mj, m.alg)});
      else
        throw ParseError("manifest: module '" + it.key() + "' is over unknown algebra '" + id + "'");
    }
  }
  if (!j.contains("levels") || !j["levels"].is_object()) throw ParseError("manifest: missing 'levels'");
  for (auto it = j["levels"].begin(); it != j["levels"].end(); ++it) {
    if (it.key() != "base" && it.key() != "t2") throw ParseError("manifest: unknown level '" + it.key() + "'");
    const Json& lj = it.value();
    LevelSpec l;
    l.name = it.key();
    if (!lj.contains("bound")) throw ParseError("manifest: level '" + l.name + "' needs a 'bound'");
    try {
      l.bound = lj["bound"].get<std::vector<std::size_t>>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("manifest: level '" + l.name + "' bound must be a list of counts");
    }
    const std::size_t nv = l.name == "base" ? m.alg->vertex_count() : m.t2.t2->vertex_count();
    if (l.bound.size() != nv) throw ParseError("manifest: level '" + l.name + "' bound has the wrong length");
    if (lj.contains("expect")) {
      const Json& e = lj["expect"];
      if (e.contains("indecomposables")) l.expect_indecomposables = e["indecomposables"].get<std::size_t>();
      if (e.contains("gorenstein_d")) l.expect_gorenstein_d = e["gorenstein_d"].get<std::size_t>();
      if (e.contains("self_injective")) l.expect_self_injective = e["self_injective"].get<bool>();
    }
    m.levels[l.name] = l;
  }
  for (auto& sj : j.value("suites", Json::array())) {
    SuiteSpec s;
    s.suite = sj.value("suite", "");
    if (std::find(kSuites.begin(), kSuites.end(), s.suite) == kSuites.end())
      throw ParseError("manifest: unknown suite '" + s.suite + "'");
    s.level = sj.value("level", s.suite == "gp-census" ? "t2" : "base");
    if (!m.levels.count(s.level)) throw ParseError("manifest: suite '" + s.suite + "' uses undefined level '" + s.level + "'");
    const std::string expect = sj.value("expect", "pass");
    if (expect != "pass" && expect != "fail") throw ParseError("manifest: 'expect' must be \"pass\" or \"fail\"");
    s.expect_pass = expect == "pass";
    if (sj.contains("witness")) s.expect_witness = sj["witness"].get<std::string>();
    if (sj.contains("pairs")) s.expect_pairs = sj["pairs"].get<std::size_t>();
    if (sj.contains("counts"))
      for (auto it = sj["counts"].begin(); it != sj["counts"].end(); ++it) s.expect_counts[it.key()] = it.value().get<std::size_t>();
    m.suites.push_back(std::move(s));
  }
  return m;
}

namespace {

struct LevelCtx {
  AlgebraPtr alg;
  GorensteinProfile profile;
  std::vector<NamedModule> objects;
};

constexpr std::size_t kProfileCap = 6;

LevelCtx build_level(const Manifest& m, const LevelSpec& spec, Rng& rng) {
  LevelCtx ctx;
  ctx.alg = spec.name == "base" ? m.alg : m.t2.t2;
  const auto& named = spec.name == "base" ? m.base_modules : m.t2_modules;
  ctx.profile = gorenstein_profile(ctx.alg, kProfileCap, rng);
  auto list = enumerate_indecomposables(ctx.alg, {spec.bound}, rng);
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string id = "M" + std::to_string(i);
    for (auto& nm : named) {
      if (nm.module.dims() == list[i].dims() && is_isomorphic(nm.module, list[i], rng)) {
        id = nm.id;
        break;
      }
    }
    ctx.objects.push_back({id, list[i]});
  }
  return ctx;
}

Json objects_json(const std::vector<NamedModule>& objs) {
  Json a = Json::array();
  for (auto& o : objs) a.push_back({{"id", o.id}, {"dims", o.module.dims()}});
  return a;
}

SuiteOutcome fixture_outcome(const LevelSpec& spec, const LevelCtx& ctx) {
  SuiteOutcome out{"fixture", spec.name, true, true, false, "", {}, Json::object()};
  std::ostringstream sum;
  sum << ctx.objects.size() << " indecomposables";
  if (spec.expect_indecomposables && *spec.expect_indecomposables != ctx.objects.size()) {
    out.property_holds = false;
    out.witnesses.push_back("indecomposables " + std::to_string(ctx.objects.size()) + " != expected " +
                            std::to_string(*spec.expect_indecomposables));
  }
  if (ctx.profile.is_d_gorenstein)
    sum << ", " << ctx.profile.d << "-Gorenstein";
  else
    sum << ", not Gorenstein within cap " << ctx.profile.cap;
  if (spec.expect_gorenstein_d && (!ctx.profile.is_d_gorenstein || ctx.profile.d != *spec.expect_gorenstein_d)) {
    out.property_holds = false;
    out.witnesses.push_back("gorenstein_d != expected " + std::to_string(*spec.expect_gorenstein_d));
  }
  sum << (ctx.profile.is_selfinjective ? ", self-injective" : "");
  if (spec.expect_self_injective && *spec.expect_self_injective != ctx.profile.is_selfinjective) {
    out.property_holds = false;
    out.witnesses.push_back(std::string("self_injective != expected ") + (*spec.expect_self_injective ? "true" : "false"));
  }
  out.met = out.property_holds;
  out.summary = sum.str();
  out.detail["indecomposables"] = ctx.objects.size();
  out.detail["gorenstein_d"] = ctx.profile.is_d_gorenstein ? Json(ctx.profile.d) : Json(nullptr);
  out.detail["self_injective"] = ctx.profile.is_selfinjective;
  out.detail["objects"] = objects_json(ctx.objects);
  return out;
}

SuiteOutcome duality_outcome(const SuiteSpec& spec, const LevelCtx& ctx, SubcategoryTag tag, Rng& rng) {
  SuiteOutcome out{spec.suite, spec.level, false, spec.expect_pass, false, "", {}, Json::object()};
  std::vector<NamedModule> objs;
  for (auto& o : ctx.objects) {
    if (tag == SubcategoryTag::Gprj && !is_gorenstein_projective(o.module, ctx.profile)) continue;
    if (tag == SubcategoryTag::Pfin && !projective_dimension(o.module, ctx.profile.d)) continue;
    objs.push_back(o);
  }
  DualityReport r = verify_ar_duality(ctx.profile, tag, objs, rng);
  std::size_t nproj = 0;
  for (auto& o : objs) nproj += is_projective(o.module) ? 1 : 0;
  const std::size_t skipped = nproj * objs.size();
  out.property_holds = r.all_equal && r.closure_failures.empty();
  Json pairs = Json::array();
  for (auto& p : r.pairs) {
    pairs.push_back({{"x", p.x_id}, {"y", p.y_id}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"equal", p.equal}});
    if (!p.equal)
      out.witnesses.push_back("(" + p.x_id + ", " + p.y_id + "): dim stable Hom " + std::to_string(p.lhs) +
                              " vs dim Ext1 " + std::to_string(p.rhs));
  }
  for (auto& c : r.closure_failures) out.witnesses.push_back("a summand of the translate of " + c + " is not in the list");
  std::ostringstream sum;
  sum << objs.size() << " objects, " << objs.size() * objs.size() << " pairs considered: " << r.pairs.size()
      << " checked, " << skipped << " skipped (X projective)";
  out.summary = sum.str();
  out.met = out.property_holds == spec.expect_pass;
  if (spec.expect_pairs && *spec.expect_pairs != r.pairs.size()) {
    out.met = false;
    out.witnesses.push_back("pairs checked " + std::to_string(r.pairs.size()) + " != expected " +
                            std::to_string(*spec.expect_pairs));
  }
  out.detail = {{"tag", to_string(tag)},
                {"objects", objects_json(objs)},
                {"pairs_checked", r.pairs.size()},
                {"pairs_skipped", skipped},
                {"all_equal", r.all_equal},
                {"closure_failures", r.closure_failures},
                {"pairs", pairs}};
  return out;
}

SuiteOutcome census_outcome(const Manifest& m, const SuiteSpec& spec, const LevelCtx& base, const LevelCtx& t2,
                            Rng& rng) {
  SuiteOutcome out{spec.suite, spec.level, false, spec.expect_pass, false, "", {}, Json::object()};
  if (!base.profile.is_selfinjective) throw PreconditionError("gp-census needs a self-injective algebra");
  GpTest gp = [&](const Representation& x) { return is_gorenstein_projective(x, base.profile); };
  std::vector<NamedModule> gp_objects;
  for (auto& o : t2.objects)
    if (is_gp_in_h(from_t2_module(m.t2, o.module), gp)) gp_objects.push_back(o);
  std::vector<Representation> base_list;
  for (auto& o : base.objects) base_list.push_back(o.module);
  GpCensus c = classify_gp_census(m.t2, base_list, gp_objects, rng);
  out.property_holds = c.counts[GpType::Other] == 0;
  Json counts = Json::object(), objs = Json::array();
  std::ostringstream sum;
  sum << c.objects.size() << " GP objects:";
  for (auto& [t, n] : c.counts) {
    counts[to_string(t)] = n;
    sum << " " << to_string(t) << "=" << n;
  }
  for (auto& e : c.objects) {
    objs.push_back({{"id", e.id}, {"dims", e.module.dims()}, {"type", to_string(e.type)}});
    if (e.type == GpType::Other)
      out.witnesses.push_back(e.id + " " + dims_string(e.module.dims()) + " is of none of the listed types");
  }
  out.met = out.property_holds == spec.expect_pass;
  for (auto& [name, n] : spec.expect_counts) {
    std::size_t got = counts.contains(name) ? counts[name].get<std::size_t>() : 0;
    if (got != n) {
      out.met = false;
      out.witnesses.push_back(name + " count " + std::to_string(got) + " != expected " + std::to_string(n));
    }
  }
  out.summary = sum.str();
  out.detail = {{"counts", counts}, {"total", c.objects.size()}, {"objects", objs}};
  return out;
}

SuiteOutcome tau_syzygy_outcome(const SuiteSpec& spec, const LevelCtx& ctx, Rng& rng) {
  SuiteOutcome out{spec.suite, spec.level, false, spec.expect_pass, false, "", {}, Json::object()};
  TauSyzygyReport r = check_tau_is_syzygy(ctx.profile, ctx.objects, rng);
  out.property_holds = r.holds;
  Json ws = Json::array();
  for (auto& w : r.witnesses) {
    ws.push_back({{"id", w.id}, {"dims", w.dims}, {"tau_dim", w.tau_dim}, {"syzygy_dim", w.syzygy_dim}});
    out.witnesses.push_back(w.id + " " + dims_string(w.dims) + ": dim tau_G = " + std::to_string(w.tau_dim) + ", dim syzygy = " +
                            std::to_string(w.syzygy_dim));
  }
  out.met = out.property_holds == spec.expect_pass;
  if (!spec.expect_pass && spec.expect_witness) {
    bool seen = false;
    for (auto& w : r.witnesses) seen = seen || w.id == *spec.expect_witness;
    if (!seen) {
      out.met = false;
      out.witnesses.push_back("expected witness " + *spec.expect_witness + " not reported");
    }
  }
  std::ostringstream sum;
  sum << r.checked << " non-projective GP objects, " << r.witnesses.size() << " counterexamples";
  out.summary = sum.str();
  out.detail = {{"checked", r.checked}, {"holds", r.holds}, {"witnesses", ws}};
  return out;
}

}  // namespace

VerifyRun run_verify(const Manifest& m, const std::string& suite, std::uint64_t seed) {
  if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw PreconditionError("unknown suite '" + suite + "'");
  Rng rng(seed);
  std::map<std::string, LevelCtx> ctx;
  VerifyRun run;
  auto level = [&](const std::string& name) -> const LevelCtx& {
    auto it = ctx.find(name);
    if (it != ctx.end()) return it->second;
    const LevelSpec& spec = m.levels.at(name);
    LevelCtx c = build_level(m, spec, rng);
    run.outcomes.push_back(fixture_outcome(spec, c));
    return ctx.emplace(name, std::move(c)).first->second;
  };
  bool any = false;
  for (auto& s : m.suites) {
    if (suite != "all" && s.suite != suite) continue;
    any = true;
    if (s.suite == "ar-full") {
      run.outcomes.push_back(duality_outcome(s, level(s.level), SubcategoryTag::Full, rng));
    } else if (s.suite == "ar-gprj") {
      run.outcomes.push_back(duality_outcome(s, level(s.level), SubcategoryTag::Gprj, rng));
    } else if (s.suite == "ar-pfin") {
      run.outcomes.push_back(duality_outcome(s, level(s.level), SubcategoryTag::Pfin, rng));
    } else if (s.suite == "gp-census") {
      if (s.level != "t2") throw PreconditionError("gp-census runs on the t2 level");
      if (!m.levels.count("base")) throw PreconditionError("gp-census needs a base level for the Λ-modules");
      const LevelCtx& b = level("base");
      const LevelCtx& t = level("t2");
      run.outcomes.push_back(census_outcome(m, s, b, t, rng));
    } else {
      run.outcomes.push_back(tau_syzygy_outcome(s, level(s.level), rng));
    }
  }
  if (!any) throw PreconditionError("manifest has no '" + suite + "' suite");
  Json suites = Json::array();
  for (auto& o : run.outcomes) {
    run.all_met = run.all_met && o.met;
    suites.push_back({{"suite", o.suite},
                      {"level", o.level},
                      {"expected", o.expected ? "pass" : "fail"},
                      {"property_holds", o.property_holds},
                      {"met", o.met},
                      {"summary", o.summary},
                      {"witnesses", o.witnesses},
                      {"detail", o.detail}});
  }
  run.report = {{"manifest", m.name}, {"algebra", algebra_id(*m.alg)}, {"seed", seed}, {"suites", suites},
                {"all_met", run.all_met}};
  return run;
}

}  // namespace arsubcat::io
