// One PASS/FAIL line per acceptance criterion. Expected numbers come from the
// brute-force oracles in support/support.hpp, not from the library paths under
// test. All dimension comparisons are exact (tolerance 0).
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "arsubcat/io/json_io.hpp"
#include "arsubcat/subcat/subcat.hpp"
#include "support/support.hpp"

using namespace arsubcat;
using namespace arsubcat::testing;

namespace {

const std::filesystem::path kFixtures = ARSUBCAT_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

AlgebraPtr fixture_algebra(const std::string& name) {
  return io::algebra_from_json(io::load_json(kFixtures / name / "algebra.json"));
}

MorphObject fixture_object(const AlgebraPtr& alg, const std::string& name, const std::string& file) {
  return io::morph_from_json(io::load_json(kFixtures / name / file), alg);
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << "]";
  return os.str();
}

std::vector<Representation> indecomposables(const AlgebraPtr& alg, std::vector<std::size_t> bound, Rng& rng) {
  return enumerate_indecomposables(alg, {std::move(bound)}, rng);
}

// Over a 1-Gorenstein algebra G is Gorenstein projective iff Ext^1(G, Λ) = 0.
bool gp_oracle(const Representation& g) {
  const auto& alg = g.algebra_ptr();
  for (std::size_t v = 0; v < alg->vertex_count(); ++v)
    if (ext1_dim_oracle(g, indecomposable_projective(alg, v)) != 0) return false;
  return true;
}

bool iso_mod_projectives(const Representation& a, const Representation& b, Rng& rng) {
  Representation sa = strip_projective_summands(a, rng), sb = strip_projective_summands(b, rng);
  return sa.dims() == sb.dims() && is_isomorphic(sa, sb, rng);
}

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + ARSUBCAT_CLI + "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome classical_duality() {
  Rng rng(1);
  Outcome out;
  std::size_t pairs = 0;
  struct Case {
    const char* name;
    std::vector<std::size_t> bound;
    std::size_t count;
  };
  for (const Case& c : {Case{"kx2", {2}, 2}, Case{"kx3", {3}, 3}, Case{"a2", {1, 1}, 3}}) {
    auto alg = fixture_algebra(c.name);
    auto ind = indecomposables(alg, c.bound, rng);
    if (ind.size() != c.count) {
      out.pass = false;
      out.detail += std::string(c.name) + ": " + std::to_string(ind.size()) + " indecomposables; ";
    }
    for (auto& x : ind) {
      if (is_projective(x)) continue;
      Representation t = ar_translate(x);
      for (auto& y : ind) {
        ++pairs;
        std::size_t lhs = stable_hom_dim_oracle(x, y), rhs = ext1_dim_oracle(y, t);
        if (lhs != rhs || lhs != stable_hom_proj(x, y).stable_dim || rhs != ext_dim(y, t, 1)) {
          out.pass = false;
          out.detail += std::string(c.name) + " X" + dims_str(x.dims()) + " Y" + dims_str(y.dims()) + "; ";
        }
      }
    }
  }
  out.detail += std::to_string(pairs) + " pairs over kx2, kx3, A2";
  return out;
}

Outcome gp_census() {
  Rng rng(2);
  Outcome out;
  auto kx2 = fixture_algebra("kx2");
  T2Algebra t2 = t2_of(kx2);
  std::size_t oracle_count = 0;
  for (auto& m : indecomposables(t2.t2, {2, 2}, rng))
    if (gp_oracle(m)) ++oracle_count;
  GpCensus c = classify_gp_census(t2, {2}, rng);
  auto n = [&](GpType t) { return c.counts.count(t) ? c.counts.at(t) : std::size_t(0); };
  std::size_t a = n(GpType::AIdentity), b = n(GpType::BCosocle), cc = n(GpType::CSyzygy), o = n(GpType::Other);
  out.pass = oracle_count == 5 && c.objects.size() == 5 && a == 2 && b == 2 && cc == 1 && o == 0;
  out.detail = std::to_string(c.objects.size()) + " GP objects (oracle " + std::to_string(oracle_count) +
               "), a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(cc) +
               " other=" + std::to_string(o);
  return out;
}

Outcome tau_equals_syzygy() {
  Rng rng(3);
  Outcome out;
  // Positive half: every non-projective indecomposable GP module over T2(kx2).
  auto kx2 = fixture_algebra("kx2");
  T2Algebra t2 = t2_of(kx2);
  GorensteinProfile prof = gorenstein_profile(t2.t2, 4, rng);
  std::size_t checked = 0, holding = 0;
  std::string t2_witness;
  for (auto& g : indecomposables(t2.t2, {2, 2}, rng)) {
    if (is_projective(g) || !gp_oracle(g)) continue;
    ++checked;
    Representation t = syzygy(k_dual(syzygy(transpose(g))));
    if (iso_mod_projectives(t, syzygy(g), rng)) {
      ++holding;
    } else if (t2_witness.empty()) {
      t2_witness = dims_str(g.dims()) + " (tau_G " + dims_str(strip_projective_summands(t, rng).dims()) +
                   ", syzygy " + dims_str(syzygy(g).dims()) + ")";
    }
    if (!iso_mod_projectives(t, tau_gprj(g, prof), rng)) out.pass = false;
  }
  bool t2_holds = checked > 0 && holding == checked;
  // Negative half: kx3, witness S.
  auto kx3 = fixture_algebra("kx3");
  GorensteinProfile p3 = gorenstein_profile(kx3, 4, rng);
  Representation s = Representation::simple(kx3, 0);
  Representation ts = tau_gprj(s, p3), os = syzygy(s);
  bool kx3_fails = ts.total_dim() == 1 && os.total_dim() == 2 && !iso_mod_projectives(ts, os, rng);
  TauSyzygyReport rep = check_tau_is_syzygy(p3, {{"S", s}}, rng);
  kx3_fails = kx3_fails && !rep.holds && rep.witnesses.size() == 1 && rep.witnesses[0].tau_dim == 1 &&
              rep.witnesses[0].syzygy_dim == 2;
  out.pass = out.pass && t2_holds && kx3_fails;
  out.detail = "T2(kx2): holds on " + std::to_string(holding) + "/" + std::to_string(checked) + " non-projective GP";
  if (!t2_witness.empty()) out.detail += ", first counterexample " + t2_witness;
  out.detail += "; kx3: " + std::string(kx3_fails ? "fails" : "does not fail as expected") + " at S (tau " +
                std::to_string(ts.total_dim()) + ", syzygy " + std::to_string(os.total_dim()) + ")";
  return out;
}

Outcome gprj_duality() {
  Rng rng(4);
  Outcome out;
  T2Algebra t2 = t2_of(fixture_algebra("kx2"));
  GorensteinProfile prof = gorenstein_profile(t2.t2, 4, rng);
  std::vector<Representation> gp;
  for (auto& m : indecomposables(t2.t2, {2, 2}, rng))
    if (gp_oracle(m)) gp.push_back(m);
  std::size_t pairs = 0;
  for (auto& g : gp) {
    if (is_projective(g)) continue;
    Representation t = syzygy(k_dual(syzygy(transpose(g))));
    if (!iso_mod_projectives(t, tau_gprj(g, prof), rng)) out.pass = false;
    for (auto& h : gp) {
      ++pairs;
      if (stable_hom_dim_oracle(g, h) != ext1_dim_oracle(h, t)) out.pass = false;
    }
  }
  out.detail = std::to_string(gp.size()) + " GP objects, " + std::to_string(pairs) + " pairs";
  if (pairs == 0) out.pass = false;
  return out;
}

Outcome pfin_duality() {
  Rng rng(5);
  Outcome out;
  T2Algebra t2 = t2_of(fixture_algebra("kx2"));
  GorensteinProfile prof = gorenstein_profile(t2.t2, 4, rng);
  std::vector<Representation> pfin;
  for (auto& m : indecomposables(t2.t2, {2, 2}, rng))
    if (projective_dimension(m, 1)) pfin.push_back(m);
  std::size_t pairs = 0;
  for (auto& m : pfin) {
    if (is_projective(m)) continue;
    Representation t = tau_pfin(m, prof, rng);
    if (!projective_dimension(t, 1)) out.pass = false;
    for (auto& n : pfin) {
      ++pairs;
      if (stable_hom_dim_oracle(m, n) != ext1_dim_oracle(n, t)) out.pass = false;
    }
  }
  out.detail = std::to_string(pfin.size()) + " objects of finite projective dimension, " + std::to_string(pairs) +
               " pairs";
  if (pairs == 0) out.pass = false;
  return out;
}

Outcome mimo_approximation() {
  Rng rng(6);
  Outcome out;
  std::size_t pairs = 0, objects = 0;
  for (const char* name : {"kx2", "kx3"}) {
    auto alg = fixture_algebra(name);
    T2Algebra t2 = t2_of(alg);
    std::size_t n = alg->top_degree() + 1;
    std::vector<MorphObject> monos;
    for (auto& m : indecomposables(t2.t2, {n, n}, rng)) {
      MorphObject o = from_t2_module(t2, m);
      if (is_mono(o)) monos.push_back(o);
    }
    Representation s = Representation::simple(alg, 0);
    std::vector<MorphObject> targets{fixture_object(alg, name, "S_to_0.json"), fixture_object(alg, name, "S_into_P.json"),
                                     MorphObject(ModuleMap::identity(s)),
                                     MorphObject(ModuleMap::zero(Representation::zero(alg), s))};
    for (auto& f : targets) {
      ++objects;
      MimoResult r = mimo(f);
      if (!is_mono(r.object) || !r.canonical.commutes(r.object, f)) out.pass = false;
      for (auto& g : monos) {
        ++pairs;
        if (!all_maps_factor(t2, g, r, f)) out.pass = false;
      }
    }
  }
  out.detail = std::to_string(objects) + " objects, " + std::to_string(pairs) + " (mono object, target) pairs";
  return out;
}

Outcome involutions() {
  Rng rng(7);
  Outcome out;
  std::size_t modules = 0;
  for (const char* name : {"kx2", "kx3", "a2"}) {
    auto alg = fixture_algebra(name);
    for (int t = 0; t < 100; ++t) {
      Representation m = random_module(alg, rng);
      ++modules;
      if (!is_isomorphic(k_dual(k_dual(m)), m, rng)) out.pass = false;
      if (!iso_mod_projectives(transpose(transpose(m)), m, rng)) out.pass = false;
    }
  }
  // Locally projective indecomposables over kx2: (0 -> P), (P -> 0), (P = P), (P -x-> P).
  auto kx2 = fixture_algebra("kx2");
  T2Algebra t2 = t2_of(kx2);
  auto p = indecomposable_projective(kx2, 0);
  auto zero = Representation::zero(kx2);
  std::vector<MorphObject> objs{MorphObject(ModuleMap::zero(zero, p)), MorphObject(ModuleMap::zero(p, zero)),
                                MorphObject(ModuleMap::identity(p))};
  for (auto& f : HomSpace(p, p).maps())
    if (!f.is_isomorphism()) objs.push_back(MorphObject(f));
  for (auto& o : objs) {
    MorphObject twice = tr_p_lambda(tr_p_lambda(o, rng), rng);
    if (!iso_mod_projectives(to_t2_module(t2, twice), to_t2_module(t2, o), rng)) out.pass = false;
  }
  out.detail = std::to_string(modules) + " random modules, " + std::to_string(objs.size()) +
               " locally projective objects";
  return out;
}

Outcome manifests() {
  Outcome out;
  int kx2 = run_cli("verify --manifest \"" + (kFixtures / "kx2" / "manifest.json").string() + "\"");
  auto report = std::filesystem::temp_directory_path() / ("arsubcat_accept_" + std::to_string(::getpid()) + ".json");
  int kx3 = run_cli("verify --manifest \"" + (kFixtures / "kx3" / "manifest.json").string() + "\" --json \"" +
                    report.string() + "\"");
  std::string witness;
  bool kx3_ok = false;
  if (kx3 == 0) {
    auto j = io::load_json(report);
    for (auto& s : j["suites"]) {
      if (s["suite"] != "tau-syzygy") continue;
      if (s["property_holds"] == false && s["met"] == true && !s["witnesses"].empty()) {
        kx3_ok = true;
        witness = s["witnesses"][0].get<std::string>();
      }
    }
  }
  std::filesystem::remove(report);
  out.pass = kx2 == 0 && kx3_ok;
  out.detail = "kx2 exit " + std::to_string(kx2) + "; kx3 exit " + std::to_string(kx3) +
               (witness.empty() ? std::string(", no tau-syzygy witness") : ", tau-syzygy witness " + witness);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "classical AR duality", 2, classical_duality},
      {2, "GP census over T2(kx2)", 10, gp_census},
      {3, "tau_G = syzygy (T2(kx2) holds, kx3 fails at S)", 5, tau_equals_syzygy},
      {4, "Gorenstein projective duality over T2(kx2)", 5, gprj_duality},
      {5, "finite projective dimension duality over T2(kx2)", 10, pfin_duality},
      {6, "Mimo is mono and a right approximation", 5, mimo_approximation},
      {7, "D, Tr, Tr_P involutions", 5, involutions},
      {8, "verify on the kx2 and kx3 manifests", 10, manifests},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.budget_s;
    bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %d %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                secs, c.budget_s, in_time ? "" : ", over budget");
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
