#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arsubcat/errors.hpp"
#include "arsubcat/io/json_io.hpp"
#include "arsubcat/io/verify.hpp"
#include "arsubcat/parallel/duality_grid.hpp"

using namespace arsubcat;
using io::Json;

namespace {

constexpr std::size_t kProfileCap = 6;

std::string dims_string(const std::vector<std::size_t>& d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  os << "]";
  return os.str();
}

std::string morph_summary(const MorphObject& o) {
  return "A dims " + dims_string(o.a.dims()) + ", B dims " + dims_string(o.b.dims());
}

struct ComputeArgs {
  std::string algebra, module, op, out;
  std::uint64_t seed = 0;
};

int cmd_compute(const ComputeArgs& args) {
  AlgebraPtr alg = io::algebra_from_json(io::load_json(args.algebra));
  Json input = io::load_json(args.module);
  Rng rng(args.seed);
  Json result;
  std::string summary;
  bool projective_input = false;

  auto need_module = [&]() {
    if (io::is_morph_json(input)) throw PreconditionError("--op " + args.op + " takes a module, not a morphism object");
    return io::module_from_json(input, alg);
  };
  auto need_morph = [&]() {
    if (!io::is_morph_json(input)) throw PreconditionError("--op " + args.op + " takes a morphism object {A, B, f}");
    return io::morph_from_json(input, alg);
  };
  auto emit_module = [&](const Representation& m) {
    result = io::module_to_json(m);
    summary = "dims " + dims_string(m.dims());
  };
  auto emit_morph = [&](const MorphObject& o) {
    result = io::morph_to_json(o);
    summary = morph_summary(o);
  };

  const std::string& op = args.op;
  if (op == "syzygy") {
    emit_module(syzygy(need_module()));
  } else if (op == "tau" || op == "tr") {
    Representation m = need_module();
    projective_input = is_projective(m);
    emit_module(op == "tau" ? ar_translate(m) : transpose(m));
  } else if (op == "dual") {
    emit_module(k_dual(need_module()));
  } else if (op == "mimo") {
    emit_morph(mimo(need_morph()).object);
  } else if (op == "imin") {
    emit_morph(imin(need_module()));
  } else if (op == "tau-gprj" || op == "tau-pfin") {
    Representation m = need_module();
    GorensteinProfile profile = gorenstein_profile(alg, kProfileCap, rng);
    projective_input = is_projective(m);
    emit_module(op == "tau-gprj" ? tau_gprj(m, profile) : tau_pfin(m, profile, rng));
  } else if (op == "tr-p") {
    emit_morph(tr_p_lambda(need_morph(), rng));
  } else {
    throw PreconditionError("unknown op '" + op + "'");
  }
  if (projective_input) summary += " (projective input)";

  if (!args.out.empty()) {
    io::save_json(args.out, result);
    std::cout << summary << "\n";
  } else {
    std::cout << result.dump(2) << "\n";
    std::cerr << summary << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string manifest, suite = "all", json;
  std::uint64_t seed = 0;
};

void print_table(const io::VerifyRun& run) {
  std::cout << std::left << std::setw(12) << "suite" << std::setw(6) << "level" << std::setw(10) << "expected"
            << std::setw(8) << "result" << std::setw(6) << "met" << "summary\n";
  for (auto& o : run.outcomes) {
    std::cout << std::left << std::setw(12) << o.suite << std::setw(6) << o.level << std::setw(10)
              << (o.expected ? "pass" : "fail") << std::setw(8) << (o.property_holds ? "PASS" : "FAIL")
              << std::setw(6) << (o.met ? "yes" : "NO") << o.summary << "\n";
    for (auto& w : o.witnesses) std::cout << "    witness: " << w << "\n";
  }
  std::cout << (run.all_met ? "all expectations met" : "EXPECTATIONS NOT MET") << "\n";
}

int cmd_verify(const VerifyArgs& args) {
  io::Manifest m = io::load_manifest(args.manifest);
  io::VerifyRun run = io::run_verify(m, args.suite, args.seed);
  print_table(run);
  if (!args.json.empty()) io::save_json(args.json, run.report);
  return run.all_met ? 0 : 4;
}

int cmd_t2(const std::string& algebra, const std::string& out) {
  AlgebraPtr alg = io::algebra_from_json(io::load_json(algebra));
  T2Algebra t2 = t2_of(alg);
  io::save_json(out, io::t2_to_json(t2));
  std::cout << t2.t2->vertex_count() << " vertices, " << t2.t2->quiver().arrow_count() << " arrows, dim "
            << t2.t2->dimension() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("ARSUBCAT_THREADS")) set_thread_cap(std::atoi(env));

  CLI::App app{"Auslander-Reiten computations over bound quiver algebras"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Apply one construction to a module or morphism object");
  compute->add_option("--algebra", ca.algebra, "Algebra JSON")->required();
  compute->add_option("--module", ca.module, "Module or morphism-object JSON")->required();
  compute->add_option("--op", ca.op, "Construction")
      ->required()
      ->check(CLI::IsMember({"syzygy", "tau", "tr", "dual", "mimo", "imin", "tau-gprj", "tau-pfin", "tr-p"}));
  compute->add_option("--out", ca.out, "Write the result here instead of stdout");
  compute->add_option("--seed", ca.seed, "Seed for randomized steps")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites from a fixture manifest");
  verify->add_option("--manifest", va.manifest, "Manifest JSON")->required();
  verify->add_option("--suite", va.suite, "Suite to run")
      ->capture_default_str()
      ->check(CLI::IsMember({"ar-full", "ar-gprj", "ar-pfin", "gp-census", "tau-syzygy", "all"}));
  verify->add_option("--seed", va.seed, "Seed for randomized steps")->capture_default_str();
  verify->add_option("--json", va.json, "Write the JSON report here");

  std::string t2_in, t2_out;
  auto* t2 = app.add_subcommand("t2", "Write the T2 algebra of an algebra");
  t2->add_option("--algebra", t2_in, "Algebra JSON")->required();
  t2->add_option("--out", t2_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return cmd_compute(ca);
    if (verify->parsed()) return cmd_verify(va);
    return cmd_t2(t2_in, t2_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "precondition violated (cap reached): " << e.what() << "\n";
    return 2;
  } catch (const NotFiniteDimensional& e) {
    std::cerr << "precondition violated (not finite-dimensional): " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
