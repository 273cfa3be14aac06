#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arsubcat/io/json_io.hpp"
#include "arsubcat/subcat/subcat.hpp"

namespace arsubcat::io {

/// One algebra a suite can run on: "base" is Λ, "t2" is T2(Λ).
struct LevelSpec {
  std::string name;
  std::vector<std::size_t> bound;  // per-vertex enumeration bound
  std::optional<std::size_t> expect_indecomposables;
  std::optional<std::size_t> expect_gorenstein_d;
  std::optional<bool> expect_self_injective;
};

struct SuiteSpec {
  std::string suite;  // ar-full | ar-gprj | ar-pfin | gp-census | tau-syzygy
  std::string level;
  bool expect_pass = true;
  std::optional<std::string> expect_witness;
  std::optional<std::size_t> expect_pairs;
  std::map<std::string, std::size_t> expect_counts;  // gp-census, by tag name
};

struct Manifest {
  std::string name;
  std::filesystem::path algebra_file;
  AlgebraPtr alg;
  T2Algebra t2;
  /// Named modules, over Λ or over T2(Λ) according to their "algebra" field.
  std::vector<NamedModule> base_modules;
  std::vector<NamedModule> t2_modules;
  std::map<std::string, LevelSpec> levels;
  std::vector<SuiteSpec> suites;
};

/// Paths inside the manifest are relative to the manifest's directory.
Manifest load_manifest(const std::filesystem::path& path);

struct SuiteOutcome {
  std::string suite;
  std::string level;
  bool property_holds = false;
  bool expected = true;
  bool met = false;  // property_holds == expected and every pinned number matched
  std::string summary;
  std::vector<std::string> witnesses;
  Json detail;
};

struct VerifyRun {
  std::vector<SuiteOutcome> outcomes;
  bool all_met = true;
  Json report;
};

/// Runs the manifest's suites named `suite` ("all" for every one) and the
/// fixture checks of every level they touch.
VerifyRun run_verify(const Manifest& manifest, const std::string& suite, std::uint64_t seed);

}  // namespace arsubcat::io
