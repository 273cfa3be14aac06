#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arsubcat/repmod/hom.hpp"

namespace arsubcat {

struct DecompositionCertificate {
  std::vector<Representation> summands;
  std::vector<ModuleMap> inclusions;   // summand -> M
  std::vector<ModuleMap> projections;  // M -> summand
  /// Per summand: how indecomposability was established.
  std::vector<std::string> evidence;
  /// False when some summand was only declared indecomposable after the
  /// random budget ran out without an exact check.
  bool certified = true;
};

struct DecomposeOptions {
  /// Consecutive random endomorphisms with primary minimal polynomial
  /// required before a summand is declared indecomposable.
  int budget = 24;
  /// End(M) is enumerated exhaustively when p^dim End <= this.
  std::uint64_t exact_limit = 20000;
};

DecompositionCertificate decompose(const Representation& m, Rng& rng, const DecomposeOptions& opts = {});

/// Some endomorphism that is neither nilpotent nor invertible, if End(M) has one
/// (exact when p^dim End <= exact_limit, randomized otherwise).
std::optional<ModuleMap> splitting_endomorphism(const Representation& m, Rng& rng, const DecomposeOptions& opts = {});

bool is_indecomposable(const Representation& m, Rng& rng, const DecomposeOptions& opts = {});

/// M = ker phi^N (+) im phi^N for N = dim M.
DirectSum fitting_split(const ModuleMap& phi);

struct IsoOptions {
  int random_tries = 64;
  std::uint64_t exact_limit = 200000;
};

/// An isomorphism M -> N, or nullopt. Random combinations of a Hom basis are
/// tried first; small Hom spaces are then searched exhaustively.
std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n, Rng& rng,
                                          const IsoOptions& opts = {});
bool is_isomorphic(const Representation& m, const Representation& n, Rng& rng, const IsoOptions& opts = {});

/// Direct sum of the non-projective summands (zero module if none).
Representation strip_projective_summands(const Representation& m, Rng& rng);
/// Direct sum of the non-injective summands.
Representation strip_injective_summands(const Representation& m, Rng& rng);

/// Iso classes with multiplicity match: both sides decomposed and paired.
bool same_summands(const std::vector<Representation>& a, const std::vector<Representation>& b, Rng& rng);

}  // namespace arsubcat
