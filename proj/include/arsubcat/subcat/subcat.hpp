#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arsubcat/morphcat/morphcat.hpp"

namespace arsubcat {

struct GorensteinProfile {
  AlgebraPtr alg;
  std::size_t cap = 0;
  std::optional<std::size_t> right_injdim;  // id Λ_Λ
  std::optional<std::size_t> left_injdim;   // id of Λ over the opposite algebra
  std::size_t d = 0;
  bool is_selfinjective = false;
  bool is_d_gorenstein = false;
};

/// Minimal injective coresolutions of Λ on both sides, up to `cap` steps.
GorensteinProfile gorenstein_profile(const AlgebraPtr& alg, std::size_t cap, Rng& rng);

/// Ext^i(M, Λ) = 0 for 1 <= i <= d (always true when self-injective).
/// Throws PreconditionError when the profile is not d-Gorenstein.
bool is_gorenstein_projective(const Representation& m, const GorensteinProfile& profile);

std::optional<std::size_t> has_finite_projdim(const Representation& m, std::size_t cap);

/// Ω^d D Ω^d Tr(G). G must be Gorenstein projective.
Representation tau_gprj(const Representation& g, const GorensteinProfile& profile);

/// Coker-bar(Mimo(f)) for f: P1 -> P0 the minimal presentation of τ(M), with
/// the right-minimal part of Coker(Mimo f) -> Coker f kept. Projective
/// summands of M are dropped first.
Representation tau_pfin(const Representation& m, const GorensteinProfile& profile, Rng& rng);

/// IMin(Tr(Coker f) (+) Q1*) where Q1 is the largest summand of A killed by f.
/// The result lives over the opposite algebra.
MorphObject tr_p_lambda(const MorphObject& obj, Rng& rng);

struct EnumerationOptions {
  /// Per-vertex dimension bound.
  std::vector<std::size_t> dim_bound;
  /// Give up (CapExceeded) after this many candidate extensions.
  std::size_t max_candidates = 200000;
};

/// All indecomposables with dimension vector <= bound, up to isomorphism.
/// Each indecomposable E of dimension >= 2 is an extension of some E/S by a
/// simple submodule S, so candidates are the middle terms of extensions of
/// already found modules by simples, with extension classes taken up to the
/// action of the automorphism group of the isotypic blocks.
std::vector<Representation> enumerate_indecomposables(const AlgebraPtr& alg, const EnumerationOptions& opts, Rng& rng);

struct NamedModule {
  std::string id;
  Representation module;
};

enum class SubcategoryTag { Full, Gprj, Pfin };
std::string to_string(SubcategoryTag t);

struct DualityPair {
  std::string x_id;
  std::string y_id;
  std::size_t lhs = 0;  // dim stable Hom(X, Y)
  std::size_t rhs = 0;  // dim Ext^1(Y, τX)
  bool equal = false;
};

struct DualityReport {
  SubcategoryTag tag = SubcategoryTag::Full;
  std::vector<DualityPair> pairs;
  /// Translates that are not isomorphic to a listed object (or zero).
  std::vector<std::string> closure_failures;
  bool all_equal = true;
};

/// For every X non-projective in `objects` and every Y in `objects`. The
/// objects must already belong to the subcategory named by `tag`.
DualityReport verify_ar_duality(const GorensteinProfile& profile, SubcategoryTag tag,
                                const std::vector<NamedModule>& objects, Rng& rng);

enum class GpType { AIdentity, BCosocle, CSyzygy, Other };
std::string to_string(GpType t);

struct GpCensusEntry {
  std::string id;
  Representation module;  // over T2
  GpType type = GpType::Other;
};

struct GpCensus {
  std::vector<GpCensusEntry> objects;
  std::map<GpType, std::size_t> counts;
};

/// Tags each indecomposable GP object of H(Λ): (c) Ω(G) ↪ P(G), then
/// (a) G = G, then (b) 0 -> G, else other. `base` lists the indecomposable
/// Λ-modules, `gp_objects` the indecomposable GP T2-modules.
GpCensus classify_gp_census(const T2Algebra& t2, const std::vector<Representation>& base,
                            const std::vector<NamedModule>& gp_objects, Rng& rng);

/// Enumerates both lists itself: indecomposable Λ-modules within `bound` and
/// GP T2-modules within (bound, bound).
GpCensus classify_gp_census(const T2Algebra& t2, const std::vector<std::size_t>& bound, Rng& rng);

struct TauSyzygyWitness {
  std::string id;
  std::vector<std::size_t> dims;
  std::size_t tau_dim = 0;
  std::size_t syzygy_dim = 0;
};

struct TauSyzygyReport {
  bool holds = true;
  std::size_t checked = 0;
  std::vector<TauSyzygyWitness> witnesses;
};

/// τ_G(G) ≅ Ω(G) (stably) for every non-projective GP object in the list.
TauSyzygyReport check_tau_is_syzygy(const GorensteinProfile& profile, const std::vector<NamedModule>& objects,
                                    Rng& rng);

}  // namespace arsubcat
