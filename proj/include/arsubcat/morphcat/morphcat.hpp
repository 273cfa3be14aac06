#pragma once

#include <functional>

#include "arsubcat/homalg/homalg.hpp"

namespace arsubcat {

/// An object (A --f--> B) of the morphism category H(Λ).
struct MorphObject {
  Representation a;
  Representation b;
  ModuleMap f;

  explicit MorphObject(ModuleMap map) : a(map.source()), b(map.target()), f(std::move(map)) {}
};

/// A map of objects: f' sigma1 = sigma2 f.
struct MorphMap {
  ModuleMap sigma1;
  ModuleMap sigma2;

  bool commutes(const MorphObject& from, const MorphObject& to) const;
};

/// Vertex i carries A_i, vertex i' = i + n carries B_i, eps_i acts by f_i.
Representation to_t2_module(const T2Algebra& t2, const MorphObject& obj);
MorphObject from_t2_module(const T2Algebra& t2, const Representation& m);
/// A T2 module map restricted to the two halves.
MorphMap from_t2_map(const T2Algebra& t2, const ModuleMap& g);
ModuleMap to_t2_map(const T2Algebra& t2, const MorphObject& from, const MorphObject& to, const MorphMap& s);

bool is_mono(const MorphObject& obj);

struct MimoResult {
  MorphObject object;   // [f, e] : A -> B (+) I(Ker f)
  MorphMap canonical;   // (1_A, [1_B, 0])
};

/// Mimo(f) = [f, e]: A -> B (+) I(K), K = ker f, e any extension of the
/// envelope K -> I(K) along K -> A.
MimoResult mimo(const MorphObject& obj);

/// IMin(N) = (I0 --g--> I1) from the minimal injective copresentation.
MorphObject imin(const Representation& n);
/// PMin(N) = (P1 --d--> P0) from the minimal projective presentation.
MorphObject pmin(const Representation& n);

using GpTest = std::function<bool(const Representation&)>;
/// f mono and A, B, Coker f all pass gp_test.
bool is_gp_in_h(const MorphObject& obj, const GpTest& gp_test);

/// Every P(i) is isomorphic to some I(j).
bool is_self_injective(const AlgebraPtr& alg, Rng& rng);

/// Mimo(τ_Λ(B -> Coker f)) for a mono object over a self-injective Λ, τ_Λ
/// applied to the map B -> Coker f.
MorphObject tau_s_lambda(const MorphObject& obj, Rng& rng);

/// Whether every map from `g` into `target` factors through `through`.
bool all_maps_factor(const T2Algebra& t2, const MorphObject& g, const MimoResult& through, const MorphObject& target);

}  // namespace arsubcat
