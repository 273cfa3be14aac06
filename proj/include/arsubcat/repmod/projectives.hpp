#pragma once

#include <vector>

#include "arsubcat/repmod/hom.hpp"

namespace arsubcat {

/// P(i) = e_i Λ: basis at vertex j is the normal paths from i to j.
Representation indecomposable_projective(const AlgebraPtr& alg, std::size_t i);
/// I(i) = D(Λ e_i): basis at vertex j is dual to the normal paths from j to i.
Representation indecomposable_injective(const AlgebraPtr& alg, std::size_t i);

/// P(u_0) (+) P(u_1) (+) ..., summands in the listed order. Elements of the
/// summand k at vertex v occupy a contiguous block ordered like
/// basis_between(u_k, v).
struct ProjectiveSum {
  AlgebraPtr alg;
  std::vector<std::size_t> vertices;
  Representation module;
  /// offset[k][v]: first coordinate of summand k inside module at vertex v.
  std::vector<std::vector<std::size_t>> offset;

  /// Coordinate vector at vertex u_k of the generator e_{u_k} of summand k.
  Matrix generator(std::size_t k) const;
};

ProjectiveSum projective_sum(const AlgebraPtr& alg, std::vector<std::size_t> vertices);
/// Λ_Λ = P(0) (+) ... (+) P(n-1).
ProjectiveSum regular_module(const AlgebraPtr& alg);

/// A map between projective sums ⊕P(u_k) -> ⊕P(w_l) is left multiplication
/// by an element matrix x[l][k] ∈ e_{w_l} Λ e_{u_k}.
using ElementMatrix = std::vector<std::vector<Element>>;

ModuleMap map_from_elements(const ProjectiveSum& src, const ProjectiveSum& dst, const ElementMatrix& x);
ElementMatrix elements_of_map(const ProjectiveSum& src, const ProjectiveSum& dst, const ModuleMap& f);

/// The map ⊕P(u_k) -> N sending e_{u_k} to the column images[k] ∈ N e_{u_k}.
ModuleMap map_from_generators(const ProjectiveSum& src, const Representation& n, const std::vector<Matrix>& images);

/// Per-vertex standard-basis complements of rad M = Σ_a im M(a); their
/// column counts form the dimension vector of top M.
std::vector<Matrix> top_generators(const Representation& m);
std::vector<std::size_t> top_dims(const Representation& m);
/// Per-vertex bases of soc M = ∩_{a out of v} ker M(a).
std::vector<Matrix> socle_basis(const Representation& m);
std::vector<std::size_t> socle_dims(const Representation& m);
/// Per-vertex bases of rad M.
std::vector<Matrix> radical_basis(const Representation& m);

struct ProjectiveCover {
  ProjectiveSum projective;
  ModuleMap map;  // surjective, kernel inside the radical
};

struct InjectiveEnvelope {
  std::vector<std::size_t> vertices;
  Representation injective;
  ModuleMap map;  // injective, image essential
};

ProjectiveCover projective_cover(const Representation& m);
InjectiveEnvelope injective_envelope(const Representation& m);
/// ⊕ I(v) over the listed vertices.
Representation injective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& vertices);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

}  // namespace arsubcat
