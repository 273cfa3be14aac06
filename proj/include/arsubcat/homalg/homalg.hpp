#pragma once

#include <optional>
#include <vector>

#include "arsubcat/repmod/decompose.hpp"
#include "arsubcat/repmod/projectives.hpp"

namespace arsubcat {

Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);
Representation syzygy_power(const Representation& m, std::size_t n);

/// Matrices transposed onto the reversed arrows of the opposite algebra.
Representation k_dual(const Representation& m);
/// D on maps: D(f): D(N) -> D(M).
ModuleMap k_dual(const ModuleMap& f);

/// P1 --d--> P0 --eps--> M -> 0, minimal.
struct MinimalPresentation {
  Representation module;
  ProjectiveSum p1;
  ProjectiveSum p0;
  ModuleMap d;
  ModuleMap eps;
  ElementMatrix d_elements;  // d as left multiplication, x[l][k] ∈ e_{w_l} Λ e_{u_k}
};

MinimalPresentation minimal_presentation(const Representation& m);

/// ... -> P_2 -> P_1 -> P_0 -> M, minimal, computed up to P_length.
/// differentials[k] : P_{k+1} -> P_k (element matrices alongside).
struct MinimalResolution {
  Representation module;
  std::vector<ProjectiveSum> terms;
  std::vector<ModuleMap> differentials;
  std::vector<ElementMatrix> differential_elements;
  ModuleMap augmentation;  // P_0 -> M
};

MinimalResolution minimal_resolution(const Representation& m, std::size_t length);

/// The dual of a map between projective sums, over the opposite algebra:
/// (⊕P(w_l))* -> (⊕P(u_k))* has element matrix y[k][l] = x[l][k]^op.
ModuleMap dual_projective_map(const ProjectiveSum& src, const ProjectiveSum& dst, const ElementMatrix& x,
                              ProjectiveSum& dual_src, ProjectiveSum& dual_dst);
/// P* = Hom(P, Λ) over the opposite algebra, for a projective module P.
Representation projective_dual(const Representation& p);

/// Tr(M) = coker(P0* -> P1*) over the opposite algebra.
Representation transpose(const Representation& m);
/// τ = D Tr.
Representation ar_translate(const Representation& m);
/// τ on a map g: B -> C, as the map τB -> τC induced through minimal
/// presentations. Determined up to maps factoring through injectives.
ModuleMap ar_translate_map(const ModuleMap& g);
/// τ^{-1} = Tr D.
Representation ar_translate_inverse(const Representation& m);

struct StableHomSpace {
  std::size_t total_dim = 0;
  std::size_t projective_part_dim = 0;  // or injective, for Hom-bar
  std::size_t stable_dim = 0;
  /// Columns: flattened maps (HomSpace layout) spanning the factoring part.
  Matrix factoring_span;
};

/// Hom modulo maps factoring through a projective (through the cover of N).
StableHomSpace stable_hom_proj(const Representation& m, const Representation& n);
/// Hom modulo maps factoring through an injective (through the envelope of M).
StableHomSpace stable_hom_inj(const Representation& m, const Representation& n);

/// Ext^i(M, N) from the minimal resolution: cochains C^k = Hom(P_k, N) ≅ ⊕ N e_{u}.
struct ExtGroup {
  std::size_t degree = 0;
  std::size_t dim = 0;
  Matrix cocycles;       // columns span ker(C^i -> C^{i+1})
  Matrix coboundaries;   // columns span im(C^{i-1} -> C^i)
  Matrix representatives;  // columns: cocycles completing the coboundaries to a basis
  MinimalResolution resolution;
};

ExtGroup ext(const Representation& m, const Representation& n, std::size_t degree);
std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t degree);

/// Cochain differential C^{k-1} -> C^k for the resolution (k >= 1).
Matrix cochain_differential(const MinimalResolution& res, const Representation& n, std::size_t k);

/// The module map P_1 -> N whose Yoneda coordinates are the cochain `c`.
ModuleMap cochain_map(const ProjectiveSum& p, const Representation& n, const Matrix& c);

/// Middle term of the extension 0 -> N -> E -> M -> 0 of class c ∈ Ext^1(M, N),
/// c a cocycle on P_1 of `res`: E = coker(P_1 --(-c; d)--> N (+) P_0).
struct Extension {
  Representation middle;
  ModuleMap inclusion;   // N -> E
  ModuleMap projection;  // E -> M
};
Extension extension_from_cocycle(const MinimalResolution& res, const Representation& n, const Matrix& c);

/// source(h) = M1 (+) M2 with h|M2 = 0 and h1 = h|M1 right minimal.
struct RightMinimalization {
  Representation m1;
  ModuleMap h1;
  Representation m2;
  ModuleMap inclusion1;  // M1 -> source(h)
  ModuleMap inclusion2;  // M2 -> source(h)
};

RightMinimalization right_minimalize(const ModuleMap& h, Rng& rng);
/// Every g ∈ End(source) with h g = h is invertible.
bool is_right_minimal(const ModuleMap& h);

/// ν(P(i)) = I(i), additively. PreconditionError when P is not projective.
Representation nakayama(const Representation& p);

/// Smallest n with Ω^n(M) = 0, if n <= cap.
std::optional<std::size_t> projective_dimension(const Representation& m, std::size_t cap);
std::optional<std::size_t> injective_dimension(const Representation& m, std::size_t cap);

}  // namespace arsubcat
