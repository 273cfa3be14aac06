#pragma once

#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <vector>

#include "arsubcat/quivalg/algebra.hpp"

namespace arsubcat {

using Rng = std::mt19937_64;

/// A finite-dimensional right module over a bound quiver algebra: one vector
/// space per vertex and a dims[target] x dims[source] matrix per arrow.
/// Immutable; copies share the lazily computed path-action cache.
class Representation {
 public:
  /// Validates shapes and that every relation acts as zero; throws
  /// PreconditionError otherwise.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

  static Representation zero(AlgebraPtr alg);
  /// The simple module at vertex v.
  static Representation simple(AlgebraPtr alg, std::size_t v);

  const BoundQuiverAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const PrimeField& field() const { return alg_->field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const std::vector<Matrix>& arrow_maps() const { return maps_; }
  const Matrix& arrow_map(std::size_t a) const { return maps_[a]; }

  /// Action M_{source(b)} -> M_{target(b)} of the basis path b.
  const Matrix& basis_action(std::size_t b) const;
  /// Action of sum_b x_b * b over the basis paths from s to t.
  Matrix element_action(const Element& x, std::size_t s, std::size_t t) const;

  /// Same algebra presentation and identical matrices.
  bool same_data(const Representation& o) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Matrix> actions;
  };
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  std::shared_ptr<Cache> cache_;
};

/// Same presentation (pointer equality or equal fingerprints).
bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

/// A module homomorphism, one matrix per vertex.
class ModuleMap {
 public:
  /// Validates shapes and the intertwining identities.
  ModuleMap(Representation source, Representation target, std::vector<Matrix> maps);
  /// Skips the intertwining check; for maps constructed by the library.
  static ModuleMap trusted(Representation source, Representation target, std::vector<Matrix> maps);

  static ModuleMap identity(const Representation& m);
  static ModuleMap zero(const Representation& source, const Representation& target);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& at(std::size_t v) const { return maps_[v]; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  bool intertwines() const;

  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap scaled(Residue c) const;

 private:
  ModuleMap(Representation source, Representation target, std::vector<Matrix> maps, bool check);
  Representation source_;
  Representation target_;
  std::vector<Matrix> maps_;
};

/// g . f
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct DirectSum {
  Representation sum;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};

DirectSum direct_sum(std::span<const Representation> parts);
Representation direct_sum(const Representation& a, const Representation& b);
/// Block-diagonal sum f1 (+) f2.
ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g);
/// [f, g]: A (+) B -> C
ModuleMap hstack(const ModuleMap& f, const ModuleMap& g);
/// (f; g): A -> B (+) C
ModuleMap vstack(const ModuleMap& f, const ModuleMap& g);

}  // namespace arsubcat
