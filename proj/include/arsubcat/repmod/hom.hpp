#pragma once

#include <vector>

#include "arsubcat/repmod/representation.hpp"

namespace arsubcat {

/// Hom_Λ(M, N) as the solution space of the intertwining system. A map is
/// flattened by concatenating its vertex matrices, each row-major.
class HomSpace {
 public:
  HomSpace(Representation source, Representation target);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  std::size_t dim() const { return basis_.cols(); }
  /// Columns are the flattened basis maps.
  const Matrix& basis() const { return basis_; }
  std::size_t ambient_dim() const { return basis_.rows(); }

  ModuleMap map(std::size_t i) const;
  ModuleMap combination(std::span<const Residue> coeffs) const;
  std::vector<ModuleMap> maps() const;

  Matrix flatten(const ModuleMap& f) const;
  ModuleMap unflatten(const Matrix& column) const;

 private:
  Representation source_;
  Representation target_;
  std::vector<std::size_t> offsets_;
  Matrix basis_;
};

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// A submodule together with its inclusion.
struct Subobject {
  Representation module;
  ModuleMap inclusion;
};

/// A quotient together with the projection onto it.
struct Quotient {
  Representation module;
  ModuleMap projection;
};

/// f = mono . epi through im f.
struct ImageFactorization {
  Representation module;
  ModuleMap epi;
  ModuleMap mono;
};

Subobject kernel(const ModuleMap& f);
Quotient cokernel(const ModuleMap& f);
ImageFactorization image(const ModuleMap& f);

/// The submodule whose space at v is spanned by the columns of spans[v];
/// the spans must be arrow-stable (PreconditionError otherwise). Columns
/// need not be independent.
Subobject submodule(const Representation& m, const std::vector<Matrix>& spans);
/// The smallest submodule containing the given columns at each vertex.
Subobject generated_submodule(const Representation& m, const std::vector<Matrix>& generators);
/// M / U for an arrow-stable family of spans.
Quotient quotient(const Representation& m, const std::vector<Matrix>& spans);

/// Restriction of f to the submodule given by `inclusion`.
ModuleMap restrict_map(const ModuleMap& f, const ModuleMap& inclusion);

/// An internal direct sum M = U (+) W given by two arrow-stable families of
/// column bases. Returns the two summands with inclusions and projections.
DirectSum split_module(const Representation& m, const std::vector<Matrix>& u, const std::vector<Matrix>& w);

}  // namespace arsubcat
