#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "arsubcat/exactlin/matrix.hpp"

namespace arsubcat {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws PreconditionError on out-of-range endpoints or duplicate ids.
  Quiver(std::size_t vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  std::optional<std::size_t> find_arrow(const std::string& id) const;

 private:
  std::size_t vertices_ = 0;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> by_id_;
};

/// A path as a sequence of arrow indices, composed left to right: the target
/// of arrows[k] is the source of arrows[k+1]. Trivial paths carry a vertex.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
};

struct RelationTerm {
  Residue coeff = 0;
  std::vector<std::size_t> path;  // arrow indices
};
/// One generator of the ideal: a linear combination of parallel paths of one
/// common length >= 2.
using Relation = std::vector<RelationTerm>;

/// Dense coordinates over the algebra's path basis.
using Element = std::vector<Residue>;

/// kQ/I for an ideal I generated by length-homogeneous relations with
/// parallel terms. The normal-form path basis is computed degree by degree:
/// in degree d the ideal is spanned by arrow*I_{d-1}, I_{d-1}*arrow and the
/// degree-d generators; the lexicographically largest paths are eliminated
/// first, so the surviving (normal) paths are the lexicographically smallest.
///
/// Right modules are representations of Q itself: an arrow a: i -> j acts
/// M_i -> M_j and a path a_1 ... a_n acts as M(a_n) ... M(a_1).
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
 public:
  static constexpr std::size_t kDefaultDegreeCap = 32;

  /// Throws MalformedRelation or NotFiniteDimensional.
  static std::shared_ptr<const BoundQuiverAlgebra> build(PrimeField field, Quiver quiver,
                                                          std::vector<Relation> relations,
                                                          std::size_t degree_cap = kDefaultDegreeCap,
                                                          std::string name = "");

  const PrimeField& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::string& name() const { return name_; }
  std::size_t degree_cap() const { return degree_cap_; }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  /// Basis indices of normal paths from s to t, degree-major, trivial first.
  const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const {
    return between_[s * vertex_count() + t];
  }
  /// Position of basis element b inside basis_between(source, target).
  std::size_t position_in_block(std::size_t b) const { return block_pos_[b]; }
  std::size_t trivial(std::size_t v) const { return trivial_[v]; }
  /// Longest surviving path length (the algebra's Loewy length minus one).
  std::size_t top_degree() const { return top_degree_; }

  /// Normal form of an arbitrary path given by its arrow sequence.
  Element reduce_path(std::size_t source, const std::vector<std::size_t>& arrows) const;
  const Element& multiply_basis(std::size_t i, std::size_t j) const { return table_[i * dimension() + j]; }
  Element multiply(const Element& x, const Element& y) const;
  Element zero_element() const { return Element(dimension(), 0); }
  Element basis_element(std::size_t b) const;

  /// Arrows and relation paths reversed. Cached; opposite().opposite() is the
  /// original object while it is alive.
  std::shared_ptr<const BoundQuiverAlgebra> opposite() const;

  /// Presentation identity (field, quiver, relations). Two algebras with the
  /// same fingerprint have identical bases and structure constants.
  const std::string& fingerprint() const { return fingerprint_; }
  bool same_presentation(const BoundQuiverAlgebra& o) const { return fingerprint_ == o.fingerprint_; }

 private:
  BoundQuiverAlgebra(PrimeField field, Quiver quiver, std::vector<Relation> relations, std::size_t cap,
                     std::string name);
  static std::shared_ptr<BoundQuiverAlgebra> build_mutable(PrimeField field, Quiver quiver,
                                                           std::vector<Relation> relations, std::size_t degree_cap,
                                                           std::string name);
  void compute_basis();

  struct DegreeData {
    std::vector<std::vector<std::size_t>> paths;      // in column order
    std::vector<std::size_t> path_source;
    std::map<std::vector<std::size_t>, std::size_t> column_of;
    Matrix ideal;                                      // RREF rows spanning I_d
    std::vector<std::size_t> pivot_row_of_column;      // npos when normal
    std::vector<std::size_t> basis_of_column;          // npos when not normal
  };

  PrimeField field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::size_t degree_cap_;
  std::string name_;
  std::string fingerprint_;
  std::vector<std::size_t> arrow_rank_;
  std::vector<DegreeData> degrees_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> block_pos_;
  std::vector<std::size_t> trivial_;
  std::size_t top_degree_ = 0;
  std::vector<Element> table_;

  mutable std::once_flag opposite_once_;
  mutable std::shared_ptr<const BoundQuiverAlgebra> opposite_;
  std::weak_ptr<const BoundQuiverAlgebra> origin_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// Re-expresses x in the basis of `to`, which must be the opposite of `from`
/// (each path is reversed and reduced there).
Element to_opposite(const Element& x, const BoundQuiverAlgebra& from, const BoundQuiverAlgebra& to);

/// The upper triangular algebra T2(A) presented as a bound quiver algebra,
/// together with the bookkeeping that ties its quiver to A's.
struct T2Algebra {
  AlgebraPtr base;
  AlgebraPtr t2;
  std::size_t n = 0;                     // vertices of the base
  std::vector<std::size_t> domain_arrow;  // base arrow -> arrow on vertices 0..n-1
  std::vector<std::size_t> codomain_arrow;  // base arrow -> arrow on vertices n..2n-1
  std::vector<std::size_t> connecting_arrow;  // vertex i -> arrow eps_i: i -> i+n
  std::vector<std::pair<std::size_t, std::size_t>> vertex_correspondence;
};

/// Vertices V and V' (i' = i + n), two copies of the arrows, connecting arrows
/// eps_i: i -> i', both copies of the relations and a*eps_j - eps_i*a' for
/// every arrow a: i -> j. Checks dim T2(A) = 3 dim A.
T2Algebra t2_of(const AlgebraPtr& alg);

}  // namespace arsubcat
