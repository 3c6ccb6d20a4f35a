#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyface/exact.hpp"

namespace polyface {

using IndexSet = boost::dynamic_bitset<>;

IndexSet make_index_set(std::size_t size, std::span<const std::size_t> members);
std::vector<std::size_t> members(const IndexSet& set);

inline constexpr std::size_t kMaxPoints = 32;
inline constexpr int kMaxDim = 7;

/// Affine map from intrinsic coordinates to ambient space:
/// x = origin + sum_i c_i basis_i. The basis is orthogonal, so the intrinsic
/// metric is diagonal with weights basis_i . basis_i.
struct Embedding {
  Vector origin;
  std::vector<Vector> basis;
  std::vector<Scalar> weights;

  Vector apply(const Vector& intrinsic) const;
  bool is_identity() const;
};

struct FacetRecord {
  IndexSet vertex_set;
  Hyperplane supporting;
};

struct Face {
  IndexSet vertex_set;
  int dim = -1;
};

/// Graded lattice of faces described by their atom sets. For the face
/// lattice of a polytope the atoms are its vertices; duals and quotients
/// re-index atoms as coatoms / covers of the removed bottom.
class FaceLattice {
 public:
  FaceLattice(int dim, std::size_t atom_count, std::vector<Face> faces);

  int dim() const noexcept { return dim_; }
  std::size_t atom_count() const noexcept { return atom_count_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }

  std::optional<std::size_t> find(const IndexSet& vertex_set) const;
  std::vector<std::size_t> faces_of_dim(int k) const;
  std::size_t count(int k) const;
  const Face& bottom() const { return faces_.front(); }
  const Face& top() const { return faces_.back(); }

 private:
  int dim_;
  std::size_t atom_count_;
  std::vector<Face> faces_;  // sorted by (dim, vertex_set)
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

class FVector {
 public:
  FVector(int dim, std::vector<long long> counts) : dim_(dim), counts_(std::move(counts)) {}

  int dim() const noexcept { return dim_; }
  /// f_k with f_{-1} = f_dim = 1 and 0 outside [-1, dim].
  long long operator[](int k) const;
  const std::vector<long long>& counts() const noexcept { return counts_; }
  long long euler_sum() const;
  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  int dim_;
  std::vector<long long> counts_;  // f_0 .. f_{dim-1}
};

class Polytope {
 public:
  int ambient_dim() const noexcept { return ambient_dim_; }
  int dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Vector>& vertices() const noexcept { return vertices_; }
  const std::vector<FacetRecord>& facets() const noexcept { return facets_; }
  const Embedding& embedding() const noexcept { return embedding_; }
  /// Index into the point list handed to hull_from_points, per vertex.
  const std::vector<std::size_t>& source_index() const noexcept { return source_index_; }
  const FaceLattice& lattice() const noexcept { return *lattice_; }

  Vector ambient_vertex(std::size_t i) const { return embedding_.apply(vertices_[i]); }
  std::vector<Vector> ambient_vertices() const;
  IndexSet facets_containing(const IndexSet& vertex_set) const;

 private:
  friend Polytope hull_from_points(std::span<const Vector> points);

  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<Vector> vertices_;
  std::vector<FacetRecord> facets_;
  Embedding embedding_;
  std::vector<std::size_t> source_index_;
  std::shared_ptr<const FaceLattice> lattice_;
};

/// Convex hull with exact facet enumeration. Non-vertex and duplicate points
/// are dropped; surviving vertices keep their input order.
Polytope hull_from_points(std::span<const Vector> points);

FaceLattice face_lattice(const Polytope& polytope);
FVector f_vector(const FaceLattice& lattice);
FVector f_vector(const Polytope& polytope);

bool is_simple(const Polytope& polytope);
bool is_simplicial(const Polytope& polytope);

FaceLattice dual(const FaceLattice& lattice);
/// The interval [G, top] re-graded as the face lattice of P/G.
FaceLattice quotient(const FaceLattice& lattice, const IndexSet& face);
/// True iff the two lattices are isomorphic as graded posets given by atom
/// sets (brute force over atom relabelings is avoided by comparing
/// canonical invariants plus an explicit matching search).
bool isomorphic(const FaceLattice& a, const FaceLattice& b);

Polytope facet_as_polytope(const Polytope& polytope, std::size_t facet_index);
/// Parent vertex indices of the facet, increasing. Vertex j of
/// facet_as_polytope(polytope, facet_index) is parent vertex result[j].
std::vector<std::size_t> facet_vertex_indices(const Polytope& polytope, std::size_t facet_index);

/// Invokes fn(subset, normal) for every affinely independent subset of
/// `count` points whose affine hull is a hyperplane of the ambient space
/// (count == dim). `normal` spans the orthogonal complement. Returning false
/// from fn stops the enumeration.
template <typename Fn>
void for_each_spanning_hyperplane(std::span<const Vector> points, Fn&& fn);

}  // namespace polyface

#include "polyface/detail/hyperplane_enum.hpp"
