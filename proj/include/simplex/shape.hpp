// Subcomplexes of a standard simplex: Δ^n, ∂Δ^n, horns and joins of them.
#pragma once

#include <string>
#include <vector>

#include "simplex/sset.hpp"

namespace simplex {

/// A subcomplex of Δ^n given by its nondegenerate faces as vertex bitmasks.
/// Faces are sorted by (dimension, mask).  n == -1 is the empty complex.
struct Shape {
  int n = -1;
  std::vector<unsigned> faces;

  static Shape simplex(int n);
  static Shape boundary(int n);
  /// Union of the faces d_j Δ^n for j in `mask`.
  static Shape horn_set(int n, unsigned mask);
  /// Horn missing the i-th face.
  static Shape horn(int n, int i);
  static Shape empty() { return {}; }
  /// Closure of the given faces under taking subfaces.
  static Shape generated(int n, const std::vector<unsigned>& gens);

  bool contains(unsigned mask) const;
  int dim() const;
  bool operator==(const Shape&) const = default;
  std::string describe() const;
};

/// Ordinal-sum join; the faces of b are shifted past the vertices of a.
Shape join_shape(const Shape& a, const Shape& b);

/// Vertex list of a face mask, ascending.
std::vector<int> vertices_of(unsigned mask);

/// The shape as a simplicial set truncated at `trunc`; level m lists the
/// nondecreasing sequences in [n] whose vertex set is a face.
struct ShapeSSet {
  SSet x;
  std::vector<std::vector<std::vector<int>>> seqs;  ///< seqs[m][id]
};
ShapeSSet shape_sset(const Shape& s, int trunc);

}  // namespace simplex
