// Finite groups given by multiplication tables.
#pragma once

#include <string>
#include <vector>

#include "simplex/sset.hpp"

namespace simplex {

struct FinGroup {
  Id order = 1;
  std::vector<Table> mul;  ///< mul[a][b] = ab
  Table inv;
  Id e = 0;
  std::string name;

  Id operator()(Id a, Id b) const { return mul[a][b]; }
  bool abelian() const;
  /// Empty if the group axioms hold, else a description of the first failure.
  std::string check() const;

  static FinGroup from_table(std::vector<Table> mul, std::string name = {});
};

FinGroup cyclic(Id n);
FinGroup direct_product(const FinGroup& a, const FinGroup& b);
/// Symmetries of a regular n-gon, order 2n.
FinGroup dihedral(Id n);
/// Dicyclic group of order 4n; n = 2 gives the quaternions.
FinGroup dicyclic(Id n);
/// Subgroup of S_m generated by the given permutations.
FinGroup permutation_group(const std::vector<std::vector<int>>& gens, std::string name);

/// One representative of every isomorphism class of groups of order <= 12.
std::vector<FinGroup> small_groups();

/// Element of a direct product from its coordinates.
inline Id pair_id(const FinGroup& b, Id x, Id y) { return x * b.order + y; }

}  // namespace simplex
