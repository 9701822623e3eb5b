// Nerves of finite groupoids and Čech nerves of surjections.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "simplex/group.hpp"
#include "simplex/sset.hpp"

namespace simplex {

/// Composition is written in diagrammatic order: mul(a, b) needs tgt(a) == src(b).
struct Groupoid {
  Id objects = 0;
  Id arrows = 0;
  Table src, tgt, unit, inv;
  /// comp[a][b], or kNone when not composable
  std::vector<Table> comp;
  static constexpr Id kNone = static_cast<Id>(-1);

  /// Empty if the groupoid axioms hold.
  std::string check() const;
  bool operator==(const Groupoid&) const = default;
};

Groupoid group_as_groupoid(const FinGroup& g);
/// Codiscrete groupoid: exactly one arrow between any two objects.
Groupoid pair_groupoid(Id n);
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);
Groupoid groupoid_product(const Groupoid& a, const Groupoid& b);
/// Disjoint union of a few (pair groupoid x small group) blocks.
Groupoid random_groupoid(std::mt19937& rng);

struct Nerve {
  SSet x;
  /// chains[k][id] = arrows (g_1, ..., g_k); level 0 lists objects.
  std::vector<std::vector<std::vector<Id>>> chains;
};
Nerve nerve(const Groupoid& g, int trunc, const Budget& budget = {});

/// Reads a groupoid off an object satisfying the horn conditions; the
/// composite of (a, b) is d_1 of the unique filler of the Λ^2_1 horn.
Groupoid extract_groupoid(const SSet& x);

/// Čech nerve of p: S -> T; level k is the (k+1)-fold fibre product.  The
/// returned map goes to the constant object on T.
struct Cech {
  SSetPtr nerve;
  SMap aug;
  std::vector<std::vector<std::vector<Id>>> tuples;
};
Cech cech_nerve(const Table& p, Id target_size, int trunc, const Budget& budget = {});

}  // namespace simplex
