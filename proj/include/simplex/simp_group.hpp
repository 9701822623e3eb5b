// Simplicial groups: Moore filling, strict n-groups, W and W̄, actions,
// homotopy quotients and twisted Cartesian products.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "simplex/group.hpp"
#include "simplex/kan.hpp"
#include "simplex/sset.hpp"

namespace simplex {

/// Mixed-radix encoding of tuples; coordinate 0 is least significant.
struct Radix {
  std::vector<Id> base;
  Id size() const;
  Id encode(const std::vector<Id>& digits) const;
  std::vector<Id> decode(Id code) const;
};

/// Group structure on one level, possibly too large for a full table.
struct LevelGroup {
  Id order = 1;
  Id e = 0;
  std::function<Id(Id, Id)> mul;
  std::function<Id(Id)> inv;

  static LevelGroup of(const FinGroup& g);
  /// Coordinatewise product of `copies` copies of an abelian group.
  static LevelGroup power(const FinGroup& a, int copies);
};

struct SimplicialGroup {
  SSetPtr x;
  std::vector<LevelGroup> level;
  std::string name;

  int trunc() const { return x->trunc; }
};

/// Group axioms on levels of order <= `max_order`, and the homomorphism
/// property of every face and degeneracy.  Empty on success.
std::string check_group(const SimplicialGroup& g, Id max_order = 64);

SimplicialGroup constant_group(const FinGroup& g, int trunc);

// ---------------------------------------------------------------------------
// Moore's filling algorithm

/// faces[j] for j != i are (k-1)-simplices; faces[i] is ignored.  Throws
/// InputError if the horn relations d_{m-1} g_j = d_j g_m fail.
Id moore_fill(const SimplicialGroup& g, int k, int i, const std::vector<Id>& faces, Id seed);
Id moore_fill(const SimplicialGroup& g, int k, int i, const std::vector<Id>& faces);
/// All k-simplices with the given horn, by exhaustive search.
std::vector<Id> brute_fillers(const SimplicialGroup& g, int k, int i, const std::vector<Id>& faces);

/// Strict n-group: λ^k_i bijective for k >= n on stored levels.  On a pass,
/// also checks that the underlying object is an (n-1)-groupoid and throws
/// InvariantError otherwise.
Verdict classify_strict(const SimplicialGroup& g, int n, const Budget& budget = {});

// ---------------------------------------------------------------------------
// W and W̄

/// W_n G = G_0 x ... x G_n, levels 0..D (needs G to level D).
struct WConstruction {
  SSetPtr x;
  std::vector<Radix> radix;
};
WConstruction w_total(const SimplicialGroup& g, int D, const Budget& budget = {});
/// W̄_0 G = *, W̄_n G = G_0 x ... x G_{n-1}, levels 0..D (needs G to level D-1).
WConstruction w_bar(const SimplicialGroup& g, int D, const Budget& budget = {});
/// W̄G as a simplicial group under coordinatewise multiplication; the faces
/// are homomorphisms when G is abelian.
SimplicialGroup w_bar_group(const SimplicialGroup& g, int D, const Budget& budget = {});

/// E_k ≅ X_k x Y_k such that faces below the top and all degeneracies are
/// products.  The top face of E is a twisted face on the product.
struct TwistedProductPresentation {
  SSetPtr total, base, fibre;
  SMap projection;           ///< E -> X
  std::vector<Table> split;  ///< split[k][e] = x * |Y_k| + y
  /// twist[k][x * |Y_k| + y] = Y-component of d_k of the preimage of (x, y)
  std::vector<Table> twist;
};
/// Presentation with the twist read off the top faces of the total space.
TwistedProductPresentation make_presentation(SSetPtr total, SSetPtr base, SSetPtr fibre,
                                             std::vector<Table> projection,
                                             std::vector<Table> split);
/// Empty on success.
std::string check_presentation(const TwistedProductPresentation& p);
/// Pullback along a map into the base, with the induced presentation.
TwistedProductPresentation pull_back_presentation(const TwistedProductPresentation& p,
                                                  const SMap& g, const Budget& budget = {});

/// W G -> W̄G with fibre G.
TwistedProductPresentation universal_bundle(const SimplicialGroup& g, int D,
                                            const Budget& budget = {});

// ---------------------------------------------------------------------------
// Actions

enum class Side { left, right };

struct GroupAction {
  SimplicialGroup group;
  SSetPtr x;
  /// act[k][g * |X_k| + x]
  std::vector<Table> act;
  Side side = Side::left;

  Id apply(int k, Id g, Id x) const { return act[k][g * this->x->size[k] + x]; }
};
/// The action laws and equivariance of faces and degeneracies.  Empty on success.
std::string check_action(const GroupAction& a);

/// Left translation of G on its underlying object.
GroupAction translation_action(const SimplicialGroup& g);
/// Action of a constant group on a point.
GroupAction trivial_action(const SimplicialGroup& g, const SSetPtr& x);

/// (W G x_G X)_n = W̄_n G x X_n, with the projection to W̄G.
struct HomotopyQuotient {
  SSetPtr x;
  WConstruction wbar;
  SMap projection;
  Id encode(int k, Id w, Id x) const { return w * x_size[k] + x; }
  std::vector<Id> x_size;
};
HomotopyQuotient homotopy_quotient(const GroupAction& a, int D, const Budget& budget = {});
/// 1 x_G f for an equivariant f between two actions of the same group.
SMap equivariant_quotient_map(const GroupAction& a, const GroupAction& b, const SMap& f,
                              const HomotopyQuotient& qa, const HomotopyQuotient& qb);

/// The bijection Λ^k_i(W̄G) -> W̄_{k-1}G x Λ^{k-1}_{i'}(G), i' = min(i, k-1).
struct WbarHornIso {
  int k = 0, i = 0;
  RelativeObject horn;    ///< Λ^k_i(W̄G)
  RelativeObject ghorn;   ///< Λ^{k-1}_{i'}(G), empty for k = 1
  Table map;              ///< horn element -> w * |ghorn| + h
};
/// Builds the map and verifies bijectivity and the commuting square with
/// λ^k_i(W̄G) and 1 x λ^{k-1}_{i'}(G).  Throws InvariantError on failure.
WbarHornIso wbar_horn_iso(const SimplicialGroup& g, int k, int i, const Budget& budget = {});

}  // namespace simplex
