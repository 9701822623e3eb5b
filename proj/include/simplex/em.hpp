// Eilenberg-MacLane objects, group cocycles as spans, twisted universal
// bundles, descent of local 2-bundles and the resulting 2-group data.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplex/simp_group.hpp"
#include "simplex/strictify.hpp"

namespace simplex {

/// K(A,n)_k: normalized A-valued n-cocycles on Δ^k.  A cocycle is coded by
/// its values on the (n+1)-subsets of [k] that contain 0.
struct EMSpace {
  FinGroup A;
  int n = 0;
  SimplicialGroup group;
  std::vector<std::vector<unsigned>> subsets;  ///< (n+1)-subsets of [k], ascending masks
  std::vector<std::vector<int>> slot;          ///< slot[k][mask] = position in subsets[k], or -1
  std::vector<std::vector<std::size_t>> free;  ///< positions of the subsets containing 0
  std::vector<Radix> radix;

  /// Value on every (n+1)-subset.
  std::vector<Id> values(int k, Id c) const;
  /// Code from values on every subset (only the free ones are read).
  Id encode(int k, const std::vector<Id>& values) const;
  /// Value of the cocycle on the subset `mask`.
  Id value(int k, Id c, unsigned mask) const;
};

EMSpace em_space(const FinGroup& A, int n, int D, const Budget& budget = {});

/// Brute-force oracle: every normalized cochain on Δ^k checked for δc = 0.
std::size_t count_cocycles_brute(const FinGroup& A, int n, int k);

/// W̄K(A,n) -> K(A,n+1) on levels 0..D.
struct EMIso {
  SimplicialGroup wbar;
  EMSpace target;
  SMap map;
};
/// Constructs the map, then verifies it is a simplicial map, bijective and
/// additive on every level.  Throws InvariantError otherwise.
EMIso wbar_em_iso(const FinGroup& A, int n, int D, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Group cocycles

/// c: G^n -> A, indexed by the Radix of n copies of |G|.
struct GroupCocycle {
  FinGroup G, A;
  int n = 0;
  std::vector<Id> values;

  Id operator()(const std::vector<Id>& g) const;
  static GroupCocycle zero(const FinGroup& G, const FinGroup& A, int n);
};

/// c(a,b,c) = abc in Z/2.
GroupCocycle triple_product_z2();
/// c(a,b,c) = (a mod 2)(b + c >= 4) on Z/4 with values in Z/2.
GroupCocycle carry_cocycle_z4();

/// Normalization and δc = 0 with the trivial action.  Empty on success,
/// otherwise names the first violating tuple.
std::string check_group_cocycle(const GroupCocycle& c);
/// δb for a normalized (n-1)-cochain b.
GroupCocycle coboundary(const GroupCocycle& b);
/// A normalized b with c2 - c1 = δb, by exhaustive search, or nothing.
std::optional<GroupCocycle> cohomologous(const GroupCocycle& c1, const GroupCocycle& c2,
                                         std::size_t max_cochains = 1u << 22);

/// A cocycle on W̄G: a hypercover f: U -> W̄G and φ: U -> K(A,n).
struct CocycleSpan {
  FinGroup G, A;
  int n = 0;
  SMap f;
  SMap phi;
  std::shared_ptr<const EMSpace> K;
};

/// W̄G for a finite group G, levels 0..D.
WConstruction wbar_of(const FinGroup& G, int D, const Budget& budget = {});
/// The span (W̄G, id, c) on levels 0..D.  Throws InputError if c is not a
/// normalized cocycle.
CocycleSpan group_cocycle_as_span(const GroupCocycle& c, int D, const Budget& budget = {});
/// (U', f g, φ g) for a hypercover g: U' -> U.
CocycleSpan refine_span(const CocycleSpan& s, const SMap& g);
/// U'_0 = *, U'_1 = G x {0,1}, relatively coskeletal above over W̄G.
SMap doubled_edge_cover(const FinGroup& G, const SSetPtr& wbar, const Budget& budget = {});

struct CocycleEquivalence {
  Outcome outcome = Outcome::inconclusive;  ///< pass = equivalent
  std::string reason;
  SSetPtr V;
  SMap v0, v1;
};
/// Searches for V with hypercovers to both sources over W̄G and K(A,n).
/// Every such V factors through the equalizer of φ0 and φ1 on U0 x_{W̄G} U1;
/// if a projection of it misses a simplex there is no V.
CocycleEquivalence equivalence_of_cocycles(const CocycleSpan& s0, const CocycleSpan& s1,
                                           const Budget& budget = {});

struct StrictCocycle {
  Strictification st;
  CocycleSpan span;          ///< on τ_n(U, f)
  bool certified = false;    ///< U -> τ_n(U,f) is a hypercover and φ factors through it
};
StrictCocycle strictify_cocycle(const CocycleSpan& s, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Bundles and descent

/// Homotopy quotient of W K(A,n-1) -> K(A,n) by an action of G on A.
struct TwistedUniversal {
  HomotopyQuotient total, base;
  TwistedProductPresentation bundle;
  EMSpace fibre, em;
};
/// act[g][a]; must be an action by automorphisms.
TwistedUniversal twisted_universal_bundle(const FinGroup& G, const FinGroup& A,
                                          const std::vector<Table>& act, int n, int D,
                                          const Budget& budget = {});

/// The universal K(A,n-1)-bundle as a presentation over K(A,n).
TwistedProductPresentation universal_em_bundle(const FinGroup& A, int n, int D,
                                               const Budget& budget = {});

struct Descent {
  CocycleSpan span;
  TwistedProductPresentation bundle;  ///< E = φ^* W K(A,2) -> U
  SMap fp;                            ///< E -> W̄G
  Strictification x;                  ///< X = τ_2(E, fp)
  Verdict groupoid;                   ///< X -> * as a 2-groupoid
};
/// Needs a 3-cocycle span with f a 3-hypercover, stored to level D >= 4.
Descent descend(const CocycleSpan& s, const Budget& budget = {});

struct TwoGroupData {
  Table cover;                       ///< f_1: X_1 -> G
  SMap base;                         ///< B = csk_1 X x_{Csk_1 W̄G} W̄G -> W̄G
  SMap unit;                         ///< X -> B
  std::vector<std::vector<Id>> fibres;  ///< P: fibres of X_2 -> B_2
  std::vector<Table> action;         ///< action[a] on X_2
  Table section, offset;             ///< chosen point of each fibre; x = offset(x) . section
  Table zeta;                        ///< B_3 -> A; equals -c under the section chosen here
  bool torsor = false;
  bool pentagon = false;
  std::string failure;
};
/// Throws InvariantError if the torsor or pentagon check fails.
TwoGroupData extract_two_group_data(const Descent& d, const Budget& budget = {});

/// The induced map τ_n(a) -> τ_n(b) from g: a.src -> b.src over a common target.
SMap strictification_map(const Strictification& a, const Strictification& b, const SMap& g);

}  // namespace simplex
