// Joins, the cotensor X^{S⋆}, Dec, and expansion certificates.
#pragma once

#include <optional>
#include <vector>

#include "simplex/kan.hpp"
#include "simplex/shape.hpp"
#include "simplex/sset.hpp"

namespace simplex {

/// S ⋆ T of truncated objects; level k is S_k ⊔ T_k ⊔ ⊔_{p+q=k-1} S_p x T_q.
/// Truncated at the smaller of the two degrees.
SSet join(const SSet& s, const SSet& t);

/// A simplicial set with a map from level 0 to a set of "(-1)-simplices".
struct AugmentedSSet {
  SSet x;
  Id minus_one = 1;
  Table aug;
  bool valid() const;  ///< aug coequalizes d_0 and d_1
};

/// The object X^{S⋆}: level k is hom(S ⋆ Δ^k, X).
struct Cotensor {
  SSet x;
  Shape shape;
  /// levels[k] is S ⋆ Δ^k; elems[k][e] lists the images of its faces.
  std::vector<Shape> levels;
  std::vector<std::vector<std::vector<Id>>> elems;
  /// Image of the whole simplex Δ^{dim S + k + 1} for an element of level k.
  Id top(int k, Id e) const;
};

Cotensor cotensor_join(const SSet& x, const Shape& s, int trunc, const Budget& budget = {});
/// Dec_n X = X^{Δ^{n-1}⋆}.
Cotensor dec(const SSet& x, int n, int trunc, const Budget& budget = {});
/// Restriction X^{S⋆} -> X^{S'⋆} for a subshape S' of S (same ambient simplex).
std::vector<Table> restrict_cotensor(const Cotensor& from, const Cotensor& to);
/// f^{S⋆}: X^{S⋆} -> Y^{S⋆}.
std::vector<Table> push_cotensor(const SMap& f, const Cotensor& from, const Cotensor& to);

/// The map f^{∂Δ^{k-1}⋆}: X^{Δ^{k-1}⋆} -> X^{∂Δ^{k-1}⋆} x_{Y^{∂Δ^{k-1}⋆}} Y^{Δ^{k-1}⋆}.
struct BoundaryJoinMap {
  Cotensor A, B, C, E;
  Pullback P;
  SMap map;  ///< A -> P.obj
};
BoundaryJoinMap boundary_join_map(const SMap& f, int k, int trunc, const Budget& budget = {});

/// Checks that Λ^ℓ_i(f^{∂Δ^{k-1}⋆}) -> Λ^{k+ℓ}_{k+i}(f) is a bijection, elementwise.
/// Returns an empty string on success.
std::string check_star_lemma(const SMap& f, int k, int l, int i, const Budget& budget = {});

struct ExpansionStep {
  int n = 0;                  ///< dimension of the attached simplex
  int i = 0;                  ///< horn index inside it
  std::vector<int> attach;    ///< vertices of the attached simplex
};
using ExpansionCertificate = std::vector<ExpansionStep>;

/// Depth-first search for a sequence of horn fillings turning s into t.
std::optional<ExpansionCertificate> find_expansion(const Shape& s, const Shape& t);
/// Certificate from the smallest vertex.
std::optional<ExpansionCertificate> is_collapsible(const Shape& t);
/// Replays a certificate; throws InputError if a step is not a horn filling.
Shape replay_expansion(const Shape& s, const ExpansionCertificate& cert);

}  // namespace simplex
