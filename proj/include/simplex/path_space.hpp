// Relative higher morphism spaces P^{≥k}(f) and their augmentation.
#pragma once

#include <string>

#include "simplex/join.hpp"
#include "simplex/kan.hpp"

namespace simplex {

/// Level l is the set of (k+l)-simplices x of X with f(x) = θ^*f(x|[k]) and
/// d_i x = θ'^* d_i(x|[k]) for i < k, where θ and θ' collapse everything above
/// k (resp. k-1).  Faces and degeneracies are d_{k+j}, s_{k+j}.
struct PathSpace {
  SMap f;
  int k = 0;
  SSetPtr carrier;
  std::vector<Table> embed;  ///< embed[l][p] is a simplex of X_{k+l}
};

PathSpace path_space(const SMap& f, int k, int trunc, const Budget& budget = {});

/// π: P^{≥k}(f) -> M_k(f), with M_k(f) viewed as a constant object.
struct Augmentation {
  SMap pi;
  AugmentedSSet augmented;
};
Augmentation augment_to_matching(const PathSpace& p, const Budget& budget = {});

/// Compares the subset model with the pullback of X^{Δ^{k-1}⋆} along the
/// constant map from Λ^k_k(f), elementwise and including faces.  Empty
/// string on agreement.
std::string check_path_space_models(const SMap& f, int k, int trunc, const Budget& budget = {});

}  // namespace simplex
