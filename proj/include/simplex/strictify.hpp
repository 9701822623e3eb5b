// Duskin's n-strictification τ_n(f) and its checks.
#pragma once

#include <string>

#include "simplex/kan.hpp"
#include "simplex/path_space.hpp"

namespace simplex {

struct Strictification {
  SMap input;
  int n = 0;
  Quotient quotient;  ///< X_n -> π_0 P^{≥n}(f)
  SMap tau;           ///< τ_n(X, f) -> Y
  SMap canonical;     ///< X -> τ_n(X, f)
  /// Level n+1 of τ_n(X, f) as the relative horn object Λ^{n+1}_1.
  RelativeObject top_horn;
};

/// Builds τ_n(f) up to level `top` (at least n+1).  Throws InputError with a
/// witness if f is not a stack on the stored levels, and InvariantError if the
/// missing face map depends on the chosen lift.
Strictification strictify(const SMap& f, int n, int top, const Budget& budget = {});

struct MissingFace {
  RelativeObject horn;  ///< Λ^{n+1}_i(τ_n(f))
  Table value;          ///< missing face of each horn, an n-simplex of τ_n(X, f)
  std::size_t lifts_checked = 0;
};

/// d_i: Λ^{n+1}_i(τ_n(f)) -> τ_n(X, f)_n through any lift to X_{n+1}.  Every
/// lift is compared; disagreement throws InvariantError.
MissingFace missing_face(const Strictification& s, int i, const Budget& budget = {});

/// The section identities (1,d_1) d_1̂ (1,d_i) = (1,d_i), (1,d_i) d_î (1,d_1) = (1,d_1)
/// and d_1̂ (1,d_1) = 1, elementwise.  Empty string on success.
std::string check_inverse_laws(const Strictification& s, int i, const Budget& budget = {});

/// Whether the canonical map X -> τ_n(X, f) is a bijection on every stored level.
bool canonical_is_iso(const Strictification& s);

/// Csk_m X x_{Csk_m Y} Y up to level `top`; m = -1 gives Y.
SMap csk_fibre_product(const SMap& f, int m, int top, const Budget& budget = {});

struct HypercoverReport {
  bool tau_is_hypercover = false;       ///< τ_n(f) is an n-hypercover
  bool canonical_is_hypercover = false; ///< X -> τ_n(X, f) is a hypercover
  bool matches_coskeleton = false;      ///< τ_n(X,f) ≅ Csk_{n-1}X x_{Csk_{n-1}Y} Y over Y
  bool matches_literal = false;         ///< the same with Csk_n in place of Csk_{n-1}
  std::string detail;
  bool ok() const { return tau_is_hypercover && canonical_is_hypercover && matches_coskeleton; }
};

/// For a hypercover f.  Throws InvariantError if any of the three assertions fails.
HypercoverReport strictify_hypercover_check(const SMap& f, int n, int top, const Budget& budget = {});

}  // namespace simplex
