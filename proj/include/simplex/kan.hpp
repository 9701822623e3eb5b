// hom(S, X), relative horn and matching objects, and the horn-filling
// classification of maps.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplex/shape.hpp"
#include "simplex/sset.hpp"

namespace simplex {

/// n in N ∪ {∞}; std::nullopt stands for ∞.
using Degree = std::optional<int>;
inline constexpr Degree kInfinity = std::nullopt;
inline bool exceeds(int k, Degree n) { return n.has_value() && k > *n; }
inline bool at_least(int k, Degree n) { return n.has_value() && k >= *n; }
std::string degree_name(Degree n);

/// All maps from a subcomplex of Δ^n into x.  maps[e][j] is the image of
/// shape.faces[j], a simplex of dimension popcount(face) - 1.
struct HomSet {
  Shape shape;
  std::vector<std::vector<Id>> maps;
};

HomSet hom(const Shape& s, const SSet& x, const Budget& budget = {});

/// All simplicial maps between two truncated objects (source levels <= target's).
std::vector<SMap> hom_sset(const SSetPtr& s, const SSetPtr& x, std::size_t limit = 1'000'000);

/// hom(S, X) x_{hom(S, Y)} Y_k for a subcomplex S of Δ^k, with the comparison
/// map from X_k.
struct RelativeObject {
  Shape shape;
  int k = 0;
  std::vector<std::vector<Id>> lifts;  ///< h for each carrier element
  Table base;                          ///< y for each carrier element
  Table compare;                       ///< X_k -> carrier
  std::size_t size() const { return base.size(); }
  /// Carrier element with the given data, or -1.
  long find(const std::vector<Id>& h, Id y) const;

 private:
  friend RelativeObject relative_object(const SMap&, const Shape&, int, const Budget&);
  TupleMap<Id> index_;
};

RelativeObject relative_object(const SMap& f, const Shape& s, int k, const Budget& budget = {});
RelativeObject horn_object(const SMap& f, int k, int i, const Budget& budget = {});
RelativeObject match_object(const SMap& f, int k, const Budget& budget = {});

enum class Kind { groupoid, stack, hypercover };
enum class Outcome { pass, fail, inconclusive };
std::string kind_name(Kind k);
std::string outcome_name(Outcome o);

struct Witness {
  int k = -1;
  int i = -1;  ///< horn index, -1 for matching objects
  long element = -1;
  std::string reason;
};

struct Verdict {
  Outcome outcome = Outcome::pass;
  Witness witness;
  std::string note;
  bool passed() const { return outcome == Outcome::pass; }
};

/// Checks the horn (groupoid, stack) or matching (hypercover) conditions on
/// all stored levels.  Levels beyond storage are covered by the coskeletal
/// flags when possible; otherwise a clean pass is reported as inconclusive.
Verdict classify(const SMap& f, Degree n, Kind kind, const Budget& budget = {});
Verdict classify_object(const SSetPtr& x, Degree n, const Budget& budget = {});

/// Checks that λ^k_i(f) factors through μ_k(f) elementwise and that
/// M_k(f) -> Λ^k_i(f) x_{M_{k-1}(f)} X_{k-1} is a bijection.  Returns an
/// empty string on success.
std::string check_mu_lambda(const SMap& f, int k, int i, const Budget& budget = {});

/// g after f, re-classified.  Throws InvariantError if both inputs pass
/// and the composite does not.
struct StabilityReport {
  SMap result;
  Verdict first, second, conclusion;
};
StabilityReport compose_check(const SMap& f, const SMap& g, Degree n, Kind kind,
                              const Budget& budget = {});
/// Pullback of f: X -> Z along g: Y -> Z, as a map to Y, re-classified.
StabilityReport pullback_check(const SMap& f, const SMap& g, Degree n, Kind kind,
                               const Budget& budget = {});
/// A hypercover is a stack; a hypercover which is an n-stack is an
/// n-hypercover.  Throws InvariantError on violation.
void hypercover_stack_check(const SMap& f, Degree n, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Map search

enum class SearchStatus { found, none, inconclusive };

struct MapSearch {
  SearchStatus status = SearchStatus::none;
  std::vector<SMap> maps;
  std::size_t nodes = 0;
};

struct SearchOptions {
  bool injective = false;
  std::size_t max_results = 1;
  std::size_t node_budget = 5'000'000;
  /// Optional maps of both sides to a common base that must be respected.
  const std::vector<Table>* base_a = nullptr;
  const std::vector<Table>* base_b = nullptr;
};

/// Backtracking over nondegenerate simplices of a, level by level.
MapSearch find_maps(const SSetPtr& a, const SSetPtr& b, const SearchOptions& opt);
/// Isomorphism search, optionally over a base.
MapSearch find_iso(const SSetPtr& a, const SSetPtr& b, const std::vector<Table>* base_a = nullptr,
                   const std::vector<Table>* base_b = nullptr, std::size_t node_budget = 5'000'000);

}  // namespace simplex
