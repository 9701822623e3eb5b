/**
 * @file sset.hpp
 * Finite truncated simplicial sets and the maps between them.
 *
 * Simplices are opaque ids, numbered by position within their level.
 * Degenerate simplices are stored like any other simplex.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace simplex {

using Id = std::uint32_t;
using Table = std::vector<Id>;

/// Raised when a level would exceed the configured cardinality bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed input or unmet preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a property that a theorem guarantees fails to hold.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t per_level = 1'000'000;
};

void check_budget(std::size_t count, const Budget& budget, const std::string& what);

struct VecHash {
  std::size_t operator()(const std::vector<Id>& v) const noexcept;
};

template <class V>
using TupleMap = std::unordered_map<std::vector<Id>, V, VecHash>;

/// A simplicial set known on levels 0..trunc.
struct SSet {
  int trunc = 0;
  /// If set to d, every level above d is the set of compatible boundary tuples.
  std::optional<int> cosk;
  std::vector<Id> size;
  /// d[k][i] maps level k to level k-1 (k >= 1, 0 <= i <= k).
  std::vector<std::vector<Table>> d;
  /// s[k][i] maps level k to level k+1 (k < trunc, 0 <= i <= k).
  std::vector<std::vector<Table>> s;

  Id face(int k, int i, Id x) const { return d[k][i][x]; }
  Id degen(int k, int i, Id x) const { return s[k][i][x]; }

  /// Allocates tables for the given level sizes; entries are zero.
  static SSet with_sizes(const std::vector<Id>& sizes);
};

using SSetPtr = std::shared_ptr<const SSet>;

inline SSetPtr share(SSet x) { return std::make_shared<const SSet>(std::move(x)); }

struct SMap {
  SSetPtr src;
  SSetPtr dst;
  /// f[k] maps level k of src to level k of dst, for k <= src->trunc.
  std::vector<Table> f;

  Id operator()(int k, Id x) const { return f[k][x]; }
};

// ---------------------------------------------------------------------------
// Validation

/// Lists violated identities; empty means valid.  At most `limit` entries.
std::vector<std::string> validate(const SSet& x, std::size_t limit = 20);

/// Checks that components commute with every stored face and degeneracy.
std::vector<std::string> validate_map(const SMap& m, std::size_t limit = 20);

/// True iff level k is in bijection with its compatible boundary tuples.
bool level_is_coskeletal(const SSet& x, int k, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Elementary objects

SSet constant(Id n, int trunc);
inline SSet terminal(int trunc) { return constant(1, trunc); }
SSet truncate(const SSet& x, int trunc);
SMap identity(const SSetPtr& x);
SMap to_terminal(const SSetPtr& x);
SMap compose(const SMap& g, const SMap& f);  ///< g after f
bool same_tables(const SSet& a, const SSet& b);

// ---------------------------------------------------------------------------
// Vertex-level helpers

/// Face of x in X_k spanned by the vertices in `mask` (a subset of [k]).
Id restrict_to(const SSet& x, int k, Id simplex, unsigned mask);

/// theta^* of a simplex z in X_r, where theta: [m] -> [r] is nondecreasing.
Id apply_monotone(const SSet& x, int r, Id z, const std::vector<int>& theta);

/// Boundary tuple (d_0 x, ..., d_k x).
std::vector<Id> boundary(const SSet& x, int k, Id simplex);

/// Index from boundary tuples of level k to the simplices with that boundary.
class BoundaryIndex {
 public:
  BoundaryIndex(const SSet& x, int k);
  const std::vector<Id>* find(const std::vector<Id>& faces) const;

 private:
  TupleMap<std::vector<Id>> map_;
};

/// Degeneracy structure: for each degenerate simplex, one (j, y) with s_j y = x.
struct Degeneracies {
  std::vector<std::vector<int>> via;  ///< via[k][x] = j, or -1 if nondegenerate
  std::vector<std::vector<Id>> from;  ///< from[k][x] = y
};
Degeneracies degeneracies(const SSet& x);

// ---------------------------------------------------------------------------
// Limits

/// Extension of a truncated object by relative coskeletal levels.
struct Extension {
  SSet x;
  std::vector<Table> f;  ///< components of the map to the base (empty if absolute)
};

/**
 * Adds levels x.trunc+1 .. top.  Level k consists of pairs (compatible
 * boundary tuple in level k-1, simplex of `base` at level k over it).  With
 * base == nullptr the base is the point.
 */
Extension csk_extend(const SSet& x, const std::vector<Table>* f, const SSet* base,
                     int top, const Budget& budget = {});

/// csk_n tr_n x, truncated at `top`.
SSet coskeleton(const SSet& x, int n, int top, const Budget& budget = {});

struct Pullback {
  SSet obj;
  std::vector<Table> pr1, pr2;
};

/// X x_Z Y for f: X -> Z and g: Y -> Z.  Truncation is the minimum of the inputs.
Pullback pullback(const SSet& x, const std::vector<Table>& f, const SSet& y,
                  const std::vector<Table>& g, const SSet& z, const Budget& budget = {});
Pullback pullback(const SMap& f, const SMap& g, const Budget& budget = {});
Pullback product(const SSet& x, const SSet& y, const Budget& budget = {});

struct Quotient {
  Id classes = 0;
  Table cls;  ///< class of each vertex, numbered by first occurrence
};

/// Coequalizer of d_0, d_1 : X_1 -> X_0.
Quotient pi0(const SSet& x);

}  // namespace simplex
