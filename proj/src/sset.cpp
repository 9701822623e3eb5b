#include "simplex/sset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace simplex {

void check_budget(std::size_t count, const Budget& budget, const std::string& what) {
  if (count > budget.per_level) {
    std::ostringstream os;
    os << what << ": level has more than " << budget.per_level << " simplices";
    throw ResourceError(os.str());
  }
}

std::size_t VecHash::operator()(const std::vector<Id>& v) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Id x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

SSet SSet::with_sizes(const std::vector<Id>& sizes) {
  SSet x;
  x.trunc = static_cast<int>(sizes.size()) - 1;
  x.size = sizes;
  x.d.resize(sizes.size());
  x.s.resize(sizes.size() > 0 ? sizes.size() - 1 : 0);
  for (int k = 1; k <= x.trunc; ++k) x.d[k].assign(k + 1, Table(sizes[k], 0));
  for (int k = 0; k < x.trunc; ++k) x.s[k].assign(k + 1, Table(sizes[k], 0));
  return x;
}

// ---------------------------------------------------------------------------

namespace {

std::string where(const char* what, int k, int i, int j, Id x) {
  std::ostringstream os;
  os << what << " at level " << k << " (i=" << i << ", j=" << j << ", x=" << x << ")";
  return os.str();
}

/// Calls `emit` for every compatible boundary tuple of level k built from
/// level k-1 of x.  If f/base are given, the tuple must lie over `y`.
class TupleEnumerator {
 public:
  TupleEnumerator(const SSet& x, int k, const std::vector<Table>* f)
      : x_(x), k_(k), f_(f) {
    const Id n = x.size[k - 1];
    for (Id t = 0; t < n; ++t) {
      by_f_[key(fval(t), 0, false)].push_back(t);
      if (k >= 2) by_f_d0_[key(fval(t), x.d[k - 1][0][t], true)].push_back(t);
    }
  }

  /// faces_of_y[j] is the required f-image of t_j (ignored when absolute).
  template <class Emit>
  void run(const std::vector<Id>& faces_of_y, Emit&& emit) {
    tuple_.assign(k_ + 1, 0);
    target_ = &faces_of_y;
    step(0, emit);
  }

 private:
  Id fval(Id t) const { return f_ ? (*f_)[k_ - 1][t] : 0; }
  static std::uint64_t key(Id fv, Id d0, bool with_d0) {
    return (static_cast<std::uint64_t>(fv) << 33) | (static_cast<std::uint64_t>(d0) << 1) |
           (with_d0 ? 1u : 0u);
  }

  template <class Emit>
  void step(int j, Emit& emit) {
    if (j > k_) {
      emit(tuple_);
      return;
    }
    const Id want = f_ ? (*target_)[j] : 0;
    const std::vector<Id>* cands;
    if (j == 0 || k_ == 1) {
      auto it = by_f_.find(key(want, 0, false));
      if (it == by_f_.end()) return;
      cands = &it->second;
    } else {
      // d_0 t_j = d_{j-1} t_0
      Id need = x_.d[k_ - 1][j - 1][tuple_[0]];
      auto it = by_f_d0_.find(key(want, need, true));
      if (it == by_f_d0_.end()) return;
      cands = &it->second;
    }
    for (Id t : *cands) {
      bool ok = true;
      if (k_ >= 2) {
        for (int i = 1; i < j && ok; ++i)
          ok = x_.d[k_ - 1][i][t] == x_.d[k_ - 1][j - 1][tuple_[i]];
      }
      if (!ok) continue;
      tuple_[j] = t;
      step(j + 1, emit);
    }
  }

  const SSet& x_;
  int k_;
  const std::vector<Table>* f_;
  std::unordered_map<std::uint64_t, std::vector<Id>> by_f_, by_f_d0_;
  std::vector<Id> tuple_;
  const std::vector<Id>* target_ = nullptr;
};

}  // namespace

bool level_is_coskeletal(const SSet& x, int k, const Budget& budget) {
  if (k < 1 || k > x.trunc) return true;
  std::unordered_set<std::vector<Id>, VecHash> seen;
  for (Id e = 0; e < x.size[k]; ++e)
    if (!seen.insert(boundary(x, k, e)).second) return false;
  std::size_t count = 0;
  TupleEnumerator en(x, k, nullptr);
  std::vector<Id> none;
  en.run(none, [&](const std::vector<Id>&) {
    ++count;
    check_budget(count, budget, "coskeletal check");
  });
  return count == x.size[k];
}

std::vector<std::string> validate(const SSet& x, std::size_t limit) {
  std::vector<std::string> out;
  auto report = [&](std::string msg) {
    if (out.size() < limit) out.push_back(std::move(msg));
  };
  const int D = x.trunc;
  if (D < 0 || static_cast<int>(x.size.size()) != D + 1 || static_cast<int>(x.d.size()) < D + 1 ||
      static_cast<int>(x.s.size()) < D) {
    report("table layout does not match truncation degree");
    return out;
  }
  for (int k = 1; k <= D; ++k) {
    if (static_cast<int>(x.d[k].size()) != k + 1) {
      report(where("wrong number of face maps", k, -1, -1, 0));
      return out;
    }
    for (int i = 0; i <= k; ++i) {
      if (x.d[k][i].size() != x.size[k]) {
        report(where("face table has wrong length", k, i, -1, 0));
        return out;
      }
      for (Id e = 0; e < x.size[k]; ++e)
        if (x.d[k][i][e] >= x.size[k - 1]) {
          report(where("face out of range", k, i, -1, e));
          return out;
        }
    }
  }
  for (int k = 0; k < D; ++k) {
    if (static_cast<int>(x.s[k].size()) != k + 1) {
      report(where("wrong number of degeneracy maps", k, -1, -1, 0));
      return out;
    }
    for (int i = 0; i <= k; ++i) {
      if (x.s[k][i].size() != x.size[k]) {
        report(where("degeneracy table has wrong length", k, i, -1, 0));
        return out;
      }
      for (Id e = 0; e < x.size[k]; ++e)
        if (x.s[k][i][e] >= x.size[k + 1]) {
          report(where("degeneracy out of range", k, i, -1, e));
          return out;
        }
    }
  }
  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= D; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i)
        for (Id e = 0; e < x.size[k]; ++e)
          if (x.d[k - 1][i][x.d[k][j][e]] != x.d[k - 1][j - 1][x.d[k][i][e]])
            report(where("d_i d_j != d_{j-1} d_i", k, i, j, e));
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int k = 0; k + 2 <= D; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        for (Id e = 0; e < x.size[k]; ++e)
          if (x.s[k + 1][i][x.s[k][j][e]] != x.s[k + 1][j + 1][x.s[k][i][e]])
            report(where("s_i s_j != s_{j+1} s_i", k, i, j, e));
  // mixed identities
  for (int k = 0; k < D; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= k + 1; ++i)
        for (Id e = 0; e < x.size[k]; ++e) {
          Id lhs = x.d[k + 1][i][x.s[k][j][e]];
          Id rhs;
          if (i < j) {
            rhs = x.s[k - 1][j - 1][x.d[k][i][e]];
          } else if (i == j || i == j + 1) {
            rhs = e;
          } else {
            rhs = x.s[k - 1][j][x.d[k][i - 1][e]];
          }
          if (lhs != rhs) report(where("d_i s_j identity fails", k, i, j, e));
        }
  if (x.cosk) {
    for (int k = *x.cosk + 1; k <= D; ++k)
      if (!level_is_coskeletal(x, k)) report(where("level is not coskeletal", k, -1, -1, 0));
  }
  return out;
}

std::vector<std::string> validate_map(const SMap& m, std::size_t limit) {
  std::vector<std::string> out;
  auto report = [&](std::string msg) {
    if (out.size() < limit) out.push_back(std::move(msg));
  };
  const SSet& a = *m.src;
  const SSet& b = *m.dst;
  if (a.trunc > b.trunc || static_cast<int>(m.f.size()) != a.trunc + 1) {
    report("map has wrong number of components");
    return out;
  }
  for (int k = 0; k <= a.trunc; ++k) {
    if (m.f[k].size() != a.size[k]) {
      report(where("component has wrong length", k, -1, -1, 0));
      return out;
    }
    for (Id e = 0; e < a.size[k]; ++e)
      if (m.f[k][e] >= b.size[k]) {
        report(where("component out of range", k, -1, -1, e));
        return out;
      }
  }
  for (int k = 1; k <= a.trunc; ++k)
    for (int i = 0; i <= k; ++i)
      for (Id e = 0; e < a.size[k]; ++e)
        if (m.f[k - 1][a.d[k][i][e]] != b.d[k][i][m.f[k][e]])
          report(where("map does not commute with face", k, i, -1, e));
  for (int k = 0; k < a.trunc; ++k)
    for (int i = 0; i <= k; ++i)
      for (Id e = 0; e < a.size[k]; ++e)
        if (m.f[k + 1][a.s[k][i][e]] != b.s[k][i][m.f[k][e]])
          report(where("map does not commute with degeneracy", k, i, -1, e));
  return out;
}

// ---------------------------------------------------------------------------

SSet constant(Id n, int trunc) {
  SSet x = SSet::with_sizes(std::vector<Id>(trunc + 1, n));
  for (int k = 1; k <= trunc; ++k)
    for (auto& t : x.d[k]) std::iota(t.begin(), t.end(), 0);
  for (int k = 0; k < trunc; ++k)
    for (auto& t : x.s[k]) std::iota(t.begin(), t.end(), 0);
  x.cosk = 1;
  if (n <= 1) x.cosk = 0;
  return x;
}

SSet truncate(const SSet& x, int trunc) {
  if (trunc > x.trunc) throw InputError("cannot truncate above the stored degree");
  SSet y;
  y.trunc = trunc;
  y.size.assign(x.size.begin(), x.size.begin() + trunc + 1);
  y.d.assign(x.d.begin(), x.d.begin() + trunc + 1);
  y.s.assign(x.s.begin(), x.s.begin() + trunc);
  if (x.cosk && *x.cosk < trunc) y.cosk = x.cosk;
  return y;
}

SMap identity(const SSetPtr& x) {
  SMap m{x, x, {}};
  for (int k = 0; k <= x->trunc; ++k) {
    Table t(x->size[k]);
    std::iota(t.begin(), t.end(), 0);
    m.f.push_back(std::move(t));
  }
  return m;
}

SMap to_terminal(const SSetPtr& x) {
  SMap m{x, share(terminal(x->trunc)), {}};
  for (int k = 0; k <= x->trunc; ++k) m.f.emplace_back(x->size[k], 0);
  return m;
}

SMap compose(const SMap& g, const SMap& f) {
  SMap m{f.src, g.dst, {}};
  for (int k = 0; k <= f.src->trunc; ++k) {
    Table t(f.f[k].size());
    for (std::size_t e = 0; e < t.size(); ++e) t[e] = g.f[k][f.f[k][e]];
    m.f.push_back(std::move(t));
  }
  return m;
}

bool same_tables(const SSet& a, const SSet& b) {
  return a.trunc == b.trunc && a.size == b.size && a.d == b.d && a.s == b.s;
}

Id restrict_to(const SSet& x, int k, Id simplex, unsigned mask) {
  int level = k;
  for (int v = k; v >= 0; --v) {
    if (!((mask >> v) & 1u)) {
      simplex = x.d[level][v][simplex];
      --level;
    }
  }
  return simplex;
}

Id apply_monotone(const SSet& x, int r, Id z, const std::vector<int>& theta) {
  unsigned mask = 0;
  for (int v : theta) mask |= 1u << v;
  Id cur = restrict_to(x, r, z, mask);
  int level = std::popcount(mask) - 1;
  for (std::size_t j = 0; j + 1 < theta.size(); ++j) {
    if (theta[j] == theta[j + 1]) {
      cur = x.s[level][j][cur];
      ++level;
    }
  }
  return cur;
}

std::vector<Id> boundary(const SSet& x, int k, Id simplex) {
  std::vector<Id> b(k + 1);
  for (int i = 0; i <= k; ++i) b[i] = x.d[k][i][simplex];
  return b;
}

BoundaryIndex::BoundaryIndex(const SSet& x, int k) {
  for (Id e = 0; e < x.size[k]; ++e) map_[boundary(x, k, e)].push_back(e);
}

const std::vector<Id>* BoundaryIndex::find(const std::vector<Id>& faces) const {
  auto it = map_.find(faces);
  return it == map_.end() ? nullptr : &it->second;
}

Degeneracies degeneracies(const SSet& x) {
  Degeneracies out;
  out.via.resize(x.trunc + 1);
  out.from.resize(x.trunc + 1);
  for (int k = 0; k <= x.trunc; ++k) {
    out.via[k].assign(x.size[k], -1);
    out.from[k].assign(x.size[k], 0);
  }
  for (int k = 1; k <= x.trunc; ++k)
    for (int j = 0; j < k; ++j)
      for (Id y = 0; y < x.size[k - 1]; ++y) {
        Id e = x.s[k - 1][j][y];
        if (out.via[k][e] < 0) {
          out.via[k][e] = j;
          out.from[k][e] = y;
        }
      }
  return out;
}

// ---------------------------------------------------------------------------

Extension csk_extend(const SSet& x, const std::vector<Table>* f, const SSet* base, int top,
                     const Budget& budget) {
  if ((f == nullptr) != (base == nullptr)) throw InputError("csk_extend: map and base go together");
  if (base && base->trunc < top) throw InputError("csk_extend: base is truncated too low");
  Extension out;
  out.x = x;
  if (f) out.f = std::vector<Table>(f->begin(), f->begin() + x.trunc + 1);
  SSet& c = out.x;
  const int start = x.trunc;
  for (int k = start + 1; k <= top; ++k) {
    TupleMap<Id> index;
    std::vector<std::vector<Id>> elems;  // tuple followed by base simplex
    TupleEnumerator en(c, k, f ? &out.f : nullptr);
    const Id ny = base ? base->size[k] : 1;
    std::vector<Id> want(k + 1, 0);
    for (Id y = 0; y < ny; ++y) {
      if (base)
        for (int j = 0; j <= k; ++j) want[j] = base->d[k][j][y];
      en.run(want, [&](const std::vector<Id>& t) {
        std::vector<Id> key = t;
        key.push_back(y);
        index.emplace(key, static_cast<Id>(elems.size()));
        elems.push_back(std::move(key));
        check_budget(elems.size(), budget, "coskeletal extension");
      });
    }
    const Id n = static_cast<Id>(elems.size());
    c.size.push_back(n);
    c.d.emplace_back(k + 1, Table(n));
    for (Id e = 0; e < n; ++e)
      for (int j = 0; j <= k; ++j) c.d[k][j][e] = elems[e][j];
    if (f) {
      Table fk(n);
      for (Id e = 0; e < n; ++e) fk[e] = elems[e][k + 1];
      out.f.push_back(std::move(fk));
    }
    // degeneracies from level k-1 into the new level
    c.s.emplace_back(k, Table(c.size[k - 1]));
    std::vector<Id> key(k + 2);
    for (int i = 0; i < k; ++i) {
      for (Id z = 0; z < c.size[k - 1]; ++z) {
        for (int j = 0; j <= k; ++j) {
          if (j < i)
            key[j] = c.s[k - 2][i - 1][c.d[k - 1][j][z]];
          else if (j == i || j == i + 1)
            key[j] = z;
          else
            key[j] = c.s[k - 2][i][c.d[k - 1][j - 1][z]];
        }
        key[k + 1] = base ? base->s[k - 1][i][out.f[k - 1][z]] : 0;
        auto it = index.find(key);
        if (it == index.end())
          throw InvariantError("csk_extend: degenerate simplex has no coskeletal image");
        c.s[k - 1][i][z] = it->second;
      }
    }
    c.trunc = k;
  }
  if (top > start) {
    if (base)
      c.cosk = base->cosk ? std::optional<int>(std::max(start, *base->cosk)) : std::nullopt;
    else
      c.cosk = x.cosk ? std::min(*x.cosk, start) : start;
  }
  return out;
}

SSet coskeleton(const SSet& x, int n, int top, const Budget& budget) {
  if (x.trunc < n) throw InputError("coskeleton: input truncated below n");
  SSet t = truncate(x, n);
  t.cosk.reset();
  SSet out = csk_extend(t, nullptr, nullptr, top, budget).x;
  out.cosk = n;
  return out;
}

Pullback pullback(const SSet& x, const std::vector<Table>& f, const SSet& y,
                  const std::vector<Table>& g, const SSet& z, const Budget& budget) {
  const int D = std::min(x.trunc, y.trunc);
  if (z.trunc < D) throw InputError("pullback: base truncated too low");
  Pullback out;
  std::vector<Id> sizes;
  std::vector<std::unordered_map<std::uint64_t, Id>> index(D + 1);
  std::vector<std::vector<std::pair<Id, Id>>> elems(D + 1);
  for (int k = 0; k <= D; ++k) {
    std::vector<std::vector<Id>> fiber(z.size[k]);
    for (Id b = 0; b < y.size[k]; ++b) fiber[g[k][b]].push_back(b);
    for (Id a = 0; a < x.size[k]; ++a)
      for (Id b : fiber[f[k][a]]) {
        index[k].emplace((static_cast<std::uint64_t>(a) << 32) | b,
                         static_cast<Id>(elems[k].size()));
        elems[k].emplace_back(a, b);
      }
    check_budget(elems[k].size(), budget, "pullback");
    sizes.push_back(static_cast<Id>(elems[k].size()));
  }
  SSet& p = out.obj;
  p = SSet::with_sizes(sizes);
  auto look = [&](int k, Id a, Id b) {
    return index[k].at((static_cast<std::uint64_t>(a) << 32) | b);
  };
  for (int k = 0; k <= D; ++k) {
    out.pr1.emplace_back(sizes[k]);
    out.pr2.emplace_back(sizes[k]);
    for (Id e = 0; e < sizes[k]; ++e) {
      auto [a, b] = elems[k][e];
      out.pr1[k][e] = a;
      out.pr2[k][e] = b;
      if (k >= 1)
        for (int i = 0; i <= k; ++i) p.d[k][i][e] = look(k - 1, x.d[k][i][a], y.d[k][i][b]);
      if (k < D)
        for (int i = 0; i <= k; ++i) p.s[k][i][e] = look(k + 1, x.s[k][i][a], y.s[k][i][b]);
    }
  }
  if (x.cosk && y.cosk && z.cosk) p.cosk = std::max({*x.cosk, *y.cosk, *z.cosk});
  return out;
}

Pullback pullback(const SMap& f, const SMap& g, const Budget& budget) {
  return pullback(*f.src, f.f, *g.src, g.f, *f.dst, budget);
}

Pullback product(const SSet& x, const SSet& y, const Budget& budget) {
  const int D = std::min(x.trunc, y.trunc);
  SSet pt = terminal(D);
  std::vector<Table> fx, fy;
  for (int k = 0; k <= D; ++k) {
    fx.emplace_back(x.size[k], 0);
    fy.emplace_back(y.size[k], 0);
  }
  return pullback(x, fx, y, fy, pt, budget);
}

Quotient pi0(const SSet& x) {
  const Id n = x.size[0];
  std::vector<Id> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Id(Id)> find = [&](Id a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  if (x.trunc >= 1)
    for (Id e = 0; e < x.size[1]; ++e) {
      Id a = find(x.d[1][0][e]), b = find(x.d[1][1][e]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  Quotient q;
  q.cls.assign(n, 0);
  std::vector<Id> label(n, static_cast<Id>(-1));
  for (Id v = 0; v < n; ++v) {
    Id r = find(v);
    if (label[r] == static_cast<Id>(-1)) label[r] = q.classes++;
    q.cls[v] = label[r];
  }
  return q;
}

}  // namespace simplex
