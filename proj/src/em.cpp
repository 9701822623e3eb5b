#include "simplex/em.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace simplex {

namespace {

constexpr Id kUnset = static_cast<Id>(-1);

std::vector<int> bits_of(unsigned mask) {
  std::vector<int> v;
  for (int b = 0; mask; ++b, mask >>= 1)
    if (mask & 1u) v.push_back(b);
  return v;
}

/// Image of a vertex set of [k-1] under the coface δ^i.
unsigned coface_mask(unsigned m, int i) {
  unsigned low = m & ((1u << i) - 1);
  return low | ((m & ~((1u << i) - 1)) << 1);
}

void set_once(Id& slot, Id value, const std::string& what) {
  if (slot == kUnset) {
    slot = value;
  } else if (slot != value) {
    throw InvariantError(what + " is not well defined");
  }
}

/// The simplex of `target` at level k with the given boundary over `base`.
Id lift_by_boundary(const BoundaryIndex& index, const std::vector<Table>& target_base, int k,
                    const std::vector<Id>& faces, Id base, const char* what) {
  const std::vector<Id>* hits = index.find(faces);
  long found = -1;
  if (hits)
    for (Id c : *hits)
      if (target_base.empty() || target_base[k][c] == base) {
        if (found >= 0) throw InvariantError(std::string(what) + ": boundary has two fillers");
        found = c;
      }
  if (found < 0) throw InvariantError(std::string(what) + ": boundary has no filler");
  return static_cast<Id>(found);
}

/// Levelwise subobject; keep must be closed under faces and degeneracies.
struct Sub {
  SSet obj;
  std::vector<Table> embed;
};
Sub subobject(const SSet& x, const std::vector<std::vector<char>>& keep) {
  Sub out;
  std::vector<Table> where(x.trunc + 1);
  std::vector<Id> sizes;
  for (int k = 0; k <= x.trunc; ++k) {
    where[k].assign(x.size[k], kUnset);
    Table e;
    for (Id v = 0; v < x.size[k]; ++v)
      if (keep[k][v]) {
        where[k][v] = static_cast<Id>(e.size());
        e.push_back(v);
      }
    sizes.push_back(static_cast<Id>(e.size()));
    out.embed.push_back(std::move(e));
  }
  out.obj = SSet::with_sizes(sizes);
  for (int k = 0; k <= x.trunc; ++k)
    for (Id c = 0; c < sizes[k]; ++c) {
      Id v = out.embed[k][c];
      for (int i = 0; i <= k && k >= 1; ++i) {
        Id t = where[k - 1][x.d[k][i][v]];
        if (t == kUnset) throw InvariantError("subobject is not closed under faces");
        out.obj.d[k][i][c] = t;
      }
      for (int i = 0; i <= k && k < x.trunc; ++i) {
        Id t = where[k + 1][x.s[k][i][v]];
        if (t == kUnset) throw InvariantError("subobject is not closed under degeneracies");
        out.obj.s[k][i][c] = t;
      }
    }
  if (x.cosk) {
    bool ok = true;
    for (int k = *x.cosk + 1; k <= x.trunc && ok; ++k) ok = level_is_coskeletal(out.obj, k);
    if (ok) out.obj.cosk = x.cosk;
  }
  return out;
}

Id add(const FinGroup& A, Id a, Id b) { return A.mul[a][b]; }
Id sub(const FinGroup& A, Id a, Id b) { return A.mul[a][A.inv[b]]; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Id> EMSpace::values(int k, Id c) const {
  const auto digits = radix[k].decode(c);
  std::vector<Id> v(subsets[k].size(), A.e);
  for (std::size_t j = 0; j < free[k].size(); ++j) v[free[k][j]] = digits[j];
  for (std::size_t p = 0; p < subsets[k].size(); ++p) {
    unsigned t = subsets[k][p];
    if (t & 1u) continue;
    // δc({0} ∪ T) = 0 solved for c(T)
    Id acc = A.e;
    auto verts = bits_of(t);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      unsigned m = (t | 1u) & ~(1u << verts[j]);
      Id val = v[slot[k][m]];
      acc = j % 2 == 0 ? add(A, acc, val) : sub(A, acc, val);
    }
    v[p] = acc;
  }
  return v;
}

Id EMSpace::encode(int k, const std::vector<Id>& vals) const {
  std::vector<Id> digits(free[k].size());
  for (std::size_t j = 0; j < digits.size(); ++j) digits[j] = vals[free[k][j]];
  return radix[k].encode(digits);
}

Id EMSpace::value(int k, Id c, unsigned mask) const { return values(k, c)[slot[k][mask]]; }

EMSpace em_space(const FinGroup& A, int n, int D, const Budget& budget) {
  if (!A.abelian()) throw InputError("K(A,n) needs an abelian group");
  if (n < 0 || D < 0) throw InputError("K(A,n): negative degree or level");
  EMSpace K;
  K.A = A;
  K.n = n;
  std::vector<Id> sizes;
  for (int k = 0; k <= D; ++k) {
    std::vector<unsigned> subs;
    std::vector<int> slot(1u << (k + 1), -1);
    for (unsigned m = 0; m < (1u << (k + 1)); ++m)
      if (std::popcount(m) == n + 1) {
        slot[m] = static_cast<int>(subs.size());
        subs.push_back(m);
      }
    std::vector<std::size_t> fr;
    for (std::size_t p = 0; p < subs.size(); ++p)
      if (subs[p] & 1u) fr.push_back(p);
    Radix r{std::vector<Id>(fr.size(), A.order)};
    check_budget(r.size(), budget, "K(A,n)");
    sizes.push_back(r.size());
    K.subsets.push_back(std::move(subs));
    K.slot.push_back(std::move(slot));
    K.free.push_back(std::move(fr));
    K.radix.push_back(std::move(r));
  }
  SSet x = SSet::with_sizes(sizes);
  for (int k = 0; k <= D; ++k)
    for (Id c = 0; c < sizes[k]; ++c) {
      auto v = K.values(k, c);
      for (int i = 0; i <= k && k >= 1; ++i) {
        std::vector<Id> w(K.subsets[k - 1].size(), A.e);
        for (std::size_t p : K.free[k - 1]) w[p] = v[K.slot[k][coface_mask(K.subsets[k - 1][p], i)]];
        x.d[k][i][c] = K.encode(k - 1, w);
      }
      for (int i = 0; i <= k && k < D; ++i) {
        std::vector<Id> w(K.subsets[k + 1].size(), A.e);
        for (std::size_t p : K.free[k + 1]) {
          unsigned m = K.subsets[k + 1][p];
          if ((m >> i & 1u) && (m >> (i + 1) & 1u)) continue;
          unsigned low = (m & ((1u << (i + 1)) - 1)) | ((m >> (i + 1) & 1u) << i);
          unsigned high = (m >> (i + 2)) << (i + 1);
          w[p] = v[K.slot[k][low | high]];
        }
        x.s[k][i][c] = K.encode(k + 1, w);
      }
    }
  x.cosk = n + 1;
  if (x.cosk >= D) x.cosk = std::nullopt;
  K.group.x = share(std::move(x));
  K.group.name = "K(" + A.name + "," + std::to_string(n) + ")";
  for (int k = 0; k <= D; ++k)
    K.group.level.push_back(LevelGroup::power(A, static_cast<int>(K.free[k].size())));
  return K;
}

std::size_t count_cocycles_brute(const FinGroup& A, int n, int k) {
  std::vector<unsigned> subs, tests;
  for (unsigned m = 0; m < (1u << (k + 1)); ++m) {
    if (std::popcount(m) == n + 1) subs.push_back(m);
    if (std::popcount(m) == n + 2) tests.push_back(m);
  }
  Radix r{std::vector<Id>(subs.size(), A.order)};
  std::vector<int> pos(1u << (k + 1), -1);
  for (std::size_t p = 0; p < subs.size(); ++p) pos[subs[p]] = static_cast<int>(p);
  std::size_t count = 0;
  for (Id c = 0; c < r.size(); ++c) {
    auto v = r.decode(c);
    bool ok = true;
    for (unsigned t : tests) {
      auto verts = bits_of(t);
      Id acc = A.e;
      for (std::size_t j = 0; j < verts.size(); ++j) {
        Id val = v[pos[t & ~(1u << verts[j])]];
        acc = j % 2 == 0 ? add(A, acc, val) : sub(A, acc, val);
      }
      if (acc != A.e) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

EMIso wbar_em_iso(const FinGroup& A, int n, int D, const Budget& budget) {
  if (D < 1) throw InputError("W̄K(A,n): need at least level 1");
  auto K = em_space(A, n, D - 1, budget);
  EMIso out;
  out.wbar = w_bar_group(K.group, D, budget);
  out.target = em_space(A, n + 1, D, budget);
  const SSet& W = *out.wbar.x;
  const EMSpace& T = out.target;
  out.map = SMap{out.wbar.x, T.group.x, {}};
  for (int k = 0; k <= D; ++k) {
    if (W.size[k] != T.group.x->size[k])
      throw InvariantError("W̄K(A,n) and K(A,n+1) differ in size at level " + std::to_string(k));
    Table t(W.size[k]);
    std::vector<char> seen(W.size[k], 0);
    for (Id w = 0; w < W.size[k]; ++w) {
      std::vector<Id> vals(T.subsets[k].size());
      // the restriction to an (n+1)-face has all coordinates trivial but the last
      for (std::size_t p = 0; p < vals.size(); ++p) vals[p] = restrict_to(W, k, w, T.subsets[k][p]);
      Id c = T.encode(k, vals);
      if (T.values(k, c) != vals) throw InvariantError("W̄K(A,n) image is not a cocycle");
      if (seen[c]) throw InvariantError("W̄K(A,n) -> K(A,n+1) is not injective");
      seen[c] = 1;
      t[w] = c;
    }
    out.map.f.push_back(std::move(t));
  }
  auto errs = validate_map(out.map);
  if (!errs.empty()) throw InvariantError("W̄K(A,n) -> K(A,n+1) is not simplicial: " + errs[0]);
  for (int k = 0; k <= D; ++k) {
    const Id ord = W.size[k];
    if (ord > 1024) continue;
    for (Id a = 0; a < ord; ++a)
      for (Id b = 0; b < ord; ++b)
        if (out.map.f[k][out.wbar.level[k].mul(a, b)] !=
            T.group.level[k].mul(out.map.f[k][a], out.map.f[k][b]))
          throw InvariantError("W̄K(A,n) -> K(A,n+1) is not additive");
  }
  return out;
}

// ---------------------------------------------------------------------------

Id GroupCocycle::operator()(const std::vector<Id>& g) const {
  return values[Radix{std::vector<Id>(n, G.order)}.encode(g)];
}

GroupCocycle GroupCocycle::zero(const FinGroup& G, const FinGroup& A, int n) {
  GroupCocycle c{G, A, n, {}};
  c.values.assign(Radix{std::vector<Id>(n, G.order)}.size(), A.e);
  return c;
}

GroupCocycle triple_product_z2() {
  auto z2 = cyclic(2);
  auto c = GroupCocycle::zero(z2, z2, 3);
  c.values[7] = 1;
  return c;
}

GroupCocycle carry_cocycle_z4() {
  auto c = GroupCocycle::zero(cyclic(4), cyclic(2), 3);
  Radix r{{4, 4, 4}};
  for (Id code = 0; code < r.size(); ++code) {
    auto g = r.decode(code);
    c.values[code] = (g[0] % 2) * (g[1] + g[2] >= 4 ? 1 : 0);
  }
  return c;
}

namespace {

/// (δc)(g_1, ..., g_{n+1}) with the trivial action.
Id delta_at(const GroupCocycle& c, const std::vector<Id>& g) {
  const FinGroup& G = c.G;
  const FinGroup& A = c.A;
  const int m = static_cast<int>(g.size());
  Id acc = A.e;
  for (int j = 0; j <= m; ++j) {
    std::vector<Id> h;
    for (int l = 0; l < m; ++l) {
      if (j == 0 && l == 0) continue;
      if (j == m && l == m - 1) continue;
      if (j > 0 && j < m && l == j) {
        h.back() = G.mul[h.back()][g[l]];
        continue;
      }
      h.push_back(g[l]);
    }
    Id v = c(h);
    acc = j % 2 == 0 ? add(A, acc, v) : sub(A, acc, v);
  }
  return acc;
}

}  // namespace

std::string check_group_cocycle(const GroupCocycle& c) {
  Radix r{std::vector<Id>(c.n, c.G.order)};
  if (c.values.size() != r.size()) return "wrong number of values";
  std::ostringstream os;
  for (Id code = 0; code < r.size(); ++code) {
    auto g = r.decode(code);
    if (c.values[code] >= c.A.order) return "value out of range";
    if (std::find(g.begin(), g.end(), c.G.e) != g.end() && c.values[code] != c.A.e) {
      os << "not normalized at (";
      for (std::size_t j = 0; j < g.size(); ++j) os << (j ? "," : "") << g[j];
      os << ")";
      return os.str();
    }
  }
  Radix r1{std::vector<Id>(c.n + 1, c.G.order)};
  for (Id code = 0; code < r1.size(); ++code) {
    auto g = r1.decode(code);
    if (delta_at(c, g) != c.A.e) {
      os << "coboundary does not vanish at (";
      for (std::size_t j = 0; j < g.size(); ++j) os << (j ? "," : "") << g[j];
      os << ")";
      return os.str();
    }
  }
  return {};
}

GroupCocycle coboundary(const GroupCocycle& b) {
  auto c = GroupCocycle::zero(b.G, b.A, b.n + 1);
  Radix r{std::vector<Id>(b.n + 1, b.G.order)};
  for (Id code = 0; code < r.size(); ++code) c.values[code] = delta_at(b, r.decode(code));
  return c;
}

std::optional<GroupCocycle> cohomologous(const GroupCocycle& c1, const GroupCocycle& c2,
                                         std::size_t max_cochains) {
  if (c1.n != c2.n || c1.G.order != c2.G.order || c1.A.order != c2.A.order)
    throw InputError("cohomologous: cocycles of different shape");
  const FinGroup& A = c1.A;
  auto b = GroupCocycle::zero(c1.G, A, c1.n - 1);
  Radix r{std::vector<Id>(b.n, b.G.order)};
  std::vector<Id> free;
  for (Id code = 0; code < r.size(); ++code) {
    auto g = r.decode(code);
    if (std::find(g.begin(), g.end(), b.G.e) == g.end()) free.push_back(code);
  }
  double count = std::pow(static_cast<double>(A.order), static_cast<double>(free.size()));
  if (count > static_cast<double>(max_cochains)) throw ResourceError("cohomologous: too many cochains");
  std::vector<Id> diff(c1.values.size());
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = sub(A, c2.values[j], c1.values[j]);
  Radix choice{std::vector<Id>(free.size(), A.order)};
  for (Id pick = 0; pick < choice.size(); ++pick) {
    auto digits = choice.decode(pick);
    for (std::size_t j = 0; j < free.size(); ++j) b.values[free[j]] = digits[j];
    if (coboundary(b).values == diff) return b;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

WConstruction wbar_of(const FinGroup& G, int D, const Budget& budget) {
  return w_bar(constant_group(G, std::max(D - 1, 0)), D, budget);
}

CocycleSpan group_cocycle_as_span(const GroupCocycle& c, int D, const Budget& budget) {
  std::string err = check_group_cocycle(c);
  if (!err.empty()) throw InputError("not a normalized cocycle: " + err);
  auto W = wbar_of(c.G, D, budget);
  auto K = std::make_shared<EMSpace>(em_space(c.A, c.n, D, budget));
  CocycleSpan s;
  s.G = c.G;
  s.A = c.A;
  s.n = c.n;
  s.K = K;
  s.f = identity(W.x);
  s.phi = SMap{W.x, K->group.x, {}};
  for (int k = 0; k <= D; ++k) {
    Table t(W.x->size[k]);
    for (Id w = 0; w < t.size(); ++w) {
      std::vector<Id> vals(K->subsets[k].size());
      for (std::size_t p = 0; p < vals.size(); ++p) {
        auto verts = bits_of(K->subsets[k][p]);
        std::vector<Id> h;
        for (std::size_t j = 1; j < verts.size(); ++j)
          h.push_back(restrict_to(*W.x, k, w, (1u << verts[j - 1]) | (1u << verts[j])));
        vals[p] = c(h);
      }
      t[w] = K->encode(k, vals);
      if (K->values(k, t[w]) != vals) throw InvariantError("cocycle image is not a cocycle");
    }
    s.phi.f.push_back(std::move(t));
  }
  auto errs = validate_map(s.phi);
  if (!errs.empty()) throw InvariantError("cocycle map is not simplicial: " + errs[0]);
  return s;
}

CocycleSpan refine_span(const CocycleSpan& s, const SMap& g) {
  if (g.dst != s.f.src) throw InputError("refinement does not land in the span's source");
  CocycleSpan r = s;
  r.f = compose(s.f, g);
  r.phi = compose(s.phi, g);
  return r;
}

SMap doubled_edge_cover(const FinGroup& G, const SSetPtr& wbar, const Budget& budget) {
  SSet x = SSet::with_sizes({1, 2 * G.order});
  x.s[0][0][0] = 2 * G.e;
  std::vector<Table> f{{0}, Table(2 * G.order)};
  for (Id c = 0; c < 2 * G.order; ++c) f[1][c] = c / 2;
  auto ext = csk_extend(x, &f, wbar.get(), wbar->trunc, budget);
  return SMap{share(std::move(ext.x)), wbar, std::move(ext.f)};
}

CocycleEquivalence equivalence_of_cocycles(const CocycleSpan& s0, const CocycleSpan& s1,
                                           const Budget& budget) {
  if (s0.n != s1.n || s0.G.order != s1.G.order || s0.A.order != s1.A.order)
    throw InputError("equivalence: spans of different type");
  CocycleEquivalence out;
  auto pb = pullback(s0.f, s1.f, budget);
  const int D = pb.obj.trunc;
  std::vector<std::vector<char>> keep(D + 1);
  for (int k = 0; k <= D; ++k) {
    keep[k].resize(pb.obj.size[k]);
    for (Id e = 0; e < pb.obj.size[k]; ++e)
      keep[k][e] = s0.phi.f[k][pb.pr1[k][e]] == s1.phi.f[k][pb.pr2[k][e]];
  }
  auto q = subobject(pb.obj, keep);
  out.V = share(std::move(q.obj));
  out.v0 = SMap{out.V, s0.f.src, {}};
  out.v1 = SMap{out.V, s1.f.src, {}};
  for (int k = 0; k <= D; ++k) {
    Table a(q.embed[k].size()), b(q.embed[k].size());
    std::vector<char> hit0(s0.f.src->size[k], 0), hit1(s1.f.src->size[k], 0);
    for (Id c = 0; c < a.size(); ++c) {
      a[c] = pb.pr1[k][q.embed[k][c]];
      b[c] = pb.pr2[k][q.embed[k][c]];
      hit0[a[c]] = hit1[b[c]] = 1;
    }
    out.v0.f.push_back(std::move(a));
    out.v1.f.push_back(std::move(b));
    for (int side = 0; side < 2; ++side) {
      const auto& hit = side == 0 ? hit0 : hit1;
      auto miss = std::find(hit.begin(), hit.end(), 0);
      if (miss != hit.end()) {
        std::ostringstream os;
        os << "simplex " << (miss - hit.begin()) << " of level " << k << " in source " << side
           << " has no partner with the same cocycle value";
        out.outcome = Outcome::fail;
        out.reason = os.str();
        return out;
      }
    }
  }
  Verdict a = classify(out.v0, kInfinity, Kind::hypercover, budget);
  Verdict b = classify(out.v1, kInfinity, Kind::hypercover, budget);
  if (a.passed() && b.passed()) {
    out.outcome = Outcome::pass;
    out.reason = "the equalizer refines both spans";
  } else if (a.outcome == Outcome::fail || b.outcome == Outcome::fail) {
    out.outcome = Outcome::inconclusive;
    out.reason = "the equalizer is not a hypercover; smaller refinements were not searched";
  } else {
    out.outcome = Outcome::inconclusive;
    out.reason = "the equalizer passes on stored levels only";
  }
  return out;
}

StrictCocycle strictify_cocycle(const CocycleSpan& s, const Budget& budget) {
  const int n = s.n;
  const int top = n + 2;
  StrictCocycle out;
  out.st = strictify(s.f, n, top, budget);
  const Strictification& st = out.st;
  const SSet& T = *st.tau.src;
  const SSet& K = *s.phi.dst;
  if (K.trunc < top) throw InputError("strictify cocycle: K(A,n) not stored to level n+2");
  SMap phi{st.tau.src, s.phi.dst, {}};
  for (int k = 0; k < n; ++k) phi.f.push_back(s.phi.f[k]);
  for (int k = n; k <= n + 1; ++k) {
    Table t(T.size[k], kUnset);
    for (Id x = 0; x < s.f.src->size[k]; ++x)
      set_once(t[st.canonical.f[k][x]], s.phi.f[k][x], "the cocycle on τ");
    if (std::find(t.begin(), t.end(), kUnset) != t.end())
      throw InvariantError("the cocycle on τ misses a simplex");
    phi.f.push_back(std::move(t));
  }
  for (int k = n + 2; k <= top; ++k) {
    BoundaryIndex index(K, k);
    Table t(T.size[k]);
    std::vector<Id> b(k + 1);
    for (Id x = 0; x < T.size[k]; ++x) {
      for (int j = 0; j <= k; ++j) b[j] = phi.f[k - 1][T.d[k][j][x]];
      t[x] = lift_by_boundary(index, {}, k, b, 0, "the cocycle on τ");
    }
    phi.f.push_back(std::move(t));
  }
  auto errs = validate_map(phi);
  if (!errs.empty()) throw InvariantError("the cocycle on τ is not simplicial: " + errs[0]);
  out.span = s;
  out.span.f = st.tau;
  out.span.phi = phi;
  bool factors = true;
  for (std::size_t k = 0; k < st.canonical.f.size(); ++k)
    for (Id x = 0; x < st.canonical.f[k].size() && factors; ++x)
      factors = phi.f[k][st.canonical.f[k][x]] == s.phi.f[k][x];
  out.certified = factors && classify(st.canonical, kInfinity, Kind::hypercover, budget).outcome !=
                                 Outcome::fail;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Id act_on_em(const EMSpace& K, const Table& aut, int k, Id c) {
  auto digits = K.radix[k].decode(c);
  for (Id& d : digits) d = aut[d];
  return K.radix[k].encode(digits);
}

}  // namespace

TwistedProductPresentation universal_em_bundle(const FinGroup& A, int n, int D, const Budget& budget) {
  if (n < 1) throw InputError("universal bundle: n must be positive");
  auto iso = wbar_em_iso(A, n - 1, D, budget);
  auto fib = em_space(A, n - 1, D, budget);
  auto W = w_total(fib.group, D, budget);
  std::vector<Table> proj, split;
  for (int k = 0; k <= D; ++k) {
    const Id nb = iso.wbar.x->size[k], ny = fib.group.x->size[k];
    Table p(W.x->size[k]), s(W.x->size[k]);
    for (Id c = 0; c < p.size(); ++c) {
      p[c] = iso.map.f[k][c % nb];
      s[c] = p[c] * ny + c / nb;
    }
    proj.push_back(std::move(p));
    split.push_back(std::move(s));
  }
  auto bundle = make_presentation(W.x, iso.target.group.x, fib.group.x, std::move(proj), std::move(split));
  std::string err = check_presentation(bundle);
  if (!err.empty()) throw InvariantError("universal bundle: " + err);
  return bundle;
}

TwistedUniversal twisted_universal_bundle(const FinGroup& G, const FinGroup& A,
                                          const std::vector<Table>& act, int n, int D,
                                          const Budget& budget) {
  if (n < 1) throw InputError("twisted universal bundle: n must be positive");
  if (act.size() != G.order) throw InputError("action table has the wrong size");
  for (Id g = 0; g < G.order; ++g) {
    if (act[g].size() != A.order) throw InputError("action table has the wrong size");
    std::vector<char> seen(A.order, 0);
    for (Id a = 0; a < A.order; ++a) {
      if (act[g][a] >= A.order || seen[act[g][a]]) throw InputError("action is not by bijections");
      seen[act[g][a]] = 1;
      for (Id b = 0; b < A.order; ++b)
        if (act[g][A.mul[a][b]] != A.mul[act[g][a]][act[g][b]])
          throw InputError("action is not by automorphisms");
    }
    for (Id h = 0; h < G.order; ++h)
      for (Id a = 0; a < A.order; ++a)
        if (act[G.mul[g][h]][a] != act[g][act[h][a]]) throw InputError("not an action");
  }
  for (Id a = 0; a < A.order; ++a)
    if (act[G.e][a] != a) throw InputError("identity does not act trivially");

  TwistedUniversal out;
  auto iso = wbar_em_iso(A, n - 1, D, budget);
  out.fibre = em_space(A, n - 1, D, budget);
  out.em = iso.target;
  auto W = w_total(out.fibre.group, D, budget);
  auto Gc = constant_group(G, D);

  GroupAction aw{Gc, W.x, {}, Side::left}, ak{Gc, out.em.group.x, {}, Side::left};
  for (int k = 0; k <= D; ++k) {
    const Id nw = W.x->size[k], nk = out.em.group.x->size[k];
    Table tw(static_cast<std::size_t>(G.order) * nw), tk(static_cast<std::size_t>(G.order) * nk);
    for (Id g = 0; g < G.order; ++g) {
      for (Id c = 0; c < nw; ++c) {
        auto t = W.radix[k].decode(c);
        for (int j = 0; j <= k; ++j) t[j] = act_on_em(out.fibre, act[g], j, t[j]);
        tw[g * nw + c] = W.radix[k].encode(t);
      }
      for (Id c = 0; c < nk; ++c) tk[g * nk + c] = act_on_em(out.em, act[g], k, c);
    }
    aw.act.push_back(std::move(tw));
    ak.act.push_back(std::move(tk));
  }
  for (const auto* a : {&aw, &ak}) {
    std::string err = check_action(*a);
    if (!err.empty()) throw InvariantError("induced action: " + err);
  }
  out.total = homotopy_quotient(aw, D, budget);
  out.base = homotopy_quotient(ak, D, budget);
  SMap p{W.x, out.em.group.x, {}};
  for (int k = 0; k <= D; ++k) {
    const Id nb = iso.wbar.x->size[k];
    Table t(W.x->size[k]);
    for (Id c = 0; c < t.size(); ++c) t[c] = iso.map.f[k][c % nb];
    p.f.push_back(std::move(t));
  }
  SMap proj = equivariant_quotient_map(aw, ak, p, out.total, out.base);
  std::vector<Table> split;
  for (int k = 0; k <= D; ++k) {
    const Id nb = iso.wbar.x->size[k], ny = out.fibre.group.x->size[k];
    const Id nw = W.x->size[k];
    Table s(out.total.x->size[k]);
    for (Id wb = 0; wb < out.total.wbar.x->size[k]; ++wb)
      for (Id c = 0; c < nw; ++c) {
        Id e = out.total.encode(k, wb, c);
        s[e] = proj.f[k][e] * ny + c / nb;
      }
    split.push_back(std::move(s));
  }
  out.bundle = make_presentation(out.total.x, out.base.x, out.fibre.group.x, proj.f, std::move(split));
  std::string err = check_presentation(out.bundle);
  if (!err.empty()) throw InvariantError("twisted universal bundle: " + err);
  return out;
}

// ---------------------------------------------------------------------------

Descent descend(const CocycleSpan& s, const Budget& budget) {
  if (s.n != 3) throw InputError("descent needs a 3-cocycle");
  const int top = std::min(s.f.src->trunc, s.f.dst->trunc);
  if (top < 4) throw InputError("descent needs the span stored to level 4");
  Verdict hv = classify(s.f, 3, Kind::hypercover, budget);
  if (hv.outcome == Outcome::fail)
    throw InputError("descent: the span's map is not a 3-hypercover: " + hv.witness.reason);
  Descent d;
  d.span = s;
  auto univ = universal_em_bundle(s.A, 3, top, budget);
  SMap phi{s.phi.src, univ.base, {s.phi.f.begin(), s.phi.f.begin() + top + 1}};
  for (int k = 0; k <= top; ++k)
    if (univ.base->size[k] != s.phi.dst->size[k])
      throw InputError("descent: cocycle does not land in K(A,3)");
  d.bundle = pull_back_presentation(univ, phi, budget);
  std::string err = check_presentation(d.bundle);
  if (!err.empty()) throw InvariantError("descent: pulled back bundle: " + err);
  Verdict local = classify(d.bundle.projection, 2, Kind::stack, budget);
  if (local.outcome == Outcome::fail)
    throw InvariantError("descent: pulled back bundle is not a 2-stack: " + local.witness.reason);
  d.fp = compose(s.f, d.bundle.projection);
  d.x = strictify(d.fp, 2, top, budget);
  if (d.x.tau.src->size[0] != 1) throw InvariantError("descent: X_0 is not a point");
  d.groupoid = classify(to_terminal(d.x.tau.src), 2, Kind::groupoid, budget);
  return d;
}

TwoGroupData extract_two_group_data(const Descent& d, const Budget& budget) {
  const SMap& tau = d.x.tau;
  const SSet& X = *tau.src;
  const SSet& E = *d.bundle.total;
  const FinGroup& A = d.span.A;
  const int top = X.trunc;
  if (top < 4) throw InputError("extraction needs X to level 4");
  TwoGroupData out;
  out.cover = tau.f[1];
  out.base = csk_fibre_product(tau, 1, top, budget);
  const SSet& B = *out.base.src;
  out.unit = SMap{tau.src, out.base.src, {}};
  for (int k = 0; k <= 1; ++k) {
    Table t(X.size[k]);
    for (Id x = 0; x < t.size(); ++x) t[x] = x;
    out.unit.f.push_back(std::move(t));
  }
  for (int k = 2; k <= top; ++k) {
    BoundaryIndex index(B, k);
    Table t(X.size[k]);
    std::vector<Id> b(k + 1);
    for (Id x = 0; x < X.size[k]; ++x) {
      for (int j = 0; j <= k; ++j) b[j] = out.unit.f[k - 1][X.d[k][j][x]];
      t[x] = lift_by_boundary(index, out.base.f, k, b, tau.f[k][x], "unit to the coskeleton");
    }
    out.unit.f.push_back(std::move(t));
  }

  // P and its A-action, through representatives in E_2 = U_2 x A
  const Table& q = d.x.quotient.cls;
  const Id na = A.order;
  Table unsplit(E.size[2]);
  for (Id e = 0; e < E.size[2]; ++e) unsplit[d.bundle.split[2][e]] = e;
  out.action.assign(na, Table(X.size[2], kUnset));
  for (Id e = 0; e < E.size[2]; ++e) {
    Id c = d.bundle.split[2][e];
    Id u = c / na, a = c % na;
    for (Id b = 0; b < na; ++b)
      set_once(out.action[b][q[e]], q[unsplit[u * na + A.mul[a][b]]], "the A-action on X_2");
  }
  out.fibres.assign(B.size[2], {});
  for (Id x = 0; x < X.size[2]; ++x) out.fibres[out.unit.f[2][x]].push_back(x);
  out.torsor = true;
  for (Id b = 0; b < B.size[2] && out.torsor; ++b) {
    const auto& fib = out.fibres[b];
    if (fib.size() != na) {
      out.torsor = false;
      out.failure = "fibre of X_2 over " + std::to_string(b) + " does not have |A| elements";
      break;
    }
    for (Id x : fib) {
      std::vector<Id> orbit;
      for (Id a = 0; a < na; ++a) orbit.push_back(out.action[a][x]);
      std::sort(orbit.begin(), orbit.end());
      if (orbit != fib) {
        out.torsor = false;
        out.failure = "A does not act simply transitively on the fibre over " + std::to_string(b);
        break;
      }
    }
  }
  if (!out.torsor) throw InvariantError("two-group data: " + out.failure);

  // section: the class of the first representative with trivial A-coordinate
  out.section.assign(B.size[2], kUnset);
  for (Id e = 0; e < E.size[2]; ++e) {
    if (d.bundle.split[2][e] % na != A.e) continue;
    Id x = q[e];
    Id& s = out.section[out.unit.f[2][x]];
    if (s == kUnset) s = x;
  }
  out.offset.assign(X.size[2], kUnset);
  for (Id b = 0; b < B.size[2]; ++b) {
    if (out.section[b] == kUnset) throw InvariantError("two-group data: fibre without a section");
    for (Id a = 0; a < na; ++a) out.offset[out.action[a][out.section[b]]] = a;
  }

  // ζ on B_3
  out.zeta.assign(B.size[3], kUnset);
  std::vector<std::size_t> count(B.size[3], 0);
  for (Id t = 0; t < X.size[3]; ++t) {
    Id acc = A.e;
    for (int j = 0; j <= 3; ++j) {
      Id o = out.offset[X.d[3][j][t]];
      acc = j % 2 == 0 ? A.mul[acc][o] : A.mul[acc][A.inv[o]];
    }
    Id beta = out.unit.f[3][t];
    ++count[beta];
    if (out.zeta[beta] == kUnset) {
      out.zeta[beta] = acc;
    } else if (out.zeta[beta] != acc) {
      out.failure = "fillable boundaries over a 3-simplex disagree on ζ";
      throw InvariantError("two-group data: " + out.failure);
    }
  }
  for (Id beta = 0; beta < B.size[3]; ++beta)
    if (count[beta] != static_cast<std::size_t>(na) * na * na) {
      out.failure = "3-simplices over " + std::to_string(beta) + " are not an A^3-torsor";
      throw InvariantError("two-group data: " + out.failure);
    }
  out.pentagon = true;
  for (Id g = 0; g < B.size[4] && out.pentagon; ++g) {
    Id acc = A.e;
    for (int j = 0; j <= 4; ++j) {
      Id z = out.zeta[B.d[4][j][g]];
      acc = j % 2 == 0 ? A.mul[acc][z] : A.mul[acc][A.inv[z]];
    }
    if (acc != A.e) {
      out.pentagon = false;
      out.failure = "pentagon fails over 4-simplex " + std::to_string(g);
    }
  }
  if (!out.pentagon) throw InvariantError("two-group data: " + out.failure);
  return out;
}

SMap strictification_map(const Strictification& a, const Strictification& b, const SMap& g) {
  if (a.n != b.n) throw InputError("strictification map: different n");
  const int n = a.n;
  const SSet& Ta = *a.tau.src;
  const SSet& Tb = *b.tau.src;
  const SSet& X = *a.input.src;
  for (std::size_t k = 0; k < g.f.size() && k < a.input.f.size(); ++k)
    for (Id x = 0; x < g.f[k].size(); ++x)
      if (b.input.f[k][g.f[k][x]] != a.input.f[k][x])
        throw InputError("strictification map: g does not commute with the maps to Y");
  SMap m{a.tau.src, b.tau.src, {}};
  for (int k = 0; k < n; ++k) m.f.push_back(g.f[k]);
  for (int k = n; k <= n + 1; ++k) {
    Table t(Ta.size[k], kUnset);
    for (Id x = 0; x < X.size[k]; ++x)
      set_once(t[a.canonical.f[k][x]], b.canonical.f[k][g.f[k][x]], "the induced map");
    if (std::find(t.begin(), t.end(), kUnset) != t.end())
      throw InvariantError("the induced map misses a simplex");
    m.f.push_back(std::move(t));
  }
  for (int k = n + 2; k <= std::min(Ta.trunc, Tb.trunc); ++k) {
    BoundaryIndex index(Tb, k);
    Table t(Ta.size[k]);
    std::vector<Id> bd(k + 1);
    for (Id x = 0; x < Ta.size[k]; ++x) {
      for (int j = 0; j <= k; ++j) bd[j] = m.f[k - 1][Ta.d[k][j][x]];
      t[x] = lift_by_boundary(index, b.tau.f, k, bd, a.tau.f[k][x], "the induced map");
    }
    m.f.push_back(std::move(t));
  }
  auto errs = validate_map(m);
  if (!errs.empty()) throw InvariantError("the induced map is not simplicial: " + errs[0]);
  return m;
}

}  // namespace simplex
