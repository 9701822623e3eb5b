#include "simplex/strictify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace simplex {

namespace {

constexpr Id kUnset = static_cast<Id>(-1);

std::size_t face_position(const Shape& s, unsigned mask) {
  auto it = std::find(s.faces.begin(), s.faces.end(), mask);
  if (it == s.faces.end()) throw InvariantError("face missing from shape");
  return static_cast<std::size_t>(it - s.faces.begin());
}

/// Image of x in X_{n+1} in a relative object over τ built on levels <= n.
long lift_of(const SMap& f, const Quotient& q, int n, const RelativeObject& r, Id x) {
  const SSet& X = *f.src;
  std::vector<Id> h(r.shape.faces.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    unsigned m = r.shape.faces[j];
    Id z = restrict_to(X, n + 1, x, m);
    h[j] = std::popcount(m) - 1 == n ? q.cls[z] : z;
  }
  return r.find(h, f.f[n + 1][x]);
}

void set_once(Id& slot, Id value, const char* what) {
  if (slot == kUnset) {
    slot = value;
  } else if (slot != value) {
    throw InvariantError(std::string(what) + " depends on the chosen representative");
  }
}

}  // namespace

Strictification strictify(const SMap& f, int n, int top, const Budget& budget) {
  const SSet& X = *f.src;
  const SSet& Y = *f.dst;
  if (n < 0) throw InputError("strictify: negative n");
  if (top < n + 1) throw InputError("strictify: need at least level n+1");
  if (X.trunc < n + 1) throw InputError("strictify: source must be stored to level n+1");
  if (Y.trunc < top) throw InputError("strictify: target must be stored to the output level");

  Verdict v = classify(f, kInfinity, Kind::stack, budget);
  if (v.outcome == Outcome::fail) {
    std::ostringstream os;
    os << "strictify: map is not a stack (Λ^" << v.witness.k << "_" << v.witness.i << ": "
       << v.witness.reason << ")";
    throw InputError(os.str());
  }

  Strictification s;
  s.input = f;
  s.n = n;
  auto paths = path_space(f, n, 1, budget);
  Quotient pq = pi0(*paths.carrier);
  s.quotient.classes = pq.classes;
  s.quotient.cls.assign(X.size[n], 0);
  for (Id e = 0; e < paths.embed[0].size(); ++e) s.quotient.cls[paths.embed[0][e]] = pq.cls[e];
  const Quotient& q = s.quotient;

  // levels 0..n
  std::vector<Id> sizes(X.size.begin(), X.size.begin() + n);
  sizes.push_back(q.classes);
  SSet low = SSet::with_sizes(sizes);
  std::vector<Table> ftab(f.f.begin(), f.f.begin() + n);
  ftab.emplace_back(q.classes, kUnset);
  for (int k = 0; k < n; ++k) {
    if (k >= 1) low.d[k] = X.d[k];
    if (k + 1 < n) low.s[k] = X.s[k];
  }
  if (n >= 1) {
    for (int i = 0; i <= n - 1; ++i)
      for (Id y = 0; y < X.size[n - 1]; ++y) low.s[n - 1][i][y] = q.cls[X.s[n - 1][i][y]];
    for (int i = 0; i <= n; ++i) std::fill(low.d[n][i].begin(), low.d[n][i].end(), kUnset);
  }
  for (Id x = 0; x < X.size[n]; ++x) {
    Id c = q.cls[x];
    set_once(ftab[n][c], f.f[n][x], "the map on π_0 of the path space");
    for (int i = 0; i <= n && n >= 1; ++i) set_once(low.d[n][i][c], X.d[n][i][x], "a face map on π_0");
  }
  auto lowp = share(low);

  // level n+1: the relative horn Λ^{n+1}_1 over Y, with the missing face filled in
  SMap lowmap{lowp, f.dst, ftab};
  s.top_horn = relative_object(lowmap, Shape::horn(n + 1, 1), n + 1, budget);
  const RelativeObject& H = s.top_horn;
  const unsigned full = (1u << (n + 2)) - 1;
  sizes.push_back(static_cast<Id>(H.size()));
  SSet t = SSet::with_sizes(sizes);
  for (int k = 0; k <= n; ++k) {
    if (k >= 1) t.d[k] = low.d[k];
    if (k < n) t.s[k] = low.s[k];
  }
  for (int j = 0; j <= n + 1; ++j) {
    if (j == 1) continue;
    std::size_t pos = face_position(H.shape, full & ~(1u << j));
    for (Id c = 0; c < H.size(); ++c) t.d[n + 1][j][c] = H.lifts[c][pos];
  }
  Table& d1 = t.d[n + 1][1];
  std::fill(d1.begin(), d1.end(), kUnset);
  Table lam(X.size[n + 1]);
  for (Id x = 0; x < X.size[n + 1]; ++x) {
    long c = lift_of(f, q, n, H, x);
    if (c < 0) throw InvariantError("an (n+1)-simplex leaves the horn carrier");
    lam[x] = static_cast<Id>(c);
    set_once(d1[c], q.cls[X.d[n + 1][1][x]], "the missing face d_1");
  }
  for (Id c = 0; c < H.size(); ++c)
    if (d1[c] == kUnset) throw InputError("strictify: a horn of τ has no lift, so the map is not a stack");
  for (int i = 0; i <= n; ++i) {
    std::fill(t.s[n][i].begin(), t.s[n][i].end(), kUnset);
    for (Id x = 0; x < X.size[n]; ++x) set_once(t.s[n][i][q.cls[x]], lam[X.s[n][i][x]], "a degeneracy");
  }
  ftab.push_back(H.base);

  auto ext = csk_extend(t, &ftab, &Y, top, budget);
  auto tau = share(std::move(ext.x));
  s.tau = SMap{tau, f.dst, std::move(ext.f)};

  // canonical map X -> τ
  const int levels = std::min(X.trunc, top);
  s.canonical.src = f.src;
  s.canonical.dst = tau;
  for (int k = 0; k < n; ++k) {
    Table id(X.size[k]);
    for (Id x = 0; x < id.size(); ++x) id[x] = x;
    s.canonical.f.push_back(std::move(id));
  }
  s.canonical.f.push_back(q.cls);
  s.canonical.f.push_back(lam);
  for (int k = n + 2; k <= levels; ++k) {
    BoundaryIndex index(*tau, k);
    Table m(X.size[k]);
    std::vector<Id> b(k + 1);
    for (Id x = 0; x < X.size[k]; ++x) {
      for (int j = 0; j <= k; ++j) b[j] = s.canonical.f[k - 1][X.d[k][j][x]];
      const std::vector<Id>* hits = index.find(b);
      long found = -1;
      for (Id c : hits ? *hits : std::vector<Id>{})
        if (s.tau.f[k][c] == f.f[k][x]) found = c;
      if (found < 0) throw InvariantError("canonical map leaves τ");
      m[x] = static_cast<Id>(found);
    }
    s.canonical.f.push_back(std::move(m));
  }
  return s;
}

MissingFace missing_face(const Strictification& s, int i, const Budget& budget) {
  const int n = s.n;
  if (i < 0 || i > n + 1) throw InputError("missing face: index out of range");
  const SSet& X = *s.input.src;
  MissingFace out;
  out.horn = horn_object(s.tau, n + 1, i, budget);
  out.value.assign(out.horn.size(), kUnset);
  for (Id x = 0; x < X.size[n + 1]; ++x) {
    long c = lift_of(s.input, s.quotient, n, out.horn, x);
    if (c < 0) throw InvariantError("an (n+1)-simplex leaves the horn carrier");
    set_once(out.value[c], s.quotient.cls[X.d[n + 1][i][x]], "the missing face");
    ++out.lifts_checked;
  }
  for (Id c = 0; c < out.value.size(); ++c)
    if (out.value[c] == kUnset) throw InvariantError("a horn of τ has no lift to X");
  return out;
}

std::string check_inverse_laws(const Strictification& s, int i, const Budget& budget) {
  const int n = s.n;
  const unsigned full = (1u << (n + 2)) - 1;
  auto M = match_object(s.tau, n + 1, budget);
  auto one = missing_face(s, 1, budget);
  auto other = missing_face(s, i, budget);

  // (1, d_j): horn -> matching object
  auto extend = [&](const MissingFace& mf, int j, Id c) -> long {
    std::vector<Id> h(M.shape.faces.size());
    for (std::size_t p = 0; p < h.size(); ++p) {
      unsigned m = M.shape.faces[p];
      h[p] = m == (full & ~(1u << j)) ? mf.value[c] : mf.horn.lifts[c][face_position(mf.horn.shape, m)];
    }
    return M.find(h, mf.horn.base[c]);
  };
  // d_ĵ: matching object -> horn
  auto restrict = [&](const MissingFace& mf, Id m) -> long {
    std::vector<Id> h(mf.horn.shape.faces.size());
    for (std::size_t p = 0; p < h.size(); ++p)
      h[p] = M.lifts[m][face_position(M.shape, mf.horn.shape.faces[p])];
    return mf.horn.find(h, M.base[m]);
  };

  std::ostringstream err;
  for (Id c = 0; c < one.horn.size(); ++c) {
    long m = extend(one, 1, c);
    if (m < 0) return "(1,d_1) leaves the matching object";
    if (restrict(one, static_cast<Id>(m)) != static_cast<long>(c)) {
      err << "d_1̂ (1,d_1) is not the identity at " << c;
      return err.str();
    }
    long r = restrict(other, static_cast<Id>(m));
    if (r < 0) return "restriction leaves the horn carrier";
    if (extend(other, i, static_cast<Id>(r)) != m) {
      err << "(1,d_" << i << ") d_" << i << "̂ (1,d_1) differs from (1,d_1) at " << c;
      return err.str();
    }
  }
  for (Id c = 0; c < other.horn.size(); ++c) {
    long m = extend(other, i, c);
    if (m < 0) return "(1,d_i) leaves the matching object";
    long r = restrict(one, static_cast<Id>(m));
    if (r < 0) return "restriction leaves the horn carrier";
    if (extend(one, 1, static_cast<Id>(r)) != m) {
      err << "(1,d_1) d_1̂ (1,d_" << i << ") differs from (1,d_" << i << ") at " << c;
      return err.str();
    }
  }
  return {};
}

bool canonical_is_iso(const Strictification& s) {
  for (std::size_t k = 0; k < s.canonical.f.size(); ++k) {
    const Table& t = s.canonical.f[k];
    if (t.size() != s.tau.src->size[k]) return false;
    std::vector<char> seen(t.size(), 0);
    for (Id v : t) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

SMap csk_fibre_product(const SMap& f, int m, int top, const Budget& budget) {
  const SSet& Y = *f.dst;
  if (Y.trunc < top) throw InputError("coskeleton fibre product: target not stored to the output level");
  if (m < 0) {
    auto y = share(truncate(Y, top));
    SMap out = identity(y);
    out.dst = f.dst;
    return out;
  }
  if (m > f.src->trunc) throw InputError("coskeleton fibre product: source not stored to level m");
  SSet low = truncate(*f.src, m);
  std::vector<Table> ftab(f.f.begin(), f.f.begin() + m + 1);
  auto ext = csk_extend(low, &ftab, &Y, top, budget);
  return SMap{share(std::move(ext.x)), f.dst, std::move(ext.f)};
}

HypercoverReport strictify_hypercover_check(const SMap& f, int n, int top, const Budget& budget) {
  if (classify(f, kInfinity, Kind::hypercover, budget).outcome == Outcome::fail)
    throw InputError("strictify: map is not a hypercover");
  auto s = strictify(f, n, top, budget);
  HypercoverReport r;
  std::ostringstream os;
  Verdict a = classify(s.tau, n, Kind::hypercover, budget);
  r.tau_is_hypercover = a.outcome != Outcome::fail;
  if (!r.tau_is_hypercover) os << "τ is not an " << n << "-hypercover: " << a.witness.reason << "; ";
  Verdict b = classify(s.canonical, kInfinity, Kind::hypercover, budget);
  r.canonical_is_hypercover = b.outcome != Outcome::fail;
  if (!r.canonical_is_hypercover) os << "X -> τ is not a hypercover: " << b.witness.reason << "; ";
  auto c = csk_fibre_product(f, n - 1, top, budget);
  r.matches_coskeleton = find_iso(s.tau.src, c.src, &s.tau.f, &c.f).status == SearchStatus::found;
  if (!r.matches_coskeleton) os << "τ differs from Csk_{n-1}X x Y; ";
  auto lit = csk_fibre_product(f, n, top, budget);
  r.matches_literal = find_iso(s.tau.src, lit.src, &s.tau.f, &lit.f).status == SearchStatus::found;
  r.detail = os.str();
  if (!r.ok()) throw InvariantError("strictification of a hypercover: " + r.detail);
  return r;
}

}  // namespace simplex
