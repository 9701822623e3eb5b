#include "simplex/simp_group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace simplex {

Id Radix::size() const {
  std::uint64_t n = 1;
  for (Id b : base) {
    n *= b;
    if (n > 0xffffffffull) throw ResourceError("tuple space too large");
  }
  return static_cast<Id>(n);
}

Id Radix::encode(const std::vector<Id>& digits) const {
  Id code = 0, scale = 1;
  for (std::size_t j = 0; j < base.size(); ++j) {
    code += digits[j] * scale;
    scale *= base[j];
  }
  return code;
}

std::vector<Id> Radix::decode(Id code) const {
  std::vector<Id> out(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    out[j] = code % base[j];
    code /= base[j];
  }
  return out;
}

LevelGroup LevelGroup::of(const FinGroup& g) {
  auto p = std::make_shared<FinGroup>(g);
  LevelGroup l;
  l.order = g.order;
  l.e = g.e;
  l.mul = [p](Id a, Id b) { return p->mul[a][b]; };
  l.inv = [p](Id a) { return p->inv[a]; };
  return l;
}

LevelGroup LevelGroup::power(const FinGroup& a, int copies) {
  auto p = std::make_shared<FinGroup>(a);
  auto r = std::make_shared<Radix>(Radix{std::vector<Id>(copies, a.order)});
  LevelGroup l;
  l.order = r->size();
  l.e = r->encode(std::vector<Id>(copies, a.e));
  l.mul = [p, r](Id x, Id y) {
    auto u = r->decode(x), v = r->decode(y);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = p->mul[u[j]][v[j]];
    return r->encode(u);
  };
  l.inv = [p, r](Id x) {
    auto u = r->decode(x);
    for (Id& c : u) c = p->inv[c];
    return r->encode(u);
  };
  return l;
}

std::string check_group(const SimplicialGroup& g, Id max_order) {
  const SSet& X = *g.x;
  std::ostringstream os;
  if (static_cast<int>(g.level.size()) != X.trunc + 1) return "one group per level is required";
  for (int k = 0; k <= X.trunc; ++k) {
    const LevelGroup& G = g.level[k];
    if (G.order != X.size[k]) {
      os << "group order differs from level size at level " << k;
      return os.str();
    }
    for (Id a = 0; a < G.order; ++a)
      if (G.mul(a, G.e) != a || G.mul(G.e, a) != a || G.mul(a, G.inv(a)) != G.e) {
        os << "unit or inverse fails at level " << k << ", element " << a;
        return os.str();
      }
    if (G.order <= max_order)
      for (Id a = 0; a < G.order; ++a)
        for (Id b = 0; b < G.order; ++b)
          for (Id c = 0; c < G.order; ++c)
            if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
              os << "associativity fails at level " << k;
              return os.str();
            }
  }
  for (int k = 0; k <= X.trunc; ++k) {
    const LevelGroup& G = g.level[k];
    for (Id a = 0; a < G.order; ++a)
      for (Id b = 0; b < G.order; ++b) {
        Id ab = G.mul(a, b);
        for (int i = 0; i <= k && k >= 1; ++i)
          if (X.d[k][i][ab] != g.level[k - 1].mul(X.d[k][i][a], X.d[k][i][b])) {
            os << "d_" << i << " is not a homomorphism at level " << k;
            return os.str();
          }
        for (int i = 0; i <= k && k < X.trunc; ++i)
          if (X.s[k][i][ab] != g.level[k + 1].mul(X.s[k][i][a], X.s[k][i][b])) {
            os << "s_" << i << " is not a homomorphism at level " << k;
            return os.str();
          }
      }
  }
  return {};
}

SimplicialGroup constant_group(const FinGroup& g, int trunc) {
  SimplicialGroup out;
  out.x = share(constant(g.order, trunc));
  out.level.assign(trunc + 1, LevelGroup::of(g));
  out.name = g.name;
  return out;
}

// ---------------------------------------------------------------------------

Id moore_fill(const SimplicialGroup& g, int k, int i, const std::vector<Id>& faces, Id seed) {
  const SSet& X = *g.x;
  if (k < 1 || k > X.trunc) throw InputError("moore fill: level out of range");
  if (i < 0 || i > k) throw InputError("moore fill: horn index out of range");
  if (faces.size() != static_cast<std::size_t>(k + 1)) throw InputError("moore fill: need k+1 faces");
  if (seed >= X.size[k]) throw InputError("moore fill: seed out of range");
  for (int j = 0; j <= k; ++j)
    if (j != i && faces[j] >= X.size[k - 1]) throw InputError("moore fill: face out of range");
  for (int m = 1; m <= k && k >= 2; ++m)
    for (int j = 0; j < m; ++j) {
      if (j == i || m == i) continue;
      if (X.d[k - 1][m - 1][faces[j]] != X.d[k - 1][j][faces[m]]) {
        std::ostringstream os;
        os << "moore fill: horn relation d_" << m - 1 << " g_" << j << " = d_" << j << " g_" << m
           << " fails";
        throw InputError(os.str());
      }
    }
  const LevelGroup& top = g.level[k];
  const LevelGroup& low = g.level[k - 1];
  Id cur = seed;
  auto correct = [&](int l, int via) {
    Id a = low.mul(faces[l], low.inv(X.d[k][l][cur]));
    cur = top.mul(X.s[k - 1][via][a], cur);
  };
  for (int l = 0; l < i; ++l) correct(l, l);
  for (int l = k; l > i; --l) correct(l, l - 1);
  for (int j = 0; j <= k; ++j)
    if (j != i && X.d[k][j][cur] != faces[j]) throw InvariantError("moore fill: filler has a wrong face");
  return cur;
}

Id moore_fill(const SimplicialGroup& g, int k, int i, const std::vector<Id>& faces) {
  if (k < 0 || k > g.trunc()) throw InputError("moore fill: level out of range");
  return moore_fill(g, k, i, faces, g.level[k].e);
}

std::vector<Id> brute_fillers(const SimplicialGroup& g, int k, int i, const std::vector<Id>& faces) {
  const SSet& X = *g.x;
  std::vector<Id> out;
  for (Id x = 0; x < X.size[k]; ++x) {
    bool ok = true;
    for (int j = 0; j <= k && ok; ++j) ok = j == i || X.d[k][j][x] == faces[j];
    if (ok) out.push_back(x);
  }
  return out;
}

Verdict classify_strict(const SimplicialGroup& g, int n, const Budget& budget) {
  if (n < 1) throw InputError("strict n-group: n must be positive");
  auto f = to_terminal(g.x);
  Verdict v;
  for (int k = std::max(n, 1); k <= g.trunc(); ++k)
    for (int i = 0; i <= k; ++i) {
      auto r = horn_object(f, k, i, budget);
      std::vector<char> hit(r.size(), 0);
      long dup = -1;
      for (Id x = 0; x < r.compare.size() && dup < 0; ++x) {
        if (hit[r.compare[x]]) dup = x;
        hit[r.compare[x]] = 1;
      }
      long miss = -1;
      for (std::size_t c = 0; c < hit.size() && miss < 0; ++c)
        if (!hit[c]) miss = static_cast<long>(c);
      if (dup >= 0 || miss >= 0) {
        v.outcome = Outcome::fail;
        v.witness = {k, i, dup >= 0 ? dup : miss,
                     dup >= 0 ? "λ is not injective" : "λ is not surjective"};
        return v;
      }
    }
  Verdict under = classify_object(g.x, n - 1, budget);
  if (under.outcome == Outcome::fail)
    throw InvariantError("strict n-group whose underlying object is not an (n-1)-groupoid: " +
                         under.witness.reason);
  return under;
}

// ---------------------------------------------------------------------------

namespace {

/// Face d_i of a tuple (g_0, ..., g_{m-1}) with g_j in G_j, producing the
/// first `out` coordinates of g_0, ..., g_{i-1} d_i g_i, d_i g_{i+1}, ...
std::vector<Id> tuple_face(const SimplicialGroup& g, const std::vector<Id>& t, int i,
                           std::size_t out) {
  const SSet& G = *g.x;
  std::vector<Id> r(out);
  for (std::size_t j = 0; j < out; ++j) {
    int jj = static_cast<int>(j);
    if (jj < i - 1) {
      r[j] = t[j];
    } else if (jj == i - 1) {
      r[j] = g.level[i - 1].mul(t[i - 1], G.d[i][i][t[i]]);
    } else {
      r[j] = G.d[j + 1][i][t[j + 1]];
    }
  }
  return r;
}

std::vector<Id> tuple_degen(const SimplicialGroup& g, const std::vector<Id>& t, int i) {
  const SSet& G = *g.x;
  std::vector<Id> r(t.size() + 1);
  for (std::size_t j = 0; j < r.size(); ++j) {
    int jj = static_cast<int>(j);
    if (jj < i) {
      r[j] = t[j];
    } else if (jj == i) {
      r[j] = g.level[i].e;
    } else {
      r[j] = G.s[j - 1][i][t[j - 1]];
    }
  }
  return r;
}

/// Tuples of length len(n) = n + shift at level n.
WConstruction tuple_object(const SimplicialGroup& g, int D, int shift, const Budget& budget) {
  WConstruction w;
  std::vector<Id> sizes;
  for (int n = 0; n <= D; ++n) {
    Radix r;
    for (int j = 0; j < n + shift; ++j) r.base.push_back(g.x->size[j]);
    check_budget(r.size(), budget, "W construction");
    sizes.push_back(r.size());
    w.radix.push_back(std::move(r));
  }
  SSet x = SSet::with_sizes(sizes);
  for (int n = 0; n <= D; ++n)
    for (Id c = 0; c < sizes[n]; ++c) {
      auto t = w.radix[n].decode(c);
      for (int i = 0; i <= n && n >= 1; ++i)
        x.d[n][i][c] = w.radix[n - 1].encode(tuple_face(g, t, i, n - 1 + shift));
      for (int i = 0; i <= n && n < D; ++i) x.s[n][i][c] = w.radix[n + 1].encode(tuple_degen(g, t, i));
    }
  // one degree above the group, kept only when the stored levels confirm it
  if (g.x->cosk) {
    const int d = *g.x->cosk + 1;
    bool ok = true;
    for (int k = d + 1; k <= D && ok; ++k) ok = level_is_coskeletal(x, k, budget);
    if (ok) x.cosk = d;
  }
  w.x = share(std::move(x));
  return w;
}

}  // namespace

WConstruction w_total(const SimplicialGroup& g, int D, const Budget& budget) {
  if (D > g.trunc()) throw InputError("W: group not stored to the requested level");
  return tuple_object(g, D, 1, budget);
}

WConstruction w_bar(const SimplicialGroup& g, int D, const Budget& budget) {
  if (D > g.trunc() + 1) throw InputError("W̄: group not stored to the requested level");
  return tuple_object(g, D, 0, budget);
}

SimplicialGroup w_bar_group(const SimplicialGroup& g, int D, const Budget& budget) {
  auto w = w_bar(g, D, budget);
  SimplicialGroup out;
  out.x = w.x;
  out.name = "W̄" + g.name;
  for (int n = 0; n <= D; ++n) {
    auto r = std::make_shared<Radix>(w.radix[n]);
    auto levels = std::make_shared<std::vector<LevelGroup>>(g.level.begin(), g.level.begin() + n);
    LevelGroup l;
    l.order = r->size();
    std::vector<Id> unit(n);
    for (int j = 0; j < n; ++j) unit[j] = g.level[j].e;
    l.e = r->encode(unit);
    l.mul = [r, levels](Id a, Id b) {
      auto u = r->decode(a), v = r->decode(b);
      for (std::size_t j = 0; j < u.size(); ++j) u[j] = (*levels)[j].mul(u[j], v[j]);
      return r->encode(u);
    };
    l.inv = [r, levels](Id a) {
      auto u = r->decode(a);
      for (std::size_t j = 0; j < u.size(); ++j) u[j] = (*levels)[j].inv(u[j]);
      return r->encode(u);
    };
    out.level.push_back(std::move(l));
  }
  return out;
}

// ---------------------------------------------------------------------------

TwistedProductPresentation make_presentation(SSetPtr total, SSetPtr base, SSetPtr fibre,
                                             std::vector<Table> projection,
                                             std::vector<Table> split) {
  TwistedProductPresentation p;
  p.projection = SMap{total, base, std::move(projection)};
  p.total = std::move(total);
  p.base = std::move(base);
  p.fibre = std::move(fibre);
  p.split = std::move(split);
  const SSet& E = *p.total;
  const int top = std::min({E.trunc, p.base->trunc, p.fibre->trunc});
  p.twist.emplace_back();
  for (int k = 1; k <= top; ++k) {
    const Id ny = p.fibre->size[k - 1];
    Table tw(E.size[k]);
    for (Id e = 0; e < E.size[k]; ++e) tw[p.split[k][e]] = p.split[k - 1][E.d[k][k][e]] % ny;
    p.twist.push_back(std::move(tw));
  }
  return p;
}

std::string check_presentation(const TwistedProductPresentation& p) {
  const SSet& E = *p.total;
  const SSet& X = *p.base;
  const SSet& Y = *p.fibre;
  std::ostringstream os;
  const int top = std::min({E.trunc, X.trunc, Y.trunc});
  for (int k = 0; k <= top; ++k) {
    const Id ny = Y.size[k];
    if (static_cast<std::uint64_t>(X.size[k]) * ny != E.size[k]) {
      os << "level " << k << " is not the size of the product";
      return os.str();
    }
    std::vector<char> seen(E.size[k], 0);
    for (Id e = 0; e < E.size[k]; ++e) {
      Id c = p.split[k][e];
      if (c >= E.size[k] || seen[c]) {
        os << "splitting is not a bijection at level " << k;
        return os.str();
      }
      seen[c] = 1;
      const Id x = c / ny, y = c % ny;
      if (p.projection.f[k][e] != x) {
        os << "projection is not the first factor at level " << k;
        return os.str();
      }
      for (int i = 0; i <= k && k >= 1; ++i) {
        Id c1 = p.split[k - 1][E.d[k][i][e]];
        Id want_y = i < k ? Y.d[k][i][y] : p.twist[k][c];
        if (c1 != X.d[k][i][x] * Y.size[k - 1] + want_y) {
          os << "face d_" << i << " is not " << (i < k ? "a product" : "the twisted face")
             << " at level " << k << ", element " << e;
          return os.str();
        }
      }
      for (int i = 0; i <= k && k < top; ++i)
        if (p.split[k + 1][E.s[k][i][e]] != X.s[k][i][x] * Y.size[k + 1] + Y.s[k][i][y]) {
          os << "degeneracy s_" << i << " is not a product at level " << k;
          return os.str();
        }
    }
  }
  return {};
}

TwistedProductPresentation pull_back_presentation(const TwistedProductPresentation& p,
                                                  const SMap& g, const Budget& budget) {
  if (g.dst != p.base && !same_tables(*g.dst, *p.base))
    throw InputError("pullback of a presentation: map does not land in the base");
  auto pb = pullback(*g.src, g.f, *p.total, p.projection.f, *p.base, budget);
  TwistedProductPresentation out;
  out.total = share(std::move(pb.obj));
  out.base = g.src;
  out.fibre = p.fibre;
  out.projection = SMap{out.total, g.src, pb.pr1};
  const SSet& Y = *p.fibre;
  const int top = out.total->trunc;
  for (int k = 0; k <= top; ++k) {
    const Id ny = Y.size[k];
    Table split(out.total->size[k]);
    for (Id e = 0; e < split.size(); ++e)
      split[e] = pb.pr1[k][e] * ny + p.split[k][pb.pr2[k][e]] % ny;
    out.split.push_back(std::move(split));
    Table tw;
    if (k >= 1) {
      tw.resize(static_cast<std::size_t>(g.src->size[k]) * ny);
      for (Id z = 0; z < g.src->size[k]; ++z)
        for (Id y = 0; y < ny; ++y) tw[z * ny + y] = p.twist[k][g.f[k][z] * ny + y];
    }
    out.twist.push_back(std::move(tw));
  }
  return out;
}

TwistedProductPresentation universal_bundle(const SimplicialGroup& g, int D, const Budget& budget) {
  auto W = w_total(g, D, budget);
  auto B = w_bar(g, D, budget);
  TwistedProductPresentation p;
  p.total = W.x;
  p.base = B.x;
  p.fibre = share(truncate(*g.x, D));
  p.projection = SMap{W.x, B.x, {}};
  for (int k = 0; k <= D; ++k) {
    const Id nb = B.x->size[k], ng = g.x->size[k];
    Table proj(W.x->size[k]), split(W.x->size[k]);
    for (Id c = 0; c < proj.size(); ++c) {
      proj[c] = c % nb;
      split[c] = (c % nb) * ng + c / nb;
    }
    p.projection.f.push_back(std::move(proj));
    p.split.push_back(std::move(split));
    Table tw;
    if (k >= 1) {
      tw.resize(W.x->size[k]);
      const Id nb1 = B.x->size[k - 1];
      for (Id c = 0; c < tw.size(); ++c) {
        Id x = c % nb, y = c / nb;
        tw[x * ng + y] = W.x->d[k][k][c] / nb1;
      }
    }
    p.twist.push_back(std::move(tw));
  }
  return p;
}

// ---------------------------------------------------------------------------

std::string check_action(const GroupAction& a) {
  const SSet& X = *a.x;
  const SSet& G = *a.group.x;
  std::ostringstream os;
  const int top = std::min(X.trunc, G.trunc);
  for (int k = 0; k <= top; ++k) {
    const LevelGroup& L = a.group.level[k];
    const Id nx = X.size[k];
    if (a.act[k].size() != static_cast<std::size_t>(L.order) * nx) return "action table size";
    auto apply = [&](Id g, Id x) { return a.apply(k, g, x); };
    for (Id x = 0; x < nx; ++x)
      if (apply(L.e, x) != x) {
        os << "identity does not act trivially at level " << k;
        return os.str();
      }
    for (Id g1 = 0; g1 < L.order; ++g1)
      for (Id g2 = 0; g2 < L.order; ++g2) {
        Id prod = a.side == Side::left ? L.mul(g1, g2) : L.mul(g2, g1);
        for (Id x = 0; x < nx; ++x)
          if (apply(g1, apply(g2, x)) != apply(prod, x)) {
            os << "composition law fails at level " << k;
            return os.str();
          }
      }
    for (Id g = 0; g < L.order; ++g)
      for (Id x = 0; x < nx; ++x) {
        Id gx = apply(g, x);
        for (int i = 0; i <= k && k >= 1; ++i)
          if (X.d[k][i][gx] != a.apply(k - 1, G.d[k][i][g], X.d[k][i][x])) {
            os << "d_" << i << " is not equivariant at level " << k;
            return os.str();
          }
        for (int i = 0; i <= k && k < top; ++i)
          if (X.s[k][i][gx] != a.apply(k + 1, G.s[k][i][g], X.s[k][i][x])) {
            os << "s_" << i << " is not equivariant at level " << k;
            return os.str();
          }
      }
  }
  return {};
}

GroupAction translation_action(const SimplicialGroup& g) {
  GroupAction a;
  a.group = g;
  a.x = g.x;
  for (int k = 0; k <= g.trunc(); ++k) {
    const Id n = g.x->size[k];
    Table t(static_cast<std::size_t>(n) * n);
    for (Id h = 0; h < n; ++h)
      for (Id x = 0; x < n; ++x) t[h * n + x] = g.level[k].mul(h, x);
    a.act.push_back(std::move(t));
  }
  return a;
}

GroupAction trivial_action(const SimplicialGroup& g, const SSetPtr& x) {
  GroupAction a;
  a.group = g;
  a.x = x;
  for (int k = 0; k <= std::min(g.trunc(), x->trunc); ++k) {
    const Id n = x->size[k];
    Table t(static_cast<std::size_t>(g.x->size[k]) * n);
    for (Id h = 0; h < g.x->size[k]; ++h)
      for (Id y = 0; y < n; ++y) t[h * n + y] = y;
    a.act.push_back(std::move(t));
  }
  return a;
}

HomotopyQuotient homotopy_quotient(const GroupAction& a, int D, const Budget& budget) {
  const SSet& X = *a.x;
  if (D > X.trunc) throw InputError("homotopy quotient: object not stored to the requested level");
  HomotopyQuotient q;
  q.wbar = w_bar(a.group, D, budget);
  const SSet& B = *q.wbar.x;
  auto act = [&](int k, Id g, Id x) {
    return a.side == Side::left ? a.apply(k, g, x) : a.apply(k, a.group.level[k].inv(g), x);
  };
  std::vector<Id> sizes;
  for (int k = 0; k <= D; ++k) {
    std::uint64_t n = static_cast<std::uint64_t>(B.size[k]) * X.size[k];
    check_budget(n, budget, "homotopy quotient");
    sizes.push_back(static_cast<Id>(n));
    q.x_size.push_back(X.size[k]);
  }
  SSet h = SSet::with_sizes(sizes);
  q.projection.dst = q.wbar.x;
  for (int k = 0; k <= D; ++k) {
    Table proj(sizes[k]);
    for (Id w = 0; w < B.size[k]; ++w)
      for (Id x = 0; x < X.size[k]; ++x) {
        Id c = q.encode(k, w, x);
        proj[c] = w;
        for (int i = 0; i < k; ++i) h.d[k][i][c] = q.encode(k - 1, B.d[k][i][w], X.d[k][i][x]);
        if (k >= 1) {
          Id last = q.wbar.radix[k].decode(w)[k - 1];
          h.d[k][k][c] = q.encode(k - 1, B.d[k][k][w], act(k - 1, last, X.d[k][k][x]));
        }
        for (int i = 0; i <= k && k < D; ++i) h.s[k][i][c] = q.encode(k + 1, B.s[k][i][w], X.s[k][i][x]);
      }
    q.projection.f.push_back(std::move(proj));
  }
  q.x = share(std::move(h));
  q.projection.src = q.x;
  return q;
}

SMap equivariant_quotient_map(const GroupAction& a, const GroupAction& b, const SMap& f,
                              const HomotopyQuotient& qa, const HomotopyQuotient& qb) {
  const int D = qa.x->trunc;
  if (qb.x->trunc != D) throw InputError("quotient map: truncations differ");
  for (int k = 0; k <= D; ++k)
    for (Id g = 0; g < a.group.x->size[k]; ++g)
      for (Id x = 0; x < a.x->size[k]; ++x)
        if (f.f[k][a.apply(k, g, x)] != b.apply(k, g, f.f[k][x]))
          throw InputError("quotient map: f is not equivariant at level " + std::to_string(k));
  SMap m{qa.x, qb.x, {}};
  for (int k = 0; k <= D; ++k) {
    Table t(qa.x->size[k]);
    for (Id w = 0; w < qa.wbar.x->size[k]; ++w)
      for (Id x = 0; x < a.x->size[k]; ++x) t[qa.encode(k, w, x)] = qb.encode(k, w, f.f[k][x]);
    m.f.push_back(std::move(t));
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

/// Full lift vector of a horn in X from the images of its top faces.
std::vector<Id> horn_tuple(const SSet& X, const Shape& s, int i, const std::vector<Id>& top) {
  const int k = s.n;
  const unsigned full = (1u << (k + 1)) - 1;
  std::vector<Id> h(s.faces.size());
  for (std::size_t p = 0; p < s.faces.size(); ++p) {
    unsigned m = s.faces[p];
    int j = 0;
    while (j <= k && (j == i || (m >> j & 1u))) ++j;
    if (j > k) throw InvariantError("horn face not inside a top face");
    unsigned face = full & ~(1u << j);
    unsigned rel = 0;
    int pos = 0;
    for (int v = 0; v <= k; ++v)
      if (face >> v & 1u) {
        if (m >> v & 1u) rel |= 1u << pos;
        ++pos;
      }
    h[p] = restrict_to(X, k - 1, top[j], rel);
  }
  return h;
}

std::size_t top_face_pos(const Shape& s, int j) {
  const unsigned face = ((1u << (s.n + 1)) - 1) & ~(1u << j);
  auto it = std::find(s.faces.begin(), s.faces.end(), face);
  return static_cast<std::size_t>(it - s.faces.begin());
}

}  // namespace

WbarHornIso wbar_horn_iso(const SimplicialGroup& g, int k, int i, const Budget& budget) {
  if (k < 1 || i < 0 || i > k) throw InputError("W̄ horn: index out of range");
  auto W = w_bar(g, k, budget);
  WbarHornIso out;
  out.k = k;
  out.i = i;
  out.horn = horn_object(to_terminal(W.x), k, i, budget);
  if (k == 1) {
    if (out.horn.size() != 1) throw InvariantError("Λ^1_i(W̄G) is not a point");
    out.map = {0};
    return out;
  }
  const int ip = std::min(i, k - 1);
  out.ghorn = horn_object(to_terminal(g.x), k - 1, ip, budget);
  const Id ng = static_cast<Id>(out.ghorn.size());
  const LevelGroup& G2 = g.level[k - 2];
  out.map.resize(out.horn.size());
  std::vector<char> seen(static_cast<std::size_t>(W.x->size[k - 1]) * ng, 0);
  for (Id c = 0; c < out.horn.size(); ++c) {
    std::vector<std::vector<Id>> gj(k + 1);
    for (int j = 0; j <= k; ++j)
      if (j != i) gj[j] = W.radix[k - 1].decode(out.horn.lifts[c][top_face_pos(out.horn.shape, j)]);
    std::vector<Id> top(k, 0);
    for (int j = 0; j <= k - 2; ++j)
      if (j != i) top[j] = gj[j][k - 2];
    Id w;
    if (i < k - 1) {
      w = W.radix[k - 1].encode(gj[k]);
      top[k - 1] = G2.mul(G2.inv(gj[k][k - 2]), gj[k - 1][k - 2]);
    } else {
      w = W.radix[k - 1].encode(i == k - 1 ? gj[k] : gj[k - 1]);
    }
    long t = out.ghorn.find(horn_tuple(*g.x, out.ghorn.shape, ip, top), 0);
    if (t < 0) throw InvariantError("W̄ horn image is not a horn of G");
    Id code = w * ng + static_cast<Id>(t);
    if (seen[code]) throw InvariantError("W̄ horn map is not injective");
    seen[code] = 1;
    out.map[c] = code;
  }
  if (out.horn.size() != seen.size()) throw InvariantError("W̄ horn map is not surjective");
  // commuting square with λ^k_i(W̄G) and 1 x λ^{k-1}_{i'}(G)
  for (Id w = 0; w < W.x->size[k]; ++w) {
    Id last = W.radix[k].decode(w)[k - 1];
    Id first = W.x->d[k][i == k ? k - 1 : k][w];
    if (out.map[out.horn.compare[w]] != first * ng + out.ghorn.compare[last])
      throw InvariantError("W̄ horn square does not commute");
  }
  return out;
}

}  // namespace simplex
