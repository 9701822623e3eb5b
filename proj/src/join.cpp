#include "simplex/join.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace simplex {

SSet join(const SSet& s, const SSet& t) {
  const int D = std::min(s.trunc, t.trunc);
  // element = (kind, p, a, b): kind 0 pure S, 1 pure T, 2 mixed with S-part in S_p
  std::vector<std::vector<std::vector<Id>>> elems(D + 1);
  std::vector<TupleMap<Id>> index(D + 1);
  auto add = [&](int k, std::vector<Id> key) {
    index[k].emplace(key, static_cast<Id>(elems[k].size()));
    elems[k].push_back(std::move(key));
  };
  for (int k = 0; k <= D; ++k) {
    for (Id a = 0; a < s.size[k]; ++a) add(k, {0, 0, a, 0});
    for (Id b = 0; b < t.size[k]; ++b) add(k, {1, 0, 0, b});
    for (int p = 0; p < k; ++p)
      for (Id a = 0; a < s.size[p]; ++a)
        for (Id b = 0; b < t.size[k - 1 - p]; ++b) add(k, {2, static_cast<Id>(p), a, b});
  }
  std::vector<Id> sizes;
  for (auto& l : elems) sizes.push_back(static_cast<Id>(l.size()));
  SSet x = SSet::with_sizes(sizes);
  for (int k = 0; k <= D; ++k)
    for (Id e = 0; e < sizes[k]; ++e) {
      const auto& el = elems[k][e];
      const Id kind = el[0], a = el[2], b = el[3];
      const int p = static_cast<int>(el[1]), q = k - 1 - p;
      for (int i = 0; i <= k && k >= 1; ++i) {
        std::vector<Id> r;
        if (kind == 0) {
          r = {0, 0, s.d[k][i][a], 0};
        } else if (kind == 1) {
          r = {1, 0, 0, t.d[k][i][b]};
        } else if (i <= p) {
          r = p == 0 ? std::vector<Id>{1, 0, 0, b}
                     : std::vector<Id>{2, static_cast<Id>(p - 1), s.d[p][i][a], b};
        } else {
          r = q == 0 ? std::vector<Id>{0, 0, a, 0}
                     : std::vector<Id>{2, static_cast<Id>(p), a, t.d[q][i - p - 1][b]};
        }
        x.d[k][i][e] = index[k - 1].at(r);
      }
      if (k < D)
        for (int i = 0; i <= k; ++i) {
          std::vector<Id> r;
          if (kind == 0)
            r = {0, 0, s.s[k][i][a], 0};
          else if (kind == 1)
            r = {1, 0, 0, t.s[k][i][b]};
          else if (i <= p)
            r = {2, static_cast<Id>(p + 1), s.s[p][i][a], b};
          else
            r = {2, static_cast<Id>(p), a, t.s[q][i - p - 1][b]};
          x.s[k][i][e] = index[k + 1].at(r);
        }
    }
  return x;
}

bool AugmentedSSet::valid() const {
  if (aug.size() != x.size[0]) return false;
  for (Id a : aug)
    if (a >= minus_one) return false;
  if (x.trunc >= 1)
    for (Id e = 0; e < x.size[1]; ++e)
      if (aug[x.d[1][0][e]] != aug[x.d[1][1][e]]) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t face_pos(const Shape& s, unsigned mask) {
  auto it = std::find(s.faces.begin(), s.faces.end(), mask);
  if (it == s.faces.end()) throw InvariantError("face is missing from a join shape");
  return static_cast<std::size_t>(it - s.faces.begin());
}

Id lookup(const std::vector<TupleMap<Id>>& index, int k, const std::vector<Id>& h) {
  auto it = index[k].find(h);
  if (it == index[k].end()) throw InvariantError("cotensor element not found");
  return it->second;
}

std::vector<TupleMap<Id>> build_index(const Cotensor& c) {
  std::vector<TupleMap<Id>> index(c.x.trunc + 1);
  for (int k = 0; k <= c.x.trunc; ++k)
    for (Id e = 0; e < c.elems[k].size(); ++e) index[k].emplace(c.elems[k][e], e);
  return index;
}

}  // namespace

Id Cotensor::top(int k, Id e) const {
  const Shape& L = levels[k];
  const unsigned full = (1u << (L.n + 1)) - 1;
  return elems[k][e][face_pos(L, full)];
}

Cotensor cotensor_join(const SSet& x, const Shape& s, int trunc, const Budget& budget) {
  Cotensor c;
  c.shape = s;
  const int a = s.n;
  for (int k = 0; k <= trunc; ++k) c.levels.push_back(join_shape(s, Shape::simplex(k)));
  if (c.levels[trunc].dim() > x.trunc)
    throw InputError("cotensor: target is not stored to the required level");
  std::vector<Id> sizes;
  for (int k = 0; k <= trunc; ++k) {
    c.elems.push_back(hom(c.levels[k], x, budget).maps);
    sizes.push_back(static_cast<Id>(c.elems[k].size()));
  }
  c.x = SSet::with_sizes(sizes);
  auto index = build_index(c);
  for (int k = 1; k <= trunc; ++k) {
    const Shape& Lk = c.levels[k];
    const Shape& Ll = c.levels[k - 1];
    for (int i = 0; i <= k; ++i) {
      const int pos = a + 1 + i;
      std::vector<std::size_t> src;  // face of L_{k-1} -> face of L_k
      for (unsigned G : Ll.faces) {
        unsigned lowbits = G & ((1u << pos) - 1);
        unsigned high = (G >> pos) << (pos + 1);
        src.push_back(face_pos(Lk, lowbits | high));
      }
      std::vector<Id> h(Ll.faces.size());
      for (Id e = 0; e < sizes[k]; ++e) {
        for (std::size_t j = 0; j < src.size(); ++j) h[j] = c.elems[k][e][src[j]];
        c.x.d[k][i][e] = lookup(index, k - 1, h);
      }
    }
  }
  for (int k = 0; k < trunc; ++k) {
    const Shape& Lk = c.levels[k];
    const Shape& Lu = c.levels[k + 1];
    for (int i = 0; i <= k; ++i) {
      const int pos = a + 1 + i;
      auto sigma = [&](int v) { return v <= pos ? v : v - 1; };
      struct Plan {
        std::size_t face;
        int dim;
        std::vector<int> theta;
      };
      std::vector<Plan> plan;
      for (unsigned G : Lu.faces) {
        unsigned F = 0;
        auto gv = vertices_of(G);
        for (int v : gv) F |= 1u << sigma(v);
        auto fv = vertices_of(F);
        std::vector<int> theta;
        for (int v : gv)
          theta.push_back(static_cast<int>(std::find(fv.begin(), fv.end(), sigma(v)) - fv.begin()));
        plan.push_back({face_pos(Lk, F), static_cast<int>(fv.size()) - 1, std::move(theta)});
      }
      std::vector<Id> h(Lu.faces.size());
      for (Id e = 0; e < sizes[k]; ++e) {
        for (std::size_t j = 0; j < plan.size(); ++j)
          h[j] = apply_monotone(x, plan[j].dim, c.elems[k][e][plan[j].face], plan[j].theta);
        c.x.s[k][i][e] = lookup(index, k + 1, h);
      }
    }
  }
  return c;
}

Cotensor dec(const SSet& x, int n, int trunc, const Budget& budget) {
  if (n < 0) throw InputError("dec: negative shift");
  return cotensor_join(x, n == 0 ? Shape::empty() : Shape::simplex(n - 1), trunc, budget);
}

std::vector<Table> restrict_cotensor(const Cotensor& from, const Cotensor& to) {
  auto index = build_index(to);
  std::vector<Table> out;
  const int D = std::min(from.x.trunc, to.x.trunc);
  for (int k = 0; k <= D; ++k) {
    std::vector<std::size_t> pos;
    for (unsigned G : to.levels[k].faces) pos.push_back(face_pos(from.levels[k], G));
    Table t(from.elems[k].size());
    std::vector<Id> h(pos.size());
    for (Id e = 0; e < t.size(); ++e) {
      for (std::size_t j = 0; j < pos.size(); ++j) h[j] = from.elems[k][e][pos[j]];
      t[e] = lookup(index, k, h);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Table> push_cotensor(const SMap& f, const Cotensor& from, const Cotensor& to) {
  auto index = build_index(to);
  std::vector<Table> out;
  for (int k = 0; k <= from.x.trunc; ++k) {
    const Shape& L = from.levels[k];
    Table t(from.elems[k].size());
    std::vector<Id> h(L.faces.size());
    for (Id e = 0; e < t.size(); ++e) {
      for (std::size_t j = 0; j < L.faces.size(); ++j)
        h[j] = f.f[std::popcount(L.faces[j]) - 1][from.elems[k][e][j]];
      t[e] = lookup(index, k, h);
    }
    out.push_back(std::move(t));
  }
  return out;
}

BoundaryJoinMap boundary_join_map(const SMap& f, int k, int trunc, const Budget& budget) {
  if (k < 1) throw InputError("boundary join map needs k >= 1");
  BoundaryJoinMap m;
  const SSet& X = *f.src;
  const SSet& Y = *f.dst;
  m.A = cotensor_join(X, Shape::simplex(k - 1), trunc, budget);
  m.B = cotensor_join(X, Shape::boundary(k - 1), trunc, budget);
  m.C = cotensor_join(Y, Shape::boundary(k - 1), trunc, budget);
  m.E = cotensor_join(Y, Shape::simplex(k - 1), trunc, budget);
  auto bc = push_cotensor(f, m.B, m.C);
  auto ec = restrict_cotensor(m.E, m.C);
  m.P = pullback(m.B.x, bc, m.E.x, ec, m.C.x, budget);
  auto ab = restrict_cotensor(m.A, m.B);
  auto ae = push_cotensor(f, m.A, m.E);
  auto A = share(m.A.x);
  auto P = share(m.P.obj);
  m.map = SMap{A, P, {}};
  for (int l = 0; l <= trunc; ++l) {
    std::unordered_map<std::uint64_t, Id> pairs;
    for (Id p = 0; p < m.P.obj.size[l]; ++p)
      pairs.emplace((static_cast<std::uint64_t>(m.P.pr1[l][p]) << 32) | m.P.pr2[l][p], p);
    Table t(m.A.x.size[l]);
    for (Id e = 0; e < t.size(); ++e)
      t[e] = pairs.at((static_cast<std::uint64_t>(ab[l][e]) << 32) | ae[l][e]);
    m.map.f.push_back(std::move(t));
  }
  return m;
}

std::string check_star_lemma(const SMap& f, int k, int l, int i, const Budget& budget) {
  if (l < 1 || i < 0 || i > l) return "horn index out of range";
  auto m = boundary_join_map(f, k, l, budget);
  auto H = horn_object(m.map, l, i, budget);
  auto T = horn_object(f, k + l, k + i, budget);
  if (H.size() != T.size()) return "carriers have different sizes";
  const unsigned full_low = (1u << k) - 1;
  const Shape& Bl = m.B.levels[l];
  const Shape& horn = H.shape;
  const int first_vertex = vertices_of(horn.faces.front()).front();
  const std::size_t first_pos = face_pos(horn, 1u << first_vertex);
  const std::size_t low_in_a0 = face_pos(m.A.levels[0], full_low);
  std::vector<char> hit(T.size(), 0);
  std::vector<Id> h(T.shape.faces.size());
  for (Id c = 0; c < H.size(); ++c) {
    const Id p = H.base[c];
    const Id b = m.P.pr1[l][p], e = m.P.pr2[l][p];
    for (std::size_t j = 0; j < T.shape.faces.size(); ++j) {
      unsigned F = T.shape.faces[j];
      unsigned low = F & full_low, high = F >> k;
      if (low != full_low) {
        h[j] = m.B.elems[l][b][face_pos(Bl, F)];
      } else if (high) {
        int dim = std::popcount(high) - 1;
        h[j] = m.A.top(dim, H.lifts[c][face_pos(horn, high)]);
      } else {
        h[j] = m.A.elems[0][H.lifts[c][first_pos]][low_in_a0];
      }
    }
    long t = T.find(h, m.E.top(l, e));
    if (t < 0) return "image of a carrier element is not a relative horn";
    if (hit[t]) return "map between carriers is not injective";
    hit[t] = 1;
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

struct ExpansionSearch {
  const Shape& t;
  std::vector<std::vector<std::pair<std::size_t, int>>> facets;  // (face index, removed vertex)
  std::unordered_set<std::uint64_t> dead;
  ExpansionCertificate cert;
  std::uint64_t goal = 0;

  explicit ExpansionSearch(const Shape& target) : t(target) {
    facets.resize(t.faces.size());
    for (std::size_t j = 0; j < t.faces.size(); ++j) {
      unsigned F = t.faces[j];
      if (std::popcount(F) < 2) continue;
      for (int v : vertices_of(F)) {
        unsigned G = F & ~(1u << v);
        facets[j].push_back({face_pos(t, G), v});
      }
    }
    goal = t.faces.size() == 64 ? ~0ull : (1ull << t.faces.size()) - 1;
  }

  bool dfs(std::uint64_t cur) {
    if (cur == goal) return true;
    if (dead.count(cur)) return false;
    for (std::size_t j = 0; j < t.faces.size(); ++j) {
      if ((cur >> j) & 1u || facets[j].empty()) continue;
      // free pair (G, F): G is the only facet of F not yet present
      int missing = -1;
      std::size_t missing_face = 0;
      bool ok = true;
      for (auto [g, v] : facets[j]) {
        if ((cur >> g) & 1u) continue;
        if (missing >= 0) {
          ok = false;
          break;
        }
        missing = v;
        missing_face = g;
      }
      if (!ok || missing < 0) continue;
      auto verts = vertices_of(t.faces[j]);
      int i = static_cast<int>(std::find(verts.begin(), verts.end(), missing) - verts.begin());
      cert.push_back({static_cast<int>(verts.size()) - 1, i, verts});
      if (dfs(cur | (1ull << j) | (1ull << missing_face))) return true;
      cert.pop_back();
    }
    dead.insert(cur);
    return false;
  }
};

}  // namespace

std::optional<ExpansionCertificate> find_expansion(const Shape& s, const Shape& t) {
  if (t.faces.size() > 64) throw ResourceError("expansion search supports at most 64 faces");
  ExpansionSearch search(t);
  std::uint64_t start = 0;
  for (unsigned F : s.faces) {
    if (!t.contains(F)) throw InputError("expansion: source is not a subcomplex of the target");
    start |= 1ull << face_pos(t, F);
  }
  if (search.dfs(start)) return search.cert;
  return std::nullopt;
}

std::optional<ExpansionCertificate> is_collapsible(const Shape& t) {
  if (t.faces.empty()) return std::nullopt;
  Shape v = Shape::generated(t.n, {t.faces.front()});
  return find_expansion(v, t);
}

Shape replay_expansion(const Shape& s, const ExpansionCertificate& cert) {
  std::vector<unsigned> faces = s.faces;
  auto has = [&](unsigned m) { return std::find(faces.begin(), faces.end(), m) != faces.end(); };
  for (const auto& step : cert) {
    if (static_cast<int>(step.attach.size()) != step.n + 1 || step.i < 0 || step.i > step.n)
      throw InputError("malformed expansion step");
    unsigned F = 0;
    for (int v : step.attach) F |= 1u << v;
    unsigned G = F & ~(1u << step.attach[step.i]);
    if (has(F) || has(G)) throw InputError("expansion step attaches an existing face");
    for (int r = 0; r <= step.n; ++r) {
      if (r == step.i) continue;
      if (!has(F & ~(1u << step.attach[r])))
        throw InputError("expansion step is not attached along a horn");
    }
    faces.push_back(F);
    faces.push_back(G);
  }
  return Shape::generated(s.n, faces);
}

}  // namespace simplex
