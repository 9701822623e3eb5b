#include "simplex/nerve.hpp"

#include <map>
#include <sstream>

namespace simplex {

std::string Groupoid::check() const {
  std::ostringstream os;
  if (src.size() != arrows || tgt.size() != arrows || inv.size() != arrows ||
      unit.size() != objects || comp.size() != arrows)
    return "table sizes";
  for (Id o = 0; o < objects; ++o)
    if (src[unit[o]] != o || tgt[unit[o]] != o) return "unit has wrong endpoints";
  for (Id a = 0; a < arrows; ++a) {
    for (Id b = 0; b < arrows; ++b) {
      Id c = comp[a][b];
      if ((tgt[a] == src[b]) != (c != kNone)) {
        os << "composability mismatch at (" << a << "," << b << ")";
        return os.str();
      }
      if (c != kNone && (src[c] != src[a] || tgt[c] != tgt[b])) return "composite endpoints";
    }
    if (comp[unit[src[a]]][a] != a || comp[a][unit[tgt[a]]] != a) return "unit law";
    if (comp[a][inv[a]] != unit[src[a]] || comp[inv[a]][a] != unit[tgt[a]]) return "inverse law";
  }
  for (Id a = 0; a < arrows; ++a)
    for (Id b = 0; b < arrows; ++b) {
      if (comp[a][b] == kNone) continue;
      for (Id c = 0; c < arrows; ++c) {
        if (comp[b][c] == kNone) continue;
        if (comp[comp[a][b]][c] != comp[a][comp[b][c]]) {
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          return os.str();
        }
      }
    }
  return {};
}

Groupoid group_as_groupoid(const FinGroup& g) {
  Groupoid G;
  G.objects = 1;
  G.arrows = g.order;
  G.src.assign(g.order, 0);
  G.tgt.assign(g.order, 0);
  G.unit = {g.e};
  G.inv = g.inv;
  G.comp = g.mul;
  return G;
}

Groupoid pair_groupoid(Id n) {
  Groupoid G;
  G.objects = n;
  G.arrows = n * n;
  G.src.resize(n * n);
  G.tgt.resize(n * n);
  G.inv.resize(n * n);
  G.unit.resize(n);
  G.comp.assign(n * n, Table(n * n, Groupoid::kNone));
  for (Id a = 0; a < n; ++a) {
    G.unit[a] = a * n + a;
    for (Id b = 0; b < n; ++b) {
      Id x = a * n + b;
      G.src[x] = a;
      G.tgt[x] = b;
      G.inv[x] = b * n + a;
      for (Id c = 0; c < n; ++c) G.comp[x][b * n + c] = a * n + c;
    }
  }
  return G;
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  Groupoid G;
  G.objects = a.objects + b.objects;
  G.arrows = a.arrows + b.arrows;
  G.src = a.src;
  G.tgt = a.tgt;
  G.inv = a.inv;
  G.unit = a.unit;
  for (Id x = 0; x < b.arrows; ++x) {
    G.src.push_back(b.src[x] + a.objects);
    G.tgt.push_back(b.tgt[x] + a.objects);
    G.inv.push_back(b.inv[x] + a.arrows);
  }
  for (Id o = 0; o < b.objects; ++o) G.unit.push_back(b.unit[o] + a.arrows);
  G.comp.assign(G.arrows, Table(G.arrows, Groupoid::kNone));
  for (Id x = 0; x < a.arrows; ++x)
    for (Id y = 0; y < a.arrows; ++y) G.comp[x][y] = a.comp[x][y];
  for (Id x = 0; x < b.arrows; ++x)
    for (Id y = 0; y < b.arrows; ++y)
      if (b.comp[x][y] != Groupoid::kNone) G.comp[x + a.arrows][y + a.arrows] = b.comp[x][y] + a.arrows;
  return G;
}

Groupoid groupoid_product(const Groupoid& a, const Groupoid& b) {
  Groupoid G;
  G.objects = a.objects * b.objects;
  G.arrows = a.arrows * b.arrows;
  auto ob = [&](Id x, Id y) { return x * b.objects + y; };
  auto ar = [&](Id x, Id y) { return x * b.arrows + y; };
  G.src.resize(G.arrows);
  G.tgt.resize(G.arrows);
  G.inv.resize(G.arrows);
  G.unit.resize(G.objects);
  G.comp.assign(G.arrows, Table(G.arrows, Groupoid::kNone));
  for (Id x = 0; x < a.objects; ++x)
    for (Id y = 0; y < b.objects; ++y) G.unit[ob(x, y)] = ar(a.unit[x], b.unit[y]);
  for (Id x = 0; x < a.arrows; ++x)
    for (Id y = 0; y < b.arrows; ++y) {
      Id g = ar(x, y);
      G.src[g] = ob(a.src[x], b.src[y]);
      G.tgt[g] = ob(a.tgt[x], b.tgt[y]);
      G.inv[g] = ar(a.inv[x], b.inv[y]);
      for (Id u = 0; u < a.arrows; ++u) {
        if (a.comp[x][u] == Groupoid::kNone) continue;
        for (Id v = 0; v < b.arrows; ++v)
          if (b.comp[y][v] != Groupoid::kNone) G.comp[g][ar(u, v)] = ar(a.comp[x][u], b.comp[y][v]);
      }
    }
  return G;
}

Groupoid random_groupoid(std::mt19937& rng) {
  static const std::vector<FinGroup> groups = {cyclic(1), cyclic(2), cyclic(3)};
  std::uniform_int_distribution<int> nblocks(1, 3), objs(1, 2), grp(0, 2);
  Groupoid G;
  int blocks = nblocks(rng);
  for (int b = 0; b < blocks; ++b) {
    Groupoid block = groupoid_product(pair_groupoid(objs(rng)), group_as_groupoid(groups[grp(rng)]));
    G = b == 0 ? block : disjoint_union(G, block);
  }
  return G;
}

Nerve nerve(const Groupoid& g, int trunc, const Budget& budget) {
  Nerve out;
  out.chains.resize(trunc + 1);
  std::vector<TupleMap<Id>> index(trunc + 1);
  for (Id o = 0; o < g.objects; ++o) {
    index[0].emplace(std::vector<Id>{o}, o);
    out.chains[0].push_back({o});
  }
  for (int k = 1; k <= trunc; ++k) {
    for (const auto& c : out.chains[k - 1]) {
      for (Id a = 0; a < g.arrows; ++a) {
        if (k == 1 ? g.src[a] != c[0] : g.tgt[c.back()] != g.src[a]) continue;
        std::vector<Id> n = k == 1 ? std::vector<Id>{a} : c;
        if (k > 1) n.push_back(a);
        index[k].emplace(n, static_cast<Id>(out.chains[k].size()));
        out.chains[k].push_back(std::move(n));
      }
    }
    check_budget(out.chains[k].size(), budget, "nerve");
  }
  std::vector<Id> sizes;
  for (int k = 0; k <= trunc; ++k) sizes.push_back(static_cast<Id>(out.chains[k].size()));
  SSet& x = out.x;
  x = SSet::with_sizes(sizes);
  for (int k = 0; k <= trunc; ++k)
    for (Id e = 0; e < sizes[k]; ++e) {
      const auto& c = out.chains[k][e];
      if (k == 1) {
        x.d[1][0][e] = g.tgt[c[0]];
        x.d[1][1][e] = g.src[c[0]];
      } else if (k > 1) {
        for (int i = 0; i <= k; ++i) {
          std::vector<Id> r;
          for (int j = 0; j < k; ++j) {
            if (j == i - 1 && i > 0 && i < k) {
              r.push_back(g.comp[c[j]][c[j + 1]]);
              ++j;
            } else if (!(i == 0 && j == 0) && !(i == k && j == k - 1)) {
              r.push_back(c[j]);
            }
          }
          x.d[k][i][e] = index[k - 1].at(r);
        }
      }
      if (k < trunc)
        for (int i = 0; i <= k; ++i) {
          Id v;
          if (k == 0)
            v = c[0];
          else
            v = i < k ? g.src[c[i]] : g.tgt[c[k - 1]];
          std::vector<Id> r = k == 0 ? std::vector<Id>{} : c;
          r.insert(r.begin() + i, g.unit[v]);
          x.s[k][i][e] = index[k + 1].at(r);
        }
    }
  x.cosk = 2;
  return out;
}

Groupoid extract_groupoid(const SSet& x) {
  if (x.trunc < 2) throw InputError("groupoid extraction needs levels up to 2");
  Groupoid G;
  G.objects = x.size[0];
  G.arrows = x.size[1];
  G.src = x.d[1][1];
  G.tgt = x.d[1][0];
  G.unit = x.s[0][0];
  std::map<std::pair<Id, Id>, std::vector<Id>> fill;  // (d_2, d_0) -> 2-simplices
  for (Id t = 0; t < x.size[2]; ++t) fill[{x.d[2][2][t], x.d[2][0][t]}].push_back(t);
  G.comp.assign(G.arrows, Table(G.arrows, Groupoid::kNone));
  for (Id a = 0; a < G.arrows; ++a)
    for (Id b = 0; b < G.arrows; ++b) {
      if (G.tgt[a] != G.src[b]) continue;
      auto it = fill.find({a, b});
      if (it == fill.end() || it->second.size() != 1)
        throw InputError("inner 2-horn does not have a unique filler");
      G.comp[a][b] = x.d[2][1][it->second[0]];
    }
  G.inv.assign(G.arrows, Groupoid::kNone);
  for (Id a = 0; a < G.arrows; ++a)
    for (Id b = 0; b < G.arrows; ++b)
      if (G.comp[a][b] != Groupoid::kNone && G.comp[a][b] == G.unit[G.src[a]] &&
          G.comp[b][a] == G.unit[G.tgt[a]])
        G.inv[a] = b;
  for (Id a = 0; a < G.arrows; ++a)
    if (G.inv[a] == Groupoid::kNone) throw InputError("extracted arrow has no inverse");
  std::string err = G.check();
  if (!err.empty()) throw InputError("extracted data is not a groupoid: " + err);
  return G;
}

Cech cech_nerve(const Table& p, Id target_size, int trunc, const Budget& budget) {
  Cech out;
  out.tuples.resize(trunc + 1);
  std::vector<std::vector<Id>> fibre(target_size);
  for (Id s = 0; s < p.size(); ++s) {
    if (p[s] >= target_size) throw InputError("cover map leaves its target");
    fibre[p[s]].push_back(s);
  }
  std::vector<TupleMap<Id>> index(trunc + 1);
  for (int k = 0; k <= trunc; ++k) {
    std::vector<Id> cur;
    for (Id t = 0; t < target_size; ++t) {
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k + 1) {
          index[k].emplace(cur, static_cast<Id>(out.tuples[k].size()));
          out.tuples[k].push_back(cur);
          return;
        }
        for (Id s : fibre[t]) {
          cur.push_back(s);
          self(self, pos + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
    }
    check_budget(out.tuples[k].size(), budget, "Cech nerve");
  }
  std::vector<Id> sizes;
  for (auto& l : out.tuples) sizes.push_back(static_cast<Id>(l.size()));
  SSet x = SSet::with_sizes(sizes);
  for (int k = 0; k <= trunc; ++k)
    for (Id e = 0; e < sizes[k]; ++e) {
      const auto& t = out.tuples[k][e];
      for (int i = 0; i <= k && k > 0; ++i) {
        auto r = t;
        r.erase(r.begin() + i);
        x.d[k][i][e] = index[k - 1].at(r);
      }
      if (k < trunc)
        for (int i = 0; i <= k; ++i) {
          auto r = t;
          r.insert(r.begin() + i, t[i]);
          x.s[k][i][e] = index[k + 1].at(r);
        }
    }
  x.cosk = target_size <= 1 ? 0 : 1;
  out.nerve = share(std::move(x));
  auto base = share(constant(target_size, trunc));
  out.aug = SMap{out.nerve, base, {}};
  for (int k = 0; k <= trunc; ++k) {
    Table f(sizes[k]);
    for (Id e = 0; e < sizes[k]; ++e) f[e] = p[out.tuples[k][e][0]];
    out.aug.f.push_back(std::move(f));
  }
  return out;
}

}  // namespace simplex
