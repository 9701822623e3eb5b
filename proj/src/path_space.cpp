#include "simplex/path_space.hpp"

#include <algorithm>
#include <unordered_map>

namespace simplex {

PathSpace path_space(const SMap& f, int k, int trunc, const Budget& budget) {
  const SSet& X = *f.src;
  const SSet& Y = *f.dst;
  if (k < 0) throw InputError("path space: negative k");
  if (k + trunc > std::min(X.trunc, Y.trunc))
    throw InputError("path space: map is not stored to level k + trunc");
  PathSpace p;
  p.f = f;
  p.k = k;
  const unsigned base_mask = (1u << (k + 1)) - 1;
  std::vector<std::unordered_map<Id, Id>> where(trunc + 1);
  std::vector<Id> sizes;
  for (int l = 0; l <= trunc; ++l) {
    const int top = k + l;
    std::vector<int> theta(top + 1), theta_low(top);
    for (int j = 0; j <= top; ++j) theta[j] = std::min(j, k);
    for (int j = 0; j < top; ++j) theta_low[j] = std::min(j, k - 1);
    Table members;
    for (Id x = 0; x < X.size[top]; ++x) {
      Id x0 = restrict_to(X, top, x, base_mask);
      if (f.f[top][x] != apply_monotone(Y, k, f.f[k][x0], theta)) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        ok = X.d[top][i][x] == apply_monotone(X, k - 1, X.d[k][i][x0], theta_low);
      if (!ok) continue;
      where[l].emplace(x, static_cast<Id>(members.size()));
      members.push_back(x);
    }
    check_budget(members.size(), budget, "path space");
    sizes.push_back(static_cast<Id>(members.size()));
    p.embed.push_back(std::move(members));
  }
  SSet c = SSet::with_sizes(sizes);
  auto find = [&](int l, Id x) {
    auto it = where[l].find(x);
    if (it == where[l].end()) throw InvariantError("path space is not closed under face maps");
    return it->second;
  };
  for (int l = 0; l <= trunc; ++l)
    for (Id e = 0; e < sizes[l]; ++e) {
      Id x = p.embed[l][e];
      for (int j = 0; j <= l && l >= 1; ++j) c.d[l][j][e] = find(l - 1, X.d[k + l][k + j][x]);
      if (l < trunc)
        for (int j = 0; j <= l; ++j) c.s[l][j][e] = find(l + 1, X.s[k + l][k + j][x]);
    }
  if (X.cosk && Y.cosk) {
    int d = std::max(1, std::max(*X.cosk, *Y.cosk) - k);
    for (int l = d + 1; l <= trunc; ++l)
      if (!level_is_coskeletal(c, l, budget))
        throw InvariantError("path space is not coskeletal where expected");
    c.cosk = d;
  }
  p.carrier = share(std::move(c));
  return p;
}

Augmentation augment_to_matching(const PathSpace& p, const Budget& budget) {
  const SSet& X = *p.f.src;
  auto M = match_object(p.f, p.k, budget);
  const int trunc = p.carrier->trunc;
  Augmentation a;
  a.pi = SMap{p.carrier, share(constant(static_cast<Id>(M.size()), trunc)), {}};
  const unsigned base_mask = (1u << (p.k + 1)) - 1;
  for (int l = 0; l <= trunc; ++l) {
    Table t(p.carrier->size[l]);
    for (Id e = 0; e < t.size(); ++e)
      t[e] = M.compare[restrict_to(X, p.k + l, p.embed[l][e], base_mask)];
    a.pi.f.push_back(std::move(t));
  }
  a.augmented.x = *p.carrier;
  a.augmented.minus_one = static_cast<Id>(M.size());
  a.augmented.aug = a.pi.f[0];
  if (!a.augmented.valid()) throw InvariantError("augmentation does not coequalize the faces");
  return a;
}

std::string check_path_space_models(const SMap& f, int k, int trunc, const Budget& budget) {
  if (k < 1) return "the join model needs k >= 1";
  auto subset = path_space(f, k, trunc, budget);
  auto m = boundary_join_map(f, k, trunc, budget);
  const SSet& P = m.P.obj;
  // image of P_0 under iterated s_0
  for (int l = 0; l <= trunc; ++l) {
    std::vector<char> constant_image(P.size[l], 0);
    for (Id c = 0; c < P.size[0]; ++c) {
      Id z = c;
      for (int j = 0; j < l; ++j) z = P.s[j][0][z];
      constant_image[z] = 1;
    }
    Table joined;
    for (Id a = 0; a < m.A.x.size[l]; ++a)
      if (constant_image[m.map.f[l][a]]) joined.push_back(m.A.top(l, a));
    Table lhs = joined, rhs = subset.embed[l];
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return "models differ at level " + std::to_string(l);
    // faces of the join model are restrictions along 1 ⋆ d_j
    for (Id a = 0; a < m.A.x.size[l] && l >= 1; ++a) {
      if (!constant_image[m.map.f[l][a]]) continue;
      for (int j = 0; j <= l; ++j)
        if (m.A.top(l - 1, m.A.x.d[l][j][a]) != f.src->d[k + l][k + j][m.A.top(l, a)])
          return "face maps differ at level " + std::to_string(l);
    }
  }
  return {};
}

}  // namespace simplex
