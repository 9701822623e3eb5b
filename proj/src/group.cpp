#include "simplex/group.hpp"

#include <map>
#include <sstream>

namespace simplex {

bool FinGroup::abelian() const {
  for (Id a = 0; a < order; ++a)
    for (Id b = 0; b < a; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

std::string FinGroup::check() const {
  std::ostringstream os;
  if (mul.size() != order || inv.size() != order || e >= order) return "table sizes";
  for (Id a = 0; a < order; ++a) {
    if (mul[a].size() != order) return "row size";
    if (mul[a][e] != a || mul[e][a] != a) {
      os << "identity fails at " << a;
      return os.str();
    }
    if (mul[a][inv[a]] != e || mul[inv[a]][a] != e) {
      os << "inverse fails at " << a;
      return os.str();
    }
  }
  for (Id a = 0; a < order; ++a)
    for (Id b = 0; b < order; ++b)
      for (Id c = 0; c < order; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          return os.str();
        }
  return {};
}

FinGroup FinGroup::from_table(std::vector<Table> mul, std::string name) {
  FinGroup g;
  g.order = static_cast<Id>(mul.size());
  g.mul = std::move(mul);
  g.name = std::move(name);
  g.e = g.order;
  for (Id a = 0; a < g.order && g.e == g.order; ++a) {
    bool unit = true;
    for (Id b = 0; b < g.order && unit; ++b) unit = g.mul[a][b] == b && g.mul[b][a] == b;
    if (unit) g.e = a;
  }
  if (g.e == g.order) throw InputError("multiplication table has no identity");
  g.inv.assign(g.order, g.order);
  for (Id a = 0; a < g.order; ++a)
    for (Id b = 0; b < g.order; ++b)
      if (g.mul[a][b] == g.e) g.inv[a] = b;
  for (Id a = 0; a < g.order; ++a)
    if (g.inv[a] == g.order) throw InputError("multiplication table has no inverses");
  std::string err = g.check();
  if (!err.empty()) throw InputError("not a group: " + err);
  return g;
}

FinGroup cyclic(Id n) {
  std::vector<Table> m(n, Table(n));
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) m[a][b] = (a + b) % n;
  return FinGroup::from_table(std::move(m), "Z" + std::to_string(n));
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  const Id n = a.order * b.order;
  std::vector<Table> m(n, Table(n));
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      m[x][y] = pair_id(b, a.mul[x / b.order][y / b.order], b.mul[x % b.order][y % b.order]);
  return FinGroup::from_table(std::move(m), a.name + "x" + b.name);
}

FinGroup dihedral(Id n) {
  // element (r, f) = rot^r * flip^f, id = 2r + f
  const Id N = 2 * n;
  std::vector<Table> m(N, Table(N));
  for (Id x = 0; x < N; ++x)
    for (Id y = 0; y < N; ++y) {
      Id r1 = x / 2, f1 = x % 2, r2 = y / 2, f2 = y % 2;
      Id r = f1 ? (r1 + n - r2) % n : (r1 + r2) % n;
      m[x][y] = 2 * r + (f1 ^ f2);
    }
  return FinGroup::from_table(std::move(m), "D" + std::to_string(n));
}

FinGroup dicyclic(Id n) {
  // a^r x^f with a^{2n} = 1, x^2 = a^n, x a x^{-1} = a^{-1}; id = 2r + f
  const Id M = 2 * n, N = 4 * n;
  std::vector<Table> m(N, Table(N));
  for (Id p = 0; p < N; ++p)
    for (Id q = 0; q < N; ++q) {
      Id r1 = p / 2, f1 = p % 2, r2 = q / 2, f2 = q % 2;
      Id r, f;
      if (!f1) {
        r = (r1 + r2) % M;
        f = f2;
      } else if (!f2) {
        r = (r1 + M - r2) % M;
        f = 1;
      } else {
        r = (r1 + M - r2 + n) % M;
        f = 0;
      }
      m[p][q] = 2 * r + f;
    }
  return FinGroup::from_table(std::move(m), "Dic" + std::to_string(n));
}

FinGroup permutation_group(const std::vector<std::vector<int>>& gens, std::string name) {
  const std::size_t deg = gens.at(0).size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::map<std::vector<int>, Id> index{{id, 0}};
  std::vector<std::vector<int>> elems{id};
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];  // p after q
    return r;
  };
  for (std::size_t at = 0; at < elems.size(); ++at)
    for (const auto& g : gens) {
      auto r = compose(elems[at], g);
      if (index.emplace(r, static_cast<Id>(elems.size())).second) elems.push_back(r);
    }
  const Id n = static_cast<Id>(elems.size());
  std::vector<Table> m(n, Table(n));
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) m[a][b] = index.at(compose(elems[a], elems[b]));
  return FinGroup::from_table(std::move(m), std::move(name));
}

std::vector<FinGroup> small_groups() {
  std::vector<FinGroup> g;
  for (Id n = 1; n <= 12; ++n) g.push_back(cyclic(n));
  g.push_back(direct_product(cyclic(2), cyclic(2)));
  g.push_back(dihedral(3));
  g.push_back(direct_product(cyclic(4), cyclic(2)));
  g.push_back(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
  g.push_back(dihedral(4));
  g.push_back(dicyclic(2));
  g.push_back(direct_product(cyclic(3), cyclic(3)));
  g.push_back(dihedral(5));
  g.push_back(direct_product(cyclic(6), cyclic(2)));
  g.push_back(dihedral(6));
  g.push_back(dicyclic(3));
  g.push_back(permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"));
  return g;
}

}  // namespace simplex
