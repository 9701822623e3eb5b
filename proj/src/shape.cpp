#include "simplex/shape.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace simplex {

namespace {

void sort_faces(std::vector<unsigned>& f) {
  std::sort(f.begin(), f.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

}  // namespace

Shape Shape::generated(int n, const std::vector<unsigned>& gens) {
  std::set<unsigned> all;
  for (unsigned g : gens) {
    // every nonempty submask
    for (unsigned sub = g; sub; sub = (sub - 1) & g) all.insert(sub);
  }
  Shape s;
  s.n = n;
  s.faces.assign(all.begin(), all.end());
  sort_faces(s.faces);
  return s;
}

Shape Shape::simplex(int n) { return generated(n, {(1u << (n + 1)) - 1}); }

Shape Shape::boundary(int n) {
  unsigned full = (1u << (n + 1)) - 1;
  return horn_set(n, full);
}

Shape Shape::horn_set(int n, unsigned mask) {
  unsigned full = (1u << (n + 1)) - 1;
  std::vector<unsigned> gens;
  for (int j = 0; j <= n; ++j)
    if ((mask >> j) & 1u) gens.push_back(full & ~(1u << j));
  Shape s = generated(n, gens);
  s.n = n;
  return s;
}

Shape Shape::horn(int n, int i) {
  unsigned full = (1u << (n + 1)) - 1;
  return horn_set(n, full & ~(1u << i));
}

bool Shape::contains(unsigned mask) const {
  return std::find(faces.begin(), faces.end(), mask) != faces.end();
}

int Shape::dim() const { return faces.empty() ? -1 : std::popcount(faces.back()) - 1; }

std::string Shape::describe() const {
  std::ostringstream os;
  os << "subcomplex of Delta^" << n << " with " << faces.size() << " faces";
  return os.str();
}

std::vector<int> vertices_of(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) v.push_back(i);
  return v;
}

Shape join_shape(const Shape& a, const Shape& b) {
  Shape s;
  s.n = a.n + b.n + 1;
  const int shift = a.n + 1;
  for (unsigned f : a.faces) s.faces.push_back(f);
  for (unsigned g : b.faces) s.faces.push_back(g << shift);
  for (unsigned f : a.faces)
    for (unsigned g : b.faces) s.faces.push_back(f | (g << shift));
  sort_faces(s.faces);
  return s;
}

ShapeSSet shape_sset(const Shape& s, int trunc) {
  ShapeSSet out;
  std::vector<std::map<std::vector<int>, Id>> index(trunc + 1);
  out.seqs.resize(trunc + 1);
  for (int m = 0; m <= trunc; ++m) {
    std::vector<int> seq(m + 1, 0);
    // enumerate nondecreasing sequences with values in [0, n]
    std::vector<int> cur;
    auto rec = [&](auto&& self, int pos, int lo) -> void {
      if (pos == m + 1) {
        unsigned mask = 0;
        for (int v : cur) mask |= 1u << v;
        if (s.contains(mask)) {
          index[m].emplace(cur, static_cast<Id>(out.seqs[m].size()));
          out.seqs[m].push_back(cur);
        }
        return;
      }
      for (int v = lo; v <= s.n; ++v) {
        cur.push_back(v);
        self(self, pos + 1, v);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
  std::vector<Id> sizes;
  for (int m = 0; m <= trunc; ++m) sizes.push_back(static_cast<Id>(out.seqs[m].size()));
  out.x = SSet::with_sizes(sizes);
  for (int m = 0; m <= trunc; ++m)
    for (Id e = 0; e < sizes[m]; ++e) {
      const auto& q = out.seqs[m][e];
      for (int i = 0; i <= m && m >= 1; ++i) {
        auto r = q;
        r.erase(r.begin() + i);
        out.x.d[m][i][e] = index[m - 1].at(r);
      }
      if (m < trunc)
        for (int i = 0; i <= m; ++i) {
          auto r = q;
          r.insert(r.begin() + i, q[i]);
          out.x.s[m][i][e] = index[m + 1].at(r);
        }
    }
  return out;
}

}  // namespace simplex
