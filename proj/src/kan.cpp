#include "simplex/kan.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <sstream>

namespace simplex {

std::string degree_name(Degree n) { return n ? std::to_string(*n) : "inf"; }

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::groupoid: return "groupoid";
    case Kind::stack: return "stack";
    case Kind::hypercover: return "hypercover";
  }
  return "?";
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

/// Face structure of a shape: for each face, the indices of its codimension-1
/// faces in removal order.
struct FaceData {
  std::vector<int> dim;
  std::vector<std::vector<int>> sub;
};

FaceData face_data(const Shape& s) {
  FaceData fd;
  const auto& F = s.faces;
  for (std::size_t j = 0; j < F.size(); ++j) {
    int m = std::popcount(F[j]) - 1;
    fd.dim.push_back(m);
    std::vector<int> sub;
    if (m >= 1) {
      for (int v : vertices_of(F[j])) {
        unsigned g = F[j] & ~(1u << v);
        auto it = std::find(F.begin(), F.end(), g);
        sub.push_back(static_cast<int>(it - F.begin()));
      }
    }
    fd.sub.push_back(std::move(sub));
  }
  return fd;
}

class IndexCache {
 public:
  explicit IndexCache(const SSet& x) : x_(x), idx_(x.trunc + 1) {}
  const BoundaryIndex& at(int k) {
    if (!idx_[k]) idx_[k] = std::make_unique<BoundaryIndex>(x_, k);
    return *idx_[k];
  }

 private:
  const SSet& x_;
  std::vector<std::unique_ptr<BoundaryIndex>> idx_;
};

/// Enumerates maps shape -> x with h_j in `allowed(j, candidate)`.
template <class Allowed, class Emit>
void enumerate_hom(const Shape& s, const FaceData& fd, const SSet& x, IndexCache& cache,
                   Allowed&& allowed, Emit&& emit) {
  const std::size_t nf = s.faces.size();
  if (s.dim() > x.trunc) throw InputError("hom: shape dimension exceeds stored levels of target");
  std::vector<Id> h(nf, 0);
  // numeric mask order: subfaces come first and each face follows its last
  // edge closely, so the boundary lookups prune early
  std::vector<std::size_t> order(nf);
  for (std::size_t j = 0; j < nf; ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return s.faces[a] < s.faces[b]; });
  auto rec = [&](auto&& self, std::size_t step) -> void {
    if (step == nf) {
      emit(h);
      return;
    }
    const std::size_t j = order[step];
    int m = fd.dim[j];
    if (m == 0) {
      for (Id c = 0; c < x.size[0]; ++c)
        if (allowed(j, c)) {
          h[j] = c;
          self(self, step + 1);
        }
      return;
    }
    std::vector<Id> faces(m + 1);
    for (int i = 0; i <= m; ++i) faces[i] = h[fd.sub[j][i]];
    const auto* cands = cache.at(m).find(faces);
    if (!cands) return;
    for (Id c : *cands)
      if (allowed(j, c)) {
        h[j] = c;
        self(self, step + 1);
      }
  };
  rec(rec, 0);
}

}  // namespace

HomSet hom(const Shape& s, const SSet& x, const Budget& budget) {
  HomSet out{s, {}};
  FaceData fd = face_data(s);
  IndexCache cache(x);
  enumerate_hom(s, fd, x, cache, [](std::size_t, Id) { return true; },
                [&](const std::vector<Id>& h) {
                  out.maps.push_back(h);
                  check_budget(out.maps.size(), budget, "hom");
                });
  return out;
}

long RelativeObject::find(const std::vector<Id>& h, Id y) const {
  std::vector<Id> key = h;
  key.push_back(y);
  auto it = index_.find(key);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

RelativeObject relative_object(const SMap& f, const Shape& s, int k, const Budget& budget) {
  const SSet& X = *f.src;
  const SSet& Y = *f.dst;
  if (k > Y.trunc || k > X.trunc + 1) throw InputError("relative object: level not stored");
  if (s.n != k && !(s.faces.empty())) throw InputError("relative object: shape is not inside Δ^k");
  if (k > X.trunc)
    for (unsigned m : s.faces)
      if (std::popcount(m) - 1 > X.trunc) throw InputError("relative object: level not stored");
  RelativeObject out;
  out.shape = s;
  out.k = k;
  FaceData fd = face_data(s);
  IndexCache cache(X);
  std::vector<Id> target(s.faces.size());
  std::vector<Id> key;
  for (Id y = 0; y < Y.size[k]; ++y) {
    for (std::size_t j = 0; j < s.faces.size(); ++j) target[j] = restrict_to(Y, k, y, s.faces[j]);
    enumerate_hom(
        s, fd, X, cache, [&](std::size_t j, Id c) { return f.f[fd.dim[j]][c] == target[j]; },
        [&](const std::vector<Id>& h) {
          key = h;
          key.push_back(y);
          out.index_.emplace(key, static_cast<Id>(out.base.size()));
          out.lifts.push_back(h);
          out.base.push_back(y);
          check_budget(out.base.size(), budget, "relative horn object");
        });
  }
  if (k > X.trunc) return out;  // no comparison map without X_k
  out.compare.resize(X.size[k]);
  std::vector<Id> h(s.faces.size());
  for (Id x = 0; x < X.size[k]; ++x) {
    for (std::size_t j = 0; j < s.faces.size(); ++j) h[j] = restrict_to(X, k, x, s.faces[j]);
    long c = out.find(h, f.f[k][x]);
    if (c < 0) throw InvariantError("comparison map leaves the carrier");
    out.compare[x] = static_cast<Id>(c);
  }
  return out;
}

RelativeObject horn_object(const SMap& f, int k, int i, const Budget& budget) {
  if (k < 1 || i < 0 || i > k) throw InputError("horn index out of range");
  return relative_object(f, Shape::horn(k, i), k, budget);
}

RelativeObject match_object(const SMap& f, int k, const Budget& budget) {
  if (k < 0) throw InputError("negative matching level");
  return relative_object(f, Shape::boundary(k), k, budget);
}

namespace {

/// Surjectivity and (optionally) injectivity of a comparison map.
bool check_comparison(const RelativeObject& r, bool need_injective, int k, int i, Witness& w) {
  std::vector<long> first(r.size(), -1);
  for (Id x = 0; x < r.compare.size(); ++x) {
    Id c = r.compare[x];
    if (first[c] >= 0 && need_injective) {
      std::ostringstream os;
      os << "not injective: simplices " << first[c] << " and " << x << " have the same image "
         << c;
      w = {k, i, static_cast<long>(x), os.str()};
      return false;
    }
    if (first[c] < 0) first[c] = x;
  }
  for (std::size_t c = 0; c < r.size(); ++c)
    if (first[c] < 0) {
      std::ostringstream os;
      os << "not surjective: carrier element " << c << " has no preimage";
      w = {k, i, static_cast<long>(c), os.str()};
      return false;
    }
  return true;
}

}  // namespace

Verdict classify(const SMap& f, Degree n, Kind kind, const Budget& budget) {
  const SSet& X = *f.src;
  const SSet& Y = *f.dst;
  if (kind == Kind::groupoid) {
    for (Id sz : Y.size)
      if (sz != 1) throw InputError("groupoid classification needs a map to the point");
  }
  const int D = std::min(X.trunc, Y.trunc);
  Verdict v;
  if (kind == Kind::hypercover) {
    for (int k = 0; k <= D; ++k) {
      auto r = match_object(f, k, budget);
      if (!check_comparison(r, at_least(k, n), k, -1, v.witness)) {
        v.outcome = Outcome::fail;
        return v;
      }
    }
  } else {
    for (int k = 1; k <= D; ++k)
      for (int i = 0; i <= k; ++i) {
        auto r = horn_object(f, k, i, budget);
        if (!check_comparison(r, exceeds(k, n), k, i, v.witness)) {
          v.outcome = Outcome::fail;
          return v;
        }
      }
  }
  std::optional<int> d;
  if (X.cosk && Y.cosk) d = std::max(*X.cosk, *Y.cosk);
  const int need = kind == Kind::hypercover ? 0 : 1;
  if (d && *d + need <= D) {
    v.outcome = Outcome::pass;
  } else {
    v.outcome = Outcome::inconclusive;
    v.note = "all stored levels pass, but higher levels are not determined by the stored data";
  }
  return v;
}

Verdict classify_object(const SSetPtr& x, Degree n, const Budget& budget) {
  return classify(to_terminal(x), n, Kind::groupoid, budget);
}

std::string check_mu_lambda(const SMap& f, int k, int i, const Budget& budget) {
  const SSet& X = *f.src;
  const SSet& Y = *f.dst;
  auto M = match_object(f, k, budget);
  auto L = horn_object(f, k, i, budget);
  // position in the boundary's face list of each horn face
  std::vector<std::size_t> pos;
  for (unsigned F : L.shape.faces)
    pos.push_back(std::find(M.shape.faces.begin(), M.shape.faces.end(), F) - M.shape.faces.begin());
  auto forget = [&](Id m) {
    std::vector<Id> h;
    for (std::size_t p : pos) h.push_back(M.lifts[m][p]);
    return L.find(h, M.base[m]);
  };
  for (Id x = 0; x < X.size[k]; ++x)
    if (forget(M.compare[x]) != static_cast<long>(L.compare[x])) {
      std::ostringstream os;
      os << "horn comparison does not factor through the matching object at simplex " << x;
      return os.str();
    }
  if (k == 0) return {};
  auto Mlow = match_object(f, k - 1, budget);
  const unsigned full = (1u << (k + 1)) - 1;
  const unsigned missing = full & ~(1u << i);
  // faces of the i-th face, renumbered inside Δ^{k-1}
  auto squeeze = [&](unsigned F) {
    unsigned low = F & ((1u << i) - 1);
    unsigned high = (F >> (i + 1)) << i;
    return low | high;
  };
  std::vector<std::size_t> lowpos;  // Mlow face -> horn face index
  for (unsigned G : Mlow.shape.faces) {
    std::size_t found = L.shape.faces.size();
    for (std::size_t j = 0; j < L.shape.faces.size(); ++j) {
      unsigned F = L.shape.faces[j];
      if ((F & ~missing) == 0 && F != missing && squeeze(F) == G) found = j;
    }
    if (found == L.shape.faces.size()) return "boundary of the missing face is not in the horn";
    lowpos.push_back(found);
  }
  auto to_low = [&](Id l) {
    std::vector<Id> h;
    for (std::size_t p : lowpos) h.push_back(L.lifts[l][p]);
    return Mlow.find(h, Y.d[k][i][L.base[l]]);
  };
  std::size_t missing_pos =
      std::find(M.shape.faces.begin(), M.shape.faces.end(), missing) - M.shape.faces.begin();
  // fibre product count
  std::vector<std::size_t> per_low(Mlow.size(), 0);
  for (Id z = 0; z < X.size[k - 1]; ++z) ++per_low[Mlow.compare[z]];
  std::size_t count = 0;
  for (Id l = 0; l < L.size(); ++l) {
    long m = to_low(l);
    if (m < 0) return "horn restriction leaves the lower matching object";
    count += per_low[m];
  }
  if (count != M.size()) return "matching object is not the fibre product of horn and face";
  TupleMap<char> seen;
  for (Id m = 0; m < M.size(); ++m) {
    long l = forget(m);
    Id z = M.lifts[m][missing_pos];
    if (l < 0 || to_low(static_cast<Id>(l)) != static_cast<long>(Mlow.compare[z]))
      return "square does not commute";
    if (!seen.emplace(std::vector<Id>{static_cast<Id>(l), z}, 1).second)
      return "matching object maps non-injectively to the fibre product";
  }
  return {};
}

StabilityReport compose_check(const SMap& f, const SMap& g, Degree n, Kind kind,
                              const Budget& budget) {
  StabilityReport r{compose(g, f), classify(f, n, kind, budget), classify(g, n, kind, budget), {}};
  r.conclusion = classify(r.result, n, kind, budget);
  if (r.first.passed() && r.second.passed() && r.conclusion.outcome == Outcome::fail)
    throw InvariantError("composite of two " + kind_name(kind) + "s fails: " +
                         r.conclusion.witness.reason);
  return r;
}

StabilityReport pullback_check(const SMap& f, const SMap& g, Degree n, Kind kind,
                               const Budget& budget) {
  auto p = pullback(f, g, budget);
  auto P = share(std::move(p.obj));
  SMap pulled{P, g.src, std::move(p.pr2)};
  StabilityReport r{pulled, classify(f, n, kind, budget), {}, {}};
  r.conclusion = classify(pulled, n, kind, budget);
  if (r.first.passed() && r.conclusion.outcome == Outcome::fail)
    throw InvariantError("pullback of a " + kind_name(kind) + " fails: " +
                         r.conclusion.witness.reason);
  return r;
}

void hypercover_stack_check(const SMap& f, Degree n, const Budget& budget) {
  auto hyp = classify(f, n, Kind::hypercover, budget);
  auto st = classify(f, n, Kind::stack, budget);
  if (hyp.passed() && st.outcome == Outcome::fail)
    throw InvariantError("hypercover is not a stack: " + st.witness.reason);
  auto inf = classify(f, kInfinity, Kind::hypercover, budget);
  if (inf.passed() && st.passed() && hyp.outcome == Outcome::fail)
    throw InvariantError("hypercover which is a stack is not a hypercover of the same degree: " +
                         hyp.witness.reason);
}

// ---------------------------------------------------------------------------

namespace {

class MapSearcher {
 public:
  MapSearcher(const SSetPtr& a, const SSetPtr& b, const SearchOptions& opt)
      : a_(*a), b_(*b), A_(a), B_(b), opt_(opt), cache_(*b) {
    da_ = degeneracies(a_);
    if (opt.injective) db_ = degeneracies(b_);
    phi_.resize(a_.trunc + 1);
    used_.resize(a_.trunc + 1);
    for (int k = 0; k <= a_.trunc; ++k) {
      phi_[k].assign(a_.size[k], 0);
      used_[k].assign(b_.size[k], 0);
      for (Id e = 0; e < a_.size[k]; ++e)
        if (da_.via[k][e] >= 0) order_.push_back({k, e});
      for (Id e = 0; e < a_.size[k]; ++e)
        if (da_.via[k][e] < 0) order_.push_back({k, e});
    }
  }

  MapSearch run() {
    MapSearch out;
    if (a_.trunc > b_.trunc) throw InputError("map search: source has more levels than target");
    if (opt_.injective)
      for (int k = 0; k <= a_.trunc; ++k)
        if (a_.size[k] > b_.size[k]) {
          out.status = SearchStatus::none;
          return out;
        }
    try {
      step(0, out);
    } catch (const Stop&) {
    }
    out.nodes = nodes_;
    if (!out.maps.empty())
      out.status = SearchStatus::found;
    else
      out.status = exhausted_ ? SearchStatus::inconclusive : SearchStatus::none;
    return out;
  }

 private:
  struct Stop {};

  bool admissible(int k, Id e, Id c) const {
    if (opt_.base_a && (*opt_.base_a)[k][e] != (*opt_.base_b)[k][c]) return false;
    if (opt_.injective && used_[k][c]) return false;
    if (k >= 1)
      for (int i = 0; i <= k; ++i)
        if (b_.d[k][i][c] != phi_[k - 1][a_.d[k][i][e]]) return false;
    return true;
  }

  void assign(int k, Id e, Id c, std::size_t p, MapSearch& out) {
    phi_[k][e] = c;
    if (opt_.injective) used_[k][c] = 1;
    step(p + 1, out);
    if (opt_.injective) used_[k][c] = 0;
  }

  void step(std::size_t p, MapSearch& out) {
    if (++nodes_ > opt_.node_budget) {
      exhausted_ = true;
      throw Stop{};
    }
    if (p == order_.size()) {
      SMap m{A_, B_, phi_};
      if (validate_map(m, 1).empty()) {
        out.maps.push_back(std::move(m));
        if (out.maps.size() >= opt_.max_results) throw Stop{};
      }
      return;
    }
    auto [k, e] = order_[p];
    int j = da_.via[k][e];
    if (j >= 0) {
      Id c = b_.s[k - 1][j][phi_[k - 1][da_.from[k][e]]];
      if (admissible(k, e, c)) assign(k, e, c, p, out);
      return;
    }
    auto try_candidate = [&](Id c) {
      if (opt_.injective && db_.via[k][c] >= 0) return;
      if (admissible(k, e, c)) assign(k, e, c, p, out);
    };
    if (k == 0) {
      for (Id c = 0; c < b_.size[0]; ++c) try_candidate(c);
      return;
    }
    std::vector<Id> faces(k + 1);
    for (int i = 0; i <= k; ++i) faces[i] = phi_[k - 1][a_.d[k][i][e]];
    const auto* cands = cache_.at(k).find(faces);
    if (!cands) return;
    for (Id c : *cands) try_candidate(c);
  }

  const SSet& a_;
  const SSet& b_;
  SSetPtr A_, B_;
  SearchOptions opt_;
  IndexCache cache_;
  Degeneracies da_, db_;
  std::vector<Table> phi_;
  std::vector<std::vector<char>> used_;
  std::vector<std::pair<int, Id>> order_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

MapSearch find_maps(const SSetPtr& a, const SSetPtr& b, const SearchOptions& opt) {
  if ((opt.base_a == nullptr) != (opt.base_b == nullptr))
    throw InputError("map search: both sides need a base map");
  return MapSearcher(a, b, opt).run();
}

MapSearch find_iso(const SSetPtr& a, const SSetPtr& b, const std::vector<Table>* base_a,
                   const std::vector<Table>* base_b, std::size_t node_budget) {
  if (a->trunc != b->trunc || a->size != b->size) return {SearchStatus::none, {}, 0};
  SearchOptions opt;
  opt.injective = true;
  opt.node_budget = node_budget;
  opt.base_a = base_a;
  opt.base_b = base_b;
  return find_maps(a, b, opt);
}

std::vector<SMap> hom_sset(const SSetPtr& s, const SSetPtr& x, std::size_t limit) {
  SearchOptions opt;
  opt.max_results = limit;
  opt.node_budget = static_cast<std::size_t>(-1);
  auto r = find_maps(s, x, opt);
  if (r.maps.size() >= limit) throw ResourceError("hom: more maps than the configured limit");
  return r.maps;
}

}  // namespace simplex
