#include "simplex/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "simplex/em.hpp"
#include "simplex/join.hpp"
#include "simplex/nerve.hpp"
#include "simplex/path_space.hpp"
#include "simplex/strictify.hpp"

namespace simplex {

namespace {

struct Failed {
  std::string what;
};

struct Ctx {
  unsigned seed = 0;
  Budget budget;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) throw Failed{what};
  }
  void expect_empty(const std::string& err, const std::string& what) {
    expect(err.empty(), what + ": " + err);
  }
};

SSetPtr group_nerve(const FinGroup& g, int trunc) {
  return share(nerve(group_as_groupoid(g), trunc).x);
}

/// Map of nerves induced by a homomorphism given on elements.
SMap nerve_map(const FinGroup& g, const FinGroup& h, const Table& phi, int trunc) {
  for (Id a = 0; a < g.order; ++a)
    for (Id b = 0; b < g.order; ++b)
      if (phi[g.mul[a][b]] != h.mul[phi[a]][phi[b]]) throw InvariantError("fixture is not a homomorphism");
  auto na = nerve(group_as_groupoid(g), trunc);
  auto nb = nerve(group_as_groupoid(h), trunc);
  SMap m{share(std::move(na.x)), share(std::move(nb.x)), {}};
  for (int k = 0; k <= trunc; ++k) {
    std::map<std::vector<Id>, Id> index;
    for (Id e = 0; e < nb.chains[k].size(); ++e) index[nb.chains[k][e]] = e;
    Table t(na.chains[k].size());
    for (Id e = 0; e < t.size(); ++e) {
      auto c = na.chains[k][e];
      if (k > 0)
        for (Id& a : c) a = phi[a];
      t[e] = index.at(c);
    }
    m.f.push_back(std::move(t));
  }
  return m;
}

/// A surjective homomorphism onto Z/2, by exhaustive search.
std::optional<Table> sign_hom(const FinGroup& g) {
  if (g.order > 16) return std::nullopt;
  for (std::uint32_t bits = 1; bits < (1u << g.order); ++bits) {
    Table phi(g.order);
    for (Id a = 0; a < g.order; ++a) phi[a] = bits >> a & 1u;
    if (phi[g.e] != 0) continue;
    bool hom = true;
    for (Id a = 0; a < g.order && hom; ++a)
      for (Id b = 0; b < g.order && hom; ++b) hom = phi[g.mul[a][b]] == (phi[a] ^ phi[b]);
    if (hom) return phi;
  }
  return std::nullopt;
}

/// N(S/R) -> N(T/R) for S -p-> T -q-> R.
SMap cech_tower_map(const Cech& top, const Cech& low, const Table& p, int trunc) {
  SMap m{top.nerve, low.nerve, {}};
  for (int k = 0; k <= trunc; ++k) {
    std::map<std::vector<Id>, Id> index;
    for (Id e = 0; e < low.tuples[k].size(); ++e) index[low.tuples[k][e]] = e;
    Table t(top.tuples[k].size());
    for (Id e = 0; e < t.size(); ++e) {
      auto c = top.tuples[k][e];
      for (Id& s : c) s = p[s];
      t[e] = index.at(c);
    }
    m.f.push_back(std::move(t));
  }
  return m;
}

Table compose_tables(const Table& q, const Table& p) {
  Table r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[j] = q[p[j]];
  return r;
}

// ---------------------------------------------------------------------------

void grothendieck(Ctx& c) {
  for (const auto& g : small_groups()) {
    auto G = group_as_groupoid(g);
    auto n = share(nerve(G, 4, c.budget).x);
    c.expect(classify_object(n, 1, c.budget).passed(), "nerve of " + g.name + " is not a 1-groupoid");
    c.expect(classify_object(n, 0, c.budget).outcome == Outcome::fail || g.order == 1,
             "nerve of " + g.name + " passes as a 0-groupoid");
    c.expect(extract_groupoid(nerve(G, 2, c.budget).x) == G, "round trip changes " + g.name);
  }
  std::mt19937 rng(c.seed);
  for (int t = 0; t < 5; ++t) {
    auto G = random_groupoid(rng);
    c.expect_empty(G.check(), "random groupoid " + std::to_string(t));
    auto n = share(nerve(G, 4, c.budget).x);
    c.expect(classify_object(n, 1, c.budget).passed(),
             "nerve of random groupoid " + std::to_string(t) + " is not a 1-groupoid");
    c.expect(extract_groupoid(nerve(G, 2, c.budget).x) == G,
             "round trip changes random groupoid " + std::to_string(t));
  }
}

void moore_on(Ctx& c, const SimplicialGroup& g, int strict_from) {
  auto f = to_terminal(g.x);
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i <= k; ++i) {
      auto r = horn_object(f, k, i, c.budget);
      for (Id h = 0; h < r.size(); ++h) {
        std::vector<Id> faces(k + 1, 0);
        for (int j = 0; j <= k; ++j) {
          if (j == i) continue;
          unsigned face = ((1u << (k + 1)) - 1) & ~(1u << j);
          auto it = std::find(r.shape.faces.begin(), r.shape.faces.end(), face);
          faces[j] = r.lifts[h][it - r.shape.faces.begin()];
        }
        std::ostringstream where;
        where << g.name << " horn Λ^" << k << "_" << i << " #" << h;
        Id x = moore_fill(g, k, i, faces);
        auto all = brute_fillers(g, k, i, faces);
        c.expect(std::find(all.begin(), all.end(), x) != all.end(),
                 where.str() + ": Moore filler is not a filler");
        if (k >= strict_from)
          c.expect(all.size() == 1, where.str() + ": filler of a strict group is not unique");
      }
    }
}

void moore(Ctx& c) {
  moore_on(c, em_space(cyclic(2), 1, 3, c.budget).group, 2);
  moore_on(c, em_space(cyclic(3), 1, 3, c.budget).group, 2);
  moore_on(c, constant_group(permutation_group({{1, 0, 2}, {1, 2, 0}}, "S3"), 3), 1);
  auto groups = small_groups();
  std::mt19937 rng(c.seed);
  const auto& g = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
  moore_on(c, constant_group(g, 3), 1);
  for (int n = 1; n <= 2; ++n) {
    auto K = em_space(cyclic(2), n, n + 2, c.budget);
    c.expect(classify_strict(K.group, n + 1, c.budget).outcome != Outcome::fail,
             K.group.name + " is not a strict group of the expected degree");
  }
}

void wbar(Ctx& c) {
  for (const auto& g : small_groups()) {
    if (g.order > 8) continue;
    auto W = w_bar(constant_group(g, 3), 4, c.budget);
    auto N = group_nerve(g, 4);
    for (int k = 0; k <= 4; ++k)
      c.expect(W.x->size[k] == N->size[k], "W̄" + g.name + " and its nerve differ in size");
    c.expect(find_iso(W.x, N).status == SearchStatus::found, "W̄" + g.name + " is not its nerve");
  }
  struct Case {
    FinGroup A;
    int n, D;
    std::vector<Id> sizes;
  };
  for (const auto& cs : {Case{cyclic(2), 1, 4, {1, 1, 2, 8, 64}}, Case{cyclic(3), 1, 3, {1, 1, 3, 27}}}) {
    auto iso = wbar_em_iso(cs.A, cs.n, cs.D, c.budget);
    for (int k = 0; k <= cs.D; ++k) {
      const std::string at = "W̄K(" + cs.A.name + "," + std::to_string(cs.n) + ") level " + std::to_string(k);
      c.expect(iso.wbar.x->size[k] == cs.sizes[k], at + ": tuple count");
      c.expect(iso.target.group.x->size[k] == cs.sizes[k], at + ": cocycle model count");
      c.expect(count_cocycles_brute(cs.A, cs.n + 1, k) == cs.sizes[k], at + ": brute-force count");
    }
    c.expect(validate_map(iso.map).empty(), "W̄K -> K is not simplicial");
  }
}

void stability(Ctx& c) {
  const int T = 3;
  auto z2 = cyclic(2), z4 = cyclic(4), z6 = cyclic(6), z3 = cyclic(3), one = cyclic(1);
  auto k4 = direct_product(z2, z2);
  auto mod = [](Id n, Id m) {
    Table t(n);
    for (Id a = 0; a < n; ++a) t[a] = a % m;
    return t;
  };
  struct Pair {
    std::string name;
    SMap f, g;
    Degree n;
    Kind kind;
    bool pullback;
  };
  std::vector<Pair> pairs;
  // surjective homomorphisms give 1-stacks of nerves
  auto to_pt = [&](const FinGroup& g) { return nerve_map(g, one, Table(g.order, 0), T); };
  pairs.push_back({"Z4 -> Z2 -> 1", nerve_map(z4, z2, mod(4, 2), T), to_pt(z2), 1, Kind::stack, false});
  pairs.push_back({"Z6 -> Z3 -> 1", nerve_map(z6, z3, mod(6, 3), T), to_pt(z3), 1, Kind::stack, false});
  pairs.push_back({"Z6 -> Z2 -> 1", nerve_map(z6, z2, mod(6, 2), T), to_pt(z2), 1, Kind::stack, false});
  Table first(4);
  for (Id a = 0; a < 4; ++a) first[a] = a / 2;
  pairs.push_back({"Z2xZ2 -> Z2 -> 1", nerve_map(k4, z2, first, T), to_pt(z2), 1, Kind::stack, false});
  for (Id m : {3, 4}) {
    auto d = dihedral(m);
    auto s = sign_hom(d);
    if (!s) throw InvariantError("dihedral group without a sign");
    pairs.push_back({d.name + " -> Z2 -> 1", nerve_map(d, z2, *s, T), to_pt(z2), 1, Kind::stack, false});
  }
  // Čech towers S -> T -> R give 1-hypercovers
  auto tower = [&](const std::string& name, const Table& p, Id nt, const Table& q, Id nr) {
    auto low = cech_nerve(q, nr, T, c.budget);
    auto top = cech_nerve(compose_tables(q, p), nr, T, c.budget);
    pairs.push_back({name, cech_tower_map(top, low, p, T), low.aug, 1, Kind::hypercover, false});
    (void)nt;
  };
  tower("{0..5} -> {0,1,2} -> {0}", {0, 0, 1, 1, 2, 2}, 3, {0, 0, 0}, 1);
  tower("{0..4} -> {0,1,2} -> {0,1}", {0, 1, 1, 2, 2}, 3, {0, 1, 1}, 2);
  tower("{0..3} -> {0,1} -> {0}", {0, 1, 1, 1}, 2, {0, 0}, 1);
  // pullbacks
  {
    auto cc = cech_nerve({0, 0, 1, 2, 2}, 3, T, c.budget);
    auto n = group_nerve(z2, T);
    for (Id v : {0, 2}) {
      SMap g{n, cc.aug.dst, {}};
      for (int k = 0; k <= T; ++k) g.f.emplace_back(n->size[k], v);
      pairs.push_back({"Čech cover pulled back to N(Z2) at " + std::to_string(v), cc.aug, g, 1,
                       Kind::hypercover, true});
    }
  }
  pairs.push_back({"Z4 -> Z2 pulled back along Z6 -> Z2", nerve_map(z4, z2, mod(4, 2), T),
                   nerve_map(z6, z2, mod(6, 2), T), 1, Kind::stack, true});
  pairs.push_back({"Z4 -> Z2 pulled back along 1 -> Z2", nerve_map(z4, z2, mod(4, 2), T),
                   nerve_map(one, z2, {0}, T), 1, Kind::stack, true});

  for (const auto& p : pairs) {
    const std::string what = p.name + " (" + kind_name(p.kind) + ", n = " + degree_name(p.n) + ")";
    auto r = p.pullback ? pullback_check(p.f, p.g, p.n, p.kind, c.budget)
                        : compose_check(p.f, p.g, p.n, p.kind, c.budget);
    c.expect(r.first.passed(), what + ": first map does not pass");
    if (!p.pullback) c.expect(r.second.passed(), what + ": second map does not pass");
    c.expect(r.conclusion.passed(), what + ": result does not pass");
    c.expect_empty(validate_map(r.result).empty() ? "" : validate_map(r.result)[0], what);
    for (const SMap* m : {&p.f, static_cast<const SMap*>(&r.result)})
      for (int k = 1; k <= T; ++k)
        for (int i = 0; i <= k; ++i)
          c.expect_empty(check_mu_lambda(*m, k, i, c.budget), what + ": μ/λ at " + std::to_string(k));
    if (p.kind == Kind::hypercover) hypercover_stack_check(r.result, p.n, c.budget);
  }
  c.expect(pairs.size() >= 10, "fewer than ten fixture pairs");
}

void pathspace(Ctx& c) {
  struct Fixture {
    std::string name;
    SMap f;
    int from;  ///< least n with f an n-stack
    bool hypercover;
  };
  auto cc = cech_nerve({0, 0, 1, 1, 1}, 2, 5, c.budget);
  auto K2 = em_space(cyclic(2), 2, 5, c.budget);
  std::vector<Fixture> fx{
      {"N(Z3) -> *", to_terminal(group_nerve(cyclic(3), 5)), 1, false},
      {"N(D3) -> *", to_terminal(group_nerve(dihedral(3), 5)), 1, false},
      {"N(pair(3)) -> *", to_terminal(share(nerve(pair_groupoid(3), 5).x)), 1, true},
      {"Čech {0..4} -> {0,1}", cc.aug, 1, true},
      {"K(Z2,2) -> *", to_terminal(K2.group.x), 2, false},
  };
  for (const auto& F : fx) {
    for (int n = F.from; n <= 2; ++n) {
      c.expect(classify(F.f, n, Kind::stack, c.budget).passed(), F.name + " is not a stack as expected");
      for (int k = 0; k <= n; ++k) {
        const std::string at = F.name + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        auto p = path_space(F.f, k, 5 - k, c.budget);
        c.expect(classify_object(p.carrier, n - k, c.budget).passed(), at + ": P^{≥k} is not an (n-k)-groupoid");
        if (F.hypercover && classify(F.f, n, Kind::hypercover, c.budget).passed()) {
          auto a = augment_to_matching(p, c.budget);
          c.expect(classify(a.pi, n - k, Kind::hypercover, c.budget).passed(),
                   at + ": augmentation is not an (n-k)-hypercover");
        }
      }
    }
    for (int k = 1; k <= 4; ++k)
      for (int l = 0; k + l <= 4; ++l)
        c.expect_empty(check_path_space_models(F.f, k, l, c.budget),
                       F.name + " models at k=" + std::to_string(k) + " l=" + std::to_string(l));
  }
}

void strictify_suite(Ctx& c) {
  struct Case {
    std::string name;
    SMap f;
    int n;
  };
  auto K2 = em_space(cyclic(2), 2, 5, c.budget);
  auto cc = cech_nerve({0, 0, 1, 2, 2}, 3, 5, c.budget);
  auto nz2 = group_nerve(cyclic(2), 5);
  std::vector<Case> cases{
      {"K(Z2,2)", to_terminal(K2.group.x), 1}, {"K(Z2,2)", to_terminal(K2.group.x), 2},
      {"K(Z2,2)", to_terminal(K2.group.x), 3}, {"N(Z2)", to_terminal(nz2), 0},
      {"N(Z2)", to_terminal(nz2), 1},          {"Čech aug", cc.aug, 0},
      {"Čech aug", cc.aug, 1},                 {"Čech nerve", to_terminal(cc.nerve), 0},
      {"Čech nerve", to_terminal(cc.nerve), 1},
  };
  bool saw_iso = false, saw_non_iso = false;
  for (const auto& cs : cases) {
    const std::string at = cs.name + " n=" + std::to_string(cs.n);
    auto s = strictify(cs.f, cs.n, cs.n + 2, c.budget);
    bool stack = classify(cs.f, cs.n, Kind::stack, c.budget).outcome != Outcome::fail;
    bool iso = canonical_is_iso(s);
    c.expect(iso == stack, at + ": τ_n(f) ≅ f disagrees with the n-stack verdict");
    (iso ? saw_iso : saw_non_iso) = true;
    c.expect(classify(s.tau, cs.n, Kind::stack, c.budget).outcome != Outcome::fail, at + ": τ_n(f) is not an n-stack");
    for (int i = 0; i <= cs.n + 1; ++i) {
      auto mf = missing_face(s, i, c.budget);
      c.expect(mf.lifts_checked == cs.f.src->size[cs.n + 1], at + ": not every lift was compared");
      c.expect_empty(check_inverse_laws(s, i, c.budget), at + " inverse laws");
    }
  }
  c.expect(saw_iso && saw_non_iso, "fixtures do not cover both directions");
  for (const auto& p : std::vector<Table>{{0, 0, 1, 2, 2, 2}, {0, 1, 1, 1}, {0, 0, 0}}) {
    Id t = *std::max_element(p.begin(), p.end()) + 1;
    auto ch = cech_nerve(p, t, 5, c.budget);
    for (int n = 0; n <= 2; ++n) {
      auto r = strictify_hypercover_check(ch.aug, n, 4, c.budget);
      c.expect(r.ok(), "Čech hypercover n=" + std::to_string(n) + ": " + r.detail);
    }
  }
}

void descent(Ctx& c) {
  std::vector<Strictification> outs;
  for (bool nontrivial : {false, true}) {
    auto cocycle = nontrivial ? triple_product_z2() : GroupCocycle::zero(cyclic(2), cyclic(2), 3);
    const std::string at = nontrivial ? "c = abc" : "c = 0";
    auto s = group_cocycle_as_span(cocycle, 4, c.budget);
    auto d = descend(s, c.budget);
    const SSet& X = *d.x.tau.src;
    c.expect(X.size[0] == 1, at + ": X_0 is not a point");
    c.expect(d.groupoid.passed(), at + ": X is not a 2-groupoid");
    c.expect(X.size == std::vector<Id>({1, 2, 8, 64, 1024}), at + ": level sizes");
    auto td = extract_two_group_data(d, c.budget);
    c.expect(td.torsor && td.pentagon, at + ": " + td.failure);
    for (Id b = 0; b < td.zeta.size(); ++b) {
      Id u = td.base.f[3][b];
      Id v = s.K->value(3, s.phi.f[3][u], 0b1111);
      c.expect(td.zeta[b] == cocycle.A.inv[v], at + ": ζ differs from the cocycle");
    }
    outs.push_back(d.x);
  }
  auto r = find_iso(outs[0].tau.src, outs[1].tau.src, &outs[0].tau.f, &outs[1].tau.f);
  c.expect(r.status == SearchStatus::none, "c = 0 and c = abc give isomorphic 2-groups over W̄G");
}

void join_suite(Ctx& c) {
  auto n = group_nerve(cyclic(2), 4);
  auto cc = cech_nerve({0, 0, 1, 1, 1}, 2, 4, c.budget);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; k + l <= 4; ++l)
      for (int i = 0; i <= l; ++i) {
        const std::string at = " k=" + std::to_string(k) + " l=" + std::to_string(l) + " i=" + std::to_string(i);
        c.expect_empty(check_star_lemma(to_terminal(n), k, l, i, c.budget), "N(Z2)" + at);
        c.expect_empty(check_star_lemma(cc.aug, k, l, i, c.budget), "Čech" + at);
      }
  for (int m = 1; m <= 4; ++m) {
    const unsigned full = (1u << (m + 1)) - 1;
    for (unsigned J = 1; J < full; ++J) {
      Shape h = Shape::horn_set(m, J);
      auto cert = find_expansion(h, Shape::simplex(m));
      const std::string at = "Λ^" + std::to_string(m) + "_J, J=" + std::to_string(J);
      c.expect(cert.has_value(), at + ": no certificate");
      c.expect(replay_expansion(h, *cert) == Shape::simplex(m), at + ": certificate does not replay");
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"grothendieck", "moore",     "wbar",    "stability",
                                              "pathspace",    "strictify", "descent", "join"};
  return names;
}

SuiteResult run_suite(const std::string& name, unsigned seed, const Budget& budget) {
  Ctx c{seed, budget, 0};
  SuiteResult out;
  out.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (name == "grothendieck") grothendieck(c);
    else if (name == "moore") moore(c);
    else if (name == "wbar") wbar(c);
    else if (name == "stability") stability(c);
    else if (name == "pathspace") pathspace(c);
    else if (name == "strictify") strictify_suite(c);
    else if (name == "descent") descent(c);
    else if (name == "join") join_suite(c);
    else throw InputError("unknown suite: " + name);
  } catch (const Failed& f) {
    out.pass = false;
    out.failure = f.what;
  } catch (const InvariantError& e) {
    out.pass = false;
    out.failure = e.what();
  }
  out.checks = c.checks;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace simplex
