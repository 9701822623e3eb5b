#include "simplex/io.hpp"

#include <fstream>
#include <sstream>

namespace simplex {

namespace {

std::string key(int k, int i) { return std::to_string(k) + "," + std::to_string(i); }

Table table_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  Table t;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError(what + ": expected ids");
    t.push_back(v.get<Id>());
  }
  return t;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Json resolve(const Json& j, const std::filesystem::path& dir) {
  if (j.is_string()) return read_json(dir / j.get<std::string>());
  return j;
}

}  // namespace

Json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(p.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& p, const Json& j) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write " + p.string());
  out << j.dump(1) << "\n";
}

// ---------------------------------------------------------------------------

Json to_json(const SSet& x) {
  Json j;
  j["truncation"] = x.trunc;
  j["coskeletal_above"] = x.cosk ? Json(*x.cosk) : Json(nullptr);
  j["levels"] = x.size;
  Json faces = Json::object(), degen = Json::object();
  for (int k = 1; k <= x.trunc; ++k)
    for (int i = 0; i <= k; ++i) faces[key(k, i)] = x.d[k][i];
  for (int k = 0; k < x.trunc; ++k)
    for (int i = 0; i <= k; ++i) degen[key(k, i)] = x.s[k][i];
  j["faces"] = faces;
  j["degeneracies"] = degen;
  return j;
}

SSet sset_from_json(const Json& j) {
  auto sizes = table_from(field(j, "levels"), "levels");
  if (sizes.empty()) throw InputError("levels: need at least level 0");
  if (j.contains("truncation") && field(j, "truncation").get<int>() != static_cast<int>(sizes.size()) - 1)
    throw InputError("truncation does not match the number of levels");
  SSet x = SSet::with_sizes(sizes);
  const Json& faces = field(j, "faces");
  const Json& degen = field(j, "degeneracies");
  for (int k = 1; k <= x.trunc; ++k)
    for (int i = 0; i <= k; ++i) {
      auto t = table_from(field(faces, key(k, i).c_str()), "faces " + key(k, i));
      if (t.size() != sizes[k]) throw InputError("faces " + key(k, i) + ": wrong length");
      for (Id v : t)
        if (v >= sizes[k - 1]) throw InputError("faces " + key(k, i) + ": id out of range");
      x.d[k][i] = std::move(t);
    }
  for (int k = 0; k < x.trunc; ++k)
    for (int i = 0; i <= k; ++i) {
      auto t = table_from(field(degen, key(k, i).c_str()), "degeneracies " + key(k, i));
      if (t.size() != sizes[k]) throw InputError("degeneracies " + key(k, i) + ": wrong length");
      for (Id v : t)
        if (v >= sizes[k + 1]) throw InputError("degeneracies " + key(k, i) + ": id out of range");
      x.s[k][i] = std::move(t);
    }
  if (j.contains("coskeletal_above") && !j.at("coskeletal_above").is_null())
    x.cosk = j.at("coskeletal_above").get<int>();
  auto errs = validate(x);
  if (!errs.empty()) throw InputError("invalid simplicial object: " + errs[0]);
  return x;
}

Json to_json(const SMap& f) {
  Json j;
  j["source"] = to_json(*f.src);
  j["target"] = to_json(*f.dst);
  j["components"] = f.f;
  return j;
}

bool is_map_document(const Json& j) { return j.is_object() && j.contains("components"); }

SMap map_from_json(const Json& j, const std::filesystem::path& dir) {
  SMap f;
  f.src = share(sset_from_json(resolve(field(j, "source"), dir)));
  f.dst = share(sset_from_json(resolve(field(j, "target"), dir)));
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != f.src->size.size())
    throw InputError("components: need one table per source level");
  for (std::size_t k = 0; k < comps.size(); ++k) {
    auto t = table_from(comps[k], "components");
    if (t.size() != f.src->size[k]) throw InputError("components: wrong length at level " + std::to_string(k));
    for (Id v : t)
      if (k >= f.dst->size.size() || v >= f.dst->size[k]) throw InputError("components: id out of range");
    f.f.push_back(std::move(t));
  }
  auto errs = validate_map(f);
  if (!errs.empty()) throw InputError("invalid simplicial map: " + errs[0]);
  return f;
}

SMap map_or_terminal(const Json& j, const std::filesystem::path& dir) {
  if (is_map_document(j)) return map_from_json(j, dir);
  return to_terminal(share(sset_from_json(j)));
}

// ---------------------------------------------------------------------------

Json to_json(const FinGroup& g) {
  Json j;
  if (!g.name.empty()) j["name"] = g.name;
  j["order"] = g.order;
  j["mul"] = g.mul;
  j["inv"] = g.inv;
  j["e"] = g.e;
  j["abelian"] = g.abelian();
  return j;
}

FinGroup group_from_json(const Json& j) {
  std::vector<Table> mul;
  for (const auto& row : field(j, "mul")) mul.push_back(table_from(row, "mul"));
  if (mul.empty()) throw InputError("mul: empty table");
  for (const auto& row : mul) {
    if (row.size() != mul.size()) throw InputError("mul: table is not square");
    for (Id v : row)
      if (v >= mul.size()) throw InputError("mul: entry out of range");
  }
  FinGroup g = FinGroup::from_table(std::move(mul), j.value("name", std::string{}));
  if (j.contains("order") && j.at("order").get<Id>() != g.order) throw InputError("order does not match mul");
  if (j.contains("e") && j.at("e").get<Id>() != g.e) throw InputError("e is not the identity");
  if (j.contains("inv") && table_from(j.at("inv"), "inv") != g.inv) throw InputError("inv is not the inverse");
  if (j.contains("abelian") && j.at("abelian").get<bool>() != g.abelian())
    throw InputError("abelian flag does not match mul");
  return g;
}

Json to_json(const Groupoid& g) {
  Json j;
  j["objects"] = g.objects;
  j["src"] = g.src;
  j["tgt"] = g.tgt;
  j["unit"] = g.unit;
  j["inv"] = g.inv;
  Json comp = Json::array();
  for (const auto& row : g.comp) {
    Json r = Json::array();
    for (Id v : row) r.push_back(v == Groupoid::kNone ? Json(-1) : Json(v));
    comp.push_back(r);
  }
  j["comp"] = comp;
  return j;
}

Groupoid groupoid_from_json(const Json& j) {
  Groupoid g;
  g.objects = field(j, "objects").get<Id>();
  g.src = table_from(field(j, "src"), "src");
  g.tgt = table_from(field(j, "tgt"), "tgt");
  g.unit = table_from(field(j, "unit"), "unit");
  g.inv = table_from(field(j, "inv"), "inv");
  g.arrows = static_cast<Id>(g.src.size());
  for (const auto& row : field(j, "comp")) {
    Table r;
    for (const auto& v : row) r.push_back(v.get<long long>() < 0 ? Groupoid::kNone : v.get<Id>());
    g.comp.push_back(std::move(r));
  }
  std::string err = g.check();
  if (!err.empty()) throw InputError("invalid groupoid: " + err);
  return g;
}

// ---------------------------------------------------------------------------

Json to_json(const GroupCocycle& c) {
  Json j;
  j["group"] = to_json(c.G);
  j["abelian"] = to_json(c.A);
  j["n"] = c.n;
  Json values = Json::object();
  Radix r{std::vector<Id>(c.n, c.G.order)};
  for (Id code = 0; code < r.size(); ++code) {
    if (c.values[code] == c.A.e) continue;
    auto g = r.decode(code);
    std::string k = "(";
    for (std::size_t t = 0; t < g.size(); ++t) k += (t ? "," : "") + std::to_string(g[t]);
    values[k + ")"] = c.values[code];
  }
  j["values"] = values;
  return j;
}

GroupCocycle cocycle_from_json(const Json& j, const std::filesystem::path& dir) {
  FinGroup G = group_from_json(resolve(field(j, "group"), dir));
  FinGroup A = group_from_json(resolve(field(j, "abelian"), dir));
  if (!A.abelian()) throw InputError("cocycle coefficients are not abelian");
  int n = field(j, "n").get<int>();
  if (n < 1) throw InputError("cocycle degree must be positive");
  auto c = GroupCocycle::zero(G, A, n);
  Radix r{std::vector<Id>(n, G.order)};
  for (const auto& [k, v] : field(j, "values").items()) {
    std::string s = k;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw InputError("bad tuple key " + k);
    std::vector<Id> g;
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        g.push_back(static_cast<Id>(std::stoul(part)));
      } catch (const std::exception&) {
        throw InputError("bad tuple key " + k);
      }
    }
    if (static_cast<int>(g.size()) != n) throw InputError("tuple " + k + " has the wrong length");
    for (Id x : g)
      if (x >= G.order) throw InputError("tuple " + k + " is out of range");
    Id a = v.get<Id>();
    if (a >= A.order) throw InputError("value at " + k + " is out of range");
    c.values[r.encode(g)] = a;
  }
  return c;
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = outcome_name(v.outcome);
  if (v.outcome == Outcome::fail) {
    Json w;
    w["k"] = v.witness.k;
    w["i"] = v.witness.i;
    w["element"] = v.witness.element;
    w["reason"] = v.witness.reason;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const ExpansionCertificate& c) {
  Json j = Json::array();
  for (const auto& s : c) {
    Json e;
    e["n"] = s.n;
    e["i"] = s.i;
    e["attach"] = s.attach;
    j.push_back(e);
  }
  return j;
}

Json to_json(const TwoGroupData& d, const FinGroup& A) {
  Json j;
  j["cover"] = d.cover;
  j["base_levels"] = d.base.src->size;
  Json fib = Json::array();
  for (const auto& f : d.fibres) fib.push_back(f);
  j["P"] = {{"fibres", fib}, {"section", d.section}, {"action", d.action}};
  j["A"] = to_json(A);
  j["zeta"] = d.zeta;
  j["torsor"] = d.torsor;
  j["pentagon"] = d.pentagon;
  return j;
}

}  // namespace simplex
