// Command-line front end.  Exit codes: 0 pass, 1 property failure,
// 2 input or usage error, 3 budget exceeded.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "simplex/io.hpp"
#include "simplex/suites.hpp"

using namespace simplex;
namespace fs = std::filesystem;

namespace {

struct Report {
  Json data = Json::object();
  std::vector<std::string> lines;
  int code = 0;

  void line(const std::string& s) { lines.push_back(s); }
};

struct Common {
  std::size_t budget = Budget{}.per_level;
  std::string format = "text";
  std::string output;

  Budget b() const { return Budget{budget}; }
};

Degree parse_degree(const std::string& s) {
  if (s == "inf") return kInfinity;
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("degree must be a non-negative integer or inf: " + s);
  }
}

Kind parse_kind(const std::string& s) {
  if (s == "groupoid") return Kind::groupoid;
  if (s == "stack") return Kind::stack;
  if (s == "hypercover") return Kind::hypercover;
  throw InputError("unknown kind: " + s);
}

Shape parse_shape(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("shape must look like horn:k,i or boundary:k or simplex:k");
  std::string kind = s.substr(0, colon);
  std::vector<int> args;
  std::stringstream in(s.substr(colon + 1));
  std::string part;
  while (std::getline(in, part, ',')) args.push_back(std::stoi(part));
  if (kind == "horn" && args.size() == 2) {
    if (args[0] < 1 || args[1] < 0 || args[1] > args[0]) throw InputError("horn index out of range");
    return Shape::horn(args[0], args[1]);
  }
  if (kind == "boundary" && args.size() == 1) return Shape::boundary(args[0]);
  if (kind == "simplex" && args.size() == 1) return Shape::simplex(args[0]);
  throw InputError("unknown shape " + s);
}

fs::path dir_of(const std::string& p) { return fs::path(p).parent_path(); }

SSetPtr load_sset(const std::string& p) { return share(sset_from_json(read_json(p))); }
SMap load_map(const std::string& p) { return map_or_terminal(read_json(p), dir_of(p)); }

void add_verdict(Report& r, const Verdict& v, const std::string& what) {
  r.data["verdict"] = to_json(v)["verdict"];
  r.data["witness"] = to_json(v)["witness"];
  if (!v.note.empty()) r.data["note"] = v.note;
  std::string l = what + ": " + outcome_name(v.outcome);
  if (v.outcome == Outcome::fail) {
    std::ostringstream os;
    os << " at level " << v.witness.k;
    if (v.witness.i >= 0) os << ", horn " << v.witness.i;
    os << ", element " << v.witness.element << ": " << v.witness.reason;
    l += os.str();
  } else if (!v.note.empty()) {
    l += " (" + v.note + ")";
  }
  r.line(l);
  r.code = v.outcome == Outcome::pass ? 0 : 1;
}

void describe_levels(Report& r, const SSet& x, const std::string& what) {
  r.data[what + "_levels"] = x.size;
  std::string l = what + " levels:";
  for (Id n : x.size) l += " " + std::to_string(n);
  r.line(l);
}

void write_output(const Common& c, const Json& j) {
  if (!c.output.empty()) write_json(c.output, j);
}

/// A simplicial group from a group file: constant, or K(A, n) when a degree is given.
SimplicialGroup load_simplicial_group(const std::string& path, int em_degree, int levels, const Budget& b) {
  FinGroup g = group_from_json(read_json(path));
  if (em_degree >= 0) return em_space(g, em_degree, levels, b).group;
  return constant_group(g, levels);
}

std::vector<Id> parse_ids(const std::string& s) {
  std::vector<Id> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part == "_" || part == "-") {
      out.push_back(0);
      continue;
    }
    try {
      out.push_back(static_cast<Id>(std::stoul(part)));
    } catch (const std::exception&) {
      throw InputError("bad id list: " + s);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial objects: Kan conditions, strictification, simplicial groups and descent"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--budget", common.budget, "Maximum number of simplices per level")->check(CLI::PositiveNumber);
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::function<Report()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("-o,--output", common.output, "Write the constructed object as JSON");
    s->add_option("--budget", common.budget, "Maximum number of simplices per level")->check(CLI::PositiveNumber);
    s->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    return s;
  };

  // ---- check
  std::string input, kind = "groupoid", degree = "inf";
  int n = 0, k = 0, i = 0, levels = 4, em_degree = -1;
  {
    auto* s = sub("check", "Classify an object or a map by its horn or matching conditions");
    s->add_option("--input", input, "Object or map JSON")->required();
    s->add_option("--kind", kind)->check(CLI::IsMember({"groupoid", "stack", "hypercover"}));
    s->add_option("--n", degree, "Degree, or inf");
    s->callback([&] {
      action = [&] {
        Report r;
        Kind kd = parse_kind(kind);
        SMap f = load_map(input);
        if (kd == Kind::groupoid) f = to_terminal(f.src);
        auto v = classify(f, parse_degree(degree), kd, common.b());
        r.data["kind"] = kind;
        r.data["n"] = degree == "inf" ? Json("inf") : Json(std::stoi(degree));
        add_verdict(r, v, kind + " n=" + degree);
        return r;
      };
    });
  }
  // ---- hom
  std::string shape;
  {
    auto* s = sub("hom", "Enumerate maps from a subcomplex of a simplex");
    s->add_option("--input", input)->required();
    s->add_option("--shape", shape, "horn:k,i | boundary:k | simplex:k")->required();
    s->callback([&] {
      action = [&] {
        Report r;
        auto x = load_sset(input);
        auto h = hom(parse_shape(shape), *x, common.b());
        r.data["shape"] = h.shape.describe();
        r.data["count"] = h.maps.size();
        r.line("maps from " + h.shape.describe() + ": " + std::to_string(h.maps.size()));
        Json maps = h.maps;
        write_output(common, maps);
        return r;
      };
    });
  }
  // ---- horn, match
  for (const char* name : {"horn", "match"}) {
    bool is_horn = std::string(name) == "horn";
    auto* s = sub(name, is_horn ? "Relative horn object Λ^k_i(f) and its comparison map"
                                : "Matching object M_k(f) and its comparison map");
    s->add_option("--input", input)->required();
    s->add_option("--k", k)->required();
    if (is_horn) s->add_option("--i", i)->required();
    s->callback([&, is_horn] {
      action = [&, is_horn] {
        Report r;
        SMap f = load_map(input);
        auto obj = is_horn ? horn_object(f, k, i, common.b()) : match_object(f, k, common.b());
        std::vector<std::size_t> hits(obj.size(), 0);
        for (Id c : obj.compare) ++hits[c];
        std::size_t missed = std::count(hits.begin(), hits.end(), 0);
        std::size_t multiple = std::count_if(hits.begin(), hits.end(), [](std::size_t h) { return h > 1; });
        r.data["carrier_size"] = obj.size();
        r.data["surjective"] = missed == 0;
        r.data["injective"] = multiple == 0;
        r.line("carrier size " + std::to_string(obj.size()));
        r.line(std::string("comparison ") + (missed == 0 ? "surjective" : "not surjective") + ", " +
               (multiple == 0 ? "injective" : "not injective"));
        return r;
      };
    });
  }
  // ---- nerve
  {
    auto* s = sub("nerve", "Nerve of a finite group or groupoid");
    s->add_option("--input", input)->required();
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        Report r;
        Json j = read_json(input);
        Groupoid g = j.contains("mul") ? group_as_groupoid(group_from_json(j)) : groupoid_from_json(j);
        auto x = nerve(g, levels, common.b()).x;
        describe_levels(r, x, "nerve");
        write_output(common, to_json(x));
        return r;
      };
    });
  }
  // ---- coskeleton
  {
    auto* s = sub("coskeleton", "n-coskeleton of a truncated object");
    s->add_option("--input", input)->required();
    s->add_option("--n", n)->required();
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        Report r;
        auto x = coskeleton(*load_sset(input), n, levels, common.b());
        describe_levels(r, x, "coskeleton");
        write_output(common, to_json(x));
        return r;
      };
    });
  }
  // ---- join
  std::string right;
  {
    auto* s = sub("join", "Join S ⋆ T");
    s->add_option("--input,--left", input)->required();
    s->add_option("--right", right)->required();
    s->callback([&] {
      action = [&] {
        Report r;
        auto x = join(*load_sset(input), *load_sset(right));
        describe_levels(r, x, "join");
        write_output(common, to_json(x));
        return r;
      };
    });
  }
  // ---- dec
  {
    auto* s = sub("dec", "Dec_n X");
    s->add_option("--input", input)->required();
    s->add_option("--n", n)->required();
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        Report r;
        auto c = dec(*load_sset(input), n, levels, common.b());
        describe_levels(r, c.x, "dec");
        write_output(common, to_json(c.x));
        return r;
      };
    });
  }
  // ---- pathspace
  {
    auto* s = sub("pathspace", "P^{≥k}(f) and its augmentation to M_k(f)");
    s->add_option("--input", input)->required();
    s->add_option("--k", k)->required();
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        Report r;
        auto p = path_space(load_map(input), k, levels, common.b());
        describe_levels(r, *p.carrier, "path space");
        write_output(common, to_json(*p.carrier));
        return r;
      };
    });
  }
  // ---- strictify
  {
    auto* s = sub("strictify", "n-strictification τ_n(f)");
    s->add_option("--input", input)->required();
    s->add_option("--n", n)->required();
    s->add_option("--levels", levels, "Top stored level of the result");
    s->callback([&] {
      action = [&] {
        Report r;
        auto st = strictify(load_map(input), n, levels, common.b());
        describe_levels(r, *st.tau.src, "tau");
        bool iso = canonical_is_iso(st);
        r.data["canonical_is_iso"] = iso;
        r.line(std::string("canonical map ") + (iso ? "is" : "is not") + " an isomorphism");
        write_output(common, to_json(st.tau));
        return r;
      };
    });
  }
  // ---- group-check
  {
    auto* s = sub("group-check", "Check a finite group, or the simplicial group K(A,n) or constant G");
    s->add_option("--input", input)->required();
    s->add_option("--em-degree", em_degree, "Check K(A,n) for this n instead of the constant group");
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        Report r;
        auto g = load_simplicial_group(input, em_degree, levels, common.b());
        std::string err = check_group(g);
        r.data["group"] = g.name;
        r.data["ok"] = err.empty();
        if (!err.empty()) r.data["failure"] = err;
        r.line(g.name + (err.empty() ? ": group laws hold" : ": " + err));
        r.code = err.empty() ? 0 : 1;
        return r;
      };
    });
  }
  // ---- moore-fill
  std::string faces;
  {
    auto* s = sub("moore-fill", "Fill a horn in a simplicial group by Moore's algorithm");
    s->add_option("--group", input)->required();
    s->add_option("--em-degree", em_degree);
    s->add_option("--k", k)->required();
    s->add_option("--i", i)->required();
    s->add_option("--faces", faces, "k+1 comma separated ids; the i-th is ignored")->required();
    s->callback([&] {
      action = [&] {
        Report r;
        auto g = load_simplicial_group(input, em_degree, std::max(k, 1), common.b());
        auto fc = parse_ids(faces);
        Id x = moore_fill(g, k, i, fc);
        auto all = brute_fillers(g, k, i, fc);
        r.data["filler"] = x;
        r.data["fillers"] = all.size();
        r.line("filler " + std::to_string(x) + " (" + std::to_string(all.size()) + " fillers in all)");
        return r;
      };
    });
  }
  // ---- wbar, w
  for (const char* name : {"wbar", "w"}) {
    bool bar = std::string(name) == "wbar";
    auto* s = sub(name, bar ? "Classifying object W̄G" : "Universal bundle total space WG");
    s->add_option("--group", input)->required();
    s->add_option("--em-degree", em_degree);
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&, bar] {
      action = [&, bar] {
        Report r;
        auto g = load_simplicial_group(input, em_degree, bar ? std::max(levels - 1, 0) : levels, common.b());
        auto w = bar ? w_bar(g, levels, common.b()) : w_total(g, levels, common.b());
        describe_levels(r, *w.x, bar ? "wbar" : "w");
        write_output(common, to_json(*w.x));
        return r;
      };
    });
  }
  // ---- quotient
  std::string act = "translation";
  {
    auto* s = sub("quotient", "Homotopy quotient W G x_G X for a constant group");
    s->add_option("--group", input)->required();
    s->add_option("--action", act)->check(CLI::IsMember({"translation", "trivial"}));
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        Report r;
        auto g = constant_group(group_from_json(read_json(input)), levels);
        auto a = act == "translation" ? translation_action(g) : trivial_action(g, share(terminal(levels)));
        auto q = homotopy_quotient(a, levels, common.b());
        describe_levels(r, *q.x, "quotient");
        write_output(common, to_json(q.projection));
        return r;
      };
    });
  }
  // ---- kspace
  {
    auto* s = sub("kspace", "Eilenberg-MacLane object K(A,n)");
    s->add_option("--abelian,--input", input)->required();
    s->add_option("--n", n)->required();
    s->add_option("--levels", levels)->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        Report r;
        auto K = em_space(group_from_json(read_json(input)), n, levels, common.b());
        describe_levels(r, *K.group.x, "K");
        write_output(common, to_json(*K.group.x));
        return r;
      };
    });
  }
  // ---- cocycle-check
  std::string group_path, abelian_path, cocycle_path;
  auto load_cocycle = [&] {
    Json j = read_json(cocycle_path);
    if (!group_path.empty() && !j.contains("group")) j["group"] = read_json(group_path);
    if (!abelian_path.empty() && !j.contains("abelian")) j["abelian"] = read_json(abelian_path);
    return cocycle_from_json(j, dir_of(cocycle_path));
  };
  {
    auto* s = sub("cocycle-check", "Normalization and cocycle condition of a group cocycle");
    s->add_option("--cocycle,--input", cocycle_path)->required();
    s->add_option("--group", group_path);
    s->add_option("--abelian", abelian_path);
    s->callback([&] {
      action = [&] {
        Report r;
        auto c = load_cocycle();
        std::string err = check_group_cocycle(c);
        r.data["ok"] = err.empty();
        if (!err.empty()) r.data["failure"] = err;
        r.line(err.empty() ? "normalized cocycle" : err);
        r.code = err.empty() ? 0 : 1;
        return r;
      };
    });
  }
  // ---- descend, extract
  for (const char* name : {"descend", "extract"}) {
    bool desc = std::string(name) == "descend";
    auto* s = sub(name, desc ? "Build the 2-group of a 3-cocycle" : "Extract cover, torsor and ζ from the 2-group");
    s->add_option("--group", group_path);
    s->add_option("--abelian", abelian_path);
    s->add_option("--cocycle", cocycle_path)->required();
    s->add_option("--levels", levels)->check(CLI::Range(4, 8));
    s->callback([&, desc] {
      action = [&, desc] {
        Report r;
        auto c = load_cocycle();
        auto span = group_cocycle_as_span(c, levels, common.b());
        auto d = descend(span, common.b());
        describe_levels(r, *d.x.tau.src, "X");
        add_verdict(r, d.groupoid, "X as a 2-groupoid");
        if (desc) {
          write_output(common, to_json(*d.x.tau.src));
          return r;
        }
        auto td = extract_two_group_data(d, common.b());
        r.data["torsor"] = td.torsor;
        r.data["pentagon"] = td.pentagon;
        r.line(std::string("torsor ") + (td.torsor ? "ok" : "fails") + ", pentagon " +
               (td.pentagon ? "holds" : "fails"));
        std::size_t nonzero = std::count_if(td.zeta.begin(), td.zeta.end(), [&](Id z) { return z != c.A.e; });
        r.data["zeta_nonzero"] = nonzero;
        r.line("ζ is nonzero on " + std::to_string(nonzero) + " of " + std::to_string(td.zeta.size()) +
               " 3-simplices");
        write_output(common, to_json(td, c.A));
        return r;
      };
    });
  }
  // ---- verify
  std::string suite;
  unsigned seed = 0;
  {
    auto* s = sub("verify", "Run a property suite over built-in fixtures");
    s->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    s->add_option("--seed", seed);
    s->callback([&] {
      action = [&] {
        Report r;
        auto res = run_suite(suite, seed, common.b());
        r.data["suite"] = suite;
        r.data["seed"] = seed;
        r.data["verdict"] = res.pass ? "pass" : "fail";
        r.data["checks"] = res.checks;
        if (!res.pass) r.data["witness"] = res.failure;
        r.line(suite + ": " + (res.pass ? "pass" : "fail") + " (" + std::to_string(res.checks) + " checks)");
        if (!res.pass) r.line("first failure: " + res.failure);
        r.code = res.pass ? 0 : 1;
        return r;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Report r;
  try {
    r = action();
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  }
  if (common.format == "json") {
    std::cout << r.data.dump(1) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
  return r.code;
}
