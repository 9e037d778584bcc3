#include "orbiknot/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbiknot/diagrams.hpp"
#include "orbiknot/finite_group.hpp"
#include "orbiknot/homsearch.hpp"
#include "orbiknot/invariants.hpp"
#include "orbiknot/json_io.hpp"
#include "orbiknot/montesinos.hpp"
#include "orbiknot/poset.hpp"
#include "orbiknot/symunion.hpp"
#include "orbiknot/triangle.hpp"

namespace orbiknot {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "json";
  std::string fixtures;
  std::uint64_t budget = 0;
  int threads = 1;
};

std::filesystem::path resolve(Config const &cfg, std::string const &path) {
  std::filesystem::path p(path);
  if (!std::filesystem::exists(p) && !cfg.fixtures.empty()) {
    auto alt = std::filesystem::path(cfg.fixtures) / p;
    if (std::filesystem::exists(alt)) return alt;
    alt = std::filesystem::path(cfg.fixtures) / p.filename();
    if (std::filesystem::exists(alt)) return alt;
  }
  return p;
}

json read_json(Config const &cfg, std::string const &path) {
  auto p = resolve(cfg, path);
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (json::parse_error const &e) {
    throw InputError("malformed JSON in " + p.string() + ": " + e.what());
  }
}

PDCode read_pd(Config const &cfg, std::string const &path) { return pd_from_json(read_json(cfg, path)); }

// A PD file yields its Wirtinger presentation, optionally its orbifold
// quotient; a presentation file is used as given.
GroupPresentation read_group(Config const &cfg, std::string const &path, bool orbifold) {
  auto j = read_json(cfg, path);
  GroupPresentation p = j.contains("crossings") ? wirtinger(pd_from_json(j)) : presentation_from_json(j);
  return orbifold ? orbifold_quotient(p) : p;
}

SearchOptions search_options(Config const &cfg) {
  SearchOptions o;
  if (cfg.budget > 0) o.budget = cfg.budget;
  o.threads = cfg.threads;
  return o;
}

std::string csv_cell(json const &v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(Config const &cfg, json const &j, std::ostream &out) {
  if (cfg.format == "csv" && j.is_object()) {
    std::string header;
    std::string row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      header += (header.empty() ? "" : ",") + csv_cell(it.key());
      row += (it == j.begin() ? "" : ",") + csv_cell(it.value());
    }
    out << header << "\n" << row << "\n";
    return;
  }
  out << j.dump(2) << "\n";
}

json rational_json(Rational const &q) { return to_string(q); }

json fractions_json(std::vector<Rational> const &fs) {
  json a = json::array();
  for (auto const &f : fs) a.push_back(to_string(f));
  return a;
}

std::vector<FiniteGroup> parse_battery(std::string const &spec) {
  if (spec == "default") return default_battery();
  std::vector<FiniteGroup> out;
  std::stringstream ss(spec);
  for (std::string name; std::getline(ss, name, ',');) out.push_back(named_group(name));
  return out;
}

}  // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"orbiknot: pi-orbifold group invariants and domination filters for links"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--fixtures", cfg.fixtures, "directory searched for input files not found as given");
  app.add_option("--budget", cfg.budget, "search budget (partial assignments); overrides ORBIKNOT_BUDGET")
      ->check(CLI::PositiveNumber);

  json result;
  std::function<void()> action;

  auto *det_cmd = app.add_subcommand("det", "determinant of a PD diagram");
  std::string pd_path;
  det_cmd->add_option("pd", pd_path, "PD JSON file")->required();
  det_cmd->callback([&] { action = [&] { result = {{"det", bigint_json(determinant(read_pd(cfg, pd_path)))}}; }; });

  auto *h1_cmd = app.add_subcommand("h1", "first homology of the double branched cover");
  h1_cmd->add_option("pd", pd_path, "PD JSON file")->required();
  h1_cmd->callback([&] {
    action = [&] {
      auto h = h1_double_cover(read_pd(cfg, pd_path));
      json torsion = json::array();
      for (auto const &t : h.torsion) torsion.push_back(bigint_json(t));
      result = {{"torsion", torsion}, {"free_rank", h.free_rank}, {"split", h.split}};
    };
  });

  auto *color_cmd = app.add_subcommand("color", "Fox colorings and dihedral quotients");
  int modulus = 3;
  bool want_witness = false;
  color_cmd->add_option("pd", pd_path, "PD JSON file")->required();
  color_cmd->add_option("-n,--modulus", modulus, "modulus")->required()->check(CLI::Range(2, 100000));
  color_cmd->add_flag("--witness", want_witness, "include a surjective coloring");
  color_cmd->callback([&] {
    action = [&] {
      auto code = read_pd(cfg, pd_path);
      auto space = fox_colorings(code, modulus);
      auto epi = dihedral_epi_exists(code, modulus);
      result = {{"modulus", modulus},
                {"colorings", space.count},
                {"surjective", surjective_coloring_count(code, modulus)},
                {"dihedral_epi", epi.exists}};
      if (want_witness) result["witness"] = epi.exists ? json(epi.witness) : json(nullptr);
    };
  });

  auto *hom_cmd = app.add_subcommand("hom", "homomorphisms into a finite group");
  std::string group_path;
  std::string target_name;
  bool orbifold = false;
  bool epi_only = false;
  bool count_only = false;
  hom_cmd->add_option("input", group_path, "PD or presentation JSON file")->required();
  hom_cmd->add_option("--target", target_name, "target group, e.g. D6, Z3, S4, A5, S3xZ2")->required();
  hom_cmd->add_flag("--orbifold", orbifold, "use the pi-orbifold quotient");
  hom_cmd->add_flag("--epi-only", epi_only, "list only epimorphisms");
  hom_cmd->add_flag("--count", count_only, "print counts only");
  hom_cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 64));
  hom_cmd->callback([&] {
    action = [&] {
      auto pres = read_group(cfg, group_path, orbifold);
      auto target = named_group(target_name);
      auto opts = search_options(cfg);
      result = {{"target", target.name()}, {"target_order", target.order()}, {"generators", pres.n_generators}};
      if (count_only) {
        auto c = count_homomorphisms(pres, target, opts);
        result["homs"] = c.homs;
        result["epis"] = c.epis;
        return;
      }
      auto list = epi_only ? all_epimorphisms(pres, target, opts) : all_homomorphisms(pres, target, opts);
      result["count"] = list.size();
      result[epi_only ? "epimorphisms" : "homomorphisms"] = list;
    };
  });

  auto *ev_cmd = app.add_subcommand("evidence", "finite quotient of dst that src lacks");
  std::string src_path;
  std::string dst_path;
  std::string battery_spec = "default";
  ev_cmd->add_option("src", src_path, "source PD or presentation JSON")->required();
  ev_cmd->add_option("dst", dst_path, "target PD or presentation JSON")->required();
  ev_cmd->add_option("--battery", battery_spec, "\"default\" or a comma-separated group list");
  ev_cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 64));
  ev_cmd->callback([&] {
    action = [&] {
      auto src = read_group(cfg, src_path, true);
      auto dst = read_group(cfg, dst_path, true);
      auto battery = parse_battery(battery_spec);
      auto ev = non_domination_evidence(src, dst, battery, search_options(cfg));
      json names = json::array();
      for (auto const &g : battery) names.push_back(g.name());
      result = {{"battery", names},
                {"witness", ev.witness ? json(*ev.witness) : json(nullptr)},
                {"budget_errors", ev.budget_errors}};
    };
  });

  auto *mont = app.add_subcommand("montesinos", "Montesinos link calculus");
  mont->require_subcommand(1);
  std::string fractions;
  std::string fractions2;
  std::string candidate;
  auto *mdet = mont->add_subcommand("det", "determinant |e0| prod a_i");
  mdet->add_option("tangles", fractions, "b/a,b/a,...")->required();
  mdet->callback([&] {
    action = [&] {
      auto m = parse_montesinos(fractions);
      result = {{"tangles", fractions_json(m.tangles)},
                {"e0", rational_json(normalize(m).seifert.e0)},
                {"det", bigint_json(det(m))},
                {"components", component_count(montesinos_diagram(m))}};
    };
  });
  auto *mnorm = mont->add_subcommand("normalize", "Seifert invariants and canonical form");
  mnorm->add_option("tangles", fractions, "b/a,b/a,...")->required();
  mnorm->callback([&] {
    action = [&] {
      auto m = parse_montesinos(fractions);
      auto nf = normalize(m);
      result = {{"e0", rational_json(nf.seifert.e0)},
                {"base_genus", 0},
                {"exceptional_fibers", fractions_json(nf.seifert.exceptional_fibers)},
                {"canonical", fractions_json(canonical_link(m).tangles)},
                {"det", bigint_json(det(m))}};
      if (m.r() >= 3) {
        auto [lo, hi] = rank_bounds(m);
        result["elliptic"] = is_elliptic(m);
        result["rank_bounds"] = {lo, hi};
      } else {
        auto tb = as_two_bridge(m);
        result["two_bridge"] = {{"p", tb.p}, {"q", tb.q}};
      }
    };
  });
  auto *mequiv = mont->add_subcommand("equiv", "equivalence of two Montesinos links");
  mequiv->add_option("a", fractions, "b/a,b/a,...")->required();
  mequiv->add_option("b", fractions2, "b/a,b/a,...")->required();
  mequiv->callback([&] {
    action = [&] { result = {{"equivalent", equivalent(parse_montesinos(fractions), parse_montesinos(fractions2))}}; };
  });
  auto *mfilter = mont->add_subcommand("filter", "necessary conditions for domination of a candidate class");
  mfilter->add_option("src", fractions, "b/a,b/a,...")->required();
  mfilter->add_option("--candidate", candidate, "link class, e.g. twobridge:9/7 or sum:twobridge:3/1+torus:3,4")
      ->required();
  mfilter->callback([&] {
    action = [&] {
      auto d = parse_descriptor(candidate);
      result = to_json(domination_filter(parse_montesinos(fractions), d));
      result["candidate"] = to_json(d);
    };
  });

  auto *tri = app.add_subcommand("triangle", "triangle group calculus");
  tri->require_subcommand(1);
  std::vector<int> indices;
  auto *tclass = tri->add_subcommand("classify", "elliptic, Euclidean or hyperbolic");
  tclass->add_option("indices", indices, "a b c")->required()->expected(3);
  tclass->callback([&] {
    action = [&] {
      auto t = make_triangle(indices[0], indices[1], indices[2]);
      auto order = elliptic_order(t);
      result = {{"triple", {t.a, t.b, t.c}},
                {"type", to_string(classify(t))},
                {"minus_chi", rational_json(minus_chi(t))},
                {"order", order ? json(*order) : json(nullptr)}};
    };
  });
  auto *tobs = tri->add_subcommand("obstruct", "obstructions to an epimorphism T(a,b,c) -> T(a',b',c')");
  tobs->add_option("indices", indices, "a b c -- a' b' c'")->required()->expected(6);
  tobs->callback([&] {
    action = [&] {
      auto s = make_triangle(indices[0], indices[1], indices[2]);
      auto d = make_triangle(indices[3], indices[4], indices[5]);
      auto o = epi_obstruction(s, d);
      result = {{"src", {s.a, s.b, s.c}},
                {"dst", {d.a, d.b, d.c}},
                {"result", to_string(o.kind)},
                {"detail", o.detail},
                {"heuristic", o.heuristic},
                {"minus_chi", {{"src", rational_json(minus_chi(s))}, {"dst", rational_json(minus_chi(d))}}}};
    };
  });

  auto *minimal = app.add_subcommand("minimal", "pi-minimality certificates");
  minimal->require_subcommand(1);
  std::vector<int> pq;
  auto *mtorus = minimal->add_subcommand("torus", "torus knot T(p,q)");
  mtorus->add_option("pq", pq, "p q")->required()->expected(2);
  mtorus->callback([&] { action = [&] { result = to_json(torus_knot_pi_minimal(pq[0], pq[1])); }; });
  auto *mmont = minimal->add_subcommand("montesinos", "Montesinos knot with three tangles");
  mmont->add_option("tangles", fractions, "b/a,b/a,b/a")->required();
  mmont->callback([&] { action = [&] { result = to_json(montesinos_pi_minimal(parse_montesinos(fractions))); }; });

  auto *sym = app.add_subcommand("symunion", "symmetric union partial knot analysis");
  sym->require_subcommand(1);
  auto *srep = sym->add_subcommand("report", "partial knot candidates for a knot diagram");
  std::string k_class;
  srep->add_option("pd", pd_path, "PD JSON file of the knot")->required();
  srep->add_option("--class", k_class, "link class of K, e.g. montesinos:1/3,2/3,4/5");
  srep->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 64));
  srep->callback([&] {
    action = [&] {
      std::optional<LinkClassDescriptor> cls;
      if (!k_class.empty()) cls = parse_descriptor(k_class);
      result = to_json(partial_knot_report(read_pd(cfg, pd_path), cls, search_options(cfg)));
    };
  });

  auto *poset_cmd = app.add_subcommand("poset", "filter verdicts between normalized Montesinos links as DOT");
  int alpha_max = 5;
  int r_max = 3;
  std::string dot_path;
  poset_cmd->add_option("--alpha-max", alpha_max, "largest denominator")->check(CLI::Range(2, 12));
  poset_cmd->add_option("--r-max", r_max, "largest tangle count")->check(CLI::Range(3, 6));
  poset_cmd->add_option("--out", dot_path, "DOT output file")->required();
  poset_cmd->callback([&] {
    action = [&] {
      auto poset = build_poset(alpha_max, r_max);
      std::ofstream file(dot_path);
      if (!file) throw InputError("cannot write " + dot_path);
      file << to_dot(poset);
      std::size_t excluded = 0;
      for (auto const &e : poset.edges) excluded += e.verdict.is_excluded();
      result = {{"nodes", poset.nodes.size()},
                {"edges", poset.edges.size()},
                {"excluded_edges", excluded},
                {"out", dot_path}};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }

  try {
    action();
    emit(cfg, result, out);
    return kExitOk;
  } catch (BudgetExceeded const &e) {
    err << "budget error: " << e.what() << "\n";
    return kExitBudgetError;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace orbiknot
