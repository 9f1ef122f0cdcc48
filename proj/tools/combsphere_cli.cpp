// Command-line front end for the combsphere library.
//
// Exit codes: 0 success / Certified, 1 Refuted or a false predicate,
// 2 Unknown, 64 usage error, 65 contract violation on the input, 66 I/O error.

#include <CLI11.hpp>
#include <combsphere/combsphere.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace cs = combsphere;
using cs::io::json;

namespace {

constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 66;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string in;
  std::string catalog;

  void attach(CLI::App* app) {
    auto* a = app->add_option("--in", in, "input file ('-' for stdin)");
    auto* b = app->add_option("--catalog", catalog, "built-in example name");
    a->excludes(b);
  }
};

struct Output {
  bool as_json = false;
  std::string path;

  void attach(CLI::App* app) {
    app->add_flag("--json", as_json, "emit JSON instead of plain text");
    app->add_option("--out", path, "write to this file instead of stdout");
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
      if (!std::cout) throw IoError("cannot write to stdout");
      return;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) throw IoError("cannot write " + path);
  }
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

cs::Complex load_complex(const Source& src) {
  if (!src.catalog.empty()) {
    auto ex = cs::catalog::get(src.catalog);
    if (!ex.complex) throw UsageError(src.catalog + " is a point configuration, not a complex");
    return *ex.complex;
  }
  if (src.in.empty()) throw UsageError("give --in or --catalog");
  return cs::io::parse_complex(read_all(src.in));
}

cs::PointConfiguration load_points(const std::string& points_path, const std::string& catalog) {
  if (!catalog.empty()) {
    auto ex = cs::catalog::get(catalog);
    if (!ex.points) throw UsageError(catalog + " is not a point configuration");
    return *ex.points;
  }
  if (points_path.empty()) throw UsageError("give --points or --catalog");
  return cs::io::parse_points(read_all(points_path));
}

std::string render(const cs::Complex& x, bool as_json) {
  return as_json ? cs::io::to_json_text(x) : cs::io::to_text(x);
}

std::string render(const cs::CompletionResult& r, bool as_json) {
  if (as_json) return cs::io::to_json(r).dump() + "\n";
  std::string out;
  for (const auto& step : r.trace) out += "# " + step + "\n";
  return out + cs::io::to_text(r.sphere);
}

std::string join_words(const std::vector<long>& xs) {
  std::string out;
  for (long x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

int status_exit(cs::Status s) {
  switch (s) {
    case cs::Status::Certified: return 0;
    case cs::Status::Refuted: return kExitRefuted;
    case cs::Status::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Same-vertex sphere completions for simplicial complexes"};
  app.require_subcommand(1);

  long budget = cs::kDefaultBudget;
  std::uint64_t seed = 0;
  bool trust = false;

  // info
  auto* info = app.add_subcommand("info", "f-vector, Euler characteristic and structural flags");
  Source info_src;
  Output info_out;
  info_src.attach(info);
  info_out.attach(info);

  // verify
  auto* verify = app.add_subcommand("verify", "certify a structural class");
  std::string verify_kind;
  Source verify_src;
  Output verify_out;
  verify->add_option("kind", verify_kind, "sphere|ball|stacked|flag|pseudomanifold")
      ->required()
      ->check(CLI::IsMember({"sphere", "ball", "stacked", "flag", "pseudomanifold"}));
  verify_src.attach(verify);
  verify_out.attach(verify);
  verify->add_option("--budget", budget, "bistellar move budget");
  verify->add_option("--seed", seed, "tie-break seed");

  // complete
  auto* complete = app.add_subcommand("complete", "build a same-vertex sphere containing the input");
  std::string complete_kind;
  Source complete_src;
  Output complete_out;
  std::vector<std::string> factor_paths;
  std::vector<cs::Vertex> factor_vertices;
  std::optional<cs::Vertex> vertex;
  std::optional<cs::Vertex> link_vertex;
  std::string points_path;
  bool perturb = false;
  complete
      ->add_option("kind", complete_kind,
                   "join|degree|flag|stacked-ball|stacked-sphere|ball-degree|disc|polytopal")
      ->required()
      ->check(CLI::IsMember(
          {"join", "degree", "flag", "stacked-ball", "stacked-sphere", "ball-degree", "disc", "polytopal"}));
  complete_src.attach(complete);
  complete_out.attach(complete);
  complete->add_option("--factor", factor_paths, "join factor file (repeat, in order)");
  complete->add_option("--factor-vertex", factor_vertices, "vertex choice per join factor");
  complete->add_option("--vertex", vertex, "vertex v (or u for ball-degree)");
  complete->add_option("--link-vertex", link_vertex, "vertex u in the link of v (flag)");
  complete->add_option("--points", points_path, "point configuration JSON (polytopal)");
  complete->add_flag("--perturb", perturb, "perturb points into general position first (polytopal)");
  complete->add_flag("--trust", trust, "skip input certification");
  complete->add_option("--budget", budget, "bistellar move budget");
  complete->add_option("--seed", seed, "tie-break / perturbation seed");

  // hull
  auto* hull = app.add_subcommand("hull", "boundary complex of the convex hull of a point configuration");
  std::string hull_points;
  std::string hull_catalog;
  bool hull_perturb = false;
  Output hull_out;
  hull->add_option("--points", hull_points, "point configuration JSON ('-' for stdin)");
  hull->add_option("--catalog", hull_catalog, "built-in point configuration");
  hull->add_flag("--perturb", hull_perturb, "perturb into general position first");
  hull->add_option("--seed", seed, "perturbation seed");
  hull_out.attach(hull);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "built-in examples");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list names");
  auto* catalog_show = catalog->add_subcommand("show", "print one example");
  std::string show_name;
  Output show_out;
  catalog_show->add_option("name", show_name)->required();
  show_out.attach(catalog_show);

  // chain
  auto* chain = app.add_subcommand("chain", "stacked sphere chain up to the boundary of the simplex");
  Source chain_src;
  Output chain_out;
  chain_src.attach(chain);
  chain_out.attach(chain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const cs::CompletionOptions opts{trust, budget, seed};

  try {
    if (*info) {
      const cs::Complex x = load_complex(info_src);
      const auto pm = cs::pseudomanifold_check(x);
      const auto st = cs::is_standard(x);
      const bool stacked = cs::is_stacked_ball(x).stacked;
      const bool flag = pm.closed && cs::is_flag(x);
      if (info_out.as_json) {
        json j{{"dim", x.dim()},
               {"f_vector", x.f_vector()},
               {"euler_characteristic", x.euler_characteristic()},
               {"pseudomanifold", pm.is_pseudomanifold},
               {"closed", pm.closed},
               {"standard_ball", st.ball},
               {"standard_sphere", st.sphere},
               {"stacked_ball", stacked},
               {"flag", flag}};
        info_out.write(j.dump() + "\n");
      } else {
        std::ostringstream os;
        os << "dim " << x.dim() << "\n"
           << "f_vector " << join_words(x.f_vector()) << "\n"
           << "euler_characteristic " << x.euler_characteristic() << "\n"
           << "pseudomanifold " << pm.is_pseudomanifold << "\n"
           << "closed " << pm.closed << "\n"
           << "standard_ball " << st.ball << "\n"
           << "standard_sphere " << st.sphere << "\n"
           << "stacked_ball " << stacked << "\n"
           << "flag " << flag << "\n";
        info_out.write(os.str());
      }
      return 0;
    }

    if (*verify) {
      const cs::Complex x = load_complex(verify_src);
      cs::Verdict v;
      if (verify_kind == "sphere") {
        v = cs::certify_sphere(x, budget, seed);
      } else if (verify_kind == "ball") {
        v = cs::certify_ball(x, budget, seed);
      } else if (verify_kind == "stacked") {
        const auto check = cs::is_stacked_ball(x);
        if (check.stacked) {
          v.status = cs::Status::Certified;
          v.reason = "stacked ball";
          for (const auto& step : check.witness->steps)
            v.trace.push_back(step.apex == 0 ? "start " + step.facet.to_string()
                                             : "glue " + step.facet.to_string() + " on " +
                                                   step.ridge.to_string() + " apex " +
                                                   std::to_string(step.apex));
        } else {
          v = {cs::Status::Refuted, check.refutation, {}};
        }
      } else if (verify_kind == "flag") {
        const bool flag = cs::pseudomanifold_check(x).closed && cs::is_flag(x);
        v = {flag ? cs::Status::Certified : cs::Status::Refuted,
             flag ? "every clique is a face" : "standard, not closed, or a clique is missing", {}};
      } else {
        const auto pm = cs::pseudomanifold_check(x);
        v = {pm.is_pseudomanifold ? cs::Status::Certified : cs::Status::Refuted,
             pm.is_pseudomanifold ? (pm.closed ? "closed pseudomanifold" : "pseudomanifold with boundary")
                                  : "ridge in three facets or disconnected dual graph",
             {}};
      }
      if (verify_out.as_json) {
        verify_out.write(cs::io::to_json(v).dump() + "\n");
      } else {
        verify_out.write(std::string(cs::to_string(v.status)) + ": " + v.reason + "\n");
      }
      return status_exit(v.status);
    }

    if (*complete) {
      cs::CompletionResult r;
      if (complete_kind == "polytopal") {
        cs::PointConfiguration pc = load_points(points_path, complete_src.catalog);
        if (perturb) pc = cs::perturb_to_general_position(pc, cs::convex_hull(pc).boundary_complex(), seed);
        const cs::Vertex v = vertex.value_or(pc.labels().front());
        r = cs::polytopal_complete(pc, v).result;
      } else {
        const cs::Complex x = load_complex(complete_src);
        if (complete_kind == "join") {
          std::vector<cs::Complex> factors;
          for (const auto& p : factor_paths) factors.push_back(cs::io::parse_complex(read_all(p)));
          r = cs::complete_join(x, factors, factor_vertices, opts);
        } else if (complete_kind == "degree") {
          r = cs::complete_degree_d(x, vertex, opts);
        } else if (complete_kind == "flag") {
          r = cs::complete_flag(x, vertex, link_vertex, opts);
        } else if (complete_kind == "stacked-ball") {
          r = cs::complete_stacked_ball(x);
        } else if (complete_kind == "stacked-sphere") {
          r = cs::complete_stacked_sphere(x);
        } else if (complete_kind == "ball-degree") {
          r = cs::complete_ball_degree_d(x, vertex, opts);
        } else {
          r = cs::complete_disc(x, opts);
        }
      }
      complete_out.write(render(r, complete_out.as_json));
      return 0;
    }

    if (*hull) {
      cs::PointConfiguration pc = load_points(hull_points, hull_catalog);
      cs::Hull h = cs::convex_hull(pc);
      if (hull_perturb) {
        pc = cs::perturb_to_general_position(pc, h.boundary_complex(), seed);
        h = cs::convex_hull(pc);
      }
      if (hull_out.as_json) {
        json facets = json::array();
        for (const auto& f : h.facets) {
          json normal = json::array();
          for (const auto& c : f.normal) normal.push_back(c.get_str());
          facets.push_back({{"vertices", f.vertices.vertices()}, {"normal", normal}, {"offset", f.offset.get_str()}});
        }
        json j{{"facets", facets}, {"points", cs::io::to_json(pc)}};
        if (h.simplicial()) j["boundary_complex"] = cs::io::to_json(h.boundary_complex());
        hull_out.write(j.dump() + "\n");
      } else {
        hull_out.write(cs::io::to_text(h.boundary_complex()));
      }
      return 0;
    }

    if (*catalog) {
      if (*catalog_list) {
        std::string out;
        for (const auto& n : cs::catalog::names()) out += n + "\n";
        std::cout << out;
        return 0;
      }
      const auto ex = cs::catalog::get(show_name);
      if (ex.points) {
        show_out.write(cs::io::to_json(*ex.points).dump() + "\n");
      } else if (show_out.as_json) {
        json j = cs::io::to_json(*ex.complex);
        j["name"] = ex.name;
        j["provenance"] = ex.provenance;
        show_out.write(j.dump() + "\n");
      } else {
        show_out.write("# " + ex.name + ": " + ex.provenance + "\n" + cs::io::to_text(*ex.complex));
      }
      return 0;
    }

    if (*chain) {
      const auto links = cs::sphere_chain(load_complex(chain_src));
      if (chain_out.as_json) {
        json arr = json::array();
        for (const auto& c : links) arr.push_back(cs::io::to_json(c));
        chain_out.write(json{{"chain", arr}}.dump() + "\n");
      } else {
        std::string out;
        for (const auto& c : links) out += "# dim " + std::to_string(c.dim()) + "\n" + cs::io::to_text(c);
        chain_out.write(out);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == cs::ErrorCode::UnknownName ? kExitUsage : kExitData;
  }
  return kExitUsage;
}
