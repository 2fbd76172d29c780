#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polypres/complex.hpp"
#include "polypres/hash.hpp"
#include "polypres/version.hpp"

namespace {

using namespace polypres;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::budget_exceeded:
    case Errc::search_exhausted:
      return 3;
    case Errc::not_bijective:
    case Errc::not_certified:
    case Errc::axiom_violation:
      return 1;
    case Errc::internal_inconsistency:
      return 4;
    default:
      return 2;
  }
}

struct Manifest {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  std::vector<std::string> lines;

  void input(const std::string& kind, const std::string& name, uint64_t hash) {
    lines.push_back("input " + kind + " " + name + " " + hash_hex(hash));
  }
  void output(const std::string& path) { lines.push_back("wrote " + path); }

  ~Manifest() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "polypres " << kVersion << " format " << kFormatVersion
              << "\n";
    for (const auto& l : lines) std::cerr << l << "\n";
    std::cerr << "elapsed " << ms << "ms\n";
  }
};

// q = p^e for prime p, or NotPrimePower
std::pair<int, int> factor_prime_power(int q) {
  if (q < 2) fail(Errc::not_prime_power, std::to_string(q));
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    fail(Errc::not_prime_power,
         std::to_string(q) + " is not a prime power");
  return {p, e};
}

void print_report(const Report& rep, const std::string& subject) {
  for (const auto& it : rep.items)
    std::cout << "check " << it.check << ": "
              << (it.pass ? "pass" : "FAIL (" + it.witness + ")") << "\n";
  std::cout << subject << ": " << (rep.pass() ? "valid" : "INVALID") << "\n";
}

Plane load_valid_plane(const std::string& path, Manifest& m) {
  Plane plane = load_plane(path);
  m.input("plane", path, plane.content_hash());
  Report rep = validate_plane(plane);
  if (!rep.pass())
    fail(Errc::axiom_violation,
         "plane " + plane.name + " is invalid: " + rep.first_failure());
  return plane;
}

std::string default_bijection_path(const std::string& plane_path) {
  std::string base = plane_path;
  const std::string ext = ".plane";
  if (base.size() > ext.size() &&
      base.compare(base.size() - ext.size(), ext.size(), ext) == 0)
    base.resize(base.size() - ext.size());
  return base + ".bijection";
}

int cmd_plane_gen(int q, std::string out, Manifest& m) {
  auto [p, e] = factor_prime_power(q);
  FieldTower tower(p, e);
  Plane plane = build_pg2(tower);
  Report rep = validate_plane(plane);
  if (!rep.pass()) {
    std::cout << plane.name << ": INVALID (" << rep.first_failure() << ")\n";
    return 1;
  }
  if (out.empty()) out = plane.name + ".plane";
  save_plane(out, plane);
  m.input("plane", out, plane.content_hash());
  m.output(out);
  std::cout << "plane " << plane.name << ": " << plane.num_points()
            << " points, " << plane.num_lines() << " lines -> " << out << "\n";
  return 0;
}

int cmd_plane_check(const std::string& path, Manifest& m) {
  Plane plane = load_plane(path);
  m.input("plane", path, plane.content_hash());
  Report rep = validate_plane(plane);
  print_report(rep, "plane " + plane.name);
  return rep.pass() ? 0 : 1;
}

int cmd_plane_dual(const std::string& path, std::string out, Manifest& m) {
  Plane plane = load_valid_plane(path, m);
  Plane dual = dualize(plane);
  Report rep = validate_plane(dual);
  if (!rep.pass())
    fail(Errc::internal_inconsistency,
         "dual of a valid plane failed validation: " + rep.first_failure());
  if (out.empty()) out = dual.name + ".plane";
  save_plane(out, dual);
  m.output(out);
  std::cout << "plane " << dual.name << ": " << dual.num_points()
            << " points, " << dual.num_lines() << " lines -> " << out << "\n";
  return 0;
}

int cmd_plane_graph(const std::string& path, std::string out, Manifest& m) {
  Plane plane = load_plane(path);
  m.input("plane", path, plane.content_hash());
  IncidenceGraph ig = incidence_graph(plane);
  if (out.empty()) out = plane.name + ".graph";
  {
    std::ofstream os(out);
    if (!os) fail(Errc::io_error, "cannot open for writing: " + out);
    write_edge_list(os, ig.graph, {ig.num_points, ig.num_lines});
  }
  m.output(out);
  std::cout << "incidence graph of " << plane.name << ": "
            << ig.graph.n << " vertices, " << ig.graph.num_edges()
            << " edges -> " << out << "\n";
  return 0;
}

int cmd_bijection_trace(int q, std::string out, Manifest& m) {
  auto [p, e] = factor_prime_power(q);
  FieldTower tower(p, e);
  Plane plane = build_pg2(tower);
  PointLineBijection bij = trace_bijection(tower, plane);
  if (out.empty()) out = plane.name + ".bijection";
  save_bijection(out, bij, plane);
  m.input("plane", plane.name, plane.content_hash());
  m.input("bijection", out, bij.content_hash());
  m.output(out);
  if (bij.certified == CertState::pass) {
    std::cout << "trace bijection over " << plane.name
              << ": P1 pass, P2 pass -> " << out << "\n";
    return 0;
  }
  std::cout << "trace bijection over " << plane.name
            << ": certification FAILED (" << bij.witness << ") -> " << out
            << "\n";
  std::cerr << "certification failed: " << bij.witness << "\n";
  return 1;
}

int cmd_bijection_search(const std::string& plane_path, uint64_t budget,
                         int jobs, std::string out, Manifest& m) {
  Plane plane = load_valid_plane(plane_path, m);
  SearchConfig cfg;
  cfg.budget = budget;
  cfg.jobs = jobs;
  SearchResult res = search_bijection(plane, cfg);
  std::cerr << "search nodes " << res.nodes << "\n";
  if (!res.found)
    fail(Errc::search_exhausted,
         "no basic bijection exists on " + plane.name + " (" +
             std::to_string(res.nodes) + " nodes)");
  if (out.empty()) out = default_bijection_path(plane_path);
  save_bijection(out, res.bijection, plane);
  m.input("bijection", out, res.bijection.content_hash());
  m.output(out);
  std::cout << "bijection over " << plane.name << ": found, certified -> "
            << out << "\n";
  return 0;
}

int cmd_bijection_verify(const std::string& plane_path,
                         const std::string& bij_path, Manifest& m) {
  Plane plane = load_valid_plane(plane_path, m);
  PointLineBijection bij = load_bijection(bij_path, plane);
  m.input("bijection", bij_path, bij.content_hash());
  if (bij.certified == CertState::pass) {
    std::cout << "bijection over " << plane.name << ": P1 pass, P2 pass\n";
    return 0;
  }
  std::cout << "bijection over " << plane.name << ": FAIL (" << bij.witness
            << ")\n";
  return 1;
}

int cmd_build(const std::string& plane_path, const std::string& bij_path,
              bool triangle, const std::string& word_str,
              const std::string& out_dir, Manifest& m) {
  namespace fs = std::filesystem;

  // word problems are usage errors; catch them before touching inputs
  Word word{"abc"};
  if (!triangle) word = validate_word(word_str);

  Plane plane = load_valid_plane(plane_path, m);
  PointLineBijection bij = load_bijection(bij_path, plane);
  m.input("bijection", bij_path, bij.content_hash());
  if (bij.certified != CertState::pass) {
    std::cout << "stage bijection: FAIL (" << bij.witness << ")\n";
    return 1;
  }
  std::cout << "stage bijection: certified\n";

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(Errc::io_error, "cannot create directory " + out_dir);
  auto path_in = [&](const char* name) {
    return (fs::path(out_dir) / name).string();
  };

  TripleSet ts = enumerate_triples(plane, bij);
  Report lemma = verify_crucial_lemma(plane, bij, ts);
  save_triples(path_in("triples.txt"), ts);
  m.output(path_in("triples.txt"));
  if (!lemma.pass()) {
    std::cout << "stage triples: FAIL (" << lemma.first_failure() << ")\n";
    return 1;
  }
  std::cout << "stage triples: " << ts.triples.size() << " verified\n";

  Presentation pres = triangle ? build_euclidean(plane, bij, ts)
                               : build_hyperbolic(plane, bij, ts, word);
  Report prep = verify_presentation(pres);
  save_presentation(path_in("presentation.txt"), pres);
  m.output(path_in("presentation.txt"));
  if (!prep.pass()) {
    std::cout << "stage presentation: FAIL (" << prep.first_failure() << ")\n";
    return 1;
  }
  std::cout << "stage presentation: " << pres.tuples.size() << " tuples, k="
            << pres.k << " verified\n";

  Polyhedron x = assemble(pres);
  ComplexReport rep = analyze(x);
  write_complex_report(path_in("report.txt"), rep, x.presentation_hash);
  m.output(path_in("report.txt"));
  std::cout << "stage complex: V=" << rep.counts.v << " E=" << rep.counts.e
            << " F=" << rep.counts.f << " chi=" << rep.counts.chi
            << " curvature=" << curvature_name(rep.curvature) << "\n";
  if (!rep.pass) {
    std::cout << "stage links: FAIL (" << rep.first_failure << ")\n";
    return 1;
  }
  std::cout << "stage links: all " << rep.links.size() << " pass\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"projective plane polygonal presentation toolkit"};
  app.set_version_flag("--version", std::string("polypres ") + kVersion +
                                        " format " +
                                        std::to_string(kFormatVersion));
  app.require_subcommand(1);

  int q = 0;
  std::string in_path, in_path2, out_path, word_str, out_dir;
  uint64_t budget = SearchConfig{}.budget;
  int jobs = 1;
  bool triangle = false;

  auto* plane_cmd = app.add_subcommand("plane", "generate, check and export planes");
  plane_cmd->require_subcommand(1);
  auto* gen = plane_cmd->add_subcommand("gen", "build PG(2,q)");
  gen->add_option("--q", q, "plane order, a prime power")->required();
  gen->add_option("-o,--out", out_path, "output file (default pg2_<q>.plane)");
  auto* check = plane_cmd->add_subcommand("check", "validate a plane file");
  check->add_option("file", in_path, "plane file")->required();
  auto* dual = plane_cmd->add_subcommand("dual", "write the dual plane");
  dual->add_option("file", in_path, "plane file")->required();
  dual->add_option("-o,--out", out_path, "output file");
  auto* graph = plane_cmd->add_subcommand("graph", "export the incidence graph");
  graph->add_option("file", in_path, "plane file")->required();
  graph->add_option("-o,--out", out_path, "output file");

  auto* bij_cmd = app.add_subcommand("bijection", "construct and verify basic bijections");
  bij_cmd->require_subcommand(1);
  auto* trace = bij_cmd->add_subcommand("trace", "algebraic trace construction");
  trace->add_option("--q", q, "plane order, a prime power")->required();
  trace->add_option("-o,--out", out_path, "output file");
  auto* search = bij_cmd->add_subcommand("search", "backtracking search");
  search->add_option("file", in_path, "plane file")->required();
  search->add_option("--budget", budget, "node budget");
  search->add_option("--jobs", jobs, "worker threads");
  search->add_option("-o,--out", out_path, "output file");
  auto* verify = bij_cmd->add_subcommand("verify", "re-certify a bijection file");
  verify->add_option("plane", in_path, "plane file")->required();
  verify->add_option("bijection", in_path2, "bijection file")->required();

  auto* build = app.add_subcommand("build", "triples, presentation and complex report");
  build->add_option("--plane", in_path, "plane file")->required();
  build->add_option("--bijection", in_path2, "bijection file")->required();
  build->add_flag("--triangle", triangle, "Euclidean triangle presentation");
  build->add_option("--word", word_str, "word z1...zn over {a,b,c}");
  build->add_option("-o,--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Manifest m;
    {
      std::ostringstream cmd;
      for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
      m.lines.push_back("command " + cmd.str());
    }
    if (gen->parsed()) return cmd_plane_gen(q, out_path, m);
    if (check->parsed()) return cmd_plane_check(in_path, m);
    if (dual->parsed()) return cmd_plane_dual(in_path, out_path, m);
    if (graph->parsed()) return cmd_plane_graph(in_path, out_path, m);
    if (trace->parsed()) return cmd_bijection_trace(q, out_path, m);
    if (search->parsed())
      return cmd_bijection_search(in_path, budget, jobs, out_path, m);
    if (verify->parsed()) return cmd_bijection_verify(in_path, in_path2, m);
    if (build->parsed()) {
      if (triangle == !word_str.empty()) {
        std::cerr << "build needs exactly one of --triangle or --word\n";
        return 2;
      }
      return cmd_build(in_path, in_path2, triangle, word_str, out_dir, m);
    }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
