#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsp/catalog.hpp"
#include "hsp/errors.hpp"
#include "hsp/homspace.hpp"
#include "hsp/infinity.hpp"
#include "hsp/report.hpp"
#include "hsp/solver.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

hsp::HomSpaceData load(const std::string& file, const std::string& name) {
  if (!file.empty() && !name.empty()) throw UsageError("give either FILE or --catalog, not both");
  if (!name.empty()) {
    try {
      return hsp::catalog_entry(name);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  if (file.empty()) throw UsageError("an input FILE or --catalog NAME is required");
  return hsp::parse_homspace(read_file(file));
}

void print_constants(const hsp::HomSpaceData& data) {
  std::cout << data.name << "\n  d = " << data.d << "\n  dims =";
  for (long m : data.dims) std::cout << " " << m;
  std::cout << "\n  b =";
  for (const auto& b : data.b) std::cout << " " << hsp::to_string(b);
  std::cout << "\n  complement = " << hsp::to_string(data.complement) << "\n";
  for (const auto& [key, value] : data.triples)
    std::cout << "  [" << key[0] + 1 << ", " << key[1] + 1 << ", " << key[2] + 1 << "] = " << hsp::to_string(value)
              << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Einstein-equation polytopes of homogeneous spaces"};
  app.require_subcommand(1);

  std::string file, catalog, json_path, theta = "0";
  bool no_solve = false;
  auto* analyze = app.add_subcommand("analyze", "full analysis of a homspace/v1 file or catalog entry");
  analyze->add_option("file", file, "homspace/v1 JSON file");
  analyze->add_option("--catalog", catalog, "catalog entry name");
  analyze->add_option("--theta", theta, "moment map parameter, |theta| < 1");
  analyze->add_option("--json", json_path, "write the JSON report here (- for stdout)");
  analyze->add_flag("--no-solve", no_solve, "skip the solver");

  int kd = 0;
  auto* kaehler = app.add_subcommand("kaehler-b2", "Kaehler b2 = 1 polytope family");
  kaehler->add_option("d", kd, "number of modules, 2..7")->required();
  kaehler->add_option("--json", json_path, "write the JSON report here (- for stdout)");

  int dn = 0;
  auto* del = app.add_subcommand("delannoy", "central Delannoy number P_n(3)");
  del->add_option("n", dn, "index")->required()->check(CLI::NonNegativeNumber);

  std::string action, cname;
  auto* cat = app.add_subcommand("catalog", "built-in fixtures");
  cat->add_option("action", action, "list, show or export")->required()->check(CLI::IsMember({"list", "show", "export"}));
  cat->add_option("name", cname, "entry name");

  std::string pfile, pcatalog, pimport;
  bool use_min = false, use_max = false, show_vertices = false, show_facets = false, show_volume = false,
       do_export = false;
  auto* poly = app.add_subcommand("polytope", "moment polytopes of a space");
  poly->add_option("input", pfile, "homspace/v1 file or catalog name");
  poly->add_option("--catalog", pcatalog, "catalog entry name");
  poly->add_option("--import", pimport, "polytope JSON written by --export");
  auto* fmin = poly->add_flag("--min", use_min, "minimal polytope");
  auto* fmax = poly->add_flag("--max", use_max, "weight polytope (default)");
  fmin->excludes(fmax);
  poly->add_flag("--vertices", show_vertices, "print vertices");
  poly->add_flag("--facets", show_facets, "print facet inequalities");
  poly->add_flag("--volume", show_volume, "print the normalized volume");
  poly->add_flag("--export", do_export, "print polytope JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hsp::kExitUsage;
  }

  auto emit = [&](const hsp::AnalysisReport& r) {
    if (json_path == "-") {
      std::cout << r.json;
    } else {
      std::cout << r.summary;
      if (!json_path.empty()) write_file(json_path, r.json);
    }
    return r.exit_code;
  };

  if (*analyze) {
    hsp::AnalyzeOptions opts;
    try {
      opts.theta = hsp::parse_rational(theta);
    } catch (const std::exception&) {
      throw UsageError("--theta expects a rational p/q");
    }
    if (abs(opts.theta) >= 1) throw UsageError("--theta must satisfy |theta| < 1");
    opts.solve = !no_solve;
    return emit(hsp::analyze(load(file, catalog), opts));
  }
  if (*kaehler) {
    if (kd < 2 || kd > 7) throw UsageError("kaehler-b2 expects 2 <= d <= 7");
    return emit(hsp::kaehler_b2_report(kd));
  }
  if (*del) {
    std::cout << hsp::to_string(hsp::delannoy(dn)) << "\n";
    return hsp::kExitOk;
  }
  if (*cat) {
    if (action == "list") {
      for (const auto& n : hsp::catalog_names()) std::cout << n << "\n";
      return hsp::kExitOk;
    }
    if (cname.empty()) throw UsageError("catalog " + action + " needs a NAME");
    hsp::HomSpaceData data = load("", cname);
    if (action == "show") print_constants(data);
    else std::cout << hsp::to_json(data) << "\n";
    return hsp::kExitOk;
  }
  if (*poly) {
    hsp::LatticePolytope p = [&] {
      if (!pimport.empty()) {
        if (!pfile.empty() || !pcatalog.empty()) throw UsageError("--import takes no other input");
        return hsp::polytope_from_json(read_file(pimport));
      }
      std::string f = pfile, c = pcatalog;
      if (!f.empty() && c.empty() && !std::ifstream(f)) std::swap(f, c);
      hsp::HomSpaceData data = load(f, c);
      hsp::LatticePolytope delta = hsp::weight_polytope(data);
      if (!use_min) return delta;
      return hsp::delta_min(delta, hsp::flat_complex(data), data.central);
    }();
    if (!show_vertices && !show_facets && !show_volume && !do_export) do_export = true;
    if (show_vertices)
      for (const auto& v : p.vertices()) std::cout << hsp::format_point(v) << "\n";
    if (show_facets)
      for (const auto& f : p.facets()) {
        std::cout << "<" << hsp::format_point(f.normal) << ", x> >= " << f.offset << "\n";
      }
    if (show_volume) std::cout << hsp::to_string(hsp::normalized_volume(p)) << "\n";
    if (do_export) std::cout << hsp::to_json(p) << "\n";
    return hsp::kExitOk;
  }
  return hsp::kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hsp::kExitUsage;
  } catch (const hsp::ValidationError& e) {
    std::cerr << "invalid data: " << e.what() << "\n";
    return hsp::kExitInvalid;
  } catch (const hsp::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return hsp::kExitUnsupported;
  } catch (const hsp::DegenerateError& e) {
    std::cerr << "invalid data: " << e.what() << "\n";
    return hsp::kExitInvalid;
  } catch (const hsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hsp::kExitUsage;
  }
}
