// Command-line front end for the exact skein-algebra engine.
//
// Exit codes: 0 success, 1 domain error (machine-readable error JSON on
// stdout), 2 usage error.  Identical invocations produce byte-identical
// output: all data is serialized from canonical sorted containers and no
// timings or environment details are printed.

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "skein/algebra.hpp"
#include "skein/cheb.hpp"
#include "skein/curves.hpp"
#include "skein/error.hpp"
#include "skein/json_io.hpp"
#include "skein/planar.hpp"
#include "skein/surface.hpp"
#include "skein/trace.hpp"
#include "skein/verify.hpp"

namespace {

using skein::Json;

void emit(const Json& j, const std::string& output_path) {
  std::string text = j.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    skein::write_text_file(output_path, text);
  }
}

skein::RingMode parse_ring(const std::string& ring) {
  if (ring == "generic") return skein::RingMode::generic_mode();
  constexpr std::string_view kPrefix = "cyclotomic:";
  if (ring.rfind(kPrefix, 0) == 0) {
    const std::string num = ring.substr(kPrefix.size());
    try {
      return skein::RingMode::cyclotomic(std::stoi(num));
    } catch (const std::exception&) {
      skein::fail("parse", "bad ring parameter '" + ring + "'");
    }
  }
  skein::fail("parse", "ring must be 'generic' or 'cyclotomic:N', got '" + ring + "'");
}

int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the Kauffman bracket skein algebra of a triangulated "
               "punctured surface"};
  app.require_subcommand(1);

  std::string surface_arg, ring = "generic", output_path;
  std::string element_path, left_path, right_path, coloring_path;
  int bound = 6;
  int root_n = 0;
  int jobs = default_jobs();
  int max_crossings = skein::kDefaultCrossingBound;
  std::uint64_t seed = 0;
  bool debug = false;
  bool verify_all = false;
  std::vector<std::string> suites;

  auto add_surface = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--surface", surface_arg,
                                "surface JSON file, or preset:<name>");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output_path, "write the JSON result to this file");
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", ring, "coefficient ring: generic (default) or cyclotomic:N");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--max-crossings", max_crossings,
                    "crossing budget per placement (SKEINLAB_MAX_CROSSINGS overrides)");
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "check a triangulation file");
  add_surface(cmd_validate);
  add_common(cmd_validate);

  CLI::App* cmd_components =
      app.add_subcommand("components", "decompose a coloring into primitive components");
  add_surface(cmd_components);
  cmd_components->add_option("--coloring", coloring_path, "coloring JSON file")->required();
  add_common(cmd_components);

  CLI::App* cmd_hilbert =
      app.add_subcommand("hilbert-basis", "indivisible admissible colorings up to a bound");
  add_surface(cmd_hilbert);
  cmd_hilbert->add_option("--bound", bound, "weight bound")->required();
  add_common(cmd_hilbert);

  CLI::App* cmd_product = app.add_subcommand("product", "stacking product of two elements");
  add_surface(cmd_product);
  cmd_product->add_option("--left", left_path, "left element JSON file")->required();
  cmd_product->add_option("--right", right_path, "right element JSON file")->required();
  cmd_product->add_flag("--debug", debug, "include placement diagnostics");
  add_ring(cmd_product);
  add_jobs(cmd_product);
  add_bound(cmd_product);
  add_common(cmd_product);

  CLI::App* cmd_symbol = app.add_subcommand("symbol", "top-weight part of an element");
  add_surface(cmd_symbol);
  cmd_symbol->add_option("--element", element_path, "element JSON file")->required();
  add_ring(cmd_symbol);
  add_common(cmd_symbol);

  CLI::App* cmd_thread =
      app.add_subcommand("thread", "thread every component with T_N and expand");
  add_surface(cmd_thread);
  cmd_thread->add_option("--element", element_path, "element JSON file")->required();
  cmd_thread->add_option("--N", root_n, "threading order (odd, >= 3)")->required();
  add_ring(cmd_thread);
  add_common(cmd_thread);

  CLI::App* cmd_tocheb =
      app.add_subcommand("to-cheb", "rewrite an element in the threaded basis");
  add_surface(cmd_tocheb);
  cmd_tocheb->add_option("--element", element_path, "element JSON file")->required();
  add_ring(cmd_tocheb);
  add_common(cmd_tocheb);

  CLI::App* cmd_trace = app.add_subcommand("trace", "projection onto the threaded center");
  add_surface(cmd_trace);
  cmd_trace->add_option("--element", element_path, "element JSON file")->required();
  cmd_trace->add_option("--N", root_n, "root order (odd, >= 3)")->required();
  add_ring(cmd_trace);
  add_common(cmd_trace);

  CLI::App* cmd_certify =
      app.add_subcommand("certify-nonzero", "multiplier + nonzero trace witness");
  add_surface(cmd_certify);
  cmd_certify->add_option("--element", element_path, "element JSON file")->required();
  cmd_certify->add_option("--N", root_n, "root order (odd, >= 3)")->required();
  add_ring(cmd_certify);
  add_jobs(cmd_certify);
  add_bound(cmd_certify);
  add_common(cmd_certify);

  CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
  cmd_verify->add_option("--suite", suites, "suite name (repeatable); see --list");
  cmd_verify->add_flag("--all", verify_all, "run every suite");
  bool list_suites = false;
  cmd_verify->add_flag("--list", list_suites, "list suite names and exit");
  cmd_verify->add_option("--seed", seed, "PRNG seed for randomized suites (default 0)");
  add_jobs(cmd_verify);
  add_common(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_validate)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      Json out{{"valid", true},
               {"edges", T.edge_count()},
               {"triangles", T.triangle_count()},
               {"punctures", T.puncture_count()},
               {"genus", T.genus()},
               {"euler_characteristic", T.euler_characteristic()},
               {"embedded_only", T.embedded_only()}};
      emit(out, output_path);
    } else if (app.got_subcommand(cmd_components)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      skein::Coloring f = skein::coloring_from_json(T, skein::read_json_file(coloring_path));
      emit(skein::decomposition_to_json(T, skein::decompose(T, f)), output_path);
    } else if (app.got_subcommand(cmd_hilbert)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      Json basis = Json::array();
      for (const skein::Coloring& f : skein::hilbert_basis(T, bound))
        basis.push_back(skein::coloring_to_json(T, f));
      emit(Json{{"bound", bound}, {"complete", "unverified"}, {"basis", std::move(basis)}},
           output_path);
    } else if (app.got_subcommand(cmd_product)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      skein::RingMode mode = parse_ring(ring);
      skein::SkeinElement x =
          skein::element_from_json(T, mode, skein::read_json_file(left_path));
      skein::SkeinElement y =
          skein::element_from_json(T, mode, skein::read_json_file(right_path));
      skein::SkeinElement xy = skein::product(T, x, y, max_crossings, jobs);
      if (debug) {
        Json placements = Json::array();
        for (const auto& [f, cf] : x.terms()) {
          for (const auto& [g, cg] : y.terms()) {
            placements.push_back(skein::placement_to_json(skein::place(T, f, g)));
          }
        }
        emit(Json{{"element", skein::element_to_json(T, xy)},
                  {"placements", std::move(placements)}},
             output_path);
      } else {
        emit(skein::element_to_json(T, xy), output_path);
      }
    } else if (app.got_subcommand(cmd_symbol)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      skein::RingMode mode = parse_ring(ring);
      skein::SkeinElement x =
          skein::element_from_json(T, mode, skein::read_json_file(element_path));
      skein::Symbol s = skein::symbol(x);
      Json leading = Json::array();
      for (const auto& [f, c] : s.leading) {
        leading.push_back(Json{{"coloring", skein::coloring_to_json(T, f)},
                               {"coeff", skein::coefficient_to_json(c)}});
      }
      emit(Json{{"weight", s.weight}, {"leading", std::move(leading)}}, output_path);
    } else if (app.got_subcommand(cmd_thread)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      skein::RingMode mode = parse_ring(ring);
      skein::SkeinElement x =
          skein::element_from_json(T, mode, skein::read_json_file(element_path));
      emit(skein::element_to_json(T, skein::thread_tau(T, x, root_n)), output_path);
    } else if (app.got_subcommand(cmd_tocheb)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      skein::RingMode mode = parse_ring(ring);
      skein::SkeinElement x =
          skein::element_from_json(T, mode, skein::read_json_file(element_path));
      emit(skein::threaded_to_json(T, skein::to_threaded(T, x)), output_path);
    } else if (app.got_subcommand(cmd_trace)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      skein::RingMode mode = parse_ring(ring);
      skein::SkeinElement x =
          skein::element_from_json(T, mode, skein::read_json_file(element_path));
      emit(skein::trace_result_to_json(T, skein::trace(T, x, root_n)), output_path);
    } else if (app.got_subcommand(cmd_certify)) {
      skein::IdealTriangulation T = skein::load_surface(surface_arg);
      skein::RingMode mode = parse_ring(ring);
      skein::SkeinElement x =
          skein::element_from_json(T, mode, skein::read_json_file(element_path));
      skein::NonzeroCertificate cert =
          skein::nonzero_certificate(T, x, root_n, max_crossings, jobs);
      emit(skein::certificate_to_json(T, cert), output_path);
    } else if (app.got_subcommand(cmd_verify)) {
      if (list_suites) {
        Json names = Json::array();
        for (const auto& [name, criterion] : skein::verification_suites())
          names.push_back(Json{{"name", name}, {"criterion", criterion}});
        emit(names, output_path);
        return 0;
      }
      if (verify_all) {
        suites.clear();
        for (const auto& [name, criterion] : skein::verification_suites())
          suites.push_back(name);
      }
      if (suites.empty()) {
        std::cerr << "verify: pass --all, --list, or at least one --suite NAME\n";
        return 2;
      }
      bool all_passed = true;
      Json report = Json::array();
      for (const std::string& name : suites) {
        skein::SuiteResult r = skein::run_suite(name, seed, jobs);
        all_passed = all_passed && r.passed;
        report.push_back(Json{{"name", r.name},
                              {"criterion", r.criterion},
                              {"passed", r.passed},
                              {"notes", r.notes}});
      }
      emit(Json{{"suites", std::move(report)}, {"all_passed", all_passed}}, output_path);
      return all_passed ? 0 : 1;
    }
    return 0;
  } catch (const skein::Error& e) {
    Json err{{"error", Json{{"code", e.code()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
