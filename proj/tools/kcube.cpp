// kcube: lower-half map, intersecting-antichain enumeration and exhaustive
// verification for the k-valued n-cube.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error,
// 3 budget exceeded, 64 usage error.

#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "kcube/kcube.hpp"

namespace {

constexpr int exit_verify_failed = 1;
constexpr int exit_domain = 2;
constexpr int exit_budget = 3;
constexpr int exit_usage = 64;

struct CubeArgs {
  int k = 0;
  int n = 0;
  std::string variant = "standard";
};

void add_cube_options(CLI::App* cmd, CubeArgs& args, bool with_variant = true) {
  cmd->add_option("--k", args.k, "alphabet size (k >= 2)")->required();
  cmd->add_option("--n", args.n, "dimension (n >= 1)")->required();
  if (with_variant)
    cmd->add_option("--variant", args.variant, "lower half: standard | slice:<i> | shift:<z>")
        ->capture_default_str();
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto parts = kcube::detail::split(text, ':');
  if (parts.size() == 1) {
    const int v = kcube::detail::parse_int(parts[0], "range");
    return {v, v};
  }
  if (parts.size() != 2) throw kcube::parse_error("range must be <lo>:<hi> or <value>, got '" + text + "'");
  return {kcube::detail::parse_int(parts[0], "range bound"), kcube::detail::parse_int(parts[1], "range bound")};
}

std::vector<kcube::Point> ground_set(const std::string& space, const kcube::LowerHalfSpec& spec,
                                     const kcube::Budget& budget) {
  if (space == "cube") return kcube::enumerate_cube(spec.params(), budget);
  return kcube::enumerate_lower_half(spec, budget);
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"k-valued cube toolkit: lower-half map, intersecting antichains, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for counting and verification")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  CubeArgs map_args;
  std::string point_text;
  bool inverse = false;
  auto* map_cmd = app.add_subcommand("map", "apply the lower-half map or its inverse to a point");
  add_cube_options(map_cmd, map_args);
  map_cmd->add_option("--point", point_text, "point as comma-separated coordinates")->required();
  map_cmd->add_flag("--inverse", inverse, "map a point of E^{n-1} back into the lower half of E^n");

  CubeArgs enum_args;
  std::string enum_space = "cube";
  std::string enum_what = "points";
  bool count_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "list points or intersecting antichains of a ground set");
  add_cube_options(enum_cmd, enum_args);
  enum_cmd->add_option("--space", enum_space, "ground set")
      ->check(CLI::IsMember({"cube", "lower"}))
      ->capture_default_str();
  enum_cmd->add_option("--what", enum_what, "objects to list")
      ->check(CLI::IsMember({"points", "ia"}))
      ->capture_default_str();
  enum_cmd->add_flag("--count-only", count_only, "print only the number of objects");

  CubeArgs max_args;
  std::string max_space = "cube";
  auto* max_cmd = app.add_subcommand("max-ia", "find a maximum intersecting antichain");
  add_cube_options(max_cmd, max_args);
  max_cmd->add_option("--space", max_space, "ground set")
      ->check(CLI::IsMember({"cube", "lower"}))
      ->capture_default_str();

  std::string k_range = "2:5";
  std::string n_range = "2:4";
  std::string variants = "all";
  std::string format = "table";
  std::string mutant = "none";
  bool timing = false;
  std::uint64_t census_max_points = kcube::verify::Options{}.census_max_points;
  auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive checks over a parameter grid");
  verify_cmd->add_option("--k-range", k_range, "k values, <lo>:<hi>")->capture_default_str();
  verify_cmd->add_option("--n-range", n_range, "n values, <lo>:<hi>")->capture_default_str();
  verify_cmd->add_option("--variants", variants, "variants per cell")
      ->check(CLI::IsMember({"all", "standard"}))
      ->capture_default_str();
  verify_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  verify_cmd->add_option("--census-max-points", census_max_points, "skip census checks above this |E^{n-1}|")
      ->capture_default_str();
  verify_cmd->add_flag("--timing", timing, "include wall times (output is then not reproducible)");
  verify_cmd->add_option("--mutant", mutant,
                         "inject a fault: none | drop-complement | g-for-g-prime | always-self-intersecting")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    const auto budget = kcube::Budget::from_env();

    if (map_cmd->parsed()) {
      const kcube::CubeParams p(map_args.k, map_args.n);
      const auto spec = kcube::parse_variant(map_args.variant, p);
      if (inverse) {
        if (p.n() < 2) throw kcube::domain_error("the inverse map needs n >= 2");
        const auto b = kcube::parse_point(point_text, kcube::CubeParams(p.k(), p.n() - 1));
        std::cout << kcube::format_point(kcube::phi_inverse(b, spec)) << '\n';
      } else {
        const auto a = kcube::parse_point(point_text, p);
        std::cout << kcube::format_point(kcube::phi(a, spec)) << '\n';
      }
      return 0;
    }

    if (enum_cmd->parsed()) {
      const kcube::CubeParams p(enum_args.k, enum_args.n);
      const auto spec = kcube::parse_variant(enum_args.variant, p);
      if (enum_what == "points") {
        if (count_only) {
          std::cout << ground_set(enum_space, spec, budget).size() << '\n';
          return 0;
        }
        kcube::for_each_point(
            p,
            [&](kcube::Point&& a) {
              if (enum_space == "cube" || kcube::in_lower_half(a, spec)) std::cout << kcube::format_point(a) << '\n';
            },
            budget);
        return 0;
      }
      const auto ground = ground_set(enum_space, spec, budget);
      if (count_only) {
        std::cout << kcube::count_intersecting_antichains(ground, budget, threads) << '\n';
        return 0;
      }
      kcube::for_each_intersecting_antichain(
          ground, [](const kcube::Family& f) { std::cout << kcube::format_family(f) << '\n'; }, budget);
      return 0;
    }

    if (max_cmd->parsed()) {
      const kcube::CubeParams p(max_args.k, max_args.n);
      const auto spec = kcube::parse_variant(max_args.variant, p);
      const auto best = kcube::max_intersecting_antichain(ground_set(max_space, spec, budget), budget);
      std::cout << "size=" << best.size() << '\n' << "family=" << kcube::format_family(best) << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      kcube::verify::Grid grid;
      std::tie(grid.k_min, grid.k_max) = parse_range(k_range);
      std::tie(grid.n_min, grid.n_max) = parse_range(n_range);
      grid.all_variants = variants == "all";
      kcube::verify::Options opt;
      opt.budget = budget;
      opt.threads = threads;
      opt.mutation = kcube::verify::parse_mutation(mutant);
      opt.census_max_points = census_max_points;

      const auto reports = kcube::verify::verify_all(grid, opt);
      if (format == "json") {
        for (const auto& r : reports) std::cout << kcube::verify::to_json_line(r, timing) << '\n';
      } else {
        std::cout << kcube::verify::table_header() << '\n';
        std::size_t failing = 0;
        for (const auto& r : reports) {
          std::cout << kcube::verify::to_table_row(r, timing) << '\n';
          failing += r.ok() ? 0 : 1;
        }
        std::cout << reports.size() << " reports, " << failing << " failing\n";
      }
      std::cout.flush();
      return kcube::verify::all_ok(reports) ? 0 : exit_verify_failed;
    }
  } catch (const kcube::parse_error& e) {
    std::cerr << "kcube: " << e.what() << '\n';
    return exit_usage;
  } catch (const kcube::domain_error& e) {
    std::cerr << "kcube: " << e.what() << '\n';
    return exit_domain;
  } catch (const kcube::budget_error& e) {
    std::cout.flush();
    std::cerr << "kcube: " << e.what() << '\n';
    return exit_budget;
  }
  return exit_usage;
}
