#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <exception>
#include <tuple>
#include <thread>
#include <utility>
#include <vector>

#include "kcube/bijection.hpp"
#include "kcube/cube.hpp"
#include "kcube/families.hpp"
#include "kcube/text.hpp"

// Exhaustive checks of the lower-half map over parameter grids. Each check
// produces a VerifyReport; failures carry up to max_witnesses witnesses.
namespace kcube::verify {

// Deliberate faults for testing that the checks can fail.
enum class Mutation {
  none,
  drop_complement,           // the map never complements the tail
  g_for_g_prime,             // the high slice admits weights up to g instead of g'
  always_self_intersecting,  // every point counts as self-intersecting
};

inline std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::drop_complement: return "drop-complement";
    case Mutation::g_for_g_prime: return "g-for-g-prime";
    case Mutation::always_self_intersecting: return "always-self-intersecting";
  }
  return "none";
}

inline Mutation parse_mutation(std::string_view s) {
  for (auto m : {Mutation::none, Mutation::drop_complement, Mutation::g_for_g_prime,
                 Mutation::always_self_intersecting})
    if (to_string(m) == s) return m;
  throw parse_error("unknown mutation '" + std::string(s) + "'");
}

// The primitives the checks are phrased in. With Mutation::none every call
// forwards to the library.
class Kernel {
 public:
  explicit Kernel(Mutation m = Mutation::none) : mutation_(m) {}

  Mutation mutation() const noexcept { return mutation_; }

  bool member(const Point& a, const LowerHalfSpec& spec) const {
    if (mutation_ != Mutation::g_for_g_prime) return in_lower_half(a, spec);
    const CubeParams& p = spec.params();
    const int w = weight(a);
    if (a.first() == spec.low_slice()) return w <= spec.low_limit();
    if (a.first() == spec.high_slice()) return w <= spec.high_limit() + g_threshold(p) - g_prime_threshold(p);
    return false;
  }

  // Mutated kernels may admit points outside the true lower half, so the map
  // is written out here instead of calling phi() with its domain check.
  Point map(const Point& a, const LowerHalfSpec& spec) const {
    if (mutation_ == Mutation::none) return phi(a, spec);
    const CubeParams target(spec.params().k(), spec.params().n() - 1);
    std::vector<int> rest(a.coords().begin() + 1, a.coords().end());
    if (a.first() == spec.high_slice() && mutation_ != Mutation::drop_complement)
      for (int& x : rest) x = target.k() - 1 - x;
    return Point(target, std::move(rest));
  }

  Point inverse(const Point& b, const LowerHalfSpec& spec) const { return phi_inverse(b, spec); }

  bool self_intersects(const Point& a) const {
    return mutation_ == Mutation::always_self_intersecting || self_intersecting(a);
  }

  // Whether {a, b} (a singleton when a == b) is an intersecting antichain.
  bool pair_is_intersecting_antichain(const Point& a, const Point& b) const {
    if (mutation_ != Mutation::always_self_intersecting)
      return is_intersecting_antichain(Family({a, b}));
    if (a == b) return self_intersects(a);
    return intersects(a, b) && !preceq(a, b) && !preceq(b, a);
  }

 private:
  Mutation mutation_;
};

enum class Status { pass, vacuous, skipped, fail };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::vacuous: return "vacuous";
    case Status::skipped: return "skipped";
    case Status::fail: return "fail";
  }
  return "fail";
}

inline constexpr std::size_t max_witnesses = 16;

struct VerifyReport {
  std::string lemma;
  int k = 0;
  int n = 0;
  std::string variant;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::vector<std::string>> witnesses;
  // Extra named values (census counts, mirrored pair counts), in insertion order.
  std::vector<std::pair<std::string, std::string>> details;
  std::string note;
  bool vacuous = false;
  bool skipped = false;
  double wall_ms = 0;

  Status status() const noexcept {
    if (failures > 0) return Status::fail;
    if (skipped) return Status::skipped;
    if (vacuous) return Status::vacuous;
    return Status::pass;
  }
  bool ok() const noexcept { return failures == 0; }

  void fail(std::vector<std::string> witness) {
    ++failures;
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(witness));
  }
  void fail(std::initializer_list<Point> pts, std::string tag = {}) {
    std::vector<std::string> w;
    if (!tag.empty()) w.push_back(std::move(tag));
    for (const auto& p : pts) w.push_back(format_point(p));
    fail(std::move(w));
  }
  void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

struct Options {
  Budget budget{};
  Mutation mutation = Mutation::none;
  unsigned threads = 1;
  // Census checks on cubes with more than this many points in E^{n-1} are
  // reported as skipped. Counting grows roughly with the number of
  // intersecting antichains, which passes 5*10^7 at k=5, n=4.
  std::uint64_t census_max_points = 64;
  // Census counts are cross-checked against subset enumeration up to this
  // ground-set size.
  std::size_t oracle_max_points = 16;
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerifyReport make_report(std::string lemma, const LowerHalfSpec& spec) {
  VerifyReport r;
  r.lemma = std::move(lemma);
  r.k = spec.params().k();
  r.n = spec.params().n();
  r.variant = format_variant(spec);
  return r;
}

inline std::vector<Point> lower_half(const Kernel& kernel, const LowerHalfSpec& spec, const Budget& budget) {
  std::vector<Point> out;
  for_each_point(
      spec.params(),
      [&](Point&& a) {
        if (kernel.member(a, spec)) out.push_back(std::move(a));
      },
      budget);
  return out;
}

inline CubeParams image_cube(const LowerHalfSpec& spec) {
  kcube::detail::require_mappable(spec.params());
  return CubeParams(spec.params().k(), spec.params().n() - 1);
}

}  // namespace detail

// Identities that do not involve the map: the threshold identity, the
// complement involution and its weight, self-intersection against the pair
// relation, membership against both layer-union descriptions, and the size
// of the lower half.
inline VerifyReport verify_structure(const LowerHalfSpec& spec, const Options& opt = {}) {
  auto r = detail::make_report("structure", spec);
  const detail::Stopwatch watch;
  const Kernel kernel(opt.mutation);
  const CubeParams& p = spec.params();

  ++r.checked;
  if (g_threshold(p) + 1 + g_prime_threshold(p) != p.max_weight())
    r.fail({"g+1+g' != n(k-1)", std::to_string(g_threshold(p)), std::to_string(g_prime_threshold(p))});

  const auto via_g = layers::lower_half_via_g(spec, opt.budget);
  const auto via_g_prime = layers::lower_half_via_g_prime(spec, opt.budget);
  std::uint64_t members = 0;
  for_each_point(
      p,
      [&](Point&& a) {
        r.checked += 4;
        const Point c = complement(a);
        if (complement(c) != a || weight(c) != p.max_weight() - weight(a)) r.fail({a, c}, "complement");
        if (kernel.self_intersects(a) != intersects(a, a)) r.fail({a}, "self-intersection");
        const bool m = kernel.member(a, spec);
        members += m ? 1 : 0;
        if (m != std::binary_search(via_g.begin(), via_g.end(), a)) r.fail({a}, "membership-vs-g-layers");
        if (m != std::binary_search(via_g_prime.begin(), via_g_prime.end(), a))
          r.fail({a}, "membership-vs-g'-layers");
      },
      opt.budget);

  ++r.checked;
  const auto expected = CubeParams::saturating_pow(p.k(), p.n() - 1);
  if (members != expected) r.fail({"lower-half-size", std::to_string(members), std::to_string(expected)});
  r.detail("lower_half_size", std::to_string(members));
  r.wall_ms = watch.ms();
  return r;
}

// Every low-slice member maps to a strictly lighter point than every
// high-slice member.
inline VerifyReport verify_weight_lemma(const LowerHalfSpec& spec, const Options& opt = {}) {
  auto r = detail::make_report("weight", spec);
  const detail::Stopwatch watch;
  kcube::detail::require_mappable(spec.params());
  const Kernel kernel(opt.mutation);

  std::vector<std::pair<Point, int>> low, high;
  for (auto& a : detail::lower_half(kernel, spec, opt.budget)) {
    const int w = weight(kernel.map(a, spec));
    (a.first() == spec.low_slice() ? low : high).emplace_back(std::move(a), w);
  }
  opt.budget.require(static_cast<std::uint64_t>(low.size()) * high.size(), "weight separation pairs");
  for (const auto& [a, wa] : low)
    for (const auto& [b, wb] : high) {
      ++r.checked;
      if (!(wa < wb)) r.fail({a, b});
    }
  if (low.empty() || high.empty()) {
    r.vacuous = true;
    r.note = low.empty() ? "no lower-half point on the low slice" : "no lower-half point on the high slice";
  }
  r.detail("low_slice_members", std::to_string(low.size()));
  r.detail("high_slice_members", std::to_string(high.size()));
  r.wall_ms = watch.ms();
  return r;
}

// Injectivity, surjectivity onto E^{n-1}, the weight formula of the map, and
// both round trips through the inverse.
inline VerifyReport verify_bijection(const LowerHalfSpec& spec, const Options& opt = {}) {
  auto r = detail::make_report("bijection", spec);
  const detail::Stopwatch watch;
  const Kernel kernel(opt.mutation);
  const CubeParams target = detail::image_cube(spec);
  const int k = spec.params().k();
  const int n = spec.params().n();

  const auto domain = detail::lower_half(kernel, spec, opt.budget);
  std::map<Point, Point> preimage_of;
  for (const auto& a : domain) {
    ++r.checked;
    const Point b = kernel.map(a, spec);
    const int expected_weight =
        a.first() == spec.low_slice() ? weight(a) - spec.low_slice() : (k - 1) * (n - 1) - (weight(a) - a.first());
    if (weight(b) != expected_weight) r.fail({a, b}, "weight-formula");
    if (auto [it, fresh] = preimage_of.emplace(b, a); !fresh) r.fail({it->second, a, b}, "not-injective");
    const Point back = kernel.inverse(b, spec);
    if (back != a) r.fail({a, b, back}, "inverse-after-map");
  }

  std::uint64_t targets = 0;
  for_each_point(
      target,
      [&](Point&& b) {
        ++targets;
        if (!preimage_of.contains(b)) r.fail({b}, "not-surjective");
        const Point a = kernel.inverse(b, spec);
        if (!kernel.member(a, spec)) {
          r.fail({b, a}, "inverse-outside-lower-half");
          return;
        }
        if (kernel.map(a, spec) != b) r.fail({b, a}, "map-after-inverse");
      },
      opt.budget);
  if (domain.size() != targets)
    r.fail({"domain-size", std::to_string(domain.size()), std::to_string(targets)});
  r.detail("domain_points", std::to_string(domain.size()));
  r.detail("image_points", std::to_string(preimage_of.size()));
  r.wall_ms = watch.ms();
  return r;
}

// Pairwise preservation of intersecting antichains in both directions. Pairs
// are unordered and include a == b (singletons).
inline VerifyReport verify_preservation(const LowerHalfSpec& spec, const Options& opt = {}) {
  auto r = detail::make_report("preservation", spec);
  const detail::Stopwatch watch;
  const Kernel kernel(opt.mutation);
  const CubeParams target = detail::image_cube(spec);

  const auto domain = detail::lower_half(kernel, spec, opt.budget);
  const auto m = static_cast<std::uint64_t>(domain.size());
  opt.budget.require(m * (m + 1) / 2, "preservation pairs");
  std::vector<Point> images;
  images.reserve(domain.size());
  for (const auto& a : domain) images.push_back(kernel.map(a, spec));

  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = i; j < domain.size(); ++j) {
      ++r.checked;
      if (kernel.pair_is_intersecting_antichain(domain[i], domain[j]) !=
          kernel.pair_is_intersecting_antichain(images[i], images[j]))
        r.fail({domain[i], domain[j], images[i], images[j]}, "forward");
    }

  const auto cube = enumerate_cube(target, opt.budget);
  std::vector<Point> preimages;
  preimages.reserve(cube.size());
  for (const auto& b : cube) preimages.push_back(kernel.inverse(b, spec));
  std::uint64_t mirrored = 0;
  for (std::size_t i = 0; i < cube.size(); ++i)
    for (std::size_t j = i; j < cube.size(); ++j) {
      ++mirrored;
      if (kernel.pair_is_intersecting_antichain(cube[i], cube[j]) !=
          kernel.pair_is_intersecting_antichain(preimages[i], preimages[j]))
        r.fail({cube[i], cube[j], preimages[i], preimages[j]}, "backward");
    }
  r.detail("mirrored_pairs", std::to_string(mirrored));
  r.wall_ms = watch.ms();
  return r;
}

// The number of intersecting antichains inside the lower half equals the
// number in E^{n-1}. Small ground sets are also counted by subset enumeration.
inline VerifyReport verify_census(const LowerHalfSpec& spec, const Options& opt = {}) {
  auto r = detail::make_report("census", spec);
  const detail::Stopwatch watch;
  const Kernel kernel(opt.mutation);
  const CubeParams target = detail::image_cube(spec);

  if (target.cardinality() > opt.census_max_points) {
    r.skipped = true;
    r.note = "E^{n-1} has " + std::to_string(target.cardinality()) + " points, census limit is " +
             std::to_string(opt.census_max_points);
    r.wall_ms = watch.ms();
    return r;
  }

  const auto self = [&kernel](const Point& a) { return kernel.self_intersects(a); };
  const auto lower = detail::lower_half(kernel, spec, opt.budget);
  const auto cube = enumerate_cube(target, opt.budget);
  const BigInt lower_count = count_cliques(build_compat_graph(lower, opt.budget, self), opt.threads);
  const BigInt cube_count = count_cliques(build_compat_graph(cube, opt.budget, self), opt.threads);
  r.detail("lower_half_count", lower_count.str());
  r.detail("cube_count", cube_count.str());
  ++r.checked;
  if (lower_count != cube_count) r.fail({"census", lower_count.str(), cube_count.str()});

  for (const auto& [name, ground, count] : {std::tuple{"lower_half", &lower, &lower_count},
                                            std::tuple{"cube", &cube, &cube_count}}) {
    if (ground->size() > opt.oracle_max_points) continue;
    const BigInt oracle = naive_oracle_enumerate(*ground).size();
    r.detail(std::string("oracle_") + name + "_count", oracle.str());
    ++r.checked;
    if (oracle != *count) r.fail({std::string("oracle-") + name, count->str(), oracle.str()});
  }
  r.wall_ms = watch.ms();
  return r;
}

struct Grid {
  int k_min = 2, k_max = 5;
  int n_min = 2, n_max = 4;
  bool all_variants = true;

  bool empty() const noexcept { return k_min > k_max || n_min > n_max; }

  // Cells in canonical order: k, then n, then variant as listed by
  // all_variants().
  std::vector<LowerHalfSpec> cells() const {
    std::vector<LowerHalfSpec> out;
    if (empty()) return out;
    if (k_min < 2) throw domain_error("grid needs k >= 2");
    if (n_min < 2) throw domain_error("grid needs n >= 2 (the map lands in E^{n-1})");
    for (int k = k_min; k <= k_max; ++k)
      for (int n = n_min; n <= n_max; ++n) {
        const CubeParams p(k, n);
        if (all_variants) {
          for (auto& s : kcube::all_variants(p)) out.push_back(s);
        } else {
          out.push_back(LowerHalfSpec::standard(p));
        }
      }
    return out;
  }
};

// Runs all checks on every cell: structure, weight, bijection, preservation,
// census. Cells are processed concurrently when opt.threads > 1; the result
// order is the canonical grid order regardless.
inline std::vector<VerifyReport> verify_all(const Grid& grid, const Options& opt = {}) {
  const auto cells = grid.cells();
  std::vector<std::vector<VerifyReport>> per_cell(cells.size());
  Options cell_opt = opt;
  cell_opt.threads = 1;
  auto run_cell = [&](std::size_t c) {
    const auto& s = cells[c];
    per_cell[c] = {verify_structure(s, cell_opt), verify_weight_lemma(s, cell_opt), verify_bijection(s, cell_opt),
                   verify_preservation(s, cell_opt), verify_census(s, cell_opt)};
  };

  if (opt.threads <= 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(opt.threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < opt.threads; ++t)
        pool.emplace_back([&, t] {
          try {
            for (std::size_t c; (c = next.fetch_add(1)) < cells.size();) run_cell(c);
          } catch (...) {
            errors[t] = std::current_exception();
            next = cells.size();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<VerifyReport> out;
  for (auto& reports : per_cell)
    for (auto& r : reports) out.push_back(std::move(r));
  return out;
}

inline bool all_ok(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
}

}  // namespace kcube::verify
