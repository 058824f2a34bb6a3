#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kcube/error.hpp"

namespace kcube {

// The ground space E^n = {0, ..., k-1}^n.
class CubeParams {
 public:
  CubeParams(int k, int n) : k_(k), n_(n) {
    if (k < 2) throw domain_error("alphabet size k must be at least 2, got " + std::to_string(k));
    if (n < 1) throw domain_error("dimension n must be at least 1, got " + std::to_string(n));
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }

  // n(k-1), the weight of the all-max point.
  int max_weight() const noexcept { return n_ * (k_ - 1); }

  // k^n, saturated at uint64 max.
  std::uint64_t cardinality() const noexcept { return saturating_pow(k_, n_); }

  friend bool operator==(const CubeParams&, const CubeParams&) = default;
  friend auto operator<=>(const CubeParams&, const CubeParams&) = default;

  static std::uint64_t saturating_pow(int base, int exp) noexcept {
    std::uint64_t r = 1;
    const auto b = static_cast<std::uint64_t>(base);
    for (int i = 0; i < exp; ++i) {
      if (r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
      r *= b;
    }
    return r;
  }

 private:
  int k_;
  int n_;
};

inline std::string to_string(const CubeParams& p) {
  return "k=" + std::to_string(p.k()) + ", n=" + std::to_string(p.n());
}

// An element of E^n. Immutable; ordering is lexicographic on coordinates
// (after the cube parameters).
class Point {
 public:
  Point(CubeParams params, std::vector<int> coords) : params_(params), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != params_.n())
      throw domain_error("point has " + std::to_string(coords_.size()) + " coordinates, expected n=" +
                         std::to_string(params_.n()));
    for (int c : coords_)
      if (c < 0 || c >= params_.k())
        throw domain_error("coordinate " + std::to_string(c) + " outside {0, ..., " +
                           std::to_string(params_.k() - 1) + "}");
  }

  const CubeParams& params() const noexcept { return params_; }
  int size() const noexcept { return params_.n(); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const int> coords() const noexcept { return coords_; }
  int first() const { return coords_.front(); }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  CubeParams params_;
  std::vector<int> coords_;
};

namespace detail {

inline void require_same_cube(const Point& a, const Point& b) {
  if (a.params() != b.params())
    throw domain_error("points belong to different cubes (" + to_string(a.params()) + " vs " +
                       to_string(b.params()) + ")");
}

}  // namespace detail

inline int weight(const Point& a) {
  return std::accumulate(a.coords().begin(), a.coords().end(), 0);
}

// Coordinatewise k-1-a_i.
inline Point complement(const Point& a) {
  std::vector<int> c(a.coords().begin(), a.coords().end());
  for (int& x : c) x = a.params().k() - 1 - x;
  return Point(a.params(), std::move(c));
}

// Dominance order: a_i <= b_i for every i.
inline bool preceq(const Point& a, const Point& b) {
  detail::require_same_cube(a, b);
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Some position carries a_i + b_i >= k.
inline bool intersects(const Point& a, const Point& b) {
  detail::require_same_cube(a, b);
  const int k = a.params().k();
  for (int i = 0; i < a.size(); ++i)
    if (a[i] + b[i] >= k) return true;
  return false;
}

inline bool self_intersecting(const Point& a) {
  const int k = a.params().k();
  return std::any_of(a.coords().begin(), a.coords().end(), [k](int x) { return 2 * x >= k; });
}

// g = floor(n(k-1)/2): maximum weight of a lower-half point on the low slice.
inline int g_threshold(const CubeParams& p) noexcept { return p.max_weight() / 2; }

// g' = floor((n(k-1)-1)/2): maximum weight on the high slice.
inline int g_prime_threshold(const CubeParams& p) noexcept { return (p.max_weight() - 1) / 2; }

// Which lower half of E^n is in force.
//   Standard          : slices C_0 / C_{k-1}, thresholds g / g'
//   SliceShift{i}     : slices C_i / C_{k-1-i}, thresholds g / g', 0 <= i < (k-1)/2
//   ThresholdShift{z} : slices C_0 / C_{k-1}, thresholds g+z / g'-z, 0 <= z <= g'
class LowerHalfSpec {
 public:
  struct Standard {
    friend bool operator==(const Standard&, const Standard&) = default;
  };
  struct SliceShift {
    int i;
    friend bool operator==(const SliceShift&, const SliceShift&) = default;
  };
  struct ThresholdShift {
    int z;
    friend bool operator==(const ThresholdShift&, const ThresholdShift&) = default;
  };
  using Variant = std::variant<Standard, SliceShift, ThresholdShift>;

  explicit LowerHalfSpec(CubeParams params, Variant variant = Standard{})
      : params_(params), variant_(variant) {
    if (const auto* s = std::get_if<SliceShift>(&variant_)) {
      if (s->i < 0 || 2 * s->i >= params_.k() - 1)
        throw domain_error("slice shift i=" + std::to_string(s->i) + " violates 0 <= i < (k-1)/2 for k=" +
                           std::to_string(params_.k()));
    } else if (const auto* t = std::get_if<ThresholdShift>(&variant_)) {
      const int gp = g_prime_threshold(params_);
      if (t->z < 0 || t->z > gp)
        throw domain_error("threshold shift z=" + std::to_string(t->z) + " violates 0 <= z <= g'=" +
                           std::to_string(gp));
    }
  }

  static LowerHalfSpec standard(CubeParams p) { return LowerHalfSpec(p, Standard{}); }
  static LowerHalfSpec slice(CubeParams p, int i) { return LowerHalfSpec(p, SliceShift{i}); }
  static LowerHalfSpec shift(CubeParams p, int z) { return LowerHalfSpec(p, ThresholdShift{z}); }

  const CubeParams& params() const noexcept { return params_; }
  const Variant& variant() const noexcept { return variant_; }

  // First entry of the low ("drop") slice and of the high ("complement") slice.
  int low_slice() const noexcept {
    if (const auto* s = std::get_if<SliceShift>(&variant_)) return s->i;
    return 0;
  }
  int high_slice() const noexcept { return params_.k() - 1 - low_slice(); }

  // Maximum weight admitted on the low and on the high slice.
  int low_limit() const noexcept {
    if (const auto* t = std::get_if<ThresholdShift>(&variant_)) return g_threshold(params_) + t->z;
    return g_threshold(params_);
  }
  int high_limit() const noexcept {
    if (const auto* t = std::get_if<ThresholdShift>(&variant_)) return g_prime_threshold(params_) - t->z;
    return g_prime_threshold(params_);
  }

  friend bool operator==(const LowerHalfSpec&, const LowerHalfSpec&) = default;

 private:
  CubeParams params_;
  Variant variant_;
};

// Every valid variant over p: Standard, SliceShift(i) for each valid i and
// ThresholdShift(z) for each valid z, in that order.
inline std::vector<LowerHalfSpec> all_variants(const CubeParams& p) {
  std::vector<LowerHalfSpec> out{LowerHalfSpec::standard(p)};
  for (int i = 0; 2 * i < p.k() - 1; ++i) out.push_back(LowerHalfSpec::slice(p, i));
  for (int z = 0; z <= g_prime_threshold(p); ++z) out.push_back(LowerHalfSpec::shift(p, z));
  return out;
}

// Membership by first entry and weight; O(n).
inline bool in_lower_half(const Point& a, const LowerHalfSpec& spec) {
  if (a.params() != spec.params())
    throw domain_error("point over " + to_string(a.params()) + " tested against lower half of " +
                       to_string(spec.params()));
  const int w = weight(a);
  if (a.first() == spec.low_slice()) return w <= spec.low_limit();
  if (a.first() == spec.high_slice()) return w <= spec.high_limit();
  return false;
}

// Visits all k^n points in lexicographic order.
template <class Visitor>
void for_each_point(const CubeParams& p, Visitor&& visit, const Budget& budget = {}) {
  budget.require(p.cardinality(), "enumerating E^n for " + to_string(p));
  std::vector<int> c(static_cast<std::size_t>(p.n()), 0);
  for (;;) {
    visit(Point(p, c));
    int pos = p.n() - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == p.k() - 1) c[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return;
    ++c[static_cast<std::size_t>(pos)];
  }
}

inline std::vector<Point> enumerate_cube(const CubeParams& p, const Budget& budget = {}) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(p.cardinality(), budget.limit)));
  for_each_point(p, [&](Point&& a) { out.push_back(std::move(a)); }, budget);
  return out;
}

inline std::vector<Point> enumerate_lower_half(const LowerHalfSpec& spec, const Budget& budget = {}) {
  std::vector<Point> out;
  for_each_point(
      spec.params(),
      [&](Point&& a) {
        if (in_lower_half(a, spec)) out.push_back(std::move(a));
      },
      budget);
  return out;
}

// Set-algebraic description of the lower halves as unions of weight layers
// B_t intersected with first-entry slices C_i. These materialize the sets and
// exist as a second route to membership, not for speed.
namespace layers {

// B_t, sorted.
inline std::vector<Point> layer(const CubeParams& p, int t, const Budget& budget = {}) {
  std::vector<Point> out;
  for_each_point(
      p,
      [&](Point&& a) {
        if (weight(a) == t) out.push_back(std::move(a));
      },
      budget);
  return out;
}

// C_i, sorted.
inline std::vector<Point> slice(const CubeParams& p, int i, const Budget& budget = {}) {
  std::vector<Point> out;
  for_each_point(
      p,
      [&](Point&& a) {
        if (a.first() == i) out.push_back(std::move(a));
      },
      budget);
  return out;
}

inline std::vector<Point> set_union(const std::vector<Point>& x, const std::vector<Point>& y) {
  std::vector<Point> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Point> set_intersection(const std::vector<Point>& x, const std::vector<Point>& y) {
  std::vector<Point> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// B_0 ∪ ... ∪ B_t (empty for t < 0).
inline std::vector<Point> layers_up_to(const CubeParams& p, int t, const Budget& budget = {}) {
  std::vector<Point> out;
  for (int s = 0; s <= std::min(t, p.max_weight()); ++s) out = set_union(out, layer(p, s, budget));
  return out;
}

// Lower half written with the threshold g and a parity case split.
inline std::vector<Point> lower_half_via_g(const LowerHalfSpec& spec, const Budget& budget = {}) {
  const CubeParams& p = spec.params();
  const auto lo = slice(p, spec.low_slice(), budget);
  const auto hi = slice(p, spec.high_slice(), budget);
  if (const auto* t = std::get_if<LowerHalfSpec::ThresholdShift>(&spec.variant())) {
    return set_union(set_intersection(layers_up_to(p, g_threshold(p) + t->z, budget), lo),
                     set_intersection(layers_up_to(p, g_prime_threshold(p) - t->z, budget), hi));
  }
  const int g = g_threshold(p);
  const auto both = set_union(lo, hi);
  if (p.max_weight() % 2 == 1) return set_intersection(layers_up_to(p, g, budget), both);
  return set_union(set_intersection(layers_up_to(p, g - 1, budget), both), set_intersection(layer(p, g, budget), lo));
}

// Lower half written with the threshold g'.
inline std::vector<Point> lower_half_via_g_prime(const LowerHalfSpec& spec, const Budget& budget = {}) {
  const CubeParams& p = spec.params();
  const auto lo = slice(p, spec.low_slice(), budget);
  const auto hi = slice(p, spec.high_slice(), budget);
  const int gp = g_prime_threshold(p);
  if (const auto* t = std::get_if<LowerHalfSpec::ThresholdShift>(&spec.variant())) {
    // g + z = n(k-1) - 1 - g' + z
    return set_union(set_intersection(layers_up_to(p, p.max_weight() - 1 - gp + t->z, budget), lo),
                     set_intersection(layers_up_to(p, gp - t->z, budget), hi));
  }
  const auto both = set_union(lo, hi);
  if (p.max_weight() % 2 == 1) return set_intersection(layers_up_to(p, gp, budget), both);
  return set_union(set_intersection(layers_up_to(p, gp, budget), both), set_intersection(layer(p, gp + 1, budget), lo));
}

}  // namespace layers

}  // namespace kcube
