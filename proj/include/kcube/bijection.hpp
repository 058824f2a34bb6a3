#pragma once

#include <string>
#include <vector>

#include "kcube/cube.hpp"

// The map from a lower half of E^n onto E^{n-1}: drop the first coordinate,
// complementing the rest when the first coordinate is on the high slice.
// Every lower-half variant admits such a map; the inverse decides the slice
// from the weight of the preimage candidate.
namespace kcube {

namespace detail {

inline void require_mappable(const CubeParams& p) {
  if (p.n() < 2) throw domain_error("the map needs n >= 2 (it lands in E^{n-1}), got n=" + std::to_string(p.n()));
}

inline std::string membership_failure(const Point& a, const LowerHalfSpec& spec) {
  const int w = weight(a);
  const int first = a.first();
  if (first == spec.low_slice())
    return "first entry " + std::to_string(first) + " with weight " + std::to_string(w) + " > " +
           std::to_string(spec.low_limit());
  if (first == spec.high_slice())
    return "first entry " + std::to_string(first) + " with weight " + std::to_string(w) + " > " +
           std::to_string(spec.high_limit());
  return "first entry " + std::to_string(first) + " not in {" + std::to_string(spec.low_slice()) + ", " +
         std::to_string(spec.high_slice()) + "}";
}

}  // namespace detail

// Threshold on w(b) at or below which the preimage of b lies on the low slice.
// Standard: g. ThresholdShift(z): g+z. SliceShift(i): g-i, since a preimage
// (i, b) has weight i + w(b) and must stay within g.
inline int inverse_threshold(const LowerHalfSpec& spec) {
  return spec.low_limit() - spec.low_slice();
}

inline Point phi(const Point& a, const LowerHalfSpec& spec) {
  detail::require_mappable(spec.params());
  if (!in_lower_half(a, spec))
    throw domain_error("point is not in the " + std::string(spec.low_slice() == 0 ? "" : "shifted ") +
                       "lower half: " + detail::membership_failure(a, spec));
  const CubeParams target(spec.params().k(), spec.params().n() - 1);
  std::vector<int> rest(a.coords().begin() + 1, a.coords().end());
  if (a.first() == spec.high_slice())
    for (int& x : rest) x = target.k() - 1 - x;
  return Point(target, std::move(rest));
}

// b is a point of E^{n-1}, where n is the dimension of spec's cube.
inline Point phi_inverse(const Point& b, const LowerHalfSpec& spec) {
  detail::require_mappable(spec.params());
  const CubeParams& p = spec.params();
  if (b.params() != CubeParams(p.k(), p.n() - 1))
    throw domain_error("preimage requested for a point over " + to_string(b.params()) + ", expected k=" +
                       std::to_string(p.k()) + ", n=" + std::to_string(p.n() - 1));
  std::vector<int> coords;
  coords.reserve(static_cast<std::size_t>(p.n()));
  if (weight(b) <= inverse_threshold(spec)) {
    coords.push_back(spec.low_slice());
    coords.insert(coords.end(), b.coords().begin(), b.coords().end());
  } else {
    coords.push_back(spec.high_slice());
    for (int x : b.coords()) coords.push_back(p.k() - 1 - x);
  }
  return Point(p, std::move(coords));
}

}  // namespace kcube
