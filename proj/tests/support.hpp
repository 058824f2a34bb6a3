#pragma once

#include <initializer_list>
#include <vector>

#include "kcube/kcube.hpp"

namespace kcube::testing {

inline Point pt(int k, std::initializer_list<int> coords) {
  return Point(CubeParams(k, static_cast<int>(coords.size())), std::vector<int>(coords));
}

inline std::vector<Point> pts(int k, std::initializer_list<std::initializer_list<int>> list) {
  std::vector<Point> out;
  for (auto c : list) out.push_back(pt(k, c));
  return out;
}

}  // namespace kcube::testing
