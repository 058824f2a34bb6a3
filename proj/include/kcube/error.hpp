#pragma once

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kcube {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point, family or parameter outside the domain an operation is defined on.
class domain_error : public error {
 public:
  using error::error;
};

// Refusal to start work whose size exceeds the configured budget.
class budget_error : public error {
 public:
  using error::error;
};

// Malformed text input (points, families, variants, ranges).
class parse_error : public error {
 public:
  using error::error;
};

// Work guard shared by every enumeration. The limit applies to the number of
// points materialized, to |ground|^2 for graph construction and to the number
// of families emitted by an enumeration.
struct Budget {
  static constexpr std::uint64_t default_limit = 100'000'000;

  std::uint64_t limit = default_limit;

  // Reads KCUBE_BUDGET if set; falls back to the default otherwise.
  static Budget from_env() {
    Budget b;
    if (const char* env = std::getenv("KCUBE_BUDGET"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      errno = 0;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (errno != 0 || end == env || *end != '\0' || v == 0)
        throw parse_error("KCUBE_BUDGET must be a positive decimal integer, got '" +
                          std::string(env) + "'");
      b.limit = v;
    }
    return b;
  }

  void require(std::uint64_t amount, const std::string& what) const {
    if (amount > limit)
      throw budget_error(what + " needs " + std::to_string(amount) +
                         " units of work, budget is " + std::to_string(limit));
  }
};

}  // namespace kcube
