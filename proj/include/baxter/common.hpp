#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace baxter {

/// Exact integer coefficient type used throughout the algebra layer.
using Int = boost::multiprecision::cpp_int;

/// Thrown when an input value violates an operation's precondition.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a requested size exceeds the documented cap of an
/// exhaustive routine.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Internal consistency check, active in all build types.
inline void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

}  // namespace detail

/// Parse-time size cap for permutations (default 20).  The environment
/// variable BAXTER_MAX_N overrides it.
inline int max_permutation_size() {
  static const int cap = [] {
    if (const char* env = std::getenv("BAXTER_MAX_N")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 20;
  }();
  return cap;
}

}  // namespace baxter
