#pragma once
#include <stdexcept>
#include <string>

namespace hitchin {

// Domain violations caused by caller input; the CLI maps these to exit code 2.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariants; the CLI maps these to exit code 4.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw domain_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace hitchin
