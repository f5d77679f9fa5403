#pragma once

#include <stdexcept>
#include <string>

namespace skewq {

/// Error severity classes, mapped to CLI exit codes.
///   Input:      malformed or invalid user data (exit 1)
///   Hypothesis: a theorem hypothesis fails on valid data, e.g. the
///               preprojective relation is not stable (exit 2)
///   Guard:      an internal consistency check tripped; if one of these
///               fires on validated input it would contradict the theory,
///               so the full state is worth dumping (exit 3)
enum class ErrorCategory { kInput, kHypothesis, kGuard };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message),
        category_(category),
        kind_(std::move(kind)) {}

  ErrorCategory category() const { return category_; }
  const std::string& kind() const { return kind_; }

 private:
  ErrorCategory category_;
  std::string kind_;
};

[[noreturn]] inline void fail_input(const std::string& kind, const std::string& msg) {
  throw Error(ErrorCategory::kInput, kind, msg);
}

[[noreturn]] inline void fail_hypothesis(const std::string& kind, const std::string& msg) {
  throw Error(ErrorCategory::kHypothesis, kind, msg);
}

[[noreturn]] inline void fail_guard(const std::string& kind, const std::string& msg) {
  throw Error(ErrorCategory::kGuard, kind, msg);
}

}  // namespace skewq
