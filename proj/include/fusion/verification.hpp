#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace fusion {

// Outcome of an exhaustive identity check. `checked` counts the cases
// examined; `counterexample` describes the first failure, if any.
struct VerificationReport {
  VerificationReport() = default;
  VerificationReport(std::string suite_name, std::string scope_text)
      : suite(std::move(suite_name)), scope(std::move(scope_text)) {}

  std::string suite;
  std::string scope;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

}  // namespace fusion
