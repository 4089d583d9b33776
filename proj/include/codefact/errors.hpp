#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace codefact {

/// A verification that failed for a structural reason, carrying a stable
/// machine-readable tag (the equation or condition name) plus ordered
/// key/value context for diagnostics. Precondition and input-format problems
/// use std::invalid_argument instead.
class verify_error : public std::runtime_error {
public:
  using Context = std::vector<std::pair<std::string, std::string>>;

  verify_error(std::string tag, const std::string& message, Context context = {})
      : std::runtime_error(message), tag_(std::move(tag)), context_(std::move(context)) {}

  const std::string& tag() const { return tag_; }
  const Context& context() const { return context_; }

private:
  std::string tag_;
  Context context_;
};

}  // namespace codefact
