#pragma once

#include <string>
#include <vector>

namespace rcover {

// Outcome of a certificate check: valid iff no diagnostic was recorded.
struct Verification {
  bool valid = true;
  std::vector<std::string> diagnostics;

  void fail(std::string message) {
    valid = false;
    diagnostics.push_back(std::move(message));
  }
};

}  // namespace rcover
