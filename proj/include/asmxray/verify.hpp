#pragma once

// Exhaustive verification of the Dyck path / determined ASM correspondence
// and the properties of map_m for a fixed matrix size.

#include <map>
#include <string>

#include "asmxray/enumerate.hpp"

namespace asmxray {

struct VerificationResult {
  EnumerationReport report;
  /// Check name -> passed. Names are stable and sorted.
  std::map<std::string, bool> checks;

  bool ok() const;
};

VerificationResult verify(int n);

}  // namespace asmxray
