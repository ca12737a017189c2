#pragma once

#include <string>
#include <vector>

namespace semenc {

/// A fidelity value together with the per-model / per-state breakdown that
/// produced it.
struct FidelityReport {
  std::string measure;
  double value = 0.0;
  struct Entry {
    std::string label;
    double value = 0.0;
    bool satisfied = false;
  };
  std::vector<Entry> breakdown;
  std::vector<std::string> notes;

  std::string to_string() const;
};

}  // namespace semenc
