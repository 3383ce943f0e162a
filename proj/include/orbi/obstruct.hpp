#pragma once

#include <string>
#include <vector>

#include "orbi/gspace.hpp"

namespace orbi {

struct InvariantEntry {
  std::string name;  // cr_dims, cr_twisted, beta, euler
  std::string left;
  std::string right;
  bool match = true;
  bool skipped = false;
  std::string detail;
};

struct ObstructionReport {
  std::string left_id;
  std::string right_id;
  std::vector<InvariantEntry> entries;
  std::vector<std::string> warnings;
  /// "OBSTRUCTED" iff some compared entry mismatches, else "INCONCLUSIVE"
  std::string verdict = "INCONCLUSIVE";
};

struct CompareOptions {
  bool cr_dims = true;
  bool cr_twisted = true;
  bool beta = true;
  bool euler = true;
  bool aut_relabel = false;
};

/// GroupMismatch, DimensionMismatch.
ObstructionReport compare(const GSpace& A, const GSpace& B, const CompareOptions& options = {},
                          const std::string& left_id = "A", const std::string& right_id = "B");

/// Report-level warnings about one space (effectiveness, custom data).
std::vector<std::string> space_warnings(const GSpace& S);

struct KernelCopies {
  std::vector<Element> kernel;
  int kernel_order = 1;
  /// sectors carrying the whole space at age 0 with the full invariant
  /// cohomology, verified against the untwisted contribution
  int copies = 1;
};

KernelCopies kernel_copy_count(const GSpace& S);

}  // namespace orbi
