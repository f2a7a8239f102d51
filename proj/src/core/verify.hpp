#pragma once

#include <string>
#include <vector>

#include "core/shape.hpp"

namespace skewrank {

// Bounds for a verification campaign.  Zero or negative values pick the
// suite's own default; n pins the sequence suites to a single length.
struct CampaignOptions {
  int max_cells = 0;
  int n = 0;
  bool has_range = false;
  long lo = 0, hi = 0;  // integer value range for exhaustive sequence families
  long samples = -1;    // randomized instances per length; -1 keeps the default
  unsigned long seed = 20240601;
  int jobs = 1;
};

struct CampaignFailure {
  long instance = 0;
  std::string detail;  // full inputs of the failing instance
};

// Aggregated result of one campaign.  Serialization is byte-stable for a
// fixed (suite, bounds, seed) apart from the wall-time field; the worker
// count never appears.
struct CampaignReport {
  std::string suite;
  std::string parameters;  // JSON object with the effective bounds
  unsigned long seed = 0;
  long instances = 0;
  long passed = 0;
  long failed = 0;
  std::vector<CampaignFailure> failures;  // sorted by instance
  long wall_ms = 0;
  std::string to_json() const;
};

const std::vector<std::string>& verify_suite_names();

// Runs the named suite; unknown names raise UnknownSuite.
CampaignReport run_campaign(const std::string& suite, const CampaignOptions& opt);

// Skew shapes in basic form (no empty row or column), deterministic order:
// cell count ascending, then row composition, then row overlap pattern.
std::vector<SkewShape> basic_shapes_with(int cells);
std::vector<SkewShape> basic_shapes_up_to(int max_cells);

}  // namespace skewrank
