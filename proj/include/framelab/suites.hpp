#pragma once

#include <string>
#include <vector>

#include "framelab/generate.hpp"
#include "framelab/io.hpp"

namespace framelab {

// Tally for one named property of a suite. Witnesses hold re-ingestible
// JSON payloads (frame, sets, formulas) for the first few failures.
struct PropertyResult {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<json> witnesses;
  std::vector<std::string> notes;

  bool passed() const { return failed == 0; }
};

struct SuiteReport {
  std::string suite;
  ExperimentConfig config;
  std::vector<PropertyResult> properties;

  bool passed() const;
  long long total_checked() const;
  long long total_failed() const;
};

// The eight experiment drivers. Each is a deterministic function of its
// config; an empty corpus yields a vacuous pass with a note per property.
SuiteReport run_refinement_suite(const ExperimentConfig& cfg);
SuiteReport run_correspondence_suite(const ExperimentConfig& cfg);
SuiteReport run_relativization_suite(const ExperimentConfig& cfg);
SuiteReport run_reflexive_suite(const ExperimentConfig& cfg);
SuiteReport run_sums_suite(const ExperimentConfig& cfg);
SuiteReport run_transfer_suite(const ExperimentConfig& cfg);
SuiteReport run_cover_suite(const ExperimentConfig& cfg);
SuiteReport run_qes_suite(const ExperimentConfig& cfg);

const std::vector<std::string>& suite_names();

// Per-suite default scale (frame counts and bounds the suite is meant to
// be run at); unknown names throw InvalidArgument.
ExperimentConfig default_config_for(const std::string& suite);

// Dispatch by name; throws InvalidArgument for unknown suites.
SuiteReport run_suite(const std::string& name, const ExperimentConfig& cfg);

// Byte-stable rendering: no timestamps or timings, keys sorted by the
// JSON writer.
json suite_to_json(const SuiteReport& r);
std::string suite_to_text(const SuiteReport& r);

}  // namespace framelab
