#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ajc/ajcheck.hpp"
#include "ajc/json_io.hpp"
#include "ajc/knot_table.hpp"

namespace ajc {

struct PipelineConfig {
  std::uint64_t seed = 0x5EED0001;
  // Colors 1..identity_colors for the cabling identity and the cable degree law.
  long identity_colors = 6;
  // Colors 1..degree_colors for the degree quasi-polynomials of J_K.
  long degree_colors = 24;
  int max_period = 4;
  // Largest L-degree tried for the odd-part recurrence; the cable search allows one more.
  int max_order = 4;
  int max_deg_m = 256;
  // Guess the cable recurrence directly and divide it by M^r (L + t^{-2r} M^{-2r}).
  bool cable_recurrence = true;
  // Stage timings make reports run-dependent, so they are off unless requested.
  bool timings = false;
  int workers = 1;

  jsonio::Json to_json() const;
};

struct StageReport {
  std::string stage;
  // ok, match, mismatch, inconclusive, error or skipped
  std::string status;
  jsonio::Json inputs = jsonio::Json::object();
  jsonio::Json outputs = jsonio::Json::object();
  std::string error;
  double seconds = 0;
};

struct PipelineReport {
  PipelineConfig config;
  std::string knot;
  int r = 0;
  std::vector<StageReport> stages;
  Verdict verdict = Verdict::Inconclusive;

  jsonio::Json to_json() const;
  std::string pretty() const;
};

// jones -> degrees -> recurrence -> cable recurrence -> apoly -> ajcheck for one knot. A stage
// whose data is missing reports an error naming the field and the stages after it that need
// it are skipped.
PipelineReport run_pipeline(const KnotRecord& knot, int r, const PipelineConfig& config);
// One pipeline per knot, up to config.workers at a time; reports keep the input order.
std::vector<PipelineReport> run_pipelines(const std::vector<KnotRecord>& knots, int r, const PipelineConfig& config);

}  // namespace ajc
