#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superint/params.hpp"

namespace superint {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// pass: the printed closed forms hold. degraded: the printed forms fail but
/// the derived forms hold. fail: a derived identity fails or a computation
/// threw. skipped: not applicable to the parameters.
enum class SuiteStatus { kPass, kDegraded, kFail, kSkipped };

std::string to_string(SuiteStatus s);

struct Tolerances {
  double angular = 1e-3;
  double radial = 1e-4;
  double combined = 2e-3;
};

const std::vector<std::string>& all_suites();

struct RunConfig {
  SystemParams params{1, 2, 1};
  std::vector<std::string> suites = all_suites();
  int random_instances = 0;
  std::uint64_t seed = 1;
  Tolerances tol;
  std::string out;
  /// Added to c12 when building L2 (fault injection).
  std::optional<Rational> c12_fault;
};

struct SuiteRecord {
  std::string name;
  SuiteStatus status = SuiteStatus::kPass;
  nlohmann::json residual_summary;
  double timing_ms = 0;
};

struct VerificationReport {
  std::vector<SuiteRecord> suites;
  nlohmann::json config_echo;
  bool failed() const;
  nlohmann::json to_json(bool include_timing = true) const;
};

/// Rationals with numerator and denominator in [1, 40], beta > alpha > 1/2.
std::vector<SystemParams> random_instances(std::uint64_t seed, int count,
                                           OmegaConvention convention);

VerificationReport run_suites(const RunConfig& cfg);

/// key = value lines, '#' comments. Keys: alpha, beta, omega, omega_convention,
/// suites, random, seed, out, tol_angular, tol_radial, tol_combined.
/// Unknown keys throw std::invalid_argument.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

}  // namespace superint
