#pragma once

// Claim-by-claim certification of the structural statements about the Rees
// ideal of a uniform monomial ideal, over single parameter triples or grids.

#include "rees/groebner.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rees {

enum class ClaimStatus { Pass, Fail, Skipped };

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string witness;  // reproducible data on failure, certificate text on some passes
  long ms = 0;
};

struct CertReport {
  int n = 0, a = 0, b = 0;
  bool rejected = false;        // parameter triple failed the standing assumptions
  std::string reject_reason;
  UniformParams params;         // valid iff !rejected
  std::vector<Claim> claims;
  bool resource_capped = false;
  long total_ms = 0;
  std::map<std::string, long> spair_case_counts;  // reduced pairs per kind pair

  bool all_pass() const;
  bool any_fail() const;
};

struct VerifyOptions {
  EngineLimits limits;
  bool chain_criterion = true;
  bool record_timings = false;
};

CertReport verify_generation(const UniformParams& P, const VerifyOptions& opt = {});
CertReport verify_gb_ladder(const UniformParams& P, const VerifyOptions& opt = {});
CertReport verify_colon_ladder(const UniformParams& P, const VerifyOptions& opt = {});
CertReport certify_acm(const UniformParams& P, const VerifyOptions& opt = {});

struct GridPoint {
  int n = 0, a = 0, b = 0;
};

// n in {2,3,4}, b in {1,2,3}, 2b < a <= 9.
std::vector<GridPoint> default_grid();

// Line-oriented "n a b" triples; '#' starts a comment.
std::vector<GridPoint> parse_grid(std::istream& in);

enum class Suite { Gen, Gb, Colon, Acm, All };
Suite suite_from_string(const std::string& s);

// Runs the selected suites on every point; failures are isolated per point.
// jobs > 1 evaluates points concurrently; report order follows the input.
std::vector<CertReport> run_grid(const std::vector<GridPoint>& grid, Suite suite,
                                 const VerifyOptions& opt = {}, int jobs = 1);

CertReport run_point(const GridPoint& pt, Suite suite, const VerifyOptions& opt);

std::string summary_table(const std::vector<CertReport>& reports);

}  // namespace rees
