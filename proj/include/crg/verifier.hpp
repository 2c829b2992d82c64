#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crg/descriptor.hpp"
#include "crg/monomial.hpp"

namespace crg {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Every formula-level claim the toolkit can check against the monomial
// oracle, one id per lemma/proposition facet.
enum class ClaimId {
  OrderFormula,
  CenterGcd,
  RegularCriterion,
  RegularHyperplanesFull,
  StabilizerLemmaA,
  StabilizerLemmaB,
  StabilizerLemmaC,
  FullGroupCase3,
  FullGroupCase4,
  ExtendedEqualityLemma,
  AllRegularCentralCriterion,
  BraidShadowConsistency,
};

struct ClaimInfo {
  ClaimId id;
  std::string name;         // snake_case id used by the CLI and reports
  std::string description;  // one line
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& claim_info(ClaimId id);
ClaimId claim_by_name(const std::string& name);  // throws ConstraintError
std::vector<ClaimInfo> list_claims(const std::string& filter = "");

struct Campaign {
  ClaimId claim = ClaimId::OrderFormula;
  long m_max = 6;
  long n_max = 4;
  std::vector<GroupDescriptor> extra;  // imprimitive only, each under the cap
  int samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultElementCap;
};

struct Failure {
  std::string descriptor;
  std::string witness;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  Campaign campaign;
  long groups_checked = 0;
  long long checks_run = 0;
  std::vector<Failure> failures;
  std::string toolkit_version = kToolkitVersion;
  double wall_time_ms = 0.0;

  bool pass() const { return failures.empty(); }
  // Stable key order; wall_time_ms is the last key and excluded from the hash.
  nlohmann::ordered_json to_json() const;
  std::string content_hash() const;  // 16 hex digits
};

// All valid G(m,p,n) with 2 <= m <= m_max, 2 <= n <= n_max, p | m and
// |W| <= cap. Deterministic order: m, then n, then p, ascending.
std::vector<GroupDescriptor> default_sweep(long m_max, long n_max, std::uint64_t cap);

// Runs the claim's oracle-vs-formula comparison over the campaign sweep.
// Failures are collected, never thrown; the run is deterministic given
// (claim, sweep bounds, samples, seed, cap). Throws CapError when an extra
// descriptor exceeds the cap and ConstraintError for non-imprimitive extras.
VerificationReport run_campaign(const Campaign& c);

// Same engine with a caller-supplied per-group checker; used by tests to
// inject faults and watch them surface as failure records.
using GroupChecker =
    std::function<void(const GroupDescriptor&, std::uint64_t group_seed,
                       long long& checks_run, std::vector<Failure>& failures)>;
VerificationReport run_campaign_with(const Campaign& c, const GroupChecker& checker);

// Persists the report as <dir>/<claim>-<hash>.json (append-only: an existing
// file is left untouched). Returns the path.
std::filesystem::path write_report(const VerificationReport& report,
                                   const std::filesystem::path& dir);

}  // namespace crg
