#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "crg/taxonomy.hpp"
#include "crg/verifier.hpp"

using namespace crg;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("crg-test-" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("claim registry") {
  CHECK(claim_registry().size() == 12);
  CHECK(list_claims("stabilizer").size() == 3);
  CHECK(list_claims("nonexistent").empty());
  CHECK(claim_by_name("order_formula") == ClaimId::OrderFormula);
  CHECK_THROWS_AS(claim_by_name("bogus"), ConstraintError);
}

TEST_CASE("default sweep enumeration") {
  // m in 2..4, n in 2..3, p | m gives 14 combinations; G(2,2,2) is reducible.
  const auto sweep = default_sweep(4, 3, kDefaultElementCap);
  CHECK(sweep.size() == 13);
  // the documented default covers both parities of p, p = m and p < m,
  // n = 2 and n > 2
  const auto full = default_sweep(6, 4, kDefaultElementCap);
  CHECK(full.size() == 38);
  for (const auto& d : full) CHECK(group_order(d) <= kDefaultElementCap);
  // cap filters
  CHECK(default_sweep(6, 4, 1000).size() < full.size());
}

TEST_CASE("order campaign passes over a small sweep") {
  Campaign campaign;
  campaign.claim = ClaimId::OrderFormula;
  campaign.m_max = 4;
  campaign.n_max = 3;
  const VerificationReport report = run_campaign(campaign);
  CHECK(report.pass());
  CHECK(report.groups_checked == 13);
  CHECK(report.checks_run == 26);  // two comparisons per group
}

TEST_CASE("explicit list additions") {
  Campaign campaign;
  campaign.claim = ClaimId::RegularCriterion;
  campaign.m_max = 0;  // empty default sweep; the extra list carries the run
  campaign.n_max = 0;
  campaign.extra = {parse_descriptor("G(5,5,2)")};
  const VerificationReport report = run_campaign(campaign);
  CHECK(report.pass());
  CHECK(report.groups_checked == 1);
}

TEST_CASE("campaign sweep errors") {
  Campaign campaign;
  campaign.claim = ClaimId::OrderFormula;
  campaign.extra = {parse_descriptor("G(6,1,4)")};
  campaign.cap = 20000;
  CHECK_THROWS_AS(run_campaign(campaign), CapError);

  Campaign bad;
  bad.claim = ClaimId::OrderFormula;
  bad.extra = {parse_descriptor("G25")};
  CHECK_THROWS_AS(run_campaign(bad), ConstraintError);

  Campaign empty;
  empty.claim = ClaimId::OrderFormula;
  empty.m_max = 0;
  empty.n_max = 0;
  CHECK_THROWS_AS(run_campaign(empty), ConstraintError);

  Campaign no_samples;
  no_samples.claim = ClaimId::StabilizerLemmaA;
  no_samples.samples = 0;
  CHECK_THROWS_AS(run_campaign(no_samples), ConstraintError);
}

TEST_CASE("reports are deterministic given the seed") {
  Campaign campaign;
  campaign.claim = ClaimId::StabilizerLemmaA;
  campaign.m_max = 3;
  campaign.n_max = 2;
  campaign.samples = 15;
  campaign.seed = 123;
  VerificationReport first = run_campaign(campaign);
  VerificationReport second = run_campaign(campaign);
  auto j1 = first.to_json();
  auto j2 = second.to_json();
  j1.erase("wall_time_ms");
  j2.erase("wall_time_ms");
  CHECK(j1 == j2);
  CHECK(first.content_hash() == second.content_hash());

  campaign.seed = 124;
  // a different seed changes the probe vectors but the claim still passes
  CHECK(run_campaign(campaign).pass());
}

TEST_CASE("injected faults surface as failure records") {
  Campaign campaign;
  campaign.claim = ClaimId::OrderFormula;  // metadata only; the checker is custom
  campaign.m_max = 3;
  campaign.n_max = 2;
  const VerificationReport report = run_campaign_with(
      campaign, [](const GroupDescriptor& d, std::uint64_t, long long& checks,
                   std::vector<Failure>& failures) {
        ++checks;
        // off-by-one mutation of the order formula
        const std::uint64_t mutated = group_order(d) + 1;
        std::uint64_t product = 1;
        for (long deg : degrees(d)) product *= static_cast<std::uint64_t>(deg);
        if (mutated != product)
          failures.push_back({d.str(), "mutated order formula", std::to_string(product),
                              std::to_string(mutated)});
      });
  CHECK_FALSE(report.pass());
  CHECK(report.failures.size() == static_cast<std::size_t>(report.groups_checked));
  for (const auto& f : report.failures) {
    CHECK_FALSE(f.descriptor.empty());
    CHECK_FALSE(f.witness.empty());
    CHECK_FALSE(f.expected.empty());
    CHECK(f.expected != f.got);
  }
  const auto j = report.to_json();
  CHECK(j["status"] == "FAIL");
  CHECK(j["failures"].size() == report.failures.size());
}

TEST_CASE("report persistence is append-only and hash-named") {
  TempDir dir;
  Campaign campaign;
  campaign.claim = ClaimId::CenterGcd;
  campaign.m_max = 3;
  campaign.n_max = 2;
  const VerificationReport report = run_campaign(campaign);
  const auto path1 = write_report(report, dir.path);
  const auto path2 = write_report(report, dir.path);
  CHECK(path1 == path2);
  CHECK(path1.filename().string().find("center_gcd-") == 0);
  CHECK(path1.filename().string().find(report.content_hash()) != std::string::npos);

  std::ifstream in(path1);
  nlohmann::json parsed;
  in >> parsed;
  CHECK(parsed["claim"] == "center_gcd");
  CHECK(parsed["status"] == "PASS");
  CHECK(parsed["campaign"]["seed"] == 1);
  CHECK(parsed.contains("wall_time_ms"));

  // one report file per distinct content
  std::size_t files = std::distance(std::filesystem::directory_iterator(dir.path),
                                    std::filesystem::directory_iterator{});
  CHECK(files == 1);
}

TEST_CASE("every claim runs green on a reduced sweep") {
  for (const auto& info : claim_registry()) {
    Campaign campaign;
    campaign.claim = info.id;
    campaign.m_max = 3;
    campaign.n_max = 3;
    campaign.samples = 10;
    const VerificationReport report = run_campaign(campaign);
    CHECK_MESSAGE(report.pass(), info.name);
    CHECK(report.groups_checked > 0);
  }
}
