#include "crg/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "crg/fullgroup.hpp"
#include "crg/sampling.hpp"
#include "crg/stabilizer.hpp"
#include "crg/taxonomy.hpp"

namespace crg {

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = {
      {ClaimId::OrderFormula, "order_formula",
       "enumerated |G(m,p,n)| equals m^n n!/p and the product of the degrees"},
      {ClaimId::CenterGcd, "center_gcd",
       "number of scalar matrices equals the gcd of the degrees"},
      {ClaimId::RegularCriterion, "regular_criterion",
       "degree/codegree divisibility counts match the brute-force regular numbers, "
       "and powers of regular elements stay regular"},
      {ClaimId::RegularHyperplanesFull, "regular_hyperplanes_full",
       "arithmetic regular-hyperplane numbers match the enumerated hyperplane "
       "eigenspaces; both are empty for full groups"},
      {ClaimId::StabilizerLemmaA, "stabilizer_lemma_a",
       "extended stabilizer of x is nontrivial iff x lies on a reflecting "
       "hyperplane or in a proper regular eigenspace"},
      {ClaimId::StabilizerLemmaB, "stabilizer_lemma_b",
       "projective stabilizer of [x] is trivial iff the extended stabilizer is"},
      {ClaimId::StabilizerLemmaC, "stabilizer_lemma_c",
       "scalar action on W.x has trivial stabilizer iff every stabilizing "
       "lambda*w lies in W"},
      {ClaimId::FullGroupCase3, "full_group_case3",
       "rank-2 full-group classification: W and G(2m/gcd(p,2),2,2) have equal "
       "extended groups, with exact index and idempotence"},
      {ClaimId::FullGroupCase4, "full_group_case4",
       "rank>2 full-group classification: W and G(m,gcd(p,n),n) have equal "
       "extended groups, including the transposition-reflection scalar boundary"},
      {ClaimId::ExtendedEqualityLemma, "extended_equality_lemma",
       "for nested monomial groups, equal extended groups iff equal center "
       "indices"},
      {ClaimId::AllRegularCentralCriterion, "all_regular_central_criterion",
       "every regular number divides the center order iff every enumerated "
       "regular element is scalar"},
      {ClaimId::BraidShadowConsistency, "braid_shadow_consistency",
       "braid-shadow invariants agree with enumerated centers, hyperplane "
       "eigenspaces and regular-central checks"},
  };
  return registry;
}

const ClaimInfo& claim_info(ClaimId id) {
  for (const auto& info : claim_registry()) {
    if (info.id == id) return info;
  }
  throw ConstraintError("unknown claim id");
}

ClaimId claim_by_name(const std::string& name) {
  for (const auto& info : claim_registry()) {
    if (info.name == name) return info.id;
  }
  throw ConstraintError("unknown claim '" + name + "'; see `claims` for the registry");
}

std::vector<ClaimInfo> list_claims(const std::string& filter) {
  std::vector<ClaimInfo> out;
  for (const auto& info : claim_registry()) {
    if (filter.empty() || info.name.find(filter) != std::string::npos ||
        info.description.find(filter) != std::string::npos)
      out.push_back(info);
  }
  return out;
}

std::vector<GroupDescriptor> default_sweep(long m_max, long n_max, std::uint64_t cap) {
  std::vector<GroupDescriptor> out;
  for (long m = 2; m <= m_max; ++m) {
    for (long n = 2; n <= n_max; ++n) {
      for (long p = 1; p <= m; ++p) {
        if (m % p != 0) continue;
        try {
          GroupDescriptor d = GroupDescriptor::imprimitive(m, p, n);
          if (group_order(d) <= cap) out.push_back(d);
        } catch (const ConstraintError&) {
          // reducible / rejected parameter combinations are not swept
        }
      }
    }
  }
  return out;
}

namespace {

using Checks = long long;

std::string set_str(const std::set<long>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

struct GroupWork {
  const GroupDescriptor& d;
  std::uint64_t seed;
  const Campaign& campaign;
  Checks& checks;
  std::vector<Failure>& failures;

  void expect(bool ok, const std::string& witness, const std::string& expected,
              const std::string& got) {
    ++checks;
    if (!ok) failures.push_back({d.str(), witness, expected, got});
  }
  void expect_eq(std::uint64_t expected, std::uint64_t got, const std::string& witness) {
    expect(expected == got, witness, std::to_string(expected), std::to_string(got));
  }
};

MonoGroup build_swept(const GroupDescriptor& d, std::uint64_t cap, long ambient = 0) {
  const auto& g = d.as_imprimitive();
  return build_group(g.m, g.p, g.n, cap, ambient);
}

std::set<long> oracle_regular_orders(const std::vector<RegularPair>& pairs) {
  std::set<long> out;
  for (const auto& pair : pairs) out.insert(pair.value.root_order());
  return out;
}

void check_order_formula(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  const auto degs = degrees(work.d);
  const std::uint64_t product = std::accumulate(
      degs.begin(), degs.end(), std::uint64_t{1},
      [](std::uint64_t acc, long v) { return acc * static_cast<std::uint64_t>(v); });
  work.expect_eq(g.order(), group_order(work.d), "formula m^n n!/p vs enumeration");
  work.expect_eq(g.order(), product, "product of degrees vs enumeration");
}

void check_center_gcd(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  work.expect_eq(static_cast<std::uint64_t>(g.scalar_matrix_count()),
                 static_cast<std::uint64_t>(center_order(work.d)),
                 "scalar matrix count vs gcd of degrees");
}

void check_regular_criterion(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  const auto forms = hyperplanes(g);
  const auto pairs = regular_elements(g);
  const auto oracle = oracle_regular_orders(pairs);
  const auto arithmetic = regular_numbers(work.d);
  work.expect(arithmetic == oracle, "regular numbers, counting criterion vs eigenvector search",
              set_str(arithmetic), set_str(oracle));

  // Witness-level closure: if w is zeta-regular then w^k is zeta^k-regular.
  std::size_t budget = std::min<std::size_t>(pairs.size(), 25);
  for (std::size_t idx = 0; idx < budget; ++idx) {
    const auto& pair = pairs[idx];
    const MonoMatrix& w = g.elements[pair.element_index];
    for (long k = 2; k <= 3; ++k) {
      const MonoMatrix wk = w.pow(k);
      const RootScalar zk = pair.value.pow(k);
      bool regular = false;
      for (const auto& comp : eigen_data(wk)) {
        if (comp.value == zk) {
          regular = eigenspace_avoids_hyperplanes(forms, comp.basis);
          break;
        }
      }
      work.expect(regular,
                  "power closure: w=" + w.str() + " zeta=" + pair.value.str() +
                      " k=" + std::to_string(k),
                  "w^k is zeta^k-regular", "not regular");
    }
  }
}

void check_regular_hyperplanes_full(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  const auto pairs = regular_elements(g);
  std::set<long> oracle;
  for (const auto& pair : pairs) {
    if (pair.dim == g.n - 1) oracle.insert(pair.value.root_order());
  }
  const auto arithmetic = regular_hyperplane_numbers(work.d);
  work.expect(arithmetic == oracle, "hyperplane-dimensional regular eigenspaces",
              set_str(arithmetic), set_str(oracle));
  if (is_full(work.d)) {
    work.expect(arithmetic.empty(), "full group must have no regular hyperplanes (arithmetic)",
                "{}", set_str(arithmetic));
    work.expect(oracle.empty(), "full group must have no regular hyperplanes (oracle)", "{}",
                set_str(oracle));
  }
}

void check_stabilizer_lemma_a(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  const GroupContext ctx = make_context(g);
  long strongly_regular = 0;
  for (const auto& x : sample_vectors(g, work.campaign.samples, work.seed)) {
    const StabilizerReport report = extended_stabilizer(g, ctx, x);
    const bool nontrivial = report.pairs.size() > 1;
    const bool on_stratum =
        on_any_hyperplane(x, ctx.forms) || in_proper_regular_eigenspace(g, ctx, x);
    work.expect(nontrivial == on_stratum, "x=" + x.str(),
                on_stratum ? "nontrivial stabilizer" : "trivial stabilizer",
                nontrivial ? "nontrivial" : "trivial");
    if (report.stratum == Stratum::StronglyRegular) ++strongly_regular;
  }
  // the strongly regular set is the complement of finitely many proper
  // subspaces, so sampling must land in it
  work.expect(strongly_regular > 0, "strongly regular sample density", "positive", "zero");
}

void check_stabilizer_lemma_b(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  const GroupContext ctx = make_context(g);
  const long scalars = g.scalar_matrix_count();
  for (const auto& x : sample_vectors(g, work.campaign.samples, work.seed)) {
    const StabilizerReport report = extended_stabilizer(g, ctx, x);
    // Independent projective count: W-elements moving x along its own line,
    // one Z-coset per |Z(W)| of them.
    long moving = 0;
    for (const auto& w : g.elements) {
      if (proportionality_scalar(x, w.apply(x))) ++moving;
    }
    const bool projective_trivial = moving == scalars;
    const bool extended_trivial = report.pairs.size() == 1;
    work.expect(projective_trivial == extended_trivial, "x=" + x.str(),
                "projective and extended triviality agree",
                std::string("projective ") + (projective_trivial ? "trivial" : "nontrivial") +
                    ", extended " + (extended_trivial ? "trivial" : "nontrivial"));
  }
}

void check_stabilizer_lemma_c(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  const GroupContext ctx = make_context(g);
  const long scalars = g.scalar_matrix_count();
  for (const auto& x : sample_vectors(g, work.campaign.samples, work.seed)) {
    const StabilizerReport report = extended_stabilizer(g, ctx, x);
    // Orbit-based check: mu_L scalars lambda with lambda.x in W.x; the orbit
    // stabilizer under Z/Z(W) is trivial iff only the |Z(W)| central scalars
    // appear.
    std::set<long> orbit_scalars;
    for (const auto& w : g.elements) {
      if (auto lambda = proportionality_scalar(x, w.apply(x)))
        orbit_scalars.insert(lambda->exponent());
    }
    const bool orbit_trivial = static_cast<long>(orbit_scalars.size()) == scalars;
    work.expect(orbit_trivial == report.stab_in_w, "x=" + x.str(),
                "orbit-scalar triviality agrees with stab_in_w",
                std::string("orbit ") + (orbit_trivial ? "trivial" : "nontrivial") +
                    ", stab_in_w=" + (report.stab_in_w ? "true" : "false"));
  }
}

void check_full_group_common(GroupWork& work, bool rank2) {
  const auto& in = work.d.as_imprimitive();
  if (rank2 != (in.n == 2)) return;

  const FullGroupResult fg = full_group(work.d);
  const auto& fi = fg.full.as_imprimitive();
  if (group_order(fg.full) > work.campaign.cap) return;  // nothing to enumerate against

  const long ambient = common_ambient(in.m, in.n, fi.m, fi.n);
  const MonoGroup w = build_swept(work.d, work.campaign.cap, ambient);
  const MonoGroup wf = build_group(fi.m, fi.p, fi.n, work.campaign.cap, ambient);

  // Subgroup containment, element by element.
  std::unordered_set<std::string> wf_keys;
  for (const auto& e : wf.elements) wf_keys.insert(e.key());
  bool contained = std::all_of(w.elements.begin(), w.elements.end(),
                               [&](const MonoMatrix& e) { return wf_keys.count(e.key()) > 0; });
  work.expect(contained, "W subset of W_f", "all elements contained", "containment failed");

  work.expect(extended_group_equal(w, wf), "extended groups of W and W_f",
              "equal", "not equal");
  work.expect_eq(fg.index * w.order(), wf.order(), "index times |W| vs |W_f|");
  work.expect_eq(static_cast<std::uint64_t>(fg.center_ratio),
                 static_cast<std::uint64_t>(wf.scalar_matrix_count() / w.scalar_matrix_count()),
                 "center ratio vs enumerated scalar counts");
  work.expect(is_full(fg.full), "W_f is its own full group", "true", "false");
  work.expect(full_group(fg.full).full == fg.full, "idempotence of the classification",
              fg.full.str(), full_group(fg.full).full.str());

  if (!rank2) {
    // The transposition reflection with weights (zeta_m, zeta_m^-1) pins the
    // scalar freedom: lambda*M can only land in W_f for lambda in mu_m, and
    // that needs the untouched diagonal entries, i.e. n > 2.
    const long c = ambient / in.m;
    std::vector<int> sigma(in.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[0], sigma[1]);
    std::vector<long> weights(in.n, 0);
    weights[0] = c;
    weights[1] = (in.m - 1) * c;
    const MonoMatrix m_reflection(sigma, weights, ambient);
    work.expect(w.satisfies_weight_condition(m_reflection), "M-type reflection lies in W",
                "member", "not a member");
    work.expect(wf_keys.count(m_reflection.key()) > 0, "M-type reflection lies in W_f",
                "member", "not a member");
    long admissible = 0;
    bool only_mu_m = true;
    for (long a = 0; a < ambient; ++a) {
      if (wf.satisfies_weight_condition(m_reflection.scaled_by_root(a))) {
        ++admissible;
        if (a % c != 0) only_mu_m = false;
      }
    }
    work.expect(only_mu_m && admissible == in.m,
                "scalars lambda with lambda*M in W_f form mu_m",
                std::to_string(in.m) + " scalars, all in mu_m",
                std::to_string(admissible) + " scalars" +
                    (only_mu_m ? "" : ", some outside mu_m"));
  }
}

void check_full_group_case3(GroupWork& work) { check_full_group_common(work, true); }
void check_full_group_case4(GroupWork& work) { check_full_group_common(work, false); }

void check_extended_equality_lemma(GroupWork& work) {
  const auto& in = work.d.as_imprimitive();
  const MonoGroup w = build_swept(work.d, work.campaign.cap);
  for (long p2 = in.p; p2 <= in.m; ++p2) {
    if (in.m % p2 != 0 || p2 % in.p != 0 || p2 == in.p) continue;
    GroupDescriptor sub_desc = work.d;
    try {
      sub_desc = GroupDescriptor::imprimitive(in.m, p2, in.n);
    } catch (const ConstraintError&) {
      continue;
    }
    const MonoGroup h = build_group(in.m, p2, in.n, work.campaign.cap, w.ambient);
    const std::uint64_t index_w = group_order(work.d) / center_order(work.d);
    const std::uint64_t index_h = group_order(sub_desc) / center_order(sub_desc);
    const bool expected = index_w == index_h;
    const bool got = extended_group_equal(h, w);
    work.expect(expected == got, "H=" + sub_desc.str() + " inside W=" + work.d.str(),
                expected ? "equal extended groups (equal center indices)"
                         : "distinct extended groups (distinct center indices)",
                got ? "equal" : "distinct");
  }
}

void check_all_regular_central(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  bool oracle = true;
  for (const auto& pair : regular_elements(g)) {
    if (!g.elements[pair.element_index].is_scalar()) {
      oracle = false;
      break;
    }
  }
  const bool arithmetic = all_regular_central(work.d);
  work.expect(arithmetic == oracle, "all regular elements central",
              arithmetic ? "true" : "false", oracle ? "true" : "false");
}

void check_braid_shadow(GroupWork& work) {
  const MonoGroup g = build_swept(work.d, work.campaign.cap);
  const BraidShadow shadow = braid_shadow(work.d);

  work.expect_eq(static_cast<std::uint64_t>(shadow.center_w),
                 static_cast<std::uint64_t>(g.scalar_matrix_count()),
                 "center_w vs enumerated scalar count");
  work.expect_eq(static_cast<std::uint64_t>(shadow.beta_to_pi_exponent),
                 static_cast<std::uint64_t>(shadow.center_w), "beta_to_pi exponent");
  work.expect_eq(static_cast<std::uint64_t>(shadow.beta_wf_power * shadow.center_w),
                 static_cast<std::uint64_t>(shadow.center_wf),
                 "beta_wf_power * |Z(W)| vs |Z(W_f)|");

  const FullGroupResult fg = full_group(work.d);
  if (fg.full.is_imprimitive() && group_order(fg.full) <= work.campaign.cap) {
    const auto& fi = fg.full.as_imprimitive();
    const MonoGroup wf = build_group(fi.m, fi.p, fi.n, work.campaign.cap);
    work.expect_eq(static_cast<std::uint64_t>(shadow.center_wf),
                   static_cast<std::uint64_t>(wf.scalar_matrix_count()),
                   "center_wf vs enumerated scalar count");
  }

  bool oracle_has_hyperplane = false;
  for (const auto& pair : regular_elements(g)) {
    if (pair.dim == g.n - 1) {
      oracle_has_hyperplane = true;
      break;
    }
  }
  work.expect(shadow.bs_equals_b == !oracle_has_hyperplane, "bs_equals_b vs oracle",
              oracle_has_hyperplane ? "false" : "true", shadow.bs_equals_b ? "true" : "false");

  bool oracle_central = true;
  for (const auto& pair : regular_elements(g)) {
    if (!g.elements[pair.element_index].is_scalar()) {
      oracle_central = false;
      break;
    }
  }
  work.expect(shadow.bmr_diagram_completes == oracle_central,
              "bmr_diagram_completes vs oracle", oracle_central ? "true" : "false",
              shadow.bmr_diagram_completes ? "true" : "false");

  if (is_full(work.d)) {
    work.expect(shadow.bs_equals_b, "full group implies bs_equals_b", "true", "false");
  }
}

void run_claim(ClaimId id, GroupWork& work) {
  switch (id) {
    case ClaimId::OrderFormula: return check_order_formula(work);
    case ClaimId::CenterGcd: return check_center_gcd(work);
    case ClaimId::RegularCriterion: return check_regular_criterion(work);
    case ClaimId::RegularHyperplanesFull: return check_regular_hyperplanes_full(work);
    case ClaimId::StabilizerLemmaA: return check_stabilizer_lemma_a(work);
    case ClaimId::StabilizerLemmaB: return check_stabilizer_lemma_b(work);
    case ClaimId::StabilizerLemmaC: return check_stabilizer_lemma_c(work);
    case ClaimId::FullGroupCase3: return check_full_group_case3(work);
    case ClaimId::FullGroupCase4: return check_full_group_case4(work);
    case ClaimId::ExtendedEqualityLemma: return check_extended_equality_lemma(work);
    case ClaimId::AllRegularCentralCriterion: return check_all_regular_central(work);
    case ClaimId::BraidShadowConsistency: return check_braid_shadow(work);
  }
  throw ConstraintError("unknown claim id");
}

std::vector<GroupDescriptor> resolve_sweep(const Campaign& c) {
  std::vector<GroupDescriptor> sweep = default_sweep(c.m_max, c.n_max, c.cap);
  std::vector<std::string> refused;
  for (const auto& d : c.extra) {
    if (!d.is_imprimitive())
      throw ConstraintError("campaign sweep entries must be imprimitive G(m,p,n), got " +
                            d.str());
    if (group_order(d) > c.cap) {
      refused.push_back(d.str() + " (order " + std::to_string(group_order(d)) + ")");
      continue;
    }
    if (std::find(sweep.begin(), sweep.end(), d) == sweep.end()) sweep.push_back(d);
  }
  if (!refused.empty()) {
    std::string msg = "descriptors over the element cap " + std::to_string(c.cap) + ":";
    for (const auto& r : refused) msg += " " + r;
    throw CapError(msg, c.cap);
  }
  if (sweep.empty())
    throw ConstraintError("campaign sweep is empty after cap filtering");
  return sweep;
}

}  // namespace

VerificationReport run_campaign_with(const Campaign& c, const GroupChecker& checker) {
  if (c.samples < 1) throw ConstraintError("campaign needs samples >= 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.campaign = c;
  for (const auto& d : resolve_sweep(c)) {
    const std::uint64_t group_seed = mix_seed(c.seed, d.str());
    checker(d, group_seed, report.checks_run, report.failures);
    ++report.groups_checked;
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

VerificationReport run_campaign(const Campaign& c) {
  claim_info(c.claim);  // validate
  return run_campaign_with(
      c, [&c](const GroupDescriptor& d, std::uint64_t seed, long long& checks,
              std::vector<Failure>& failures) {
        GroupWork work{d, seed, c, checks, failures};
        run_claim(c.claim, work);
      });
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  const ClaimInfo& info = claim_info(campaign.claim);
  j["claim"] = info.name;
  j["description"] = info.description;
  j["toolkit_version"] = toolkit_version;
  nlohmann::ordered_json sweep;
  sweep["m_max"] = campaign.m_max;
  sweep["n_max"] = campaign.n_max;
  nlohmann::ordered_json extra = nlohmann::ordered_json::array();
  for (const auto& d : campaign.extra) extra.push_back(d.str());
  sweep["extra"] = extra;
  sweep["samples"] = campaign.samples;
  sweep["seed"] = campaign.seed;
  sweep["cap"] = campaign.cap;
  j["campaign"] = sweep;
  j["groups_checked"] = groups_checked;
  j["checks_run"] = checks_run;
  j["status"] = pass() ? "PASS" : "FAIL";
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json jf;
    jf["descriptor"] = f.descriptor;
    jf["witness"] = f.witness;
    jf["expected"] = f.expected;
    jf["got"] = f.got;
    fails.push_back(jf);
  }
  j["failures"] = fails;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::string VerificationReport::content_hash() const {
  nlohmann::ordered_json j = to_json();
  j.erase("wall_time_ms");
  const std::string body = j.dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (char ch : body) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
  return os.str();
}

std::filesystem::path write_report(const VerificationReport& report,
                                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const ClaimInfo& info = claim_info(report.campaign.claim);
  const std::filesystem::path path = dir / (info.name + "-" + report.content_hash() + ".json");
  if (!std::filesystem::exists(path)) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write report file " + path.string());
    out << report.to_json().dump(2) << "\n";
  }
  return path;
}

}  // namespace crg
