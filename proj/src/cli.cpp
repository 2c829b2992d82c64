#include "crg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crg/fullgroup.hpp"
#include "crg/monomial.hpp"
#include "crg/stabilizer.hpp"
#include "crg/taxonomy.hpp"
#include "crg/verifier.hpp"

namespace crg {

namespace {

using nlohmann::ordered_json;

std::uint64_t element_cap_from_env() {
  if (const char* env = std::getenv("CRG_ELEMENT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw ConstraintError("CRG_ELEMENT_CAP must be a positive integer, got '" +
                          std::string(env) + "'");
  }
  return kDefaultElementCap;
}

template <typename Container>
std::string join(const Container& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << " ";
    os << v;
    first = false;
  }
  return os.str();
}

int run_describe(const std::string& descriptor, bool as_json, std::ostream& out) {
  const GroupDescriptor d = parse_descriptor(descriptor);
  const DegreeProfile profile = degree_profile(d);
  if (as_json) {
    ordered_json j;
    j["descriptor"] = d.str();
    j["rank"] = d.rank();
    j["degrees"] = profile.degrees;
    j["codegrees"] = profile.codegrees;
    j["order"] = group_order(d);
    j["center_order"] = center_order(d);
    j["gcd_degrees"] = profile.gcd_all;
    j["gcd_omitting"] = profile.gcd_omitting;
    out << j.dump(2) << "\n";
  } else {
    out << d.str() << "\n";
    out << "  rank:         " << d.rank() << "\n";
    out << "  degrees:      " << join(profile.degrees) << "\n";
    out << "  codegrees:    " << join(profile.codegrees) << "\n";
    out << "  order:        " << group_order(d) << "\n";
    out << "  center order: " << center_order(d) << "\n";
    out << "  D_j profile:  " << join(profile.gcd_omitting) << "  (gcd without the j-th degree)\n";
  }
  return 0;
}

int run_full(const std::string& descriptor, bool as_json, std::ostream& out) {
  const GroupDescriptor d = parse_descriptor(descriptor);
  const FullGroupResult fg = full_group(d);
  if (as_json) {
    ordered_json j;
    j["input"] = fg.input.str();
    j["full"] = fg.full.str();
    j["index"] = fg.index;
    j["center_ratio"] = fg.center_ratio;
    out << j.dump(2) << "\n";
  } else {
    out << fg.input.str() << " -> " << fg.full.str() << ", index " << fg.index
        << ", center ratio " << fg.center_ratio << "\n";
  }
  return 0;
}

int run_regular(const std::string& descriptor, bool as_json, std::ostream& out) {
  const GroupDescriptor d = parse_descriptor(descriptor);
  const auto regular = regular_numbers(d);
  const auto hyper = regular_hyperplane_numbers(d);
  if (as_json) {
    ordered_json j;
    j["descriptor"] = d.str();
    j["regular_numbers"] = regular;
    j["regular_hyperplane_numbers"] = hyper;
    out << j.dump(2) << "\n";
  } else {
    out << d.str() << "\n";
    out << "  regular numbers:            " << (regular.empty() ? "{}" : join(regular)) << "\n";
    out << "  regular hyperplane numbers: " << (hyper.empty() ? "{}" : join(hyper)) << "\n";
  }
  return 0;
}

int run_shadow(const std::string& descriptor, bool as_json, std::ostream& out) {
  const GroupDescriptor d = parse_descriptor(descriptor);
  const BraidShadow shadow = braid_shadow(d);
  const FullGroupResult fg = full_group(d);
  if (as_json) {
    ordered_json j;
    j["descriptor"] = d.str();
    j["full"] = fg.full.str();
    j["center_w"] = shadow.center_w;
    j["center_wf"] = shadow.center_wf;
    j["beta_to_pi_exponent"] = shadow.beta_to_pi_exponent;
    j["beta_wf_power"] = shadow.beta_wf_power;
    j["bs_equals_b"] = shadow.bs_equals_b;
    j["bmr_diagram_completes"] = shadow.bmr_diagram_completes;
    out << j.dump(2) << "\n";
  } else {
    out << d.str() << "  (full group " << fg.full.str() << ")\n";
    out << "  |Z(W)|   = " << shadow.center_w << "\n";
    out << "  |Z(W_f)| = " << shadow.center_wf << "\n";
    out << "  beta_S^" << shadow.beta_to_pi_exponent << " = pi_S\n";
    out << "  Z(B_S) generated by beta_S(W_f)^" << shadow.beta_wf_power << "\n";
    out << "  B_S -> B is an isomorphism: " << (shadow.bs_equals_b ? "yes" : "no") << "\n";
    out << "  diagram completes (all regular elements central): "
        << (shadow.bmr_diagram_completes ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_stabilizer(const std::string& descriptor, const std::string& vector_text, bool as_json,
                   std::ostream& out) {
  const GroupDescriptor d = parse_descriptor(descriptor);
  if (!d.is_imprimitive())
    throw ConstraintError("stabilizer probes need a monomial group G(m,p,n), got " + d.str());
  const auto& g = d.as_imprimitive();
  const MonoGroup group = build_group(g.m, g.p, g.n, element_cap_from_env());
  const MonoVector x = parse_mono_vector(vector_text, group.ambient);
  if (x.dim() != group.n)
    throw ConstraintError("vector has " + std::to_string(x.dim()) + " coordinates, expected " +
                          std::to_string(group.n));
  const StabilizerReport report = extended_stabilizer(group, x);

  if (as_json) {
    ordered_json j;
    j["descriptor"] = d.str();
    j["ambient_root_order"] = report.ambient;
    j["vector"] = x.str();
    j["stratum"] = stratum_name(report.stratum);
    j["stab_in_w"] = report.stab_in_w;
    ordered_json pairs = ordered_json::array();
    for (const auto& pair : report.pairs) {
      ordered_json jp;
      jp["lambda"] = pair.lambda.str();
      jp["sigma"] = pair.w.sigma();
      jp["weights"] = pair.w.weights();
      pairs.push_back(jp);
    }
    j["pairs"] = pairs;
    out << j.dump(2) << "\n";
  } else {
    out << d.str() << ", ambient root order L = " << report.ambient
        << " (z = exp(2*pi*i/L))\n";
    out << "  x = " << x.str() << "\n";
    out << "  stratum: " << stratum_name(report.stratum) << "\n";
    out << "  stabilizer in ZW: " << report.pairs.size() << " element(s)\n";
    for (const auto& pair : report.pairs) {
      if (pair.element.is_identity())
        out << "    identity\n";
      else
        out << "    lambda=" << pair.lambda.str() << "  w=" << pair.w.str() << "\n";
    }
    out << "  all stabilizing elements in W: " << (report.stab_in_w ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_verify(const std::string& claim_name, long m_max, long n_max, int samples,
               std::uint64_t seed, const std::vector<std::string>& extra,
               const std::string& out_dir, bool as_json, std::ostream& out) {
  Campaign campaign;
  campaign.claim = claim_by_name(claim_name);
  campaign.m_max = m_max;
  campaign.n_max = n_max;
  campaign.samples = samples;
  campaign.seed = seed;
  campaign.cap = element_cap_from_env();
  for (const auto& text : extra) campaign.extra.push_back(parse_descriptor(text));

  const VerificationReport report = run_campaign(campaign);
  const auto path = write_report(report, out_dir);

  if (as_json) {
    ordered_json j = report.to_json();
    j["report_path"] = path.string();
    out << j.dump(2) << "\n";
  } else {
    out << "claim:          " << claim_name << "\n";
    out << "groups checked: " << report.groups_checked << "\n";
    out << "checks run:     " << report.checks_run << "\n";
    out << "status:         " << (report.pass() ? "PASS" : "FAIL") << "\n";
    out << "report:         " << path.string() << "\n";
    std::size_t shown = 0;
    for (const auto& f : report.failures) {
      if (++shown > 10) {
        out << "  ... " << (report.failures.size() - 10) << " more failure(s)\n";
        break;
      }
      out << "  FAIL " << f.descriptor << ": " << f.witness << " expected " << f.expected
          << ", got " << f.got << "\n";
    }
  }
  return report.pass() ? 0 : 1;
}

int run_claims(const std::string& filter, bool as_json, std::ostream& out) {
  const auto claims = list_claims(filter);
  if (as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& info : claims) {
      ordered_json jc;
      jc["name"] = info.name;
      jc["description"] = info.description;
      j.push_back(jc);
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& info : claims) {
      out << "  " << info.name;
      for (std::size_t i = info.name.size(); i < 30; ++i) out << ' ';
      out << info.description << "\n";
    }
    if (claims.empty()) out << "  (no matching claims)\n";
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact classification and verification toolkit for irreducible "
               "complex reflection groups"};
  app.require_subcommand(1);

  std::string descriptor, vector_text, claim_name, filter;
  bool as_json = false;
  long m_max = 6, n_max = 4;
  int samples = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> extra;
  std::string out_dir = "reports";

  auto add_json = [&as_json](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* describe = app.add_subcommand("describe", "degrees, codegrees, order, center");
  describe->add_option("descriptor", descriptor, "group descriptor, e.g. G(4,2,3) or G25")
      ->required();
  add_json(describe);

  CLI::App* full = app.add_subcommand("full", "full reflection group classification");
  full->add_option("descriptor", descriptor)->required();
  add_json(full);

  CLI::App* regular = app.add_subcommand("regular", "regular and regular-hyperplane numbers");
  regular->add_option("descriptor", descriptor)->required();
  add_json(regular);

  CLI::App* shadow = app.add_subcommand("shadow", "braid-group numeric invariants");
  shadow->add_option("descriptor", descriptor)->required();
  add_json(shadow);

  CLI::App* stabilizer =
      app.add_subcommand("stabilizer", "extended stabilizer of a vector under G(m,p,n)");
  stabilizer->add_option("descriptor", descriptor)->required();
  stabilizer
      ->add_option("vector", vector_text,
                   "coordinates 'q' or 'q*z^e' with q rational, e.g. \"(1, 1/2*z^3)\"")
      ->required();
  add_json(stabilizer);

  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("claim", claim_name, "claim name; see `claims`")->required();
  verify->add_option("--m-max", m_max, "sweep bound on m (default 6)");
  verify->add_option("--n-max", n_max, "sweep bound on n (default 4)");
  verify->add_option("--samples", samples, "vectors per group for stabilizer claims");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--extra", extra, "additional G(m,p,n) descriptors to sweep");
  verify->add_option("--out-dir", out_dir, "report directory (default ./reports)");
  add_json(verify);

  CLI::App* claims = app.add_subcommand("claims", "list the claim registry");
  claims->add_option("filter", filter, "substring filter");
  add_json(claims);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (describe->parsed()) return run_describe(descriptor, as_json, out);
    if (full->parsed()) return run_full(descriptor, as_json, out);
    if (regular->parsed()) return run_regular(descriptor, as_json, out);
    if (shadow->parsed()) return run_shadow(descriptor, as_json, out);
    if (stabilizer->parsed()) return run_stabilizer(descriptor, vector_text, as_json, out);
    if (verify->parsed())
      return run_verify(claim_name, m_max, n_max, samples, seed, extra, out_dir, as_json, out);
    if (claims->parsed()) return run_claims(filter, as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace crg
