#include "crg/stabilizer.hpp"

#include <unordered_set>

namespace crg {

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::OnReflectingHyperplane: return "OnReflectingHyperplane";
    case Stratum::InProperRegularEigenspace: return "InProperRegularEigenspace";
    case Stratum::StronglyRegular: return "StronglyRegular";
  }
  return "?";
}

GroupContext make_context(const MonoGroup& g) {
  return {hyperplanes(g), regular_elements(g)};
}

bool in_proper_regular_eigenspace(const MonoGroup& g, const GroupContext& ctx,
                                  const MonoVector& x) {
  for (const auto& pair : ctx.regular) {
    if (pair.dim >= g.n) continue;
    const MonoMatrix& w = g.elements[pair.element_index];
    MonoVector wx = w.apply(x);
    bool inside = true;
    for (int i = 0; i < x.dim(); ++i) {
      if (!(wx.coords[i] == pair.value * x.coords[i])) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

StabilizerReport extended_stabilizer(const MonoGroup& g, const GroupContext& ctx,
                                     const MonoVector& x) {
  if (x.is_zero()) throw ConstraintError("stabilizer probe requires a nonzero vector");
  if (x.dim() != g.n || x.ambient_order() != g.ambient)
    throw ConstraintError("vector dimension/ambient does not match the group");

  StabilizerReport report;
  report.ambient = g.ambient;

  // (lambda w).x = x  <=>  lambda * (w.x) = x; each stabilizing lambda is an
  // eigenvalue inverse of w, hence a mu_L root of unity.
  std::unordered_set<std::string> seen;
  for (const auto& w : g.elements) {
    MonoVector wx = w.apply(x);
    auto lambda = proportionality_scalar(x, wx);
    if (!lambda) continue;
    if (!lambda->is_root_of_unity())
      throw Error("internal: stabilizing scalar is not a root of unity");
    MonoMatrix element = w.scaled_by_root(lambda->exponent());
    if (!seen.insert(element.key()).second) continue;
    if (element.is_identity()) {
      report.pairs.insert(report.pairs.begin(), {w, *lambda, std::move(element)});
    } else {
      report.pairs.push_back({w, *lambda, std::move(element)});
    }
  }

  report.stab_in_w = true;
  for (const auto& pair : report.pairs) {
    if (!g.satisfies_weight_condition(pair.element)) {
      report.stab_in_w = false;
      break;
    }
  }

  if (on_any_hyperplane(x, ctx.forms)) {
    report.stratum = Stratum::OnReflectingHyperplane;
  } else if (in_proper_regular_eigenspace(g, ctx, x)) {
    report.stratum = Stratum::InProperRegularEigenspace;
  } else {
    report.stratum = Stratum::StronglyRegular;
  }
  return report;
}

StabilizerReport extended_stabilizer(const MonoGroup& g, const MonoVector& x) {
  return extended_stabilizer(g, make_context(g), x);
}

bool extended_group_equal(const MonoGroup& g1, const MonoGroup& g2) {
  if (g1.ambient != g2.ambient)
    throw Error("extended_group_equal: ambient orders " + std::to_string(g1.ambient) +
                " and " + std::to_string(g2.ambient) +
                " differ; rebuild both groups over common_ambient");
  // Scaling by mu_L shifts all weights uniformly, so the projective key
  // identifies the scalar class of an element exactly.
  std::unordered_set<std::string> classes1, classes2;
  for (const auto& w : g1.elements) classes1.insert(w.projective_key());
  for (const auto& w : g2.elements) classes2.insert(w.projective_key());
  return classes1 == classes2;
}

}  // namespace crg
