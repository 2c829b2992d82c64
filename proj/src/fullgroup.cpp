#include "crg/fullgroup.hpp"

#include <numeric>

#include "crg/exceptional.hpp"
#include "crg/taxonomy.hpp"

namespace crg {

namespace {

// Sym(2) and Sym(3) are the imprimitive reflection groups A2 = G(3,3,2) and
// A3 = D3 = G(2,2,3); classify them through the imprimitive cases. Higher
// ranks are primitive.
GroupDescriptor normalize_for_classification(const GroupDescriptor& d) {
  if (d.is_symmetric()) {
    long n = d.as_symmetric().n;
    if (n == 2) return GroupDescriptor::imprimitive(3, 3, 2);
    if (n == 3) return GroupDescriptor::imprimitive(2, 2, 3);
  }
  return d;
}

GroupDescriptor full_descriptor(const GroupDescriptor& d) {
  const GroupDescriptor w = normalize_for_classification(d);
  if (w.is_imprimitive()) {
    const auto& g = w.as_imprimitive();
    if (g.n == 2) return GroupDescriptor::imprimitive(2 * g.m / std::gcd(g.p, 2L), 2, 2);
    return GroupDescriptor::imprimitive(g.m, std::gcd(g.p, g.n), g.n);
  }
  if (w.is_symmetric()) return w;  // rank >= 4: primitive, not G25
  const int id = w.as_exceptional().id;
  switch (exceptional_record(id).cls) {
    case PrimitiveClass::Tetrahedral: return GroupDescriptor::exceptional(7);
    case PrimitiveClass::Octahedral: return GroupDescriptor::exceptional(11);
    case PrimitiveClass::Icosahedral: return GroupDescriptor::exceptional(19);
    case PrimitiveClass::None: break;
  }
  if (id == 25) return GroupDescriptor::exceptional(26);
  return w;
}

}  // namespace

FullGroupResult full_group(const GroupDescriptor& d) {
  if (d.rank() < 2)
    throw ConstraintError("full-group classification needs rank >= 2, got " + d.str());
  FullGroupResult result{d, full_descriptor(d)};

  const std::uint64_t order_w = group_order(d);
  const std::uint64_t order_wf = group_order(result.full);
  if (order_wf % order_w != 0)
    throw Error("internal: |W_f| not a multiple of |W| for " + d.str());
  result.index = order_wf / order_w;

  const long center_w = center_order(d);
  const long center_wf = center_order(result.full);
  if (center_wf % center_w != 0)
    throw Error("internal: |Z(W_f)| not a multiple of |Z(W)| for " + d.str());
  result.center_ratio = center_wf / center_w;
  return result;
}

bool is_full(const GroupDescriptor& d) { return full_group(d).full == d; }

bool same_projective_image(const GroupDescriptor& a, const GroupDescriptor& b) {
  return full_group(a).full == full_group(b).full;
}

BraidShadow braid_shadow(const GroupDescriptor& d) {
  const FullGroupResult fg = full_group(d);
  BraidShadow shadow;
  shadow.center_w = center_order(d);
  shadow.center_wf = center_order(fg.full);
  shadow.beta_to_pi_exponent = shadow.center_w;
  shadow.beta_wf_power = shadow.center_wf / shadow.center_w;
  shadow.bs_equals_b = regular_hyperplane_numbers(d).empty();
  shadow.bmr_diagram_completes = all_regular_central(d);
  return shadow;
}

}  // namespace crg
