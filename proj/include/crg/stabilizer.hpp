#pragma once

#include <string>
#include <vector>

#include "crg/monomial.hpp"

namespace crg {

enum class Stratum { OnReflectingHyperplane, InProperRegularEigenspace, StronglyRegular };

const char* stratum_name(Stratum s);

// One element lambda*w of the extended group ZW stabilizing x, stored with
// its (w, lambda) witness. Distinct entries are distinct matrices; the
// identity (with lambda = 1) is always present and listed first.
struct StabilizerPair {
  MonoMatrix w;
  RootScalar lambda;
  MonoMatrix element;  // lambda * w
};

struct StabilizerReport {
  std::vector<StabilizerPair> pairs;
  Stratum stratum = Stratum::StronglyRegular;
  bool stab_in_w = true;  // every stabilizing lambda*w lies in W itself
  long ambient = 0;
};

// Precomputed geometry of a group, shared across many stabilizer probes.
struct GroupContext {
  std::vector<HyperplaneForm> forms;
  std::vector<RegularPair> regular;
};

GroupContext make_context(const MonoGroup& g);

// Membership of x in some proper regular eigenspace V(w,zeta), tested
// directly as w.x == zeta.x over the regular pairs with dim < n.
bool in_proper_regular_eigenspace(const MonoGroup& g, const GroupContext& ctx,
                                  const MonoVector& x);

StabilizerReport extended_stabilizer(const MonoGroup& g, const GroupContext& ctx,
                                     const MonoVector& x);
StabilizerReport extended_stabilizer(const MonoGroup& g, const MonoVector& x);

// True iff the two groups have the same scalar-extended group: every element
// of one is a mu_L multiple of an element of the other and conversely. Both
// groups must share the ambient order (build them over common_ambient).
bool extended_group_equal(const MonoGroup& g1, const MonoGroup& g2);

}  // namespace crg
