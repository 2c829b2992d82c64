#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "crg/descriptor.hpp"

namespace crg {

// Degree/codegree data of an irreducible group, with the gcd profile used by
// the regular-hyperplane criterion.
struct DegreeProfile {
  std::vector<long> degrees;        // ascending
  std::vector<long> codegrees;      // descending, last entry 0
  long gcd_all = 0;                 // D = gcd of all degrees = |Z(W)|
  std::vector<long> gcd_omitting;   // gcd_omitting[j] = gcd of degrees without degrees[j]
};

std::vector<long> degrees(const GroupDescriptor& d);
std::vector<long> codegrees(const GroupDescriptor& d);
DegreeProfile degree_profile(const GroupDescriptor& d);

// |W|. For G(m,p,n) this is m^n n!/p, equal to the product of the degrees.
std::uint64_t group_order(const GroupDescriptor& d);

// |Z(W)| = gcd of the degrees.
long center_order(const GroupDescriptor& d);

// k is regular iff it divides as many degrees as codegrees, multiplicities
// counted. Always contains 1; finite because a regular k divides some degree.
std::set<long> regular_numbers(const GroupDescriptor& d);

// Regular k whose regular eigenspace is a hyperplane, i.e. k divides exactly
// rank-1 degrees. The eigenspace dimension rule dim V = #{i : k | d_i} is
// assumed throughout (and certified against enumeration by the verifier).
// Requires rank >= 2.
std::set<long> regular_hyperplane_numbers(const GroupDescriptor& d);

// True iff every regular eigenspace is the whole space, i.e. every regular
// number divides the center order.
bool all_regular_central(const GroupDescriptor& d);

}  // namespace crg
