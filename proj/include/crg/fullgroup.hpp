#pragma once

#include <cstdint>

#include "crg/descriptor.hpp"

namespace crg {

// The maximal reflection group with the same scalar-extended group (hence the
// same projective image) as the input.
struct FullGroupResult {
  GroupDescriptor input;
  GroupDescriptor full;
  std::uint64_t index = 1;    // [W_f : W]
  long center_ratio = 1;      // [Z(W_f) : Z(W)], always equal to index
};

// Classification of the full group:
//   rank-2 primitive families -> G7 / G11 / G19 by class,
//   rank >= 3 primitive       -> itself, except G25 -> G26,
//   G(m,p,2)                  -> G(2m/gcd(p,2), 2, 2),
//   G(m,p,n), n > 2           -> G(m, gcd(p,n), n).
// Symmetric groups of rank 2 and 3 are normalized to their imprimitive
// models G(3,3,2) and G(2,2,3) first; rank >= 4 symmetric groups are
// primitive and full. Requires rank >= 2.
FullGroupResult full_group(const GroupDescriptor& d);

bool is_full(const GroupDescriptor& d);

// True iff both groups have the same full group, i.e. the same image in
// PGL(V).
bool same_projective_image(const GroupDescriptor& a, const GroupDescriptor& b);

// Integer invariants of the enlarged braid group attached to W, all derived
// from degree arithmetic.
struct BraidShadow {
  long center_w = 1;              // |Z(W)|
  long center_wf = 1;             // |Z(W_f)|
  long beta_to_pi_exponent = 1;   // beta_S^e = pi_S with e = |Z(W)|
  long beta_wf_power = 1;         // [Z(W_f):Z(W)]; Z(B_S) is that power of beta_S(W_f)
  bool bs_equals_b = false;       // B_S -> B is an isomorphism (no regular hyperplanes)
  bool bmr_diagram_completes = false;  // all regular elements central
};

BraidShadow braid_shadow(const GroupDescriptor& d);

}  // namespace crg
