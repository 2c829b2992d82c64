#pragma once

#include <cstdint>
#include <vector>

#include "crg/monomial.hpp"

namespace crg {

// Deterministic probe vectors for stabilizer campaigns: `count` seeded random
// vectors (coordinates q*z^e with q in {0,1,2,3,1/2,1/3}) plus a fixed
// adversarial set -- the all-ones vector, single-zero-coordinate vectors and
// eigenvectors of 50 seeded-random elements. Random vectors almost never hit
// the measure-zero strata the stabilizer lemmas quantify over; the
// adversarial set does.
std::vector<MonoVector> sample_vectors(const MonoGroup& g, int count, std::uint64_t seed);

// Stable 64-bit mix used to derive per-group seeds from a campaign seed.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);

}  // namespace crg
