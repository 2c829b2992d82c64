#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace crg {

enum class PrimitiveClass { None, Tetrahedral, Octahedral, Icosahedral };

struct ExceptionalRecord {
  int id = 0;
  int rank = 0;
  std::vector<long> degrees;    // ascending
  std::vector<long> codegrees;  // descending, last entry 0
  std::uint64_t order = 0;
  PrimitiveClass cls = PrimitiveClass::None;
};

// Table lookup for G4..G37. Throws ConstraintError on out-of-range ids.
const ExceptionalRecord& exceptional_record(int id);
const std::vector<ExceptionalRecord>& exceptional_table();
int exceptional_rank(int id);

const char* primitive_class_name(PrimitiveClass cls);

// Explicit 2x2 generator matrices, row-major, for the exceptional groups
// exercised by the generator-level test oracles (ids 4,5,6,7,8,12,16).
// Everything else is table-only and returns nullopt.
using Mat2 = std::array<std::complex<double>, 4>;
std::optional<std::vector<Mat2>> exceptional_generators(int id);

}  // namespace crg
