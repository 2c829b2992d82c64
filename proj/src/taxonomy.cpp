#include "crg/taxonomy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "crg/exceptional.hpp"

namespace crg {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ConstraintError("group order overflows 64 bits");
  return r;
}

}  // namespace

std::vector<long> degrees(const GroupDescriptor& d) {
  std::vector<long> out;
  if (d.is_imprimitive()) {
    const auto& g = d.as_imprimitive();
    for (long i = 1; i < g.n; ++i) out.push_back(i * g.m);
    out.push_back(g.m * g.n / g.p);
  } else if (d.is_symmetric()) {
    for (long i = 2; i <= d.as_symmetric().n + 1; ++i) out.push_back(i);
  } else {
    out = exceptional_record(d.as_exceptional().id).degrees;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> codegrees(const GroupDescriptor& d) {
  std::vector<long> out;
  if (d.is_imprimitive()) {
    const auto& g = d.as_imprimitive();
    if (g.p < g.m) {
      for (long i = 0; i < g.n; ++i) out.push_back(i * g.m);
    } else {
      for (long i = 0; i < g.n - 1; ++i) out.push_back(i * g.m);
      out.push_back((g.n - 1) * g.m - g.n);
    }
  } else if (d.is_symmetric()) {
    for (long i = 0; i < d.as_symmetric().n; ++i) out.push_back(i);
  } else {
    out = exceptional_record(d.as_exceptional().id).codegrees;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DegreeProfile degree_profile(const GroupDescriptor& d) {
  DegreeProfile profile;
  profile.degrees = degrees(d);
  profile.codegrees = codegrees(d);
  profile.gcd_all = std::reduce(profile.degrees.begin(), profile.degrees.end(), 0L,
                                [](long a, long b) { return std::gcd(a, b); });
  for (std::size_t j = 0; j < profile.degrees.size(); ++j) {
    long g = 0;
    for (std::size_t i = 0; i < profile.degrees.size(); ++i) {
      if (i != j) g = std::gcd(g, profile.degrees[i]);
    }
    profile.gcd_omitting.push_back(g);
  }
  return profile;
}

std::uint64_t group_order(const GroupDescriptor& d) {
  if (d.is_imprimitive()) {
    const auto& g = d.as_imprimitive();
    std::uint64_t order = 1;
    for (long i = 0; i < g.n; ++i) order = checked_mul(order, static_cast<std::uint64_t>(g.m));
    for (long i = 2; i <= g.n; ++i) order = checked_mul(order, static_cast<std::uint64_t>(i));
    return order / static_cast<std::uint64_t>(g.p);
  }
  if (d.is_symmetric()) {
    std::uint64_t order = 1;
    for (long i = 2; i <= d.as_symmetric().n + 1; ++i)
      order = checked_mul(order, static_cast<std::uint64_t>(i));
    return order;
  }
  return exceptional_record(d.as_exceptional().id).order;
}

long center_order(const GroupDescriptor& d) {
  long g = 0;
  for (long deg : degrees(d)) g = std::gcd(g, deg);
  return g;
}

std::set<long> regular_numbers(const GroupDescriptor& d) {
  const auto degs = degrees(d);
  const auto codegs = codegrees(d);
  std::set<long> out;
  const long max_degree = degs.back();
  for (long k = 1; k <= max_degree; ++k) {
    auto divisible = [k](long v) { return v % k == 0; };
    auto in_degrees = std::count_if(degs.begin(), degs.end(), divisible);
    auto in_codegrees = std::count_if(codegs.begin(), codegs.end(), divisible);
    if (in_degrees == in_codegrees) out.insert(k);
  }
  return out;
}

std::set<long> regular_hyperplane_numbers(const GroupDescriptor& d) {
  if (d.rank() < 2)
    throw ConstraintError("regular hyperplanes need rank >= 2, got " + d.str());
  const auto degs = degrees(d);
  const long want = static_cast<long>(degs.size()) - 1;
  std::set<long> out;
  for (long k : regular_numbers(d)) {
    auto dim = std::count_if(degs.begin(), degs.end(), [k](long v) { return v % k == 0; });
    if (dim == want) out.insert(k);
  }
  return out;
}

bool all_regular_central(const GroupDescriptor& d) {
  const long center = center_order(d);
  for (long k : regular_numbers(d)) {
    if (center % k != 0) return false;
  }
  return true;
}

}  // namespace crg
