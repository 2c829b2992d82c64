#include "crg/sampling.hpp"

#include <random>

namespace crg {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  // FNV-1a over the tag, folded into the seed.
  std::uint64_t h = 14695981039346656037ULL ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<MonoVector> sample_vectors(const MonoGroup& g, int count, std::uint64_t seed) {
  const long L = g.ambient;
  const int n = static_cast<int>(g.n);
  std::vector<MonoVector> out;

  auto scalar = [L](long num, long den, long e) { return RootScalar(Rational(num, den), e, L); };

  {
    MonoVector ones;
    ones.coords.assign(n, RootScalar::one(L));
    out.push_back(ones);
  }
  for (int zero_at = 0; zero_at < n; ++zero_at) {
    MonoVector v;
    for (int i = 0; i < n; ++i)
      v.coords.push_back(i == zero_at ? RootScalar::zero(L) : scalar(i + 1, 1, 0));
    out.push_back(std::move(v));
  }

  std::mt19937_64 rng(seed);
  auto bounded = [&rng](std::uint64_t k) { return static_cast<long>(rng() % k); };

  // Eigenvectors of seeded-random elements: these land exactly on eigenspaces
  // (and frequently on hyperplanes).
  int eigen_budget = 50;
  while (eigen_budget > 0) {
    const auto& w = g.elements[static_cast<std::size_t>(bounded(g.elements.size()))];
    for (const auto& comp : eigen_data(w)) {
      for (const auto& b : comp.basis) {
        out.push_back(b);
        if (--eigen_budget == 0) break;
      }
      if (eigen_budget == 0) break;
    }
  }

  static const std::pair<long, long> kMagnitudes[] = {{0, 1}, {1, 1}, {2, 1},
                                                      {3, 1}, {1, 2}, {1, 3}};
  int accepted = 0;
  while (accepted < count) {
    MonoVector v;
    for (int i = 0; i < n; ++i) {
      auto [num, den] = kMagnitudes[bounded(6)];
      long e = bounded(static_cast<std::uint64_t>(L));
      v.coords.push_back(scalar(num, den, num == 0 ? 0 : e));
    }
    if (v.is_zero()) continue;
    out.push_back(std::move(v));
    ++accepted;
  }
  return out;
}

}  // namespace crg
