#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crg/descriptor.hpp"
#include "crg/rootscalar.hpp"

namespace crg {

inline constexpr std::uint64_t kDefaultElementCap = 32768;

// Smallest ambient root order that holds every entry, every eigenvalue and
// every scalar ratio occurring in G(m,p,n): eigenvalues solve lambda^l =
// zeta_m^s for cycle lengths l <= n, so 2*m*lcm(1..n) suffices (the factor 2
// keeps the order even for sign folding).
long ambient_order(long m, long n);
long common_ambient(long m1, long n1, long m2, long n2);

struct MonoVector {
  std::vector<RootScalar> coords;

  long dim() const { return static_cast<long>(coords.size()); }
  long ambient_order() const { return coords.at(0).ambient_order(); }
  bool is_zero() const;
  std::string str() const;
  friend bool operator==(const MonoVector&, const MonoVector&) = default;
};

// A monomial matrix over mu_L: column i carries zeta_L^{weights[i]} in row
// sigma[i], i.e. w.e_i = zeta_L^{weights[i]} e_{sigma[i]}.
class MonoMatrix {
public:
  MonoMatrix(std::vector<int> sigma, std::vector<long> weights, long ambient_order);
  static MonoMatrix identity(int n, long ambient_order);

  int dim() const { return static_cast<int>(sigma_.size()); }
  long ambient_order() const { return ambient_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<long>& weights() const { return weights_; }

  // (*this) o rhs, i.e. rhs acts first.
  MonoMatrix compose(const MonoMatrix& rhs) const;
  MonoMatrix inverse() const;
  MonoMatrix pow(long k) const;
  MonoVector apply(const MonoVector& x) const;

  // Multiply by the scalar zeta_L^a.
  MonoMatrix scaled_by_root(long a) const;
  // Re-embed into a larger ambient order (must be a multiple of the current one).
  MonoMatrix rescaled(long new_ambient) const;

  bool is_identity() const;
  bool is_scalar() const;
  std::optional<long> scalar_exponent() const;
  // Dimension of the fixed space (eigenvalue-1 eigenspace).
  int fixed_space_dim() const;
  long order() const;

  // Cycles of sigma, each a list of column indices in traversal order.
  std::vector<std::vector<int>> cycles() const;

  // Injective encoding; equal keys <=> equal matrices.
  std::string key() const;
  // Key of the projective class: invariant under scaling by any mu_L scalar.
  std::string projective_key() const;

  std::string str() const;
  friend bool operator==(const MonoMatrix&, const MonoMatrix&) = default;

private:
  std::vector<int> sigma_;
  std::vector<long> weights_;
  long ambient_;
};

struct MonoGroup {
  long m = 0, p = 0, n = 0;
  long ambient = 0;  // L
  std::vector<MonoMatrix> elements;

  GroupDescriptor descriptor() const { return GroupDescriptor::imprimitive(m, p, n); }
  std::uint64_t order() const { return elements.size(); }
  // Exact membership condition for monomial matrices over the same ambient:
  // all weights divisible by L/m and the weight sum divisible by (L/m)*p.
  bool satisfies_weight_condition(const MonoMatrix& w) const;
  long scalar_matrix_count() const;
};

// Materializes G(m,p,n). Throws CapError when m^n n!/p exceeds `cap` and
// ConstraintError for rejected (reducible / rank-1) parameters. An explicit
// ambient order must be a multiple of ambient_order(m,n).
MonoGroup build_group(long m, long p, long n, std::uint64_t cap = kDefaultElementCap,
                      long ambient = 0);

// All elements whose fixed space is a hyperplane.
std::vector<MonoMatrix> reflections(const MonoGroup& g);

// Linear form cutting out a reflecting hyperplane: either a coordinate form
// x_i = 0 or a difference form x_i - zeta_L^{root_exp} x_j = 0 (i < j).
struct HyperplaneForm {
  int i = 0;
  int j = -1;          // -1 for coordinate forms
  long root_exp = 0;   // ambient-scale exponent
  bool is_coordinate() const { return j < 0; }
  std::string str() const;
};

std::vector<HyperplaneForm> hyperplanes(const MonoGroup& g);

// Exact evaluation of "x lies on the hyperplane": both sides compared in
// canonical form, no cyclotomic sums are ever formed.
bool on_hyperplane(const MonoVector& x, const HyperplaneForm& f);
bool on_any_hyperplane(const MonoVector& x, const std::vector<HyperplaneForm>& forms);

struct EigenComponent {
  RootScalar value;
  std::vector<MonoVector> basis;  // one structured root-of-unity vector per cycle
};

// Full eigen decomposition from the cycle structure; eigenspace dimensions
// sum to n. Eigenvalues are exact mu_L roots of unity.
std::vector<EigenComponent> eigen_data(const MonoMatrix& w);

// True iff span(basis) is not contained in any of the reflecting hyperplanes.
bool eigenspace_avoids_hyperplanes(const std::vector<HyperplaneForm>& forms,
                                   const std::vector<MonoVector>& basis);

struct RegularPair {
  std::size_t element_index = 0;  // into g.elements
  RootScalar value;
  int dim = 0;  // eigenspace dimension
};

// All (w, zeta) with a zeta-eigenvector of w avoiding every reflecting
// hyperplane.
std::vector<RegularPair> regular_elements(const MonoGroup& g);

// lambda with lambda * y == x (exact), if the vectors are proportional.
std::optional<RootScalar> proportionality_scalar(const MonoVector& x, const MonoVector& y);

// Coordinate grammar "q" or "q*z^e" (q a rational a/b, z = zeta_L),
// comma-separated, optionally parenthesized: "(1, 2)", "1/2*z^3, 0".
MonoVector parse_mono_vector(std::string_view text, long ambient);

}  // namespace crg
