#include "crg/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "crg/taxonomy.hpp"

namespace crg {

long ambient_order(long m, long n) {
  long l = 1;
  for (long i = 2; i <= n; ++i) l = std::lcm(l, i);
  return 2 * m * l;
}

long common_ambient(long m1, long n1, long m2, long n2) {
  return std::lcm(ambient_order(m1, n1), ambient_order(m2, n2));
}

bool MonoVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const RootScalar& c) { return c.is_zero(); });
}

std::string MonoVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].str();
  }
  return out + ")";
}

MonoMatrix::MonoMatrix(std::vector<int> sigma, std::vector<long> weights, long ambient_order)
    : sigma_(std::move(sigma)), weights_(std::move(weights)), ambient_(ambient_order) {
  const int n = dim();
  if (weights_.size() != sigma_.size() || n == 0)
    throw ConstraintError("monomial matrix needs matching sigma/weight lengths");
  std::vector<bool> seen(n, false);
  for (int img : sigma_) {
    if (img < 0 || img >= n || seen[img])
      throw ConstraintError("sigma is not a permutation");
    seen[img] = true;
  }
  for (auto& w : weights_) {
    w %= ambient_;
    if (w < 0) w += ambient_;
  }
}

MonoMatrix MonoMatrix::identity(int n, long ambient_order) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  return {std::move(sigma), std::vector<long>(n, 0), ambient_order};
}

MonoMatrix MonoMatrix::compose(const MonoMatrix& rhs) const {
  if (ambient_ != rhs.ambient_ || dim() != rhs.dim())
    throw Error("composing incompatible monomial matrices");
  const int n = dim();
  std::vector<int> sigma(n);
  std::vector<long> weights(n);
  for (int i = 0; i < n; ++i) {
    sigma[i] = sigma_[rhs.sigma_[i]];
    weights[i] = rhs.weights_[i] + weights_[rhs.sigma_[i]];
  }
  return {std::move(sigma), std::move(weights), ambient_};
}

MonoMatrix MonoMatrix::inverse() const {
  const int n = dim();
  std::vector<int> sigma(n);
  std::vector<long> weights(n);
  for (int i = 0; i < n; ++i) {
    sigma[sigma_[i]] = i;
    weights[sigma_[i]] = -weights_[i];
  }
  return {std::move(sigma), std::move(weights), ambient_};
}

MonoMatrix MonoMatrix::pow(long k) const {
  MonoMatrix base = k >= 0 ? *this : inverse();
  long reps = k >= 0 ? k : -k;
  MonoMatrix acc = identity(dim(), ambient_);
  for (long i = 0; i < reps; ++i) acc = base.compose(acc);
  return acc;
}

MonoVector MonoMatrix::apply(const MonoVector& x) const {
  if (x.dim() != dim() || x.ambient_order() != ambient_)
    throw Error("applying monomial matrix to incompatible vector");
  MonoVector y;
  y.coords.assign(dim(), RootScalar::zero(ambient_));
  for (int i = 0; i < dim(); ++i)
    y.coords[sigma_[i]] = RootScalar::root(weights_[i], ambient_) * x.coords[i];
  return y;
}

MonoMatrix MonoMatrix::scaled_by_root(long a) const {
  std::vector<long> weights = weights_;
  for (auto& w : weights) w += a;
  return {sigma_, std::move(weights), ambient_};
}

MonoMatrix MonoMatrix::rescaled(long new_ambient) const {
  if (new_ambient % ambient_ != 0)
    throw ConstraintError("new ambient order must be a multiple of the current one");
  const long factor = new_ambient / ambient_;
  std::vector<long> weights = weights_;
  for (auto& w : weights) w *= factor;
  return {sigma_, std::move(weights), new_ambient};
}

bool MonoMatrix::is_identity() const {
  for (int i = 0; i < dim(); ++i) {
    if (sigma_[i] != i || weights_[i] != 0) return false;
  }
  return true;
}

bool MonoMatrix::is_scalar() const { return scalar_exponent().has_value(); }

std::optional<long> MonoMatrix::scalar_exponent() const {
  for (int i = 0; i < dim(); ++i) {
    if (sigma_[i] != i || weights_[i] != weights_[0]) return std::nullopt;
  }
  return weights_[0];
}

std::vector<std::vector<int>> MonoMatrix::cycles() const {
  const int n = dim();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = sigma_[cur];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int MonoMatrix::fixed_space_dim() const {
  // A cycle contributes a fixed line iff its weight sum vanishes mod L.
  int dim_fixed = 0;
  for (const auto& cycle : cycles()) {
    long sum = 0;
    for (int i : cycle) sum += weights_[i];
    if (sum % ambient_ == 0) ++dim_fixed;
  }
  return dim_fixed;
}

long MonoMatrix::order() const {
  MonoMatrix acc = *this;
  long k = 1;
  while (!acc.is_identity()) {
    acc = compose(acc);
    ++k;
    if (k > ambient_ * dim() + 1) throw Error("internal: runaway element order");
  }
  return k;
}

std::string MonoMatrix::key() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) os << sigma_[i] << ':' << weights_[i] << ';';
  return os.str();
}

std::string MonoMatrix::projective_key() const {
  // Scaling by zeta_L^a shifts every weight by a; anchor the first weight at 0.
  std::ostringstream os;
  const long shift = weights_[0];
  for (int i = 0; i < dim(); ++i) {
    long w = (weights_[i] - shift) % ambient_;
    if (w < 0) w += ambient_;
    os << sigma_[i] << ':' << w << ';';
  }
  return os.str();
}

std::string MonoMatrix::str() const {
  std::ostringstream os;
  os << "[sigma=(";
  for (int i = 0; i < dim(); ++i) os << (i ? " " : "") << sigma_[i];
  os << ") weights=(";
  for (int i = 0; i < dim(); ++i) os << (i ? " " : "") << weights_[i];
  os << ") mod " << ambient_ << "]";
  return os.str();
}

bool MonoGroup::satisfies_weight_condition(const MonoMatrix& w) const {
  if (w.ambient_order() != ambient) return false;
  const long c = ambient / m;
  long sum = 0;
  for (long wt : w.weights()) {
    if (wt % c != 0) return false;
    sum += wt;
  }
  return sum % (c * p) == 0;
}

long MonoGroup::scalar_matrix_count() const {
  return static_cast<long>(std::count_if(elements.begin(), elements.end(),
                                         [](const MonoMatrix& w) { return w.is_scalar(); }));
}

MonoGroup build_group(long m, long p, long n, std::uint64_t cap, long ambient) {
  const GroupDescriptor d = GroupDescriptor::imprimitive(m, p, n);
  const std::uint64_t order = group_order(d);
  if (order > cap)
    throw CapError("G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                       std::to_string(n) + ") has order " + std::to_string(order) +
                       " which exceeds the cap " + std::to_string(cap),
                   order);

  MonoGroup g;
  g.m = m;
  g.p = p;
  g.n = n;
  g.ambient = ambient == 0 ? ambient_order(m, n) : ambient;
  if (g.ambient % ambient_order(m, n) != 0)
    throw ConstraintError("ambient order must be a multiple of " +
                          std::to_string(ambient_order(m, n)));
  const long c = g.ambient / m;

  // Weight vectors theta in (Z/m)^n with sum(theta) = 0 mod p, scaled by c.
  std::vector<std::vector<long>> weight_vectors;
  std::vector<long> theta(n, 0);
  while (true) {
    long sum = std::accumulate(theta.begin(), theta.end(), 0L);
    if (sum % p == 0) {
      std::vector<long> scaled(theta.size());
      std::transform(theta.begin(), theta.end(), scaled.begin(),
                     [c](long t) { return t * c; });
      weight_vectors.push_back(std::move(scaled));
    }
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && theta[pos] == m - 1) theta[pos--] = 0;
    if (pos < 0) break;
    ++theta[pos];
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  g.elements.reserve(order);
  do {
    for (const auto& w : weight_vectors)
      g.elements.emplace_back(perm, w, g.ambient);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

std::vector<MonoMatrix> reflections(const MonoGroup& g) {
  std::vector<MonoMatrix> out;
  for (const auto& w : g.elements) {
    if (w.fixed_space_dim() == g.n - 1) out.push_back(w);
  }
  return out;
}

std::string HyperplaneForm::str() const {
  std::ostringstream os;
  if (is_coordinate()) {
    os << "x" << (i + 1);
  } else {
    os << "x" << (i + 1) << " - ";
    if (root_exp != 0) os << "z^" << root_exp << "*";
    os << "x" << (j + 1);
  }
  return os.str();
}

std::vector<HyperplaneForm> hyperplanes(const MonoGroup& g) {
  std::vector<HyperplaneForm> forms;
  const long c = g.ambient / g.m;
  if (g.p < g.m) {
    for (int i = 0; i < g.n; ++i) forms.push_back({i, -1, 0});
  }
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      for (long k = 0; k < g.m; ++k) forms.push_back({i, j, k * c});
    }
  }
  return forms;
}

bool on_hyperplane(const MonoVector& x, const HyperplaneForm& f) {
  if (f.is_coordinate()) return x.coords[f.i].is_zero();
  return x.coords[f.i] == RootScalar::root(f.root_exp, x.ambient_order()) * x.coords[f.j];
}

bool on_any_hyperplane(const MonoVector& x, const std::vector<HyperplaneForm>& forms) {
  return std::any_of(forms.begin(), forms.end(),
                     [&x](const HyperplaneForm& f) { return on_hyperplane(x, f); });
}

std::vector<EigenComponent> eigen_data(const MonoMatrix& w) {
  const long L = w.ambient_order();
  const int n = w.dim();
  // exponent of eigenvalue -> basis vectors
  std::map<long, std::vector<MonoVector>> components;

  for (const auto& cycle : w.cycles()) {
    const long len = static_cast<long>(cycle.size());
    long sum = 0;
    for (int i : cycle) sum += w.weights()[i];
    sum %= L;
    if (L % len != 0 || sum % len != 0)
      throw ConstraintError(
          "ambient root order too coarse for the eigenvalues of this matrix; "
          "rebuild with a multiple of ambient_order(m,n)");
    // Solutions of lambda^len = zeta_L^sum inside mu_L.
    for (long t = 0; t < len; ++t) {
      const long lambda_exp = (sum / len + t * (L / len)) % L;
      // Structured eigenvector: v[c_0] = 1, v[c_{j+1}] = zeta^{w(c_j)} v[c_j] / lambda.
      MonoVector v;
      v.coords.assign(n, RootScalar::zero(L));
      RootScalar coord = RootScalar::one(L);
      const RootScalar lambda_inv = RootScalar::root(-lambda_exp, L);
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        v.coords[cycle[j]] = coord;
        coord = coord * RootScalar::root(w.weights()[cycle[j]], L) * lambda_inv;
      }
      components[lambda_exp].push_back(std::move(v));
    }
  }

  std::vector<EigenComponent> out;
  out.reserve(components.size());
  for (auto& [exp, basis] : components)
    out.push_back({RootScalar::root(exp, w.ambient_order()), std::move(basis)});
  return out;
}

bool eigenspace_avoids_hyperplanes(const std::vector<HyperplaneForm>& forms,
                                   const std::vector<MonoVector>& basis) {
  // A subspace lies in a finite union of hyperplanes iff it lies in one of
  // them, and it lies in ker(f) iff f kills every basis vector.
  for (const auto& f : forms) {
    bool contained = std::all_of(basis.begin(), basis.end(),
                                 [&f](const MonoVector& b) { return on_hyperplane(b, f); });
    if (contained) return false;
  }
  return true;
}

std::vector<RegularPair> regular_elements(const MonoGroup& g) {
  const auto forms = hyperplanes(g);
  std::vector<RegularPair> out;
  for (std::size_t idx = 0; idx < g.elements.size(); ++idx) {
    for (const auto& comp : eigen_data(g.elements[idx])) {
      if (eigenspace_avoids_hyperplanes(forms, comp.basis))
        out.push_back({idx, comp.value, static_cast<int>(comp.basis.size())});
    }
  }
  return out;
}

std::optional<RootScalar> proportionality_scalar(const MonoVector& x, const MonoVector& y) {
  if (x.dim() != y.dim()) return std::nullopt;
  int pivot = -1;
  for (int i = 0; i < x.dim(); ++i) {
    if (!x.coords[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return std::nullopt;  // zero vector has no well-defined scalar
  if (y.coords[pivot].is_zero()) return std::nullopt;
  const RootScalar lambda = x.coords[pivot] / y.coords[pivot];
  for (int i = 0; i < x.dim(); ++i) {
    if (!(lambda * y.coords[i] == x.coords[i])) return std::nullopt;
  }
  return lambda;
}

namespace {

long parse_long(std::string_view s, std::size_t& pos, const char* what) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError(std::string("expected ") + what, pos);
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000000L) throw ParseError("integer literal too large", pos);
    ++pos;
  }
  return negative ? -v : v;
}

void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

RootScalar parse_coordinate(std::string_view s, std::size_t& pos, long ambient) {
  skip_spaces(s, pos);
  Rational q(1);
  bool have_q = false;
  if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                         s[pos] == '+')) {
    long num = parse_long(s, pos, "a rational coordinate");
    long den = 1;
    skip_spaces(s, pos);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_spaces(s, pos);
      den = parse_long(s, pos, "a denominator");
      if (den == 0) throw ParseError("zero denominator", pos);
    }
    q = Rational(num, den);
    have_q = true;
  }
  skip_spaces(s, pos);
  long e = 0;
  bool have_root = false;
  if (pos < s.size() && (s[pos] == '*' || s[pos] == 'z' || s[pos] == 'Z')) {
    if (s[pos] == '*') {
      ++pos;
      skip_spaces(s, pos);
    }
    if (pos >= s.size() || (s[pos] != 'z' && s[pos] != 'Z'))
      throw ParseError("expected 'z' after '*'", pos);
    ++pos;
    skip_spaces(s, pos);
    if (pos >= s.size() || s[pos] != '^') throw ParseError("expected '^' after 'z'", pos);
    ++pos;
    skip_spaces(s, pos);
    e = parse_long(s, pos, "a root exponent");
    have_root = true;
  }
  if (!have_q && !have_root) throw ParseError("expected a coordinate", pos);
  return {q, e, ambient};
}

}  // namespace

MonoVector parse_mono_vector(std::string_view text, long ambient) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  bool parenthesized = pos < text.size() && text[pos] == '(';
  if (parenthesized) ++pos;

  MonoVector v;
  while (true) {
    v.coords.push_back(parse_coordinate(text, pos, ambient));
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (parenthesized) {
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
  }
  skip_spaces(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after vector", pos);
  if (v.is_zero()) throw ConstraintError("vector must be nonzero");
  return v;
}

}  // namespace crg
