#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "crg/monomial.hpp"
#include "crg/taxonomy.hpp"
#include "crg/verifier.hpp"

using namespace crg;

TEST_CASE("build_group materializes the right element counts") {
  CHECK(build_group(2, 1, 2).order() == 8);
  CHECK(build_group(4, 2, 3).order() == 192);
  CHECK(build_group(3, 3, 3).order() == 54);
}

TEST_CASE("cap violations report the refused order") {
  try {
    build_group(6, 1, 4, 20000);
    FAIL("expected CapError");
  } catch (const CapError& e) {
    CHECK(e.refused_order() == 31104);
  }
  CHECK_THROWS_AS(build_group(2, 2, 2), ConstraintError);
  CHECK_THROWS_AS(build_group(4, 3, 2), ConstraintError);
}

TEST_CASE("composition follows the monomial law and is associative") {
  const MonoGroup g = build_group(3, 1, 3);
  std::mt19937_64 rng(7);
  auto rand_elem = [&]() -> const MonoMatrix& { return g.elements[rng() % g.elements.size()]; };
  for (int trial = 0; trial < 100; ++trial) {
    const MonoMatrix &a = rand_elem(), &b = rand_elem(), &c = rand_elem();
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    CHECK(a.compose(a.inverse()).is_identity());
    CHECK(g.satisfies_weight_condition(a.compose(b)));  // closure
  }
  // matrix action matches composition: (ab).x == a.(b.x)
  MonoVector x;
  x.coords = {RootScalar::one(g.ambient), RootScalar(Rational(2), 3, g.ambient),
              RootScalar(Rational(1, 2), 5, g.ambient)};
  for (int trial = 0; trial < 20; ++trial) {
    const MonoMatrix &a = rand_elem(), &b = rand_elem();
    CHECK(a.compose(b).apply(x) == a.apply(b.apply(x)));
  }
}

TEST_CASE("group closure under product and inverse, spot-checked") {
  const MonoGroup g = build_group(4, 2, 2);
  std::unordered_set<std::string> keys;
  for (const auto& w : g.elements) keys.insert(w.key());
  CHECK(keys.size() == g.order());  // no duplicates in the enumeration
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MonoMatrix& a = g.elements[rng() % g.elements.size()];
    const MonoMatrix& b = g.elements[rng() % g.elements.size()];
    CHECK(keys.count(a.compose(b).key()) == 1);
    CHECK(keys.count(a.inverse().key()) == 1);
  }
}

namespace {

// Constructive reflection lists: diagonal ones need a nonzero weight divisible
// by p; transposition-type ones need opposite weights on the swapped slots.
std::vector<MonoMatrix> constructive_reflections(const MonoGroup& g) {
  std::vector<MonoMatrix> out;
  const long c = g.ambient / g.m;
  for (int i = 0; i < g.n; ++i) {
    for (long t = 1; t < g.m; ++t) {
      if ((t % g.p) != 0) continue;
      std::vector<int> sigma(g.n);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::vector<long> weights(g.n, 0);
      weights[i] = t * c;
      out.emplace_back(sigma, weights, g.ambient);
    }
  }
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      for (long t = 0; t < g.m; ++t) {
        std::vector<int> sigma(g.n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::swap(sigma[i], sigma[j]);
        std::vector<long> weights(g.n, 0);
        weights[i] = t * c;
        weights[j] = ((g.m - t) % g.m) * c;
        out.emplace_back(sigma, weights, g.ambient);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the two reflection constructions agree") {
  for (const char* text : {"G(2,1,2)", "G(3,3,3)", "G(4,2,3)", "G(6,2,2)", "G(5,5,2)"}) {
    const Imprimitive d = parse_descriptor(text).as_imprimitive();
    const MonoGroup g = build_group(d.m, d.p, d.n);
    const auto filtered = reflections(g);
    const auto constructed = constructive_reflections(g);
    REQUIRE_MESSAGE(filtered.size() == constructed.size(), text);
    std::unordered_set<std::string> keys;
    for (const auto& w : filtered) keys.insert(w.key());
    for (const auto& w : constructed) CHECK_MESSAGE(keys.count(w.key()) == 1, text);
  }
}

TEST_CASE("reflection counts") {
  CHECK(reflections(build_group(2, 1, 2)).size() == 4);   // 2 diagonal + 2 transposition
  CHECK(reflections(build_group(3, 3, 3)).size() == 9);   // all transposition-type
  CHECK(reflections(build_group(4, 2, 3)).size() == 15);  // 3 diagonal + 12 transposition
}

// #reflections = sum(d_i - 1) and #hyperplanes = sum(codegrees) + n tie the
// enumeration to the degree data.
TEST_CASE("reflection and hyperplane counts match the degree invariants") {
  for (const auto& d : default_sweep(4, 3, kDefaultElementCap)) {
    const auto& i = d.as_imprimitive();
    const MonoGroup g = build_group(i.m, i.p, i.n);
    const auto degs = degrees(d);
    const auto codegs = codegrees(d);
    const long expected_reflections =
        std::accumulate(degs.begin(), degs.end(), 0L) - static_cast<long>(degs.size());
    const long expected_hyperplanes =
        std::accumulate(codegs.begin(), codegs.end(), 0L) + static_cast<long>(codegs.size());
    CHECK_MESSAGE(static_cast<long>(reflections(g).size()) == expected_reflections, d.str());
    CHECK_MESSAGE(static_cast<long>(hyperplanes(g).size()) == expected_hyperplanes, d.str());
  }
}

TEST_CASE("hyperplane forms") {
  const MonoGroup b2 = build_group(2, 1, 2);
  CHECK(hyperplanes(b2).size() == 4);  // x1, x2, x1 - x2, x1 + x2
  const MonoGroup a2 = build_group(3, 3, 2);
  CHECK(hyperplanes(a2).size() == 3);
  CHECK(hyperplanes(build_group(4, 2, 3)).size() == 15);

  MonoVector v;
  v.coords = {RootScalar::one(b2.ambient), RootScalar::one(b2.ambient)};
  CHECK(on_any_hyperplane(v, hyperplanes(b2)));  // lies on x1 - x2
  MonoVector generic;
  generic.coords = {RootScalar::one(b2.ambient), RootScalar(Rational(2), 0, b2.ambient)};
  CHECK_FALSE(on_any_hyperplane(generic, hyperplanes(b2)));
}

TEST_CASE("every reflection fixes exactly one listed hyperplane") {
  const MonoGroup g = build_group(4, 2, 3);
  const auto forms = hyperplanes(g);
  for (const auto& r : reflections(g)) {
    // basis of the fixed space from the eigenvalue-1 component
    std::vector<MonoVector> fixed_basis;
    for (const auto& comp : eigen_data(r)) {
      if (comp.value.is_one()) fixed_basis = comp.basis;
    }
    REQUIRE(fixed_basis.size() == static_cast<std::size_t>(g.n - 1));
    int vanishing = 0;
    for (const auto& f : forms) {
      bool contained = std::all_of(fixed_basis.begin(), fixed_basis.end(),
                                   [&f](const MonoVector& b) { return on_hyperplane(b, f); });
      if (contained) ++vanishing;
    }
    CHECK(vanishing == 1);
  }
}

TEST_CASE("eigen decomposition") {
  const long L = ambient_order(2, 2);
  SUBCASE("identity") {
    const auto comps = eigen_data(MonoMatrix::identity(3, L));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].value.is_one());
    CHECK(comps[0].basis.size() == 3);
  }
  SUBCASE("quarter turn e1 -> e2, e2 -> -e1 has eigenvalues +-i") {
    const MonoMatrix w({1, 0}, {0, L / 2}, L);
    const auto comps = eigen_data(w);
    REQUIRE(comps.size() == 2);
    std::set<long> orders;
    for (const auto& comp : comps) {
      CHECK(comp.basis.size() == 1);
      orders.insert(comp.value.root_order());
      // verify w.v = lambda.v coordinatewise
      const MonoVector image = w.apply(comp.basis[0]);
      for (int i = 0; i < 2; ++i)
        CHECK(image.coords[i] == comp.value * comp.basis[0].coords[i]);
    }
    CHECK(orders == std::set<long>{4});
  }
  SUBCASE("diagonal read-off") {
    const long L4 = ambient_order(4, 3);
    const MonoMatrix w({0, 1, 2}, {L4 / 4, 0, 0}, L4);  // diag(zeta_4, 1, 1)
    const auto comps = eigen_data(w);
    REQUIRE(comps.size() == 2);
    for (const auto& comp : comps) {
      if (comp.value.is_one()) CHECK(comp.basis.size() == 2);
      else {
        CHECK(comp.value.root_order() == 4);
        CHECK(comp.basis.size() == 1);
      }
    }
  }
}

TEST_CASE("eigen decomposition is complete and exact on a whole group") {
  const MonoGroup g = build_group(4, 1, 2);
  for (const auto& w : g.elements) {
    std::size_t total = 0;
    for (const auto& comp : eigen_data(w)) {
      total += comp.basis.size();
      for (const auto& b : comp.basis) {
        const MonoVector image = w.apply(b);
        for (int i = 0; i < g.n; ++i) CHECK(image.coords[i] == comp.value * b.coords[i]);
      }
    }
    CHECK(total == static_cast<std::size_t>(g.n));
  }
}

TEST_CASE("regular elements") {
  const MonoGroup b2 = build_group(2, 1, 2);
  const auto pairs = regular_elements(b2);

  // identity is 1-regular
  bool identity_regular = false;
  // the quarter turn is i-regular: its eigenline (1, -i) avoids all 4 forms
  bool quarter_turn_regular = false;
  for (const auto& pair : pairs) {
    const MonoMatrix& w = b2.elements[pair.element_index];
    if (w.is_identity() && pair.value.is_one()) identity_regular = true;
    if (!w.is_scalar() && pair.value.root_order() == 4) quarter_turn_regular = true;
  }
  CHECK(identity_regular);
  CHECK(quarter_turn_regular);

  // G(3,3,3): cube-root regularity is realized only by the central scalars
  // (3-cycle eigenvectors have mu_3 coordinates, which always satisfy some
  // form x_i - zeta_3^k x_j); order 6 is realized by noncentral elements.
  const MonoGroup g333 = build_group(3, 3, 3);
  std::set<long> orders333;
  bool scalar_cube_root = false;
  bool noncentral_order6 = false;
  for (const auto& pair : regular_elements(g333)) {
    const MonoMatrix& w = g333.elements[pair.element_index];
    orders333.insert(pair.value.root_order());
    if (pair.value.root_order() == 3) {
      CHECK(w.is_scalar());
      scalar_cube_root = true;
    }
    if (pair.value.root_order() == 6 && !w.is_scalar()) noncentral_order6 = true;
  }
  CHECK(orders333 == std::set<long>{1, 2, 3, 6});
  CHECK(scalar_cube_root);
  CHECK(noncentral_order6);
}

TEST_CASE("identity is 1-regular in every sweep group") {
  for (const auto& d : default_sweep(4, 3, kDefaultElementCap)) {
    const auto& i = d.as_imprimitive();
    const MonoGroup g = build_group(i.m, i.p, i.n);
    bool found = false;
    for (const auto& pair : regular_elements(g)) {
      if (g.elements[pair.element_index].is_identity() && pair.value.is_one()) found = true;
    }
    CHECK_MESSAGE(found, d.str());
  }
}

TEST_CASE("vector grammar") {
  const long L = 8;
  const MonoVector v = parse_mono_vector("(1, 2)", L);
  CHECK(v.coords[0] == RootScalar::one(L));
  CHECK(v.coords[1] == RootScalar(Rational(2), 0, L));

  const MonoVector w = parse_mono_vector("1/2*z^3, 0, -1", L);
  CHECK(w.coords[0] == RootScalar(Rational(1, 2), 3, L));
  CHECK(w.coords[1].is_zero());
  CHECK(w.coords[2] == RootScalar::root(4, L));  // -1 folds to z^4

  CHECK(parse_mono_vector("z^6, 1", L).coords[0] == RootScalar::root(6, L));

  CHECK_THROWS_AS(parse_mono_vector("0, 0", L), ConstraintError);  // zero vector
  CHECK_THROWS_AS(parse_mono_vector("(1, 2", L), ParseError);
  CHECK_THROWS_AS(parse_mono_vector("1, q", L), ParseError);
  CHECK_THROWS_AS(parse_mono_vector("1/0", L), ParseError);

  // rendered coordinates re-parse
  const MonoVector round = parse_mono_vector(v.str(), L);
  CHECK(round == v);
}

TEST_CASE("rescaling embeds into a finer ambient") {
  const MonoGroup g = build_group(2, 1, 2);
  const long L2 = 2 * g.ambient;
  for (const auto& w : g.elements) {
    const MonoMatrix lifted = w.rescaled(L2);
    CHECK(lifted.ambient_order() == L2);
    CHECK(lifted.fixed_space_dim() == w.fixed_space_dim());
  }
  CHECK_THROWS_AS(g.elements[0].rescaled(g.ambient + 1), ConstraintError);
}
