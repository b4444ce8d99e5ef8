#include "doctest.h"

#include <random>

#include "matdecomp/autos.hpp"
#include "matdecomp/canonical.hpp"
#include "matdecomp/error.hpp"

using namespace matdecomp;

namespace {

const Field Q = Field::rational();

Mat3 u(int i, int j) { return Mat3::unit(Q, i, j); }

FieldValue small(std::mt19937_64& rng) { return Q.from_int(static_cast<long>(rng() % 7) - 3); }

FamilyM6 random_m6(std::mt19937_64& rng) {
  while (true) {
    FamilyM6 p{small(rng), small(rng), small(rng), small(rng), small(rng), small(rng)};
    if (!(p.kappa * p.nu - p.lambda * p.mu).is_zero()) return p;
  }
}

FamilyU random_u(std::mt19937_64& rng) {
  while (true) {
    FamilyU p{small(rng), small(rng), small(rng), small(rng), small(rng)};
    if (!p.alpha.is_zero() && !p.delta.is_zero()) return p;
  }
}

// Independent oracle: the families are conjugations X -> Q^-1 X Q.
Mat3 conjugator_m6(const FamilyM6& p) {
  Mat3 t = Mat3::identity(Q);
  t.set(0, 1, p.beta);
  t.set(0, 2, p.gamma);
  t.set(1, 1, p.kappa);
  t.set(1, 2, p.lambda);
  t.set(2, 1, p.mu);
  t.set(2, 2, p.nu);
  return t;
}

Mat3 conjugator_u(const FamilyU& p) {
  Mat3 t = Mat3::identity(Q);
  t.set(0, 1, p.beta);
  t.set(0, 2, p.gamma);
  t.set(1, 1, p.delta);
  t.set(1, 2, p.epsilon);
  t.set(2, 2, p.alpha);
  return t;
}

}  // namespace

TEST_CASE("identity members") {
  const auto id6 = AutoSpec::family_m6({Q.zero(), Q.zero(), Q.one(), Q.zero(), Q.zero(), Q.one()});
  const auto idu = AutoSpec::family_u({Q.one(), Q.zero(), Q.zero(), Q.one(), Q.zero()});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(id6.apply(u(i, j)) == u(i, j));
      CHECK(idu.apply(u(i, j)) == u(i, j));
    }
  CHECK(id6.is_identity_on(Q));
  CHECK(AutoSpec::identity().is_identity_on(Q));
}

TEST_CASE("FamilyM6 shear maps e11 to v3") {
  const auto k = Q.from_int(2), l = Q.from_int(-3);
  const auto a = AutoSpec::family_m6({k, l, Q.one(), Q.zero(), Q.zero(), Q.one()});
  CHECK(a.apply(u(1, 1)) == u(1, 1) + k * u(1, 2) + l * u(1, 3));
}

TEST_CASE("family tables match the conjugation oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_m6(rng);
    const auto q = random_u(rng);
    const auto c6 = AutoSpec::conjugation(conjugator_m6(p));
    const auto cu = AutoSpec::conjugation(conjugator_u(q));
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        CHECK(family_m6_image(p, i, j) == c6.apply(u(i, j)));
        CHECK(family_u_image(q, i, j) == cu.apply(u(i, j)));
      }
  }
}

TEST_CASE("degenerate parameters are rejected") {
  try {
    AutoSpec::family_m6({Q.zero(), Q.zero(), Q.one(), Q.one(), Q.one(), Q.one()});
    FAIL("expected DegenerateFamily");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFamily);
  }
  CHECK_THROWS_AS(AutoSpec::family_u({Q.zero(), Q.zero(), Q.zero(), Q.one(), Q.zero()}), Error);
  CHECK_THROWS_AS(AutoSpec::family_u({Q.one(), Q.zero(), Q.zero(), Q.zero(), Q.zero()}), Error);
  try {
    AutoSpec::conjugation(u(1, 1));
    FAIL("expected SingularConjugator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularConjugator);
  }
}

TEST_CASE("random family members are M-preserving automorphisms") {
  std::mt19937_64 rng(23);
  const auto m6 = standard_m(StandardM::M6), m5a = standard_m(StandardM::M5a), m5b = standard_m(StandardM::M5b);
  for (int t = 0; t < 200; ++t) {
    const auto a = AutoSpec::family_m6(random_m6(rng));
    CHECK(is_algebra_map(a));
    CHECK(preserves(a, m6));
    CHECK(a.linear_map(Q).rank() == 9);
    CHECK((a.linear_map(Q) * AutoSpec::inverse(a).linear_map(Q)).is_identity());
    const auto b = AutoSpec::family_u(random_u(rng));
    CHECK(is_algebra_map(b));
    CHECK(preserves(b, m5a));
    CHECK(preserves(b, m5b));
  }
}

TEST_CASE("conjugations, transpose, swaps") {
  const auto c = AutoSpec::conjugation(u(1, 1) + u(2, 2) + Q.from_int(2) * u(3, 3));
  CHECK(is_algebra_map(c));
  const auto t = AutoSpec::transpose();
  CHECK(t.is_antiautomorphism());
  CHECK(is_algebra_map(t));
  CHECK(AutoSpec::composite({t, t}).is_identity_on(Q));
  CHECK(!AutoSpec::composite({t, t}).is_antiautomorphism());
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) CHECK(t.apply(u(i, j) * u(k, l)) == t.apply(u(k, l)) * t.apply(u(i, j)));
  // Theta12 is conjugation by e12 + e21 + e33
  const auto th12 = AutoSpec::theta(1, 2);
  const auto by = AutoSpec::conjugation(u(1, 2) + u(2, 1) + u(3, 3));
  CHECK(th12.linear_map(Q) == by.linear_map(Q));
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    const auto th = AutoSpec::theta(i, j);
    CHECK(AutoSpec::composite({th, th}).is_identity_on(Q));
    CHECK(is_algebra_map(th));
  }
  CHECK(preserves(AutoSpec::theta(2, 3), standard_m(StandardM::M6)));
}

TEST_CASE("decompositions under transforms") {
  const auto a1 = catalog_entry(CanonLabel::A1);
  const auto tr = apply_to_decomposition(AutoSpec::transpose(), a1);
  CHECK(tr.S().space() == Subspace::span(std::vector<Mat3>{u(1, 1), u(1, 2), u(1, 3)}));
  const auto sw = apply_to_decomposition(AutoSpec::theta(2, 3), catalog_entry(CanonLabel::A2));
  CHECK(sw.S().space() == Subspace::span(std::vector<Mat3>{u(1, 1) + u(3, 3), u(3, 1), u(2, 1)}));
  CHECK(sw.M() == standard_m(StandardM::M6));
  const auto id = AutoSpec::family_m6({Q.zero(), Q.zero(), Q.one(), Q.zero(), Q.zero(), Q.one()});
  CHECK(apply_to_decomposition(id, a1) == a1);
}

TEST_CASE("random_preserving") {
  const auto a = random_preserving(StandardM::M6, 1);
  CHECK(preserves(a, standard_m(StandardM::M6)));
  const auto b = random_preserving(StandardM::M5a, 7);
  CHECK(is_algebra_map(b));
  CHECK(random_preserving(StandardM::M5b, 3).linear_map(Q) == random_preserving(StandardM::M5b, 3).linear_map(Q));
  const Field f5 = Field::prime(5);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto c = random_preserving(StandardM::M5b, s, f5);
    CHECK(preserves(c, standard_m(StandardM::M5b, f5)));
    CHECK(is_algebra_map(c, f5));
  }
}

TEST_CASE("embedding into an extension") {
  const Field k = Field::quadratic(Q, Q.from_int(2));
  const auto a = random_preserving(StandardM::M6, 4);
  const auto e = a.embed(k);
  CHECK(e.apply(Mat3::unit(k, 1, 1)) == a.apply(u(1, 1)).embed(k));
}
