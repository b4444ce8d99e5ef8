#include "doctest.h"

#include "matdecomp/canonical.hpp"
#include "matdecomp/error.hpp"
#include "matdecomp/rota.hpp"

using namespace matdecomp;

namespace {

const Field Q = Field::rational();

Mat3 u(int i, int j) { return Mat3::unit(Q, i, j); }

Decomposition swapped(const Decomposition& d) { return Decomposition::validate(d.M(), d.S()); }

}  // namespace

TEST_CASE("splitting operator on A1") {
  const auto r = rb_from_splitting(catalog_entry(CanonLabel::A1), Q.one());
  CHECK(r(u(1, 1)) == -u(1, 1));
  CHECK(r(u(1, 2)).is_zero());
  CHECK(r(u(1, 1) + u(1, 2)) == -u(1, 1));
  CHECK(r.source == CanonLabel::A1);
}

TEST_CASE("splitting operator on B4") {
  const auto r = rb_from_splitting(catalog_entry(CanonLabel::B4), Q.one());
  CHECK(r(u(2, 3)).is_zero());
  CHECK(r(u(3, 2)) == -(u(3, 2) + u(2, 3)));
}

TEST_CASE("zero weight is rejected") {
  try {
    rb_from_splitting(catalog_entry(CanonLabel::A1), Q.zero());
    FAIL("expected ZeroWeight");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroWeight);
  }
}

TEST_CASE("identity convention is pinned") {
  RBOperator zero{DenseMatrix(Q, 9, 9), Q.one(), std::nullopt};
  CHECK(verify_rb(zero));
  RBOperator id{DenseMatrix::identity(Q, 9), Q.one(), std::nullopt};
  CHECK(!verify_rb(id));
  // (e11, e11): lhs e11, rhs R(3 e11) = 3 e11
  CHECK(id(u(1, 1)) * id(u(1, 1)) != id(id(u(1, 1)) * u(1, 1) + u(1, 1) * id(u(1, 1)) + u(1, 1) * u(1, 1)));
  // the opposite sign convention R(s + m) = +lambda s fails the identity
  auto flipped = rb_from_splitting(catalog_entry(CanonLabel::A2), Q.one());
  flipped.matrix = (-Q.one()) * flipped.matrix;
  CHECK(!verify_rb(flipped));
}

TEST_CASE("all catalog splittings are Rota-Baxter operators") {
  for (long w : {1L, 5L})
    for (const auto& [label, d] : catalog()) {
      CAPTURE(label);
      CAPTURE(w);
      const auto r = rb_from_splitting(d, Q.from_int(w));
      CHECK(verify_rb(r));
      CHECK(is_projection_type(r));
      CHECK(kernel_space(r) == d.M().space());
      CHECK(image_space(r) == d.S().space());
      const auto rc = complementary_rb(r);
      CHECK(verify_rb(rc));
      CHECK(is_projection_type(rc));
      CHECK(rc.matrix == rb_from_splitting(swapped(d), Q.from_int(w)).matrix);
      CHECK(complementary_rb(rc).matrix == r.matrix);
    }
}

TEST_CASE("complement on A1") {
  const auto rc = complementary_rb(rb_from_splitting(catalog_entry(CanonLabel::A1), Q.one()));
  CHECK(rc(u(1, 2)) == -u(1, 2));
  CHECK(rc(u(1, 1)).is_zero());
}

TEST_CASE("operators over F_5") {
  const Field f = Field::prime(5);
  for (const auto& [label, d] : catalog(f)) {
    const auto r = rb_from_splitting(d, f.from_int(3));
    CHECK(verify_rb(r));
  }
}

TEST_CASE("conjugated splitting") {
  for (auto label : kAllLabels)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto sc = scramble(label, seed);
      const auto phi = sc.applied.linear_map(Q);
      const auto r = rb_from_splitting(catalog_entry(label), Q.one());
      const auto rs = rb_from_splitting(sc.decomposition, Q.one());
      CHECK(rs.matrix == phi * r.matrix * phi.inverse());
    }
}
