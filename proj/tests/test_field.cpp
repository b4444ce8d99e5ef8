#include "doctest.h"

#include <random>

#include "matdecomp/error.hpp"
#include "matdecomp/field.hpp"

using namespace matdecomp;

namespace {

FieldValue random_value(const Field& f, std::mt19937_64& rng) {
  auto small = [&] { return static_cast<long>(rng() % 13) - 6; };
  switch (f.kind()) {
    case FieldKind::rational: {
      long den = static_cast<long>(rng() % 5) + 1;
      return f.from_int(small()) / f.from_int(den);
    }
    case FieldKind::prime: return f.from_int(small());
    case FieldKind::quadratic: {
      const Field& b = f.base();
      return f.from_parts(b.from_int(small()), b.from_int(small()) / b.from_int(static_cast<long>(rng() % 3) + 1));
    }
  }
  return f.zero();
}

}  // namespace

TEST_CASE("rational arithmetic") {
  const Field q = Field::rational();
  const auto half = q.parse("2/4");
  CHECK(half.to_string() == "1/2");
  CHECK(half * q.from_int(2) == q.one());
  CHECK(q.parse("-6/4").to_string() == "-3/2");
  CHECK_THROWS_AS(q.parse("-6/-4"), Error);
  CHECK_THROWS_AS(q.one() / q.zero(), Error);
  try {
    q.zero().inv();
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(11);
  CHECK(f.from_int(7) + f.from_int(8) == f.from_int(4));
  CHECK(f.from_int(-1).as_residue() == 10);
  CHECK(f.from_int(3).inv() * f.from_int(3) == f.one());
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK(f.cardinality() == 11);
  CHECK(f.elements().size() == 11);
}

TEST_CASE("descriptor mismatch") {
  try {
    (void)(Field::prime(5).one() + Field::prime(7).one());
    FAIL("expected DescriptorMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DescriptorMismatch);
  }
  CHECK_THROWS_AS((void)(Field::rational().one() * Field::prime(3).one()), Error);
}

TEST_CASE("quadratic arithmetic") {
  const Field q = Field::rational();
  const Field k = Field::quadratic(q, q.from_int(5));
  const auto a = k.parse("1+1*sqrt(5)");
  const auto b = k.parse("1+-1*sqrt(5)");
  CHECK(a * b == k.from_int(-4));
  CHECK(a * b == q.from_int(-4));  // base elements compare equal to their embeddings
  CHECK(k.name() == "Q(sqrt(5))");
  CHECK(k.characteristic() == 0);
  CHECK(a / a == k.one());
}

TEST_CASE("square roots") {
  const Field q = Field::rational();
  CHECK(*q.parse("9/4").try_sqrt() == q.parse("3/2"));
  CHECK(!q.from_int(2).try_sqrt());
  CHECK(!q.from_int(-1).try_sqrt());
  const Field f11 = Field::prime(11);
  CHECK(*f11.from_int(3).try_sqrt() == f11.from_int(5));
  // squares mod 11 by enumeration
  for (long x = 0; x < 11; ++x) {
    bool square = false;
    for (long y = 0; y < 11; ++y) square |= (y * y) % 11 == x;
    auto r = f11.from_int(x).try_sqrt();
    CHECK(r.has_value() == square);
    if (r) CHECK(*r * *r == f11.from_int(x));
  }
  const Field k = Field::quadratic(q, q.from_int(2));
  auto r = k.parse("3+2*sqrt(2)").try_sqrt();  // (1 + sqrt 2)^2
  REQUIRE(r);
  CHECK(*r * *r == k.parse("3+2*sqrt(2)"));
  CHECK(*k.from_int(2).try_sqrt() * *k.from_int(2).try_sqrt() == k.from_int(2));
}

TEST_CASE("extensions") {
  const Field q = Field::rational();
  const Field k = extend_with_sqrt(q, q.from_int(5));
  CHECK(k.kind() == FieldKind::quadratic);
  try {
    extend_with_sqrt(q, q.from_int(4));
    FAIL("expected AlreadySquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlreadySquare);
  }
  const Field f7 = Field::prime(7);
  for (long y = 0; y < 7; ++y) CHECK((y * y) % 7 != 3);
  const Field f49 = extend_with_sqrt(f7, f7.from_int(3));
  CHECK(f49.cardinality() == 49);
  CHECK(f49.elements().size() == 49);
  CHECK(f49.characteristic() == 7);
  // every element of F_49 has a root in F_49 iff it is a square; 3 now has one
  CHECK(f49.embed(f7.from_int(3)).try_sqrt().has_value());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  const Field q = Field::rational();
  const std::vector<Field> fields{q, Field::prime(7), Field::quadratic(q, q.from_int(3)),
                                  Field::quadratic(Field::prime(5), Field::prime(5).from_int(2))};
  for (const auto& f : fields)
    for (int i = 0; i < 1000 / static_cast<int>(fields.size()); ++i) {
      const auto a = random_value(f, rng), b = random_value(f, rng), c = random_value(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
      if (auto r = a.try_sqrt()) CHECK(*r * *r == a);
    }
}

TEST_CASE("embedding is a homomorphism") {
  std::mt19937_64 rng(11);
  const Field q = Field::rational();
  const Field k = Field::quadratic(q, q.from_int(7));
  for (int i = 0; i < 200; ++i) {
    const auto a = random_value(q, rng), b = random_value(q, rng);
    CHECK(k.embed(a + b) == k.embed(a) + k.embed(b));
    CHECK(k.embed(a * b) == k.embed(a) * k.embed(b));
  }
}

TEST_CASE("parse round trip") {
  const Field q = Field::rational();
  const Field k = Field::quadratic(q, q.from_int(2));
  for (const char* s : {"0", "-3", "7/5", "1+1*sqrt(2)", "-1/2+3/4*sqrt(2)"}) {
    const auto v = k.parse(s);
    CHECK(k.parse(v.to_string()) == v);
  }
  CHECK_THROWS_AS(q.parse("1/0"), Error);
  CHECK_THROWS_AS(q.parse("abc"), Error);
  CHECK_THROWS_AS(k.parse("1+1*sqrt(3)"), Error);
}
