#include "doctest.h"

#include <random>

#include "matdecomp/error.hpp"
#include "matdecomp/linalg.hpp"

using namespace matdecomp;

namespace {

const Field Q = Field::rational();

Mat3 u(int i, int j) { return Mat3::unit(Q, i, j); }

DenseMatrix d2(long a, long b, long c, long d) {
  DenseMatrix m(Q, 2, 2);
  m(0, 0) = Q.from_int(a);
  m(0, 1) = Q.from_int(b);
  m(1, 0) = Q.from_int(c);
  m(1, 1) = Q.from_int(d);
  return m;
}

Mat3 random_mat(std::mt19937_64& rng) {
  std::array<std::array<long, 3>, 3> r{};
  for (auto& row : r)
    for (auto& x : row) x = static_cast<long>(rng() % 7) - 3;
  return Mat3::from_ints(Q, r);
}

}  // namespace

TEST_CASE("matrix operations") {
  CHECK(u(1, 2) * u(2, 1) == u(1, 1));
  CHECK(u(1, 2) * u(1, 2) == Mat3(Q));
  CHECK((u(1, 1) + u(2, 2)).rank() == 2);
  CHECK((u(2, 2) + u(3, 3)).trace() == Q.from_int(2));
  CHECK(u(1, 2).transpose() == u(2, 1));
  CHECK(Mat3::identity(Q).det() == Q.one());
  const Mat3 a = Mat3::from_ints(Q, {{{2, 1, 0}, {0, 1, 4}, {1, 0, 1}}});
  CHECK(a * a.inverse() == Mat3::identity(Q));
  CHECK(coord_index(1, 0) == 3);  // e21 is the fourth coordinate
  CHECK_THROWS_AS((void)(u(1, 1) * Mat3::unit(Field::prime(3), 1, 1)), Error);
}

TEST_CASE("span") {
  CHECK(Subspace::span(std::vector<Mat3>{u(1, 1), Q.from_int(2) * u(1, 1)}).dim() == 1);
  const auto s = Subspace::span(std::vector<Mat3>{u(1, 1) + u(2, 2), u(2, 2)});
  CHECK(s.dim() == 2);
  CHECK(s.contains(u(1, 1)));
  CHECK(!s.contains(u(1, 2)));
  const auto m6 = Subspace::span(std::vector<Mat3>{u(1, 2), u(1, 3), u(2, 2), u(2, 3), u(3, 2), u(3, 3)});
  CHECK(m6.dim() == 6);
  // canonical basis: leading coordinate 1, absent from the others
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      CHECK(s.basis()[j].coord(s.pivots()[i]) == (i == j ? Q.one() : Q.zero()));
  CHECK(Subspace::span(s.basis()) == s);
}

TEST_CASE("intersection") {
  const auto a1 = Subspace::span(std::vector<Mat3>{u(1, 1), u(2, 1), u(3, 1)});
  const auto m6 = Subspace::span(std::vector<Mat3>{u(1, 2), u(1, 3), u(2, 2), u(2, 3), u(3, 2), u(3, 3)});
  CHECK(intersect(a1, m6).dim() == 0);
  CHECK(intersect(a1, a1) == a1);
  const auto x = Subspace::span(std::vector<Mat3>{u(1, 1) + u(2, 2), u(1, 2)});
  const auto y = Subspace::span(std::vector<Mat3>{u(2, 2), u(1, 2)});
  CHECK(intersect(x, y) == Subspace::span(std::vector<Mat3>{u(1, 2)}));
}

TEST_CASE("dimension formula on random subspaces") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Mat3> a, b;
    const int na = 1 + static_cast<int>(rng() % 6), nb = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < na; ++i) a.push_back(random_mat(rng));
    for (int i = 0; i < nb; ++i) b.push_back(random_mat(rng));
    // force some overlap
    if (t % 2 == 0) b.push_back(a[0] + a.back());
    const auto u1 = Subspace::span(a), u2 = Subspace::span(b);
    CHECK(u1.dim() + u2.dim() == sum(u1, u2).dim() + intersect(u1, u2).dim());
    const auto inter = intersect(u1, u2);
    CHECK(u1.contains(inter));
    CHECK(u2.contains(inter));
  }
}

TEST_CASE("kernel and inverse") {
  const auto h = d2(1, 1, 0, 0);
  const auto k = h.kernel();
  REQUIRE(k.size() == 1);
  CHECK(h.apply(k[0]) == std::vector<FieldValue>{Q.zero(), Q.zero()});
  CHECK_THROWS_AS(h.inverse(), Error);
  CHECK((d2(2, 1, 1, 1) * d2(2, 1, 1, 1).inverse()).is_identity());
}

TEST_CASE("jordanize 2x2 idempotents") {
  auto j0 = jordanize_idempotent2(d2(0, 0, 0, 0));
  CHECK(j0.T.is_identity());
  CHECK(j0.J == d2(0, 0, 0, 0));
  auto j1 = jordanize_idempotent2(d2(1, 1, 0, 0));
  CHECK(j1.T == d2(1, -1, 0, 1));
  CHECK(j1.J == d2(1, 0, 0, 0));
  CHECK(j1.T.inverse() * d2(1, 1, 0, 0) * j1.T == j1.J);
  auto j2 = jordanize_idempotent2(d2(1, 0, 0, 1));
  CHECK(j2.T.is_identity());
  CHECK(j2.J.is_identity());
  // diag(0,1) is never produced
  CHECK(jordanize_idempotent2(d2(0, 0, 0, 1)).J == d2(1, 0, 0, 0));
  CHECK_THROWS_AS(jordanize_idempotent2(d2(1, 1, 1, 1)), Error);
}

TEST_CASE("random 2x2 idempotents") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    DenseMatrix p(Q, 2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p(i, j) = Q.from_int(static_cast<long>(rng() % 9) - 4);
    } while (p.rank() < 2);
    const long a = static_cast<long>(rng() % 2), b = static_cast<long>(rng() % 2);
    const auto h = p * d2(a, 0, 0, b) * p.inverse();
    const auto j = jordanize_idempotent2(h);
    CHECK(j.J * j.J == j.J);
    CHECK(j.J(0, 0) + j.J(1, 1) == Q.from_int(a + b));
    CHECK(j.T.inverse() * h * j.T == j.J);
  }
}

TEST_CASE("jordanize upper-triangular idempotents") {
  const auto e = jordanize_idempotent_upper3(u(2, 2) + u(3, 3));
  CHECK(e.T == Mat3::identity(Q));
  CHECK(e.J == u(2, 2) + u(3, 3));
  const Mat3 v = Mat3::from_ints(Q, {{{0, 0, 0}, {0, 1, 5}, {0, 0, 0}}});
  const auto j = jordanize_idempotent_upper3(v);
  CHECK(j.J == u(2, 2));
  CHECK(j.T(1, 2) == Q.from_int(-5));
  CHECK(j.T.inverse() * v * j.T == j.J);
  CHECK(j.T.is_upper_triangular());
  const auto id = jordanize_idempotent_upper3(Mat3::identity(Q));
  CHECK(id.T == Mat3::identity(Q));
  CHECK_THROWS_AS(jordanize_idempotent_upper3(u(2, 1)), Error);
  CHECK_THROWS_AS(jordanize_idempotent_upper3(Q.from_int(2) * u(1, 1)), Error);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    // upper-triangular idempotents: conjugate a 0/1 diagonal by a random unipotent upper matrix
    Mat3 n = Mat3::identity(Q);
    n.set(0, 1, Q.from_int(static_cast<long>(rng() % 7) - 3));
    n.set(0, 2, Q.from_int(static_cast<long>(rng() % 7) - 3));
    n.set(1, 2, Q.from_int(static_cast<long>(rng() % 7) - 3));
    Mat3 dg(Q);
    for (int i = 0; i < 3; ++i) dg.set(i, i, Q.from_int(static_cast<long>(rng() % 2)));
    const Mat3 w = n * dg * n.inverse();
    const auto r = jordanize_idempotent_upper3(w);
    CHECK(r.J == dg);
    CHECK(r.T.inverse() * w * r.T == r.J);
  }
}
