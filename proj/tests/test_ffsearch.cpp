#include "doctest.h"

#include "matdecomp/canonical.hpp"
#include "matdecomp/error.hpp"
#include "matdecomp/ffsearch.hpp"

using namespace matdecomp;

namespace {

std::uint64_t hist_total(const SearchReport& r) {
  std::uint64_t s = 0;
  for (auto [l, c] : r.label_histogram) s += c;
  return s;
}

void check_consistent(const SearchReport& r) {
  CHECK(r.ok());
  CHECK(r.valid_decompositions == hist_total(r) + r.extension_required);
  for (auto [l, c] : r.label_histogram) CHECK(label_belongs_to(l, r.m));
  std::uint64_t ext = 0;
  for (auto [l, c] : r.extension_histogram) {
    CHECK((l == CanonLabel::B4 || l == CanonLabel::B9));
    ext += c;
  }
  CHECK(ext == r.extension_required);
}

using Hist = std::map<CanonLabel, std::uint64_t>;

}  // namespace

TEST_CASE("M6 over F_2: full scan, regression counts") {
  const auto r = search63(2);
  check_consistent(r);
  CHECK(r.candidates_scanned == 7040);
  CHECK(r.valid_decompositions == 52);
  CHECK(r.label_histogram == Hist{{CanonLabel::A1, 4}, {CanonLabel::A2, 24}, {CanonLabel::A3, 24}});
}

TEST_CASE("M6 over F_3: regression counts") {
  const auto r = search63(3);
  check_consistent(r);
  CHECK(r.valid_decompositions == 333);
  // A1 complements are v3 = e11 + k e12 + l e13: p^2 of them
  CHECK(r.label_histogram == Hist{{CanonLabel::A1, 9}, {CanonLabel::A2, 108}, {CanonLabel::A3, 216}});
}

TEST_CASE("M5a and M5b over F_3: regression counts") {
  const auto a = search54(3, StandardM::M5a);
  check_consistent(a);
  CHECK(a.valid_decompositions == 189);
  CHECK(a.extension_required == 27);
  CHECK(a.label_histogram == Hist{{CanonLabel::B1, 27}, {CanonLabel::B2, 54}, {CanonLabel::B3, 27},
                                  {CanonLabel::B4, 27}, {CanonLabel::B5, 27}});
  const auto b = search54(3, StandardM::M5b);
  check_consistent(b);
  CHECK(b.valid_decompositions == 243);
  CHECK(b.extension_required == 54);
  CHECK(b.label_histogram ==
        Hist{{CanonLabel::B6, 27}, {CanonLabel::B7, 54}, {CanonLabel::B8, 54}, {CanonLabel::B9, 54}});
}

TEST_CASE("search is deterministic and independent of thread count") {
  SearchOptions one;
  one.threads = 1;
  SearchOptions four;
  four.threads = 4;
  const auto a = search54(3, StandardM::M5b, one);
  const auto b = search54(3, StandardM::M5b, four);
  CHECK(a.candidates_scanned == b.candidates_scanned);
  CHECK(a.label_histogram == b.label_histogram);
  CHECK(a.extension_histogram == b.extension_histogram);
}

TEST_CASE("budget") {
  SearchOptions zero;
  zero.budget = 0;
  try {
    search63(2, zero);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  SearchOptions tight;
  tight.budget = 7039;
  CHECK_THROWS_AS(search63(2, tight), Error);
  tight.budget = 7040;
  CHECK(search63(2, tight).valid_decompositions == 52);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(search63(4), Error);
  CHECK_THROWS_AS(search54(2, StandardM::M5a), Error);
  CHECK_THROWS_AS(search54(5, StandardM::M6), Error);
}

TEST_CASE("sampling") {
  const auto empty = sample_search(7, StandardM::M6, 0, 1);
  CHECK(empty.candidates_scanned == 0);
  CHECK(empty.valid_decompositions == 0);

  const auto s = sample_search(3, StandardM::M5a, 20000, 1);
  check_consistent(s);
  CHECK(s.candidates_scanned == 20000);
  const auto t = sample_search(3, StandardM::M5a, 20000, 1);
  CHECK(s.label_histogram == t.label_histogram);

  const auto u = sample_search(2, StandardM::M6, 20000, 2);
  check_consistent(u);
  CHECK(u.valid_decompositions > 0);
}
