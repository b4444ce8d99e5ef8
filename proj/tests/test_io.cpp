#include "doctest.h"

#include "matdecomp/error.hpp"
#include "matdecomp/io.hpp"

using namespace matdecomp;
using io::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("field descriptors round-trip") {
  const Field q = Field::rational();
  const Field f7 = Field::prime(7);
  for (const Field& f : {q, f7, Field::quadratic(q, q.from_int(2)), Field::quadratic(f7, f7.from_int(3))})
    CHECK(io::field_from_json(io::to_json(f)) == f);
  CHECK(code_of([] { io::field_from_json(json{{"kind", "rational"}, {"p", 3}}); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::field_from_json(json{{"kind", "complex"}}); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::field_from_json(json{{"kind", "prime"}, {"p", 6}}); }) == ErrorCode::InvalidField);
}

TEST_CASE("decompositions round-trip through JSON text") {
  for (auto l : kAllLabels)
    for (std::uint64_t seed : {0u, 7u}) {
      const auto d = scramble(l, seed).decomposition;
      const auto back = io::decomposition_from_json(json::parse(io::to_json(d).dump()));
      CHECK(back == d);
    }
  const auto f5 = scramble(CanonLabel::B4, 2, Field::prime(5)).decomposition;
  CHECK(io::decomposition_from_json(io::to_json(f5)) == f5);

  const auto b4 = catalog_entry(CanonLabel::B4);
  const json j = io::to_json(b4);
  CHECK(j["M"] == "M5a");
  CHECK(j["label"] == "B4");
  CHECK(io::decomposition_from_json(j).label_hint() == CanonLabel::B4);
}

TEST_CASE("decoder rejects malformed input") {
  json j = io::to_json(catalog_entry(CanonLabel::A1));
  json extra = j;
  extra["note"] = 1;
  CHECK(code_of([&] { io::decomposition_from_json(extra); }) == ErrorCode::Parse);
  json bad_schema = j;
  bad_schema["schema"] = "matdecomp/0";
  CHECK(code_of([&] { io::decomposition_from_json(bad_schema); }) == ErrorCode::Parse);
  json short_row = j;
  short_row["S"][0][0] = json::array({"1", "0"});
  CHECK(code_of([&] { io::decomposition_from_json(short_row); }) == ErrorCode::Parse);
  json bad_m = j;
  bad_m["M"] = "M7";
  CHECK(code_of([&] { io::decomposition_from_json(bad_m); }) == ErrorCode::Parse);
  json bad_scalar = j;
  bad_scalar["S"][0][0][0] = "x";
  CHECK(code_of([&] { io::decomposition_from_json(bad_scalar); }) == ErrorCode::Parse);
  json missing = j;
  missing.erase("S");
  CHECK(code_of([&] { io::decomposition_from_json(missing); }) == ErrorCode::Parse);
}

TEST_CASE("validation errors propagate with their codes") {
  const Field q = Field::rational();
  json j = io::to_json(catalog_entry(CanonLabel::A1));
  j["S"][0] = io::to_json(Mat3::identity(q));
  CHECK(code_of([&] { io::decomposition_from_json(j); }) == ErrorCode::UnitalS);
  auto [s, m] = io::halves_from_json(j);
  CHECK(check_decomposition(s, m).failures() == std::vector<std::string>{"UnitalS"});
}

TEST_CASE("transforms round-trip") {
  const Field q = Field::rational();
  for (auto which : {StandardM::M6, StandardM::M5a, StandardM::M5b})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const AutoSpec a = random_preserving(which, seed);
      const AutoSpec back = io::autospec_from_json(q, json::parse(io::to_json(a).dump()));
      CHECK(back.linear_map(q) == a.linear_map(q));
      CHECK(back.is_antiautomorphism() == a.is_antiautomorphism());
    }
  const AutoSpec tau = AutoSpec::composite({AutoSpec::transpose(), AutoSpec::theta(1, 3)});
  const AutoSpec inv = AutoSpec::inverse(tau);
  CHECK(io::autospec_from_json(q, io::to_json(inv)).linear_map(q) == inv.linear_map(q));
  CHECK(code_of([&] { io::autospec_from_json(q, json{{"type", "rotate"}}); }) == ErrorCode::Parse);
  CHECK(code_of([&] { io::autospec_from_json(q, json{{"type", "transpose"}, {"x", 1}}); }) == ErrorCode::Parse);
}

TEST_CASE("canonical results replay after a JSON round trip") {
  for (auto l : kAllLabels) {
    const auto sc = scramble(l, 11);
    const CanonResult r = canonicalize(sc.decomposition);
    const json j = json::parse(io::to_json(r).dump());
    CHECK(j["label"] == std::string(to_string(l)));
    const Field f = io::field_from_json(j["field"]);
    CHECK(f == r.field);
    std::vector<AutoSpec> ts;
    for (const auto& t : j["transforms"]) ts.push_back(io::autospec_from_json(f, t));
    CanonResult again{r.label, ts, r.extension_used, r.used_antiauto, f};
    CHECK(replay(again, sc.decomposition).S() == catalog_entry(l, f).S());
  }
}

TEST_CASE("report encodings") {
  const json fp = io::to_json(fingerprint(catalog_entry(CanonLabel::B7).S()));
  CHECK(fp["is_m2"] == true);
  CHECK(fp["idem_trace_set"].is_array());
  const json fp5 = io::to_json(fingerprint(catalog_entry(CanonLabel::B7, Field::prime(5)).S()));
  CHECK(fp5["idem_trace_set"].is_null());

  const json sep = io::to_json(separate_catalog());
  CHECK(sep["ok"] == true);
  CHECK(sep["pairs"].size() == 19);

  const Field q = Field::rational();
  const json rb = io::to_json(rb_from_splitting(catalog_entry(CanonLabel::A1), q.from_int(5)));
  CHECK(rb["matrix"].size() == 9);
  CHECK(rb["source"] == "A1");
  CHECK(rb["weight"] == "5");

  const json sr = io::to_json(search63(2));
  CHECK(sr["label_histogram"]["A2"] == 24);
  CHECK(sr["M"] == "M6");
}
