#include "matdecomp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>

#include "matdecomp/autos.hpp"
#include "matdecomp/canonical.hpp"
#include "matdecomp/error.hpp"
#include "matdecomp/ffsearch.hpp"
#include "matdecomp/fingerprint.hpp"
#include "matdecomp/groebner.hpp"
#include "matdecomp/rota.hpp"

namespace matdecomp::acceptance {

namespace {

using Histogram = std::map<CanonLabel, std::uint64_t>;

void note(std::string& detail, const std::string& s) {
  if (!detail.empty()) detail += "; ";
  detail += s;
}

bool closed(const Subalgebra& a) {
  for (const auto& x : a.basis())
    for (const auto& y : a.basis())
      if (!a.space().contains(x * y)) return false;
  return true;
}

bool catalog_validity(std::string& detail) {
  bool ok = true;
  for (const auto& [label, d] : catalog()) {
    const auto c = check_decomposition(d.S(), d.M());
    if (!c.ok() || !closed(d.S()) || !closed(d.M())) {
      note(detail, std::string(to_string(label)) + " fails");
      ok = false;
    }
  }
  if (ok) detail = "12 entries pass closure, dimension, directness, nonunitality";
  return ok;
}

FieldValue small(const Field& q, std::mt19937_64& rng) { return q.from_int(static_cast<long>(rng() % 7) - 3); }

bool automorphism_families(std::string& detail) {
  const Field q = Field::rational();
  const auto m6 = standard_m(StandardM::M6), m5a = standard_m(StandardM::M5a), m5b = standard_m(StandardM::M5b);
  std::mt19937_64 rng(8128);
  int bad6 = 0, badu = 0;
  for (int t = 0; t < 200; ++t) {
    FamilyM6 p{small(q, rng), small(q, rng), small(q, rng), small(q, rng), small(q, rng), small(q, rng)};
    if ((p.kappa * p.nu - p.lambda * p.mu).is_zero()) {
      --t;
      continue;
    }
    const auto a = AutoSpec::family_m6(p);
    if (!is_algebra_map(a) || !preserves(a, m6)) ++bad6;
  }
  for (int t = 0; t < 200; ++t) {
    FamilyU p{small(q, rng), small(q, rng), small(q, rng), small(q, rng), small(q, rng)};
    if (p.alpha.is_zero() || p.delta.is_zero()) {
      --t;
      continue;
    }
    const auto a = AutoSpec::family_u(p);
    if (!is_algebra_map(a) || !preserves(a, m5a) || !preserves(a, m5b)) ++badu;
  }
  detail = "FamilyM6 failures " + std::to_string(bad6) + "/200, FamilyU failures " + std::to_string(badu) + "/200";
  return bad6 == 0 && badu == 0;
}

bool canonical_round_trip(std::string& detail) {
  int bad = 0, total = 0;
  for (auto label : kAllLabels) {
    for (std::uint64_t seed = 0; seed < 100; ++seed, ++total) {
      const auto sc = scramble(label, seed);
      try {
        const auto r = canonicalize(sc.decomposition);
        const auto out = replay(r, sc.decomposition);
        if (r.label != label || out.S() != catalog_entry(label, r.field).S()) ++bad;
      } catch (const Error& e) {
        ++bad;
        note(detail, std::string(to_string(label)) + " seed " + std::to_string(seed) + ": " + e.what());
      }
    }
  }
  note(detail, std::to_string(total - bad) + "/" + std::to_string(total) + " recovered");
  return bad == 0;
}

bool has_difference(const Fingerprint& a, const Fingerprint& b, const std::string& field) {
  const auto d = a.differences(b);
  return std::find(d.begin(), d.end(), field) != d.end();
}

bool orbit_separation(std::string& detail) {
  using L = CanonLabel;
  bool ok = true;
  const std::vector<std::vector<L>> groups{{L::A1, L::A2, L::A3}, {L::B1, L::B2, L::B3, L::B4, L::B5},
                                           {L::B6, L::B7, L::B8, L::B9}};
  for (const auto& g : groups)
    if (!separate_catalog(g, false).ok()) {
      note(detail, "collision in group starting " + std::string(to_string(g.front())));
      ok = false;
    }

  std::map<L, Fingerprint> fp;
  for (auto l : kAllLabels) fp.emplace(l, fingerprint(catalog_entry(l).S()));
  auto expect = [&](L a, L b, const std::string& field) {
    if (!has_difference(fp.at(a), fp.at(b), field)) {
      note(detail, std::string(to_string(a)) + "/" + std::string(to_string(b)) + " not separated by " + field);
      ok = false;
    }
  };
  expect(L::A1, L::A2, "idem_trace_set");
  expect(L::A1, L::A3, "idem_trace_set");
  expect(L::B6, L::B8, "idem_trace_set");
  expect(L::A2, L::A3, "ss_dim");
  for (auto other : {L::B6, L::B7, L::B8}) expect(L::B9, other, "ss_dim");
  expect(L::B2, L::B4, "annihilator_flags");
  expect(L::B3, L::B5, "unit_on_rad_sq");
  for (auto l : kAllLabels)
    if (fp.at(l).is_m2 != (l == L::B7)) {
      note(detail, "M2 certificate wrong for " + std::string(to_string(l)));
      ok = false;
    }
  if (ok) detail = "groups pairwise distinct; quoted separations reproduced";
  return ok;
}

bool rota_baxter(std::string& detail) {
  const Field q = Field::rational();
  int bad = 0, total = 0;
  for (const auto& [label, d] : catalog())
    for (long w : {1L, 5L}) {
      ++total;
      const auto r = rb_from_splitting(d, q.from_int(w));
      const auto c = complementary_rb(r);
      const bool good = verify_rb(r) && is_projection_type(r) && kernel_space(r) == d.M().space() &&
                        image_space(r) == d.S().space() && verify_rb(c) && is_projection_type(c) &&
                        kernel_space(c) == d.S().space() && image_space(c) == d.M().space();
      if (!good) {
        ++bad;
        note(detail, std::string(to_string(label)) + " weight " + std::to_string(w));
      }
    }
  note(detail, std::to_string(total - bad) + "/" + std::to_string(total) + " operators pass");
  return bad == 0;
}

bool fingerprint_invariance(std::string& detail) {
  int bad = 0, total = 0;
  for (auto label : kAllLabels) {
    const auto base = fingerprint(catalog_entry(label).S());
    for (std::uint64_t seed = 0; seed < 50; ++seed, ++total) {
      const auto sc = scramble(label, 1000 + seed);
      const auto moved = fingerprint(sc.decomposition.S());
      const auto expected = sc.applied.is_antiautomorphism() ? base.transposed() : base;
      if (!(moved == expected)) {
        ++bad;
        note(detail, std::string(to_string(label)) + " seed " + std::to_string(1000 + seed));
      }
    }
  }
  note(detail, std::to_string(total - bad) + "/" + std::to_string(total) + " unchanged");
  return bad == 0;
}

std::string hist(const Histogram& h) {
  std::string s;
  for (auto [l, c] : h) s += (s.empty() ? "" : " ") + std::string(to_string(l)) + "=" + std::to_string(c);
  return s.empty() ? "-" : s;
}

// Counts from the first verified full scans.
struct Pin {
  std::uint64_t scanned, valid, extension;
  Histogram labels, extended;
};

bool check_search(const SearchReport& r, const Pin& pin, const std::vector<CanonLabel>& allowed,
                  const std::vector<CanonLabel>& must_see, const std::vector<CanonLabel>& extension_targets,
                  std::string& detail) {
  bool ok = r.ok();
  const std::string tag(to_string(r.m));
  for (auto [l, c] : r.label_histogram)
    if (std::find(allowed.begin(), allowed.end(), l) == allowed.end()) ok = false;
  for (auto l : must_see)
    if (!r.label_histogram.count(l)) ok = false;
  std::uint64_t resolved = 0;
  for (auto [l, c] : r.extension_histogram) {
    if (std::find(extension_targets.begin(), extension_targets.end(), l) == extension_targets.end()) ok = false;
    resolved += c;
  }
  if (resolved != r.extension_required) ok = false;
  const bool pinned = r.candidates_scanned == pin.scanned && r.valid_decompositions == pin.valid &&
                      r.extension_required == pin.extension && r.label_histogram == pin.labels &&
                      r.extension_histogram == pin.extended;
  note(detail, tag + " p=" + std::to_string(r.field.characteristic()) + " valid " +
                   std::to_string(r.valid_decompositions) + " [" + hist(r.label_histogram) + "] ext " +
                   std::to_string(r.extension_required) + " [" + hist(r.extension_histogram) + "]" +
                   (pinned ? "" : " (regression counts differ)") + (r.ok() ? "" : " (failures)"));
  return ok && pinned;
}

bool finite_field_search(std::string& detail) {
  using L = CanonLabel;
  const auto r63 = search63(2);
  const auto r5a = search54(5, StandardM::M5a);
  const auto r5b = search54(5, StandardM::M5b);
  const Pin p63{7040, 52, 0, {{L::A1, 4}, {L::A2, 24}, {L::A3, 24}}, {}};
  const Pin p5a{17115625, 1375, 250,
                {{L::B1, 125}, {L::B2, 500}, {L::B3, 125}, {L::B4, 250}, {L::B5, 125}}, {{L::B4, 250}}};
  const Pin p5b{18678125, 1875, 500, {{L::B6, 125}, {L::B7, 500}, {L::B8, 250}, {L::B9, 500}}, {{L::B9, 500}}};
  bool ok = check_search(r63, p63, {L::A1, L::A2, L::A3}, {L::A1, L::A2, L::A3}, {}, detail);
  ok = check_search(r5a, p5a, {L::B1, L::B2, L::B3, L::B4, L::B5}, {}, {L::B4}, detail) && ok;
  ok = check_search(r5b, p5b, {L::B6, L::B7, L::B8, L::B9}, {}, {L::B9}, detail) && ok;
  return ok;
}

PolySystem random_system(const Field& f, std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 3;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  PolySystem sys(f, names);
  const std::size_t m = 1 + rng() % 3;
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  auto coeff = [&] { return f.from_int(static_cast<long>(rng() % p)); };
  for (std::size_t e = 0; e < m; ++e) {
    Polynomial poly = sys.constant(coeff());
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 2) poly = poly + coeff() * sys.var(i);
      for (std::size_t j = i; j < n; ++j)
        if (rng() % 3 == 0) poly = poly + coeff() * (sys.var(i) * sys.var(j));
    }
    sys.add(poly);
  }
  return sys;
}

bool has_point(const PolySystem& sys) {
  const auto elems = sys.field().elements();
  const std::size_t n = sys.nvars();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<FieldValue> pt;
    for (auto i : idx) pt.push_back(elems[i]);
    bool all = true;
    for (const auto& eq : sys.equations()) all = all && eq.evaluate(pt).is_zero();
    if (all) return true;
    std::size_t k = 0;
    while (k < n && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == n) return false;
  }
}

bool solver_oracle(std::string& detail) {
  std::mt19937_64 rng(31337);
  int bad = 0, total = 0, sat = 0;
  for (long p : {5L, 7L}) {
    const Field f = Field::prime(p);
    for (int t = 0; t < 100; ++t, ++total) {
      PolySystem sys = random_system(f, rng);
      const bool brute = has_point(sys);
      sys.add_field_equations();
      if (is_consistent(sys) != brute) ++bad;
      sat += brute;
    }
  }
  detail = std::to_string(total - bad) + "/" + std::to_string(total) + " agree (" + std::to_string(sat) +
           " solvable)";
  return bad == 0;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "catalog validity", 1.0, catalog_validity},
      {2, "automorphism families", 30.0, automorphism_families},
      {3, "canonicalization round-trip", 120.0, canonical_round_trip},
      {4, "orbit separation", 60.0, orbit_separation},
      {5, "Rota-Baxter operators", 30.0, rota_baxter},
      {6, "fingerprint invariance", 120.0, fingerprint_invariance},
      {7, "finite-field completeness", 300.0, finite_field_search},
      {8, "solver oracle equivalence", 60.0, solver_oracle},
  };
  return all;
}

CriterionResult run(const Criterion& c) {
  CriterionResult r{c.id, c.name, false, 0, c.limit_seconds, {}};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.correct = c.check(r.detail);
  } catch (const std::exception& e) {
    r.correct = false;
    note(r.detail, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool run_all(std::ostream& out, const std::vector<int>& only) {
  bool all = true;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto r = run(c);
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", r.seconds, r.limit_seconds);
    out << (r.passed() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << timing << "): " << r.detail
        << std::endl;
    all = all && r.passed();
  }
  return all;
}

}  // namespace matdecomp::acceptance
