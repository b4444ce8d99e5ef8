#include "matdecomp/canonical.hpp"

#include <array>

namespace matdecomp {

namespace {

using Units = std::vector<std::vector<std::pair<int, int>>>;

// Each inner list is a sum of units e_ij (1-based).
Subalgebra span_of_units(const Field& f, const Units& gens) {
  std::vector<Mat3> mats;
  for (const auto& g : gens) {
    Mat3 x(f);
    for (auto [i, j] : g) x = x + Mat3::unit(f, i, j);
    mats.push_back(x);
  }
  return Subalgebra::make(f, mats);
}

Units catalog_s(CanonLabel l) {
  switch (l) {
    case CanonLabel::A1: return {{{1, 1}}, {{2, 1}}, {{3, 1}}};
    case CanonLabel::A2: return {{{1, 1}, {2, 2}}, {{2, 1}}, {{3, 1}}};
    case CanonLabel::A3: return {{{1, 1}, {2, 2}}, {{2, 1}, {2, 2}}, {{3, 1}}};
    case CanonLabel::B1: return {{{2, 1}}, {{3, 1}}, {{3, 2}}, {{3, 3}}};
    case CanonLabel::B2: return {{{1, 1}, {2, 1}}, {{3, 1}}, {{3, 2}}, {{3, 3}}};
    case CanonLabel::B3: return {{{2, 1}}, {{3, 1}}, {{3, 2}}, {{2, 2}, {3, 3}}};
    case CanonLabel::B4: return {{{2, 1}}, {{3, 1}}, {{3, 2}, {2, 3}}, {{2, 2}, {3, 3}}};
    case CanonLabel::B5: return {{{2, 1}}, {{3, 1}}, {{3, 2}}, {{1, 1}, {3, 3}}};
    case CanonLabel::B6: return {{{2, 1}}, {{3, 1}}, {{3, 2}}, {{2, 2}}};
    case CanonLabel::B7: return {{{2, 1}}, {{1, 1}, {3, 1}}, {{1, 2}, {3, 2}}, {{2, 2}}};
    case CanonLabel::B8: return {{{2, 1}}, {{3, 1}}, {{3, 2}}, {{2, 2}, {3, 3}}};
    case CanonLabel::B9: return {{{2, 1}}, {{3, 1}}, {{3, 2}, {2, 3}}, {{2, 2}, {3, 3}}};
  }
  fail(ErrorCode::Internal, "unknown label");
}

std::vector<std::size_t> complement_coords(StandardM m) {
  switch (m) {
    case StandardM::M6: return {coord_index(1, 0), coord_index(2, 0), coord_index(0, 0)};
    case StandardM::M5a: return {coord_index(1, 0), coord_index(2, 0), coord_index(2, 1), coord_index(2, 2)};
    case StandardM::M5b: return {coord_index(1, 0), coord_index(2, 0), coord_index(2, 1), coord_index(1, 1)};
  }
  fail(ErrorCode::Internal, "unknown M");
}

Decomposition embed(const Decomposition& d, const Field& target) {
  if (d.field() == target) return d;
  return Decomposition::validate(Subalgebra::from_space(d.S().space().embed(target)),
                                 Subalgebra::from_space(d.M().space().embed(target)), d.label_hint());
}

// Running state of a reduction: the current decomposition and the transforms so far.
class Reducer {
 public:
  Reducer(const Decomposition& d, StandardM m, const CanonOptions& opts) : cur_(d), m_(m), opts_(opts) {
    result_.field = d.field();
  }

  const Field& field() const { return cur_.field(); }
  FieldValue zero() const { return field().zero(); }
  FieldValue one() const { return field().one(); }
  FieldValue num(long n) const { return field().from_int(n); }

  NormalBasis basis() const { return normalize_basis(cur_, m_); }

  void step(const AutoSpec& a) {
    if (a.is_identity_on(field())) return;
    cur_ = apply_to_decomposition(a, cur_);
    if (a.is_antiautomorphism()) result_.used_antiauto = true;
    result_.transforms.push_back(a);
  }

  /// A square root of s, adjoining one if needed and allowed.
  FieldValue sqrt_of(const FieldValue& s) {
    if (auto r = s.try_sqrt()) return *r;
    if (!opts_.allow_extension)
      fail(ErrorCode::RequiresExtension, "sqrt(" + s.to_string() + ") is not in " + field().name());
    const Field ext = extend_with_sqrt(field(), s);
    cur_ = embed(cur_, ext);
    for (auto& t : result_.transforms) t = t.embed(ext);
    result_.field = ext;
    result_.extension_used = s;
    auto r = ext.embed(s).try_sqrt();
    ensure(r.has_value(), "adjoined square root not found");
    return *r;
  }

  CanonResult finish(CanonLabel label) {
    const Decomposition target = catalog_entry(label, field());
    if (!(cur_.S() == target.S()))
      fail(ErrorCode::Internal, "reduction to " + std::string(to_string(label)) + " ended at a different S");
    result_.label = label;
    result_.field = field();
    return std::move(result_);
  }

 private:
  Decomposition cur_;
  StandardM m_;
  CanonOptions opts_;
  CanonResult result_;
};

AutoSpec inverse_m6(FieldValue beta, FieldValue gamma, FieldValue kappa, FieldValue lambda, FieldValue mu,
                    FieldValue nu) {
  return AutoSpec::inverse(AutoSpec::family_m6({beta, gamma, kappa, lambda, mu, nu}));
}

AutoSpec inverse_u(FieldValue alpha, FieldValue beta, FieldValue gamma, FieldValue delta, FieldValue epsilon) {
  return AutoSpec::inverse(AutoSpec::family_u({alpha, beta, gamma, delta, epsilon}));
}

Mat3 diag(const Field& f, std::array<long, 3> d) {
  return Mat3::from_ints(f, {{{d[0], 0, 0}, {0, d[1], 0}, {0, 0, d[2]}}});
}

// Completing the square on p + n^2/4 and landing on the pair (plain, rooted).
CanonResult finish_square(Reducer& r, const FieldValue& n, const FieldValue& p, const FieldValue& eps,
                          CanonLabel plain, CanonLabel rooted) {
  const FieldValue s = p + n * n / r.num(4);
  if (s.is_zero()) {
    r.step(inverse_u(r.one(), r.zero(), r.zero(), r.one(), eps));
    return r.finish(plain);
  }
  const FieldValue alpha = r.sqrt_of(s);
  const Field f = r.field();
  r.step(inverse_u(alpha, f.zero(), f.zero(), f.one(), f.embed(eps)));
  return r.finish(rooted);
}

CanonResult reduce_m5a(Reducer& r) {
  const Field f0 = r.field();
  {
    const auto nb = r.basis();
    const Jordan3 jd = jordanize_idempotent_upper3(nb.v[3]);
    r.step(AutoSpec::conjugation(jd.T));
  }
  auto nb = r.basis();
  const Mat3& v4 = nb.v[3];
  if (v4 == diag(f0, {1, 1, 1})) fail(ErrorCode::UnitalContradiction, "S contains the identity");

  if (v4 == diag(f0, {0, 0, 1})) {
    const FieldValue a = nb.v[0](0, 0), d = nb.v[0](1, 1);
    ensure(nb.v[0] == Mat3::from_coords(f0, std::array<FieldValue, 9>{a, a * d, r.zero(), r.one(), d, r.zero(),
                                                                        r.zero(), r.zero(), r.zero()}),
           "case e33: unexpected v1");
    if ((a + d).is_zero()) {
      r.step(inverse_u(r.one(), d, r.zero(), r.one(), r.zero()));
      return r.finish(CanonLabel::B1);
    }
    r.step(inverse_u(r.one(), d, r.zero(), a + d, r.zero()));
    return r.finish(CanonLabel::B2);
  }

  if (v4 == diag(f0, {0, 1, 1})) {
    if (f0.characteristic() == 2) fail(ErrorCode::BadCharacteristic, "completing the square needs char != 2");
    const Mat3& v3 = nb.v[2];
    const FieldValue n = v3(1, 1), p = v3(1, 2);
    ensure(v3 == Mat3::from_coords(f0, std::array<FieldValue, 9>{r.zero(), r.zero(), r.zero(), r.zero(), n, p,
                                                                   r.zero(), r.one(), r.zero()}),
           "case e22+e33: unexpected v3");
    return finish_square(r, n, p, -n / r.num(2), CanonLabel::B3, CanonLabel::B4);
  }

  ensure(v4 == diag(f0, {1, 0, 1}), "unexpected Jordan form of v4");
  const FieldValue e = nb.v[0](1, 2);
  ensure(nb.v[2](0, 1) == -e && nb.v[1](0, 0) == -r.num(2) * e && nb.v[1](0, 2) == -(e * e),
         "case e11+e33: relations l = -e, f = -2e, h = -e^2 fail");
  r.step(inverse_u(r.one(), r.zero(), e, r.one(), r.zero()));
  return r.finish(CanonLabel::B5);
}

CanonResult reduce_m5b(Reducer& r) {
  const Field f0 = r.field();
  {
    const auto nb = r.basis();
    const Jordan3 jd = jordanize_idempotent_upper3(nb.v[3]);
    r.step(AutoSpec::conjugation(jd.T));
  }
  auto nb = r.basis();
  if (nb.v[3] == diag(f0, {1, 1, 1})) fail(ErrorCode::UnitalContradiction, "S contains the identity");

  if (nb.v[3] == diag(f0, {1, 1, 0})) {
    r.step(AutoSpec::composite({AutoSpec::transpose(), AutoSpec::theta(1, 3)}));
    nb = r.basis();
  }

  if (nb.v[3] == diag(f0, {0, 1, 0})) {
    const FieldValue d = nb.v[0](1, 2), l = nb.v[2](0, 1);
    ensure(nb.v[1] == Mat3::from_coords(f0, std::array<FieldValue, 9>{l, r.zero(), d * l, r.zero(), r.zero(),
                                                                        r.zero(), r.one(), r.zero(), d}),
           "case e22: v3 v1 = v2 fails");
    if ((d + l).is_zero()) {
      r.step(inverse_u(r.one(), r.zero(), d, r.one(), r.zero()));
      return r.finish(CanonLabel::B6);
    }
    r.step(inverse_u(d + l, r.zero(), d, r.one(), r.zero()));
    return r.finish(CanonLabel::B7);
  }

  ensure(nb.v[3] == diag(f0, {0, 1, 1}), "unexpected Jordan form of v4");
  if (f0.characteristic() == 2) fail(ErrorCode::BadCharacteristic, "completing the square needs char != 2");
  const Mat3& v3 = nb.v[2];
  const FieldValue p = v3(1, 2), n = v3(2, 2);
  ensure(v3 == Mat3::from_coords(f0, std::array<FieldValue, 9>{r.zero(), r.zero(), r.zero(), r.zero(), r.zero(), p,
                                                                 r.zero(), r.one(), n}),
         "case e22+e33: unexpected v3");
  return finish_square(r, n, p, n / r.num(2), CanonLabel::B8, CanonLabel::B9);
}

}  // namespace

Decomposition catalog_entry(CanonLabel label, const Field& f) {
  return Decomposition::validate(span_of_units(f, catalog_s(label)), standard_m(standard_m_of(label), f), label);
}

std::vector<std::pair<CanonLabel, Decomposition>> catalog(const Field& f) {
  std::vector<std::pair<CanonLabel, Decomposition>> out;
  for (auto l : kAllLabels) out.emplace_back(l, catalog_entry(l, f));
  return out;
}

NormalBasis normalize_basis(const Decomposition& d, StandardM m) {
  const Field& f = d.field();
  if (!(d.M().space() == standard_m(m, f).space()))
    fail(ErrorCode::UnsupportedM, "M is not " + std::string(to_string(m)));
  const auto cc = complement_coords(m);
  const auto& b = d.S().basis();
  if (b.size() != cc.size()) fail(ErrorCode::NotComplement, "S has the wrong dimension for this M");
  const std::size_t k = cc.size();
  DenseMatrix c(f, k, k);  // c(i, j): coordinate cc[j] of b_i
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c(i, j) = b[i].coord(cc[j]);
  if (c.rank() < k) fail(ErrorCode::NotComplement, "S does not project onto the complement coordinates");
  const DenseMatrix ci = c.inverse();
  NormalBasis nb{m, {}};
  for (std::size_t j = 0; j < k; ++j) {
    Mat3 v(f);
    for (std::size_t i = 0; i < k; ++i)
      if (!ci(j, i).is_zero()) v = v + ci(j, i) * b[i];
    nb.v.push_back(v);
  }
  const Mat3& last = nb.v.back();
  ensure(last * last == last, "normalized idempotent is not idempotent");
  return nb;
}

CanonResult canonicalize63(const Decomposition& d, const CanonOptions& opts) {
  Reducer r(d, StandardM::M6, opts);
  const Field f = d.field();
  {
    const auto nb = r.basis();
    const Mat3& v3 = nb.v[2];
    DenseMatrix h(f, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) h(i, j) = v3(i + 1, j + 1);
    if (h.is_identity()) fail(ErrorCode::UnitalContradiction, "S contains the identity");
    if (v3(1, 1).is_zero() && v3(1, 2).is_zero() && v3(2, 1).is_zero() && v3(2, 2).is_one()) {
      r.step(AutoSpec::theta(2, 3));
    } else {
      const Jordan2 jd = jordanize_idempotent2(h);
      Mat3 t = Mat3::identity(f);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.set(i + 1, j + 1, jd.T(i, j));
      r.step(AutoSpec::conjugation(t));
    }
  }

  auto nb = r.basis();
  const FieldValue k = nb.v[2](0, 1), l = nb.v[2](0, 2);
  if (nb.v[2](1, 1).is_zero()) {
    r.step(inverse_m6(k, l, r.one(), r.zero(), r.zero(), r.one()));
    return r.finish(CanonLabel::A1);
  }

  ensure(k.is_zero() && nb.v[2] == Mat3::unit(f, 1, 1) + Mat3::unit(f, 2, 2) + l * Mat3::unit(f, 1, 3),
         "case diag(1,0): unexpected v3");
  r.step(inverse_m6(r.zero(), l, r.one(), r.zero(), r.zero(), r.one()));

  nb = r.basis();
  const FieldValue x = nb.v[1](2, 1);
  ensure(nb.v[1] == Mat3::unit(f, 3, 1) + x * Mat3::unit(f, 3, 2), "case diag(1,0): unexpected v2");
  r.step(inverse_m6(x, r.zero(), r.one(), r.zero(), r.zero(), r.one()));

  nb = r.basis();
  const FieldValue a = nb.v[0](0, 1), c = nb.v[0](1, 1);
  ensure(a.is_zero(), "v2 v1 in S forces a = 0");
  ensure(nb.v[0] == Mat3::unit(f, 2, 1) + c * Mat3::unit(f, 2, 2), "case diag(1,0): unexpected v1");
  if (c.is_zero()) return r.finish(CanonLabel::A2);
  r.step(inverse_m6(r.zero(), r.zero(), c, r.zero(), r.zero(), r.one()));
  return r.finish(CanonLabel::A3);
}

CanonResult canonicalize54(const Decomposition& d, const CanonOptions& opts) {
  const auto which = identify_standard_m(d.M());
  if (which == StandardM::M5a) {
    Reducer r(d, StandardM::M5a, opts);
    return reduce_m5a(r);
  }
  if (which == StandardM::M5b) {
    Reducer r(d, StandardM::M5b, opts);
    return reduce_m5b(r);
  }
  fail(ErrorCode::UnsupportedM, "M is neither M5a nor M5b");
}

CanonResult canonicalize(const Decomposition& d, const CanonOptions& opts) {
  const auto which = identify_standard_m(d.M());
  if (!which) fail(ErrorCode::UnsupportedM, "M must be exactly M6, M5a or M5b");
  return *which == StandardM::M6 ? canonicalize63(d, opts) : canonicalize54(d, opts);
}

Decomposition replay(const CanonResult& result, const Decomposition& input) {
  Decomposition cur = embed(input, result.field);
  for (const auto& t : result.transforms) cur = apply_to_decomposition(t, cur);
  return cur;
}

Scrambled scramble(CanonLabel label, std::uint64_t seed, const Field& f) {
  AutoSpec a = random_preserving(standard_m_of(label), seed, f);
  return {apply_to_decomposition(a, catalog_entry(label, f)), a};
}

}  // namespace matdecomp
