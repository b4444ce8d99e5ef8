#include "matdecomp/autos.hpp"

#include <random>
#include <sstream>

namespace matdecomp {

namespace {

Mat3 rows(const Field& f, std::array<FieldValue, 9> e) {
  return Mat3::from_coords(f, e);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

FamilyM6 embed_params(const FamilyM6& p, const Field& f) {
  return {f.embed(p.beta), f.embed(p.gamma), f.embed(p.kappa), f.embed(p.lambda), f.embed(p.mu), f.embed(p.nu)};
}

FamilyU embed_params(const FamilyU& p, const Field& f) {
  return {f.embed(p.alpha), f.embed(p.beta), f.embed(p.gamma), f.embed(p.delta), f.embed(p.epsilon)};
}

Mat3 permutation(const Field& f, int i, int j) {
  Mat3 t = Mat3::identity(f);
  t.set(i - 1, i - 1, f.zero());
  t.set(j - 1, j - 1, f.zero());
  t.set(i - 1, j - 1, f.one());
  t.set(j - 1, i - 1, f.one());
  return t;
}

FieldValue random_element(const Field& f, std::mt19937_64& rng) {
  switch (f.kind()) {
    case FieldKind::rational:
      return f.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
    case FieldKind::prime:
      return f.from_int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.characteristic())));
    case FieldKind::quadratic: {
      FieldValue a = random_element(f.base(), rng);
      FieldValue b = random_element(f.base(), rng);
      return f.from_parts(a, b);
    }
  }
  return f.zero();
}

}  // namespace

Mat3 family_m6_image(const FamilyM6& p, int i, int j) {
  const Field& f = p.beta.field();
  const FieldValue z = f.zero(), o = f.one();
  const auto &b = p.beta, &g = p.gamma, &k = p.kappa, &l = p.lambda, &m = p.mu, &n = p.nu;
  const FieldValue delta = k * n - l * m;
  if (delta.is_zero()) fail(ErrorCode::DegenerateFamily, "Delta = kappa*nu - lambda*mu vanishes");
  const FieldValue di = delta.inv();
  const FieldValue u = g * m - b * n;  // gamma mu - beta nu
  const FieldValue w = b * l - g * k;  // beta lambda - gamma kappa
  const int code = i * 10 + j;
  switch (code) {
    case 11: return rows(f, {o, b, g, z, z, z, z, z, z});
    case 12: return rows(f, {z, k, l, z, z, z, z, z, z});
    case 13: return rows(f, {z, m, n, z, z, z, z, z, z});
    case 22: return di * rows(f, {z, k * u, l * u, z, k * n, l * n, z, -(k * m), -(l * m)});
    case 23: return di * rows(f, {z, m * u, n * u, z, m * n, n * n, z, -(m * m), -(m * n)});
    case 32: return di * rows(f, {z, k * w, l * w, z, -(k * l), -(l * l), z, k * k, k * l});
    case 33: return di * rows(f, {z, m * w, n * w, z, -(l * m), -(l * n), z, k * m, k * n});
    case 21: return di * rows(f, {u, b * u, g * u, n, b * n, g * n, -m, -(b * m), -(g * m)});
    case 31: return di * rows(f, {w, b * w, g * w, -l, -(b * l), -(g * l), k, b * k, g * k});
    default: break;
  }
  fail(ErrorCode::Internal, "bad matrix unit");
}

Mat3 family_u_image(const FamilyU& p, int i, int j) {
  const Field& f = p.alpha.field();
  const FieldValue z = f.zero(), o = f.one();
  const auto &a = p.alpha, &b = p.beta, &g = p.gamma, &d = p.delta, &e = p.epsilon;
  if (a.is_zero() || d.is_zero()) fail(ErrorCode::DegenerateFamily, "alpha and delta must be nonzero");
  const FieldValue di = d.inv();
  const FieldValue w = b * e - g * d;  // beta epsilon - gamma delta
  const int code = i * 10 + j;
  switch (code) {
    case 11: return rows(f, {o, b, g, z, z, z, z, z, z});
    case 12: return rows(f, {z, d, e, z, z, z, z, z, z});
    case 13: return rows(f, {z, z, a, z, z, z, z, z, z});
    case 21: return di * rows(f, {-b, -(b * b), -(b * g), o, b, g, z, z, z});
    case 22: return rows(f, {z, -b, -(b * e) * di, z, o, e * di, z, z, z});
    case 23: return di * rows(f, {z, z, -(a * b), z, z, a, z, z, z});
    case 31: return (a * d).inv() * rows(f, {w, b * w, g * w, -e, -(b * e), -(g * e), d, b * d, g * d});
    case 32: return a.inv() * rows(f, {z, w, e * w * di, z, -e, -(e * e) * di, z, d, e});
    case 33: return rows(f, {z, z, b * e * di - g, z, z, -e * di, z, z, o});
    default: break;
  }
  fail(ErrorCode::Internal, "bad matrix unit");
}

// ---------------------------------------------------------------------------

AutoSpec AutoSpec::conjugation(Mat3 t) {
  if (t.det().is_zero()) fail(ErrorCode::SingularConjugator, t.to_string());
  return AutoSpec(Conjugation{std::move(t)});
}

AutoSpec AutoSpec::transpose() { return AutoSpec(Transpose{}); }

AutoSpec AutoSpec::theta(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 3 || i == j) fail(ErrorCode::Parse, "Theta indices must be distinct values in 1..3");
  return AutoSpec(ThetaSwap{i, j});
}

AutoSpec AutoSpec::family_m6(FamilyM6 p) {
  const Field f = p.beta.field();
  p = embed_params(p, f);
  if ((p.kappa * p.nu - p.lambda * p.mu).is_zero())
    fail(ErrorCode::DegenerateFamily, "Delta = kappa*nu - lambda*mu vanishes");
  return AutoSpec(std::move(p));
}

AutoSpec AutoSpec::family_u(FamilyU p) {
  const Field f = p.alpha.field();
  p = embed_params(p, f);
  if (p.alpha.is_zero() || p.delta.is_zero()) fail(ErrorCode::DegenerateFamily, "alpha and delta must be nonzero");
  return AutoSpec(std::move(p));
}

AutoSpec AutoSpec::inverse(AutoSpec a) { return AutoSpec(Inverse{std::make_shared<const AutoSpec>(std::move(a))}); }

AutoSpec AutoSpec::composite(std::vector<AutoSpec> parts) { return AutoSpec(Composite{std::move(parts)}); }

AutoSpec AutoSpec::identity() { return composite({}); }

bool AutoSpec::is_antiautomorphism() const {
  return std::visit(overloaded{
                        [](const Transpose&) { return true; },
                        [](const Inverse& inv) { return inv.of->is_antiautomorphism(); },
                        [](const Composite& c) {
                          bool anti = false;
                          for (const auto& p : c.parts) anti ^= p.is_antiautomorphism();
                          return anti;
                        },
                        [](const auto&) { return false; },
                    },
                    v_);
}

Mat3 AutoSpec::apply(const Mat3& x) const {
  const Field& f = x.field();
  return std::visit(overloaded{
                        [&](const Conjugation& c) {
                          Mat3 t = c.T.embed(f);
                          return t.inverse() * x * t;
                        },
                        [&](const Transpose&) { return x.transpose(); },
                        [&](const ThetaSwap& s) {
                          Mat3 t = permutation(f, s.i, s.j);
                          return t * x * t;
                        },
                        [&](const FamilyM6& p) {
                          FamilyM6 q = embed_params(p, f);
                          Mat3 out(f);
                          for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                              if (!x(i, j).is_zero()) out = out + x(i, j) * family_m6_image(q, i + 1, j + 1);
                          return out;
                        },
                        [&](const FamilyU& p) {
                          FamilyU q = embed_params(p, f);
                          Mat3 out(f);
                          for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                              if (!x(i, j).is_zero()) out = out + x(i, j) * family_u_image(q, i + 1, j + 1);
                          return out;
                        },
                        [&](const Inverse& inv) {
                          DenseMatrix phi_inv = inv.of->linear_map(f).inverse();
                          auto v = phi_inv.apply(std::span<const FieldValue>(x.coords()));
                          return Mat3::from_coords(f, v);
                        },
                        [&](const Composite& c) {
                          Mat3 y = x;
                          for (const auto& p : c.parts) y = p.apply(y);
                          return y;
                        },
                    },
                    v_);
}

DenseMatrix AutoSpec::linear_map(const Field& f) const {
  DenseMatrix m(f, 9, 9);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Mat3 img = apply(Mat3::unit(f, i, j));
      const std::size_t col = coord_index(i - 1, j - 1);
      for (std::size_t r = 0; r < 9; ++r) m(r, col) = img.coord(r);
    }
  return m;
}

AutoSpec AutoSpec::embed(const Field& target) const {
  return std::visit(overloaded{
                        [&](const Conjugation& c) { return AutoSpec(Conjugation{c.T.embed(target)}); },
                        [&](const Transpose&) { return *this; },
                        [&](const ThetaSwap&) { return *this; },
                        [&](const FamilyM6& p) { return AutoSpec(embed_params(p, target)); },
                        [&](const FamilyU& p) { return AutoSpec(embed_params(p, target)); },
                        [&](const Inverse& inv) { return inverse(inv.of->embed(target)); },
                        [&](const Composite& c) {
                          std::vector<AutoSpec> parts;
                          for (const auto& p : c.parts) parts.push_back(p.embed(target));
                          return composite(std::move(parts));
                        },
                    },
                    v_);
}

bool AutoSpec::is_identity_on(const Field& f) const { return linear_map(f).is_identity(); }

std::string AutoSpec::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Conjugation& c) { os << "Conjugation(" << c.T.to_string() << ")"; },
                 [&](const Transpose&) { os << "Transpose"; },
                 [&](const ThetaSwap& s) { os << "Theta" << s.i << s.j; },
                 [&](const FamilyM6& p) {
                   os << "FamilyM6(beta=" << p.beta.to_string() << ", gamma=" << p.gamma.to_string()
                      << ", kappa=" << p.kappa.to_string() << ", lambda=" << p.lambda.to_string()
                      << ", mu=" << p.mu.to_string() << ", nu=" << p.nu.to_string() << ")";
                 },
                 [&](const FamilyU& p) {
                   os << "FamilyU(alpha=" << p.alpha.to_string() << ", beta=" << p.beta.to_string()
                      << ", gamma=" << p.gamma.to_string() << ", delta=" << p.delta.to_string()
                      << ", epsilon=" << p.epsilon.to_string() << ")";
                 },
                 [&](const Inverse& inv) { os << "Inverse(" << inv.of->describe() << ")"; },
                 [&](const Composite& c) {
                   os << "[";
                   for (std::size_t i = 0; i < c.parts.size(); ++i) os << (i ? ", " : "") << c.parts[i].describe();
                   os << "]";
                 },
             },
             v_);
  return os.str();
}

// ---------------------------------------------------------------------------

bool is_algebra_map(const AutoSpec& a, const Field& f) {
  std::array<Mat3, 9> units, images;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      units[coord_index(i, j)] = Mat3::unit(f, i + 1, j + 1);
      images[coord_index(i, j)] = a.apply(units[coord_index(i, j)]);
    }
  const bool anti = a.is_antiautomorphism();
  for (std::size_t x = 0; x < 9; ++x)
    for (std::size_t y = 0; y < 9; ++y) {
      Mat3 lhs = a.apply(units[x] * units[y]);
      Mat3 rhs = anti ? images[y] * images[x] : images[x] * images[y];
      if (lhs != rhs) return false;
    }
  return a.linear_map(f).rank() == 9;
}

bool preserves(const AutoSpec& a, const Subalgebra& sub) {
  for (const auto& b : sub.basis())
    if (!sub.space().contains(a.apply(b))) return false;
  return true;
}

Subalgebra apply(const AutoSpec& a, const Subalgebra& sub) {
  std::vector<Mat3> images;
  for (const auto& b : sub.basis()) images.push_back(a.apply(b));
  return Subalgebra::make(sub.field(), images);
}

Decomposition apply_to_decomposition(const AutoSpec& a, const Decomposition& d) {
  try {
    return Decomposition::validate(apply(a, d.S()), apply(a, d.M()));
  } catch (const Error& e) {
    fail(ErrorCode::Internal, std::string("automorphism image failed validation: ") + e.what());
  }
}

AutoSpec random_preserving(StandardM which, std::uint64_t seed, const Field& f) {
  std::mt19937_64 rng(seed);
  auto draw = [&] { return random_element(f, rng); };
  if (which == StandardM::M6) {
    for (;;) {
      FamilyM6 p{draw(), draw(), draw(), draw(), draw(), draw()};
      if ((p.kappa * p.nu - p.lambda * p.mu).is_zero()) continue;
      AutoSpec fam = AutoSpec::family_m6(std::move(p));
      switch (rng() % 4) {
        case 1: return AutoSpec::composite({AutoSpec::theta(2, 3), fam});
        case 2: return AutoSpec::composite({fam, AutoSpec::theta(2, 3)});
        default: return fam;
      }
    }
  }
  for (;;) {
    FamilyU p{draw(), draw(), draw(), draw(), draw()};
    if (p.alpha.is_zero() || p.delta.is_zero()) continue;
    return AutoSpec::family_u(std::move(p));
  }
}

}  // namespace matdecomp
