#include "matdecomp/subalg.hpp"

namespace matdecomp {

namespace {

// Kernel of the linear map c -> sum_i c_i * column_i, returned as elements of A.
Subspace solve_in_algebra(const Subalgebra& a, const DenseMatrix& system) {
  std::vector<Mat3> gens;
  for (const auto& k : system.kernel()) {
    Mat3 x(a.field());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!k[i].is_zero()) x = x + k[i] * a.basis()[i];
    gens.push_back(std::move(x));
  }
  return Subspace::span(a.field(), gens);
}

}  // namespace

Subalgebra Subalgebra::make(std::span<const Mat3> mats) {
  if (mats.empty()) fail(ErrorCode::Internal, "subalgebra of an empty list needs an explicit field");
  return make(mats.front().field(), mats);
}

Subalgebra Subalgebra::make(const Field& f, std::span<const Mat3> mats) {
  return from_space(Subspace::span(f, mats));
}

Subalgebra Subalgebra::from_space(Subspace space) {
  const std::size_t n = space.dim();
  std::vector<FieldValue> gamma;
  gamma.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat3 prod = space.basis()[i] * space.basis()[j];
      auto coords = space.coordinates(prod);
      if (!coords)
        fail(ErrorCode::NotClosed, "b" + std::to_string(i + 1) + "*b" + std::to_string(j + 1) + " = " +
                                       prod.to_string() + " leaves the span (residual " +
                                       space.residual(prod).to_string() + ")");
      gamma.insert(gamma.end(), coords->begin(), coords->end());
    }
  return Subalgebra(std::move(space), std::move(gamma));
}

Subalgebra Subalgebra::closure(const Field& f, std::span<const Mat3> gens) {
  Subspace space = Subspace::span(f, gens);
  for (;;) {
    std::vector<Mat3> extra;
    for (const auto& x : space.basis())
      for (const auto& y : space.basis()) {
        Mat3 p = x * y;
        if (!space.contains(p)) extra.push_back(std::move(p));
      }
    if (extra.empty()) break;
    Subspace grown = sum(space, Subspace::span(f, extra));
    ensure(grown.dim() > space.dim(), "closure failed to grow");
    space = std::move(grown);
  }
  return from_space(std::move(space));
}

Mat3 Subalgebra::product_from_constants(std::size_t i, std::size_t j) const {
  Mat3 out(field());
  for (std::size_t k = 0; k < dim(); ++k) {
    const FieldValue& g = structure_constant(i, j, k);
    if (!g.is_zero()) out = out + g * basis()[k];
  }
  return out;
}

bool contains_identity(const Subalgebra& a) { return a.space().contains(Mat3::identity(a.field())); }

Subalgebra standard_m(StandardM which, const Field& f) {
  std::vector<std::pair<int, int>> units;
  switch (which) {
    case StandardM::M6:
      units = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
      break;
    case StandardM::M5a:
      units = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}};
      break;
    case StandardM::M5b:
      units = {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}};
      break;
  }
  std::vector<Mat3> mats;
  for (auto [i, j] : units) mats.push_back(Mat3::unit(f, i, j));
  return Subalgebra::make(f, mats);
}

std::optional<StandardM> identify_standard_m(const Subalgebra& m) {
  for (auto which : {StandardM::M6, StandardM::M5a, StandardM::M5b})
    if (m.space() == standard_m(which, m.field()).space()) return which;
  return std::nullopt;
}

std::vector<std::string> DecompositionCheck::failures() const {
  std::vector<std::string> out;
  if (!direct) out.emplace_back("NotDirect");
  if (!complementary) out.emplace_back("NotComplementary");
  if (!s_nonunital) out.emplace_back("UnitalS");
  if (!m_nonunital) out.emplace_back("UnitalM");
  return out;
}

DecompositionCheck check_decomposition(const Subalgebra& s, const Subalgebra& m) {
  if (s.field() != m.field()) fail(ErrorCode::DescriptorMismatch, s.field().name() + " vs " + m.field().name());
  DecompositionCheck c;
  c.complementary = s.dim() + m.dim() == 9;
  c.direct = intersect(s.space(), m.space()).dim() == 0;
  c.s_nonunital = !contains_identity(s);
  c.m_nonunital = !contains_identity(m);
  return c;
}

Decomposition Decomposition::validate(Subalgebra s, Subalgebra m, std::optional<CanonLabel> hint) {
  const auto check = check_decomposition(s, m);
  if (!check.ok()) {
    std::string msg;
    for (const auto& f : check.failures()) msg += (msg.empty() ? "" : ", ") + f;
    ErrorCode code = !check.direct          ? ErrorCode::NotDirect
                     : !check.complementary ? ErrorCode::NotComplementary
                     : !check.s_nonunital   ? ErrorCode::UnitalS
                                            : ErrorCode::UnitalM;
    fail(code, "decomposition check failed: " + msg);
  }
  return Decomposition(std::move(s), std::move(m), hint);
}

Subspace radical(const Subalgebra& a) {
  const auto ch = a.field().characteristic();
  if (ch == 2 || ch == 3)
    fail(ErrorCode::BadCharacteristic, "trace-form radical needs characteristic 0 or > 3, got " + std::to_string(ch));
  const std::size_t n = a.dim();
  DenseMatrix gram(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = (a.basis()[i] * a.basis()[j]).trace();
  Subspace rad = solve_in_algebra(a, gram);

  for (const auto& r : rad.basis())
    for (const auto& b : a.basis())
      ensure(rad.contains(r * b) && rad.contains(b * r), "trace-form radical is not an ideal");
  for (const auto& x : rad.basis())
    for (const auto& y : rad.basis())
      for (const auto& z : rad.basis()) ensure((x * y * z).is_zero(), "trace-form radical is not nilpotent");
  return rad;
}

Annihilators annihilators(const Subalgebra& a) {
  const std::size_t n = a.dim();
  DenseMatrix left(a.field(), n * n, n), right(a.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        left(j * n + k, i) = a.structure_constant(i, j, k);
        right(j * n + k, i) = a.structure_constant(j, i, k);
      }
  return {solve_in_algebra(a, left), solve_in_algebra(a, right)};
}

Subspace center(const Subalgebra& a) {
  const std::size_t n = a.dim();
  DenseMatrix sys(a.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        sys(j * n + k, i) = a.structure_constant(i, j, k) - a.structure_constant(j, i, k);
  return solve_in_algebra(a, sys);
}

Subspace radical_square(const Subalgebra& a) {
  Subspace rad = radical(a);
  std::vector<Mat3> prods;
  for (const auto& x : rad.basis())
    for (const auto& y : rad.basis()) prods.push_back(x * y);
  return Subspace::span(a.field(), prods);
}

}  // namespace matdecomp
