#include "matdecomp/rota.hpp"

namespace matdecomp {

namespace {

std::vector<Mat3> units(const Field& f) {
  std::vector<Mat3> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out.push_back(Mat3::unit(f, i, j));
  return out;
}

Mat3 column_as_mat(const Field& f, const DenseMatrix& a, std::size_t col) {
  std::array<FieldValue, 9> c;
  for (std::size_t k = 0; k < 9; ++k) c[k] = a(k, col);
  return Mat3::from_coords(f, c);
}

}  // namespace

Mat3 RBOperator::operator()(const Mat3& x) const {
  const auto v = matrix.apply(x.coords());
  return Mat3::from_coords(matrix.field(), v);
}

RBOperator rb_from_splitting(const Decomposition& d, const FieldValue& lambda) {
  if (lambda.is_zero()) fail(ErrorCode::ZeroWeight, "weight must be nonzero");
  const Field& f = d.field();
  const FieldValue lam = f.embed(lambda);
  // columns: basis of S, then basis of M
  DenseMatrix b(f, 9, 9);
  std::size_t col = 0;
  for (const auto* half : {&d.S(), &d.M()})
    for (const auto& x : half->basis()) {
      for (std::size_t k = 0; k < 9; ++k) b(k, col) = x.coord(k);
      ++col;
    }
  DenseMatrix keep(f, 9, 9);
  for (std::size_t i = 0; i < d.S().dim(); ++i) keep(i, i) = -lam;
  RBOperator r{b * keep * b.inverse(), lam, d.label_hint()};
  return r;
}

bool verify_rb(const RBOperator& r) {
  const Field& f = r.matrix.field();
  const auto e = units(f);
  std::vector<Mat3> re;
  for (const auto& x : e) re.push_back(r(x));
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b) {
      const Mat3 lhs = re[a] * re[b];
      const Mat3 rhs = r(re[a] * e[b] + e[a] * re[b] + r.weight * (e[a] * e[b]));
      if (lhs != rhs) return false;
    }
  return true;
}

RBOperator complementary_rb(const RBOperator& r) {
  const Field& f = r.matrix.field();
  return {(-r.weight) * DenseMatrix::identity(f, 9) - r.matrix, r.weight, r.source};
}

bool is_projection_type(const RBOperator& r) { return r.matrix * r.matrix == (-r.weight) * r.matrix; }

Subspace kernel_space(const RBOperator& r) {
  const Field& f = r.matrix.field();
  std::vector<Mat3> mats;
  for (const auto& v : r.matrix.kernel()) mats.push_back(Mat3::from_coords(f, v));
  return Subspace::span(f, mats);
}

Subspace image_space(const RBOperator& r) {
  const Field& f = r.matrix.field();
  std::vector<Mat3> mats;
  for (std::size_t c = 0; c < 9; ++c) mats.push_back(column_as_mat(f, r.matrix, c));
  return Subspace::span(f, mats);
}

}  // namespace matdecomp
