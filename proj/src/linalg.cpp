#include "matdecomp/linalg.hpp"

#include <sstream>

namespace matdecomp {

// ---------------------------------------------------------------------------
// Mat3

Mat3::Mat3(const Field& f) : field_(f) { a_.fill(f.zero()); }

Mat3 Mat3::identity(const Field& f) {
  Mat3 m(f);
  for (int i = 0; i < 3; ++i) m.a_[coord_index(i, i)] = f.one();
  return m;
}

Mat3 Mat3::unit(const Field& f, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) fail(ErrorCode::Internal, "matrix unit index out of range");
  Mat3 m(f);
  m.a_[coord_index(i - 1, j - 1)] = f.one();
  return m;
}

Mat3 Mat3::from_ints(const Field& f, const std::array<std::array<long, 3>, 3>& rows) {
  Mat3 m(f);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.a_[coord_index(r, c)] = f.from_int(rows[r][c]);
  return m;
}

Mat3 Mat3::from_coords(const Field& f, std::span<const FieldValue> coords) {
  if (coords.size() != 9) fail(ErrorCode::Internal, "Mat3 needs 9 coordinates");
  Mat3 m(f);
  for (std::size_t k = 0; k < 9; ++k) m.a_[k] = f.embed(coords[k]);
  return m;
}

void Mat3::set(int row, int col, FieldValue v) { a_[coord_index(row, col)] = field_.embed(v); }

Mat3 operator*(const Mat3& x, const Mat3& y) {
  if (x.field_ != y.field_) fail(ErrorCode::DescriptorMismatch, x.field_.name() + " vs " + y.field_.name());
  Mat3 out(x.field_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldValue acc = x.field_.zero();
      for (int k = 0; k < 3; ++k) {
        const FieldValue& a = x(i, k);
        if (a.is_zero()) continue;
        const FieldValue& b = y(k, j);
        if (b.is_zero()) continue;
        acc += a * b;
      }
      out.a_[coord_index(i, j)] = std::move(acc);
    }
  return out;
}

Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 out(x.field_);
  for (std::size_t k = 0; k < 9; ++k) out.a_[k] = x.a_[k] + y.a_[k];
  return out;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 out(x.field_);
  for (std::size_t k = 0; k < 9; ++k) out.a_[k] = x.a_[k] - y.a_[k];
  return out;
}

Mat3 operator*(const FieldValue& s, const Mat3& x) {
  Mat3 out(x.field_);
  for (std::size_t k = 0; k < 9; ++k) out.a_[k] = s * x.a_[k];
  return out;
}

Mat3 Mat3::operator-() const {
  Mat3 out(field_);
  for (std::size_t k = 0; k < 9; ++k) out.a_[k] = -a_[k];
  return out;
}

bool operator==(const Mat3& x, const Mat3& y) {
  for (std::size_t k = 0; k < 9; ++k)
    if (x.a_[k] != y.a_[k]) return false;
  return true;
}

Mat3 Mat3::transpose() const {
  Mat3 out(field_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.a_[coord_index(j, i)] = (*this)(i, j);
  return out;
}

FieldValue Mat3::trace() const { return a_[0] + a_[4] + a_[8]; }

FieldValue Mat3::det() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::size_t Mat3::rank() const {
  DenseMatrix d(field_, 3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) d(r, c) = (*this)(static_cast<int>(r), static_cast<int>(c));
  return d.rank();
}

bool Mat3::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool Mat3::is_upper_triangular() const {
  return (*this)(1, 0).is_zero() && (*this)(2, 0).is_zero() && (*this)(2, 1).is_zero();
}

Mat3 Mat3::inverse() const {
  FieldValue d = det();
  if (d.is_zero()) fail(ErrorCode::Singular, "matrix is not invertible");
  const auto& m = *this;
  Mat3 adj(field_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj.a_[coord_index(i, j)] = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return d.inv() * adj;
}

Mat3 Mat3::embed(const Field& target) const {
  if (target == field_) return *this;
  Mat3 out(target);
  for (std::size_t k = 0; k < 9; ++k) out.a_[k] = target.embed(a_[k]);
  return out;
}

std::string Mat3::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

DenseMatrix DenseMatrix::identity(const Field& f, std::size_t n) {
  DenseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols_ != y.rows_) fail(ErrorCode::Internal, "dimension mismatch in product");
  DenseMatrix out(x.field_, x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const FieldValue& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const FieldValue& b = y(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) fail(ErrorCode::Internal, "dimension mismatch in sum");
  DenseMatrix out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += y.data_[k];
  return out;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) fail(ErrorCode::Internal, "dimension mismatch in difference");
  DenseMatrix out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= y.data_[k];
  return out;
}

DenseMatrix operator*(const FieldValue& s, const DenseMatrix& x) {
  DenseMatrix out = x;
  for (auto& v : out.data_) v = s * v;
  return out;
}

bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

std::vector<FieldValue> DenseMatrix::apply(std::span<const FieldValue> v) const {
  if (v.size() != cols_) fail(ErrorCode::Internal, "dimension mismatch in apply");
  std::vector<FieldValue> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const FieldValue& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

DenseMatrix::Rref DenseMatrix::rref() const {
  DenseMatrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && m(sel, col).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(sel, c), m(row, c));
    FieldValue piv_inv = m(row, col).inv();
    for (std::size_t c = col; c < cols_; ++c) m(row, c) *= piv_inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      FieldValue factor = m(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t DenseMatrix::rank() const { return rref().pivots.size(); }

std::vector<std::vector<FieldValue>> DenseMatrix::kernel() const {
  auto [red, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldValue>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldValue> v(cols_, field_.zero());
    v[free] = field_.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorCode::Singular, "non-square matrix");
  DenseMatrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = field_.one();
  }
  auto [red, pivots] = aug.rref();
  if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) fail(ErrorCode::Singular, "matrix is not invertible");
  DenseMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = red(i, cols_ + j);
  return out;
}

bool DenseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const Field& f) : field_(f) {}

Subspace Subspace::span(std::span<const Mat3> mats) {
  if (mats.empty()) fail(ErrorCode::Internal, "span of an empty list needs an explicit field");
  return span(mats.front().field(), mats);
}

Subspace Subspace::span(const Field& f, std::span<const Mat3> mats) {
  Subspace s(f);
  if (mats.empty()) return s;
  DenseMatrix m(f, mats.size(), 9);
  for (std::size_t r = 0; r < mats.size(); ++r) {
    if (mats[r].field() != f)
      fail(ErrorCode::DescriptorMismatch, mats[r].field().name() + " vs " + f.name());
    for (std::size_t c = 0; c < 9; ++c) m(r, c) = mats[r].coord(c);
  }
  auto [red, pivots] = m.rref();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::array<FieldValue, 9> row;
    for (std::size_t c = 0; c < 9; ++c) row[c] = red(r, c);
    s.basis_.push_back(Mat3::from_coords(f, row));
  }
  s.pivots_ = std::move(pivots);
  return s;
}

Mat3 Subspace::residual(const Mat3& x) const {
  if (x.field() != field_) fail(ErrorCode::DescriptorMismatch, x.field().name() + " vs " + field_.name());
  Mat3 r = x;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    FieldValue c = x.coord(pivots_[i]);
    if (!c.is_zero()) r = r - c * basis_[i];
  }
  return r;
}

std::optional<std::vector<FieldValue>> Subspace::coordinates(const Mat3& x) const {
  if (!residual(x).is_zero()) return std::nullopt;
  std::vector<FieldValue> out;
  out.reserve(basis_.size());
  for (auto p : pivots_) out.push_back(x.coord(p));
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace Subspace::embed(const Field& target) const {
  if (target == field_) return *this;
  Subspace out(target);
  for (const auto& b : basis_) out.basis_.push_back(b.embed(target));
  out.pivots_ = pivots_;
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.field() != v.field()) fail(ErrorCode::DescriptorMismatch, u.field().name() + " vs " + v.field().name());
  const Field& f = u.field();
  const std::size_t a = u.dim(), b = v.dim();
  if (a == 0 || b == 0) return Subspace(f);
  // sum_i x_i u_i - sum_j y_j v_j = 0
  DenseMatrix m(f, 9, a + b);
  for (std::size_t c = 0; c < 9; ++c) {
    for (std::size_t i = 0; i < a; ++i) m(c, i) = u.basis()[i].coord(c);
    for (std::size_t j = 0; j < b; ++j) m(c, a + j) = -v.basis()[j].coord(c);
  }
  std::vector<Mat3> gens;
  for (const auto& k : m.kernel()) {
    Mat3 x(f);
    for (std::size_t i = 0; i < a; ++i)
      if (!k[i].is_zero()) x = x + k[i] * u.basis()[i];
    gens.push_back(std::move(x));
  }
  return Subspace::span(f, gens);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  std::vector<Mat3> gens = u.basis();
  gens.insert(gens.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.field(), gens);
}

// ---------------------------------------------------------------------------
// Idempotent Jordanization

Jordan2 jordanize_idempotent2(const DenseMatrix& h) {
  if (h.rows() != 2 || h.cols() != 2) fail(ErrorCode::Internal, "expected a 2x2 matrix");
  const Field& f = h.field();
  if (!(h * h == h)) fail(ErrorCode::NotIdempotent, "H^2 != H");
  const std::size_t r = h.rank();
  if (r == 0) return {DenseMatrix::identity(f, 2), DenseMatrix(f, 2, 2)};
  if (r == 2) return {DenseMatrix::identity(f, 2), DenseMatrix::identity(f, 2)};

  const std::size_t pivot = h.rref().pivots.front();
  const auto ker = h.kernel();
  DenseMatrix t(f, 2, 2);
  t(0, 0) = h(0, pivot);
  t(1, 0) = h(1, pivot);
  t(0, 1) = ker.front()[0];
  t(1, 1) = ker.front()[1];
  DenseMatrix j(f, 2, 2);
  j(0, 0) = f.one();
  ensure(t.inverse() * h * t == j, "rank-one idempotent failed to Jordanize");
  return {std::move(t), std::move(j)};
}

Jordan3 jordanize_idempotent_upper3(const Mat3& v) {
  if (!v.is_upper_triangular()) fail(ErrorCode::NotUpperTriangular, v.to_string());
  if (v * v != v) fail(ErrorCode::NotIdempotent, v.to_string());
  const Field& f = v.field();
  Mat3 jm(f);
  for (int i = 0; i < 3; ++i) jm.set(i, i, v(i, i));
  Mat3 t = Mat3::identity(f);
  // (J_j - V_ii) T_ij = sum_{k=i+1..j} V_ik T_kj
  for (int j = 1; j < 3; ++j)
    for (int i = j - 1; i >= 0; --i) {
      FieldValue rhs = f.zero();
      for (int k = i + 1; k <= j; ++k) rhs += v(i, k) * t(k, j);
      FieldValue coef = jm(j, j) - v(i, i);
      if (coef.is_zero()) {
        ensure(rhs.is_zero(), "upper-triangular Jordanization has no solution");
        t.set(i, j, f.zero());
      } else {
        t.set(i, j, rhs / coef);
      }
    }
  ensure(t.inverse() * v * t == jm, "upper-triangular Jordanization check failed");
  return {std::move(t), std::move(jm)};
}

}  // namespace matdecomp
