#pragma once

// 3x3 matrices, their vectorization, and the small exact linear algebra the
// decomposition machinery runs on.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matdecomp/field.hpp"

namespace matdecomp {

/// Vectorization order: (e11, e12, e13, e21, e22, e23, e31, e32, e33).
constexpr std::size_t coord_index(int row, int col) { return static_cast<std::size_t>(row * 3 + col); }

class Mat3 {
 public:
  /// Zero matrix over f.
  explicit Mat3(const Field& f = Field::rational());

  static Mat3 zero(const Field& f) { return Mat3(f); }
  static Mat3 identity(const Field& f);
  /// The matrix unit e_ij, with 1-based i, j as in the usual notation.
  static Mat3 unit(const Field& f, int i, int j);
  static Mat3 from_ints(const Field& f, const std::array<std::array<long, 3>, 3>& rows);
  static Mat3 from_coords(const Field& f, std::span<const FieldValue> coords);

  const Field& field() const noexcept { return field_; }

  /// 0-based access.
  const FieldValue& operator()(int row, int col) const { return a_[coord_index(row, col)]; }
  void set(int row, int col, FieldValue v);
  const FieldValue& coord(std::size_t k) const { return a_[k]; }
  const std::array<FieldValue, 9>& coords() const noexcept { return a_; }

  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  friend Mat3 operator+(const Mat3& x, const Mat3& y);
  friend Mat3 operator-(const Mat3& x, const Mat3& y);
  friend Mat3 operator*(const FieldValue& s, const Mat3& x);
  Mat3 operator-() const;
  friend bool operator==(const Mat3& x, const Mat3& y);
  friend bool operator!=(const Mat3& x, const Mat3& y) { return !(x == y); }

  Mat3 transpose() const;
  FieldValue trace() const;
  FieldValue det() const;
  std::size_t rank() const;
  bool is_zero() const;
  bool is_upper_triangular() const;
  /// Throws Singular.
  Mat3 inverse() const;
  /// Same entries, lifted into a field that contains this one.
  Mat3 embed(const Field& target) const;

  std::string to_string() const;

 private:
  Field field_;
  std::array<FieldValue, 9> a_;
};

/// A dense rows x cols matrix over one field.
class DenseMatrix {
 public:
  DenseMatrix(const Field& f, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(const Field& f, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldValue& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldValue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator*(const FieldValue& s, const DenseMatrix& x);
  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y);

  std::vector<FieldValue> apply(std::span<const FieldValue> v) const;
  DenseMatrix transpose() const;

  struct Rref;
  Rref rref() const;
  std::size_t rank() const;
  /// Basis of {x : A x = 0}, one vector per free column.
  std::vector<std::vector<FieldValue>> kernel() const;
  /// Throws Singular.
  DenseMatrix inverse() const;
  bool is_identity() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldValue> data_;
};

struct DenseMatrix::Rref {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// A subspace of M3 held as the RREF basis of its vectorizations, which makes the
/// representation canonical: equal subspaces have entrywise equal bases.
class Subspace {
 public:
  explicit Subspace(const Field& f = Field::rational());
  static Subspace span(const Field& f, std::span<const Mat3> mats);
  static Subspace span(std::span<const Mat3> mats);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Mat3>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coefficients of x in the RREF basis, or nullopt when x lies outside.
  std::optional<std::vector<FieldValue>> coordinates(const Mat3& x) const;
  bool contains(const Mat3& x) const { return coordinates(x).has_value(); }
  bool contains(const Subspace& other) const;
  /// x minus its pivot-read projection; zero iff x is a member.
  Mat3 residual(const Mat3& x) const;

  Subspace embed(const Field& target) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<Mat3> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

struct Jordan2 {
  DenseMatrix T;  // invertible 2x2
  DenseMatrix J;  // 0, diag(1,0) or identity
};

/// For idempotent 2x2 H returns T, J with T^-1 H T = J. Rank-one inputs always land on
/// diag(1,0): T's first column is the pivot column of H, its second a kernel vector.
Jordan2 jordanize_idempotent2(const DenseMatrix& h);

struct Jordan3 {
  Mat3 T;  // upper triangular, unit diagonal
  Mat3 J;  // diagonal 0/1
};

/// For an upper-triangular idempotent V returns an upper-triangular T with
/// T^-1 V T = diag(V). The strictly upper entries of T solve V T = T J column by column.
Jordan3 jordanize_idempotent_upper3(const Mat3& v);

}  // namespace matdecomp
