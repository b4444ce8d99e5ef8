#pragma once

// Exact scalars: rationals, prime fields F_p and quadratic extensions K(sqrt d).
//
// Field is a cheap value handle to an immutable descriptor; FieldValue carries
// its field so that mixing elements of different fields is caught at runtime.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matdecomp/error.hpp"

namespace matdecomp {

class FieldValue;

enum class FieldKind { rational, prime, quadratic };

class Field {
 public:
  /// The rationals. Default-constructed Fields are the rationals too.
  Field();
  static Field rational();
  /// F_p; throws InvalidField unless p is prime.
  static Field prime(std::int64_t p);
  /// base(sqrt d); throws AlreadySquare if d has a square root in base.
  static Field quadratic(const Field& base, const FieldValue& d);

  FieldKind kind() const noexcept;
  std::int64_t characteristic() const noexcept;
  /// Number of elements for finite fields, 0 for infinite ones.
  std::uint64_t cardinality() const noexcept;

  /// Only valid for quadratic fields.
  const Field& base() const;
  const FieldValue& radicand() const;

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(std::int64_t n) const;
  FieldValue from_rational(const mpq_class& q) const;
  /// Lifts an element of a subfield of this field (itself, or a field further down
  /// the quadratic tower) into this field.
  FieldValue embed(const FieldValue& x) const;
  bool contains_subfield(const Field& sub) const;
  /// a + b*sqrt(d) for a quadratic field, with a, b in the base field.
  FieldValue from_parts(const FieldValue& a, const FieldValue& b) const;

  /// All elements of a finite field in a fixed order. Throws for infinite fields.
  std::vector<FieldValue> elements() const;

  /// Scalar text encoding: "p/q" or "n" for rationals, "n" for F_p, "a+b*sqrt(d)" for
  /// quadratic extensions (plain base encodings are accepted and embedded).
  FieldValue parse(std::string_view text) const;

  /// Short human-readable name, e.g. "Q", "F_5", "Q(sqrt(2))".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend class FieldValue;
};

class FieldValue {
 public:
  /// Rational zero.
  FieldValue();

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldValue operator-() const;
  FieldValue inv() const;
  FieldValue pow(unsigned e) const;

  friend FieldValue operator+(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator-(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator*(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator/(const FieldValue& x, const FieldValue& y);
  FieldValue& operator+=(const FieldValue& y) { return *this = *this + y; }
  FieldValue& operator-=(const FieldValue& y) { return *this = *this - y; }
  FieldValue& operator*=(const FieldValue& y) { return *this = *this * y; }
  FieldValue& operator/=(const FieldValue& y) { return *this = *this / y; }

  /// Exact equality. Elements of a base field compare equal to their embeddings.
  friend bool operator==(const FieldValue& x, const FieldValue& y);
  friend bool operator!=(const FieldValue& x, const FieldValue& y) { return !(x == y); }

  /// A square root inside the same field, if one is found. Over quadratic extensions
  /// the search is norm-based and gives up in characteristic 2.
  std::optional<FieldValue> try_sqrt() const;

  const mpq_class& as_rational() const;
  std::int64_t as_residue() const;
  /// Quadratic components: value = a + b*sqrt(d).
  const FieldValue& quad_a() const;
  const FieldValue& quad_b() const;

  std::string to_string() const;

  struct QuadParts;

 private:
  FieldValue(Field f, mpq_class q);
  FieldValue(Field f, std::int64_t r);
  FieldValue(Field f, std::shared_ptr<const QuadParts> parts);

  Field field_;
  std::variant<mpq_class, std::int64_t, std::shared_ptr<const QuadParts>> data_;

  friend class Field;
};

/// Adjoins sqrt(d) to desc. Throws AlreadySquare when d already has a root.
Field extend_with_sqrt(const Field& desc, const FieldValue& d);

bool is_prime(std::int64_t n) noexcept;

}  // namespace matdecomp
