#pragma once

// Small polynomial systems and a Buchberger-style Groebner basis, used to decide
// whether a system has a solution over the algebraic closure of its field.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matdecomp/field.hpp"

namespace matdecomp {

inline constexpr std::size_t kMaxVariables = 6;

using Monomial = std::array<std::uint16_t, kMaxVariables>;

unsigned total_degree(const Monomial& m);
/// Graded reverse lexicographic order.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono{};
  FieldValue coef;
};

class Polynomial;

/// Full reduction of f by g.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g);

class Polynomial {
 public:
  Polynomial(const Field& f, std::size_t nvars);
  static Polynomial constant(const Field& f, std::size_t nvars, const FieldValue& c);
  static Polynomial variable(const Field& f, std::size_t nvars, std::size_t index);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  /// Sorted by decreasing grevlex order; no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_nonzero_constant() const;
  unsigned degree() const;
  const Term& leading() const { return terms_.front(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldValue& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// this - c * x^m * g
  Polynomial minus_scaled(const FieldValue& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;
  FieldValue evaluate(std::span<const FieldValue> point) const;
  /// Renames variable i to perm[i].
  Polynomial permuted(std::span<const std::size_t> perm) const;

  std::string to_string(std::span<const std::string> names = {}) const;

  friend Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g);

 private:
  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

struct GroebnerOptions {
  /// Cap on S-polynomial reductions; exceeding it raises BudgetExceeded.
  std::size_t max_reductions = 10000;
};

/// Reduced Groebner basis in grevlex order. Returns {1} as soon as a nonzero constant appears.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const GroebnerOptions& opts = {});


class PolySystem {
 public:
  static constexpr unsigned kMaxDegree = 2;

  /// Throws TooManyVariables past kMaxVariables.
  PolySystem(const Field& f, std::vector<std::string> variables);

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::vector<Polynomial>& equations() const noexcept { return eqs_; }
  std::size_t nvars() const noexcept { return vars_.size(); }

  Polynomial var(std::size_t i) const { return Polynomial::variable(field_, vars_.size(), i); }
  Polynomial constant(const FieldValue& c) const { return Polynomial::constant(field_, vars_.size(), c); }

  /// Throws DegreeTooHigh for total degree above kMaxDegree.
  void add(Polynomial eq);
  /// Appends x^q - x for every variable of a finite field with q elements, which
  /// restricts solutions over the closure to points with coordinates in the field.
  /// These are the only equations allowed to exceed kMaxDegree.
  void add_field_equations();

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> eqs_;
};

/// True iff the system has a solution over the algebraic closure (weak Nullstellensatz).
bool is_consistent(const PolySystem& sys, const GroebnerOptions& opts = {});

}  // namespace matdecomp
