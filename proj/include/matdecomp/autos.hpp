#pragma once

// (Anti)automorphisms of M3 as symbolic, applicable transforms.
//
// Family members are stored by parameters so callers can report exactly which
// map was used; the 9x9 matrix on vectorized M3 is derived on demand.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "matdecomp/subalg.hpp"

namespace matdecomp {

class AutoSpec;

/// X -> T^-1 X T.
struct Conjugation {
  Mat3 T;
};
struct Transpose {};
/// Conjugation by the permutation matrix swapping basis vectors i and j (1-based, i < j).
struct ThetaSwap {
  int i = 1;
  int j = 2;
};
/// Automorphisms preserving M6; e11 -> e11 + beta e12 + gamma e13, e12 -> kappa e12 + lambda e13,
/// e13 -> mu e12 + nu e13, the remaining units fixed by multiplicativity. Delta = kappa nu - lambda mu.
struct FamilyM6 {
  FieldValue beta, gamma, kappa, lambda, mu, nu;
};
/// Automorphisms preserving the upper-triangular matrices (and M5a, M5b):
/// e11 -> e11 + beta e12 + gamma e13, e12 -> delta e12 + epsilon e13, e13 -> alpha e13.
struct FamilyU {
  FieldValue alpha, beta, gamma, delta, epsilon;
};
struct Inverse {
  std::shared_ptr<const AutoSpec> of;
};
/// Applied left to right.
struct Composite {
  std::vector<AutoSpec> parts;
};

class AutoSpec {
 public:
  using Variant = std::variant<Conjugation, Transpose, ThetaSwap, FamilyM6, FamilyU, Inverse, Composite>;

  /// Throws SingularConjugator.
  static AutoSpec conjugation(Mat3 t);
  static AutoSpec transpose();
  static AutoSpec theta(int i, int j);
  /// Throws DegenerateFamily when Delta = 0.
  static AutoSpec family_m6(FamilyM6 params);
  /// Throws DegenerateFamily when alpha or delta is 0.
  static AutoSpec family_u(FamilyU params);
  static AutoSpec inverse(AutoSpec a);
  static AutoSpec composite(std::vector<AutoSpec> parts);
  /// The empty composite.
  static AutoSpec identity();

  const Variant& variant() const noexcept { return v_; }

  /// Transpose flips parity; everything else preserves it.
  bool is_antiautomorphism() const;

  Mat3 apply(const Mat3& x) const;
  /// Columns are vec(apply(e_k)) in the fixed coordinate order.
  DenseMatrix linear_map(const Field& f) const;
  /// Same map with parameters lifted into a larger field.
  AutoSpec embed(const Field& target) const;
  /// True when the induced linear map on f is the identity.
  bool is_identity_on(const Field& f) const;

  std::string describe() const;

 private:
  explicit AutoSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Image of the unit e_ij (1-based) under a family member, transcribed from the
/// parametrized tables.
Mat3 family_m6_image(const FamilyM6& p, int i, int j);
Mat3 family_u_image(const FamilyU& p, int i, int j);

/// Multiplicative (order-reversing for antiautomorphisms) on all 81 unit pairs and bijective.
bool is_algebra_map(const AutoSpec& a, const Field& f = Field::rational());
bool preserves(const AutoSpec& a, const Subalgebra& sub);

Subalgebra apply(const AutoSpec& a, const Subalgebra& sub);
/// Maps both halves and revalidates; failures indicate a bug and raise Internal.
Decomposition apply_to_decomposition(const AutoSpec& a, const Decomposition& d);

/// Deterministic in seed. Parameters are drawn from [-3, 3] over Q, or from all
/// elements of a finite field; degenerate draws are rejected. M6 samples are
/// sometimes pre- or post-composed with Theta23.
AutoSpec random_preserving(StandardM which, std::uint64_t seed, const Field& f = Field::rational());

}  // namespace matdecomp
