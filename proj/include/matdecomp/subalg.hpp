#pragma once

// Subalgebras of M3 and direct nonunital decompositions M3 = S (+) M.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matdecomp/labels.hpp"
#include "matdecomp/linalg.hpp"

namespace matdecomp {

class Subalgebra {
 public:
  /// Throws NotClosed naming the first basis product that leaves the span.
  static Subalgebra make(const Field& f, std::span<const Mat3> mats);
  static Subalgebra make(std::span<const Mat3> mats);
  static Subalgebra from_space(Subspace space);
  /// Smallest multiplicatively closed subspace containing gens.
  static Subalgebra closure(const Field& f, std::span<const Mat3> gens);

  const Field& field() const noexcept { return space_.field(); }
  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const std::vector<Mat3>& basis() const noexcept { return space_.basis(); }

  /// gamma_ijk with b_i b_j = sum_k gamma_ijk b_k.
  const FieldValue& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim() + j) * dim() + k];
  }
  /// Rebuilds b_i b_j from the structure constants alone.
  Mat3 product_from_constants(std::size_t i, std::size_t j) const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.space_ == b.space_; }

 private:
  explicit Subalgebra(Subspace space, std::vector<FieldValue> gamma)
      : space_(std::move(space)), gamma_(std::move(gamma)) {}
  Subspace space_;
  std::vector<FieldValue> gamma_;
};

bool contains_identity(const Subalgebra& a);

Subalgebra standard_m(StandardM which, const Field& f = Field::rational());
/// Which of M6/M5a/M5b this subalgebra is, exactly as a subspace.
std::optional<StandardM> identify_standard_m(const Subalgebra& m);

struct DecompositionCheck {
  bool complementary = false;  // dim S + dim M = 9
  bool direct = false;         // S cap M = 0
  bool s_nonunital = false;
  bool m_nonunital = false;

  bool ok() const { return complementary && direct && s_nonunital && m_nonunital; }
  /// Names of the failed conditions in a fixed order.
  std::vector<std::string> failures() const;
};

DecompositionCheck check_decomposition(const Subalgebra& s, const Subalgebra& m);

class Decomposition {
 public:
  /// Throws the ErrorCode of the first failed condition; the message lists all of them.
  static Decomposition validate(Subalgebra s, Subalgebra m, std::optional<CanonLabel> hint = std::nullopt);

  const Subalgebra& S() const noexcept { return s_; }
  const Subalgebra& M() const noexcept { return m_; }
  const std::optional<CanonLabel>& label_hint() const noexcept { return hint_; }
  const Field& field() const noexcept { return s_.field(); }

  friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.s_ == b.s_ && a.m_ == b.m_; }

 private:
  Decomposition(Subalgebra s, Subalgebra m, std::optional<CanonLabel> hint)
      : s_(std::move(s)), m_(std::move(m)), hint_(hint) {}
  Subalgebra s_;
  Subalgebra m_;
  std::optional<CanonLabel> hint_;
};

inline Decomposition validate_decomposition(Subalgebra s, Subalgebra m) {
  return Decomposition::validate(std::move(s), std::move(m));
}

/// Radical via the kernel of the trace form Tr(xy) on A. Needs characteristic 0 or > 3;
/// the result is checked to be a nilpotent two-sided ideal.
Subspace radical(const Subalgebra& a);

struct Annihilators {
  Subspace left;   // {x in A : xA = 0}
  Subspace right;  // {x in A : Ax = 0}
};
Annihilators annihilators(const Subalgebra& a);

Subspace center(const Subalgebra& a);

/// Span of pairwise products of radical basis elements.
Subspace radical_square(const Subalgebra& a);

}  // namespace matdecomp
