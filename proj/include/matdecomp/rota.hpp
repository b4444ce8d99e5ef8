#pragma once

// Rota-Baxter operators of nonzero weight coming from direct splittings.
//
// Convention: R(x)R(y) = R(R(x)y + xR(y) + lambda xy). A splitting M3 = S (+) M gives
// R(s + m) = -lambda s.

#include <optional>

#include "matdecomp/subalg.hpp"

namespace matdecomp {

struct RBOperator {
  DenseMatrix matrix;  // 9x9 on vectorized M3
  FieldValue weight;
  std::optional<CanonLabel> source;

  Mat3 operator()(const Mat3& x) const;
};

/// Throws ZeroWeight for lambda = 0.
RBOperator rb_from_splitting(const Decomposition& d, const FieldValue& lambda);

/// Checks the identity on all 81 ordered pairs of matrix units.
bool verify_rb(const RBOperator& r);

/// -lambda id - R, the operator of the swapped splitting.
RBOperator complementary_rb(const RBOperator& r);

/// R^2 = -lambda R.
bool is_projection_type(const RBOperator& r);

Subspace kernel_space(const RBOperator& r);
Subspace image_space(const RBOperator& r);

}  // namespace matdecomp
