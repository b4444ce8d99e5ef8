#pragma once

// The twelve canonical decompositions and the reductions onto them.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matdecomp/autos.hpp"

namespace matdecomp {

Decomposition catalog_entry(CanonLabel label, const Field& f = Field::rational());
std::vector<std::pair<CanonLabel, Decomposition>> catalog(const Field& f = Field::rational());

/// Basis of S normalized on the complement coordinates of M: for M6 the pivots are
/// e21, e31, e11; for M5a e21, e31, e32, e33; for M5b e21, e31, e32, e22.
struct NormalBasis {
  StandardM m;
  std::vector<Mat3> v;  // v[0] is v1
};

/// Throws UnsupportedM when D's M is not the named one, NotComplement when S does not
/// project isomorphically onto the complement coordinates.
NormalBasis normalize_basis(const Decomposition& d, StandardM m);

struct CanonOptions {
  /// Adjoin a square root when a branch needs one; otherwise raise RequiresExtension.
  bool allow_extension = true;
};

struct CanonResult {
  CanonLabel label = CanonLabel::A1;
  /// Applied left to right to the input (embedded into `field`) they give the catalog entry.
  std::vector<AutoSpec> transforms;
  std::optional<FieldValue> extension_used;
  bool used_antiauto = false;
  /// Field the transforms live in.
  Field field;
};

CanonResult canonicalize63(const Decomposition& d, const CanonOptions& opts = {});
CanonResult canonicalize54(const Decomposition& d, const CanonOptions& opts = {});
/// Dispatches on M; throws UnsupportedM for anything but M6, M5a, M5b.
CanonResult canonicalize(const Decomposition& d, const CanonOptions& opts = {});

/// Replays result.transforms on the input, embedded into result.field.
Decomposition replay(const CanonResult& result, const Decomposition& input);

struct Scrambled {
  Decomposition decomposition;
  AutoSpec applied;
};

/// Catalog entry moved by random_preserving(M of label, seed).
Scrambled scramble(CanonLabel label, std::uint64_t seed, const Field& f = Field::rational());

}  // namespace matdecomp
