#pragma once

// Orbit invariants of the small half S of a decomposition.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matdecomp/groebner.hpp"
#include "matdecomp/labels.hpp"
#include "matdecomp/subalg.hpp"

namespace matdecomp {

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t rad_dim = 0;
  std::size_t rad_sq_dim = 0;
  std::size_t ss_dim = 0;
  std::size_t center_dim = 0;
  bool rad_in_left_ann = false;
  bool rad_in_right_ann = false;
  /// Traces (= ranks) of idempotents in A; absent outside characteristic 0.
  std::optional<std::vector<int>> idem_trace_set;
  /// Absent outside characteristic 0. False when rad^2 = 0.
  std::optional<bool> unit_on_rad_sq;
  bool is_m2 = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  /// What transposing A does: the annihilator sides swap, nothing else moves.
  Fingerprint transposed() const;
  /// Equality with the annihilator flags compared as an unordered pair, i.e. up to
  /// automorphisms and antiautomorphisms.
  bool same_orbit_invariants(const Fingerprint& other) const;
  /// Names of the fields in which two fingerprints differ (annihilator flags unordered).
  std::vector<std::string> differences(const Fingerprint& other) const;
};

/// {x^2 = x, Tr(x) = trace} in the coordinates of A's basis. variable_order[i] is the
/// variable assigned to basis coordinate i; empty means the identity order.
PolySystem idempotent_system(const Subalgebra& a, int trace, std::span<const std::size_t> variable_order = {});

/// Subset of {0,1,2,3}: traces of idempotents of A over the algebraic closure.
std::vector<int> idempotent_trace_set(const Subalgebra& a, const GroebnerOptions& opts = {},
                                      std::span<const std::size_t> variable_order = {});

/// Whether some idempotent of A acts as a two-sided unit on rad^2. False when rad^2 = 0.
bool unit_on_rad_sq(const Subalgebra& a, const GroebnerOptions& opts = {});

Fingerprint fingerprint(const Subalgebra& a, const GroebnerOptions& opts = {});

struct SeparationRow {
  CanonLabel label;
  Fingerprint fp;
};

struct SeparationPair {
  CanonLabel a;
  CanonLabel b;
  std::vector<std::string> differing;  // empty means a collision
};

struct SeparationReport {
  std::vector<SeparationRow> rows;
  std::vector<SeparationPair> pairs;
  bool ok() const;
};

/// Fingerprints the canonical S of the given labels and compares every pair sharing
/// the same M. Throws SeparationFailure on a collision when throw_on_collision is set.
SeparationReport separate_catalog(std::span<const CanonLabel> labels, bool throw_on_collision = true);
SeparationReport separate_catalog(bool throw_on_collision = true);

std::string render_table(const SeparationReport& report);

}  // namespace matdecomp
