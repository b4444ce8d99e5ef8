#include "matdecomp/fingerprint.hpp"

#include <numeric>
#include <sstream>

#include "matdecomp/canonical.hpp"

namespace matdecomp {

namespace {

std::vector<std::size_t> order_or_identity(std::span<const std::size_t> order, std::size_t n) {
  if (order.empty()) {
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  if (order.size() != n) fail(ErrorCode::Internal, "variable order has wrong length");
  return {order.begin(), order.end()};
}

void require_char0(const Subalgebra& a) {
  if (a.field().characteristic() != 0)
    fail(ErrorCode::BadCharacteristic, "idempotent existence is decided over characteristic 0 only");
}

// x = sum_i c_{order[i]} b_i, returned as its 9 matrix coordinates (linear polynomials).
std::array<Polynomial, 9> generic_element(const PolySystem& sys, const Subalgebra& a,
                                          const std::vector<std::size_t>& order) {
  std::array<Polynomial, 9> out{Polynomial(sys.field(), sys.nvars()), Polynomial(sys.field(), sys.nvars()),
                                Polynomial(sys.field(), sys.nvars()), Polynomial(sys.field(), sys.nvars()),
                                Polynomial(sys.field(), sys.nvars()), Polynomial(sys.field(), sys.nvars()),
                                Polynomial(sys.field(), sys.nvars()), Polynomial(sys.field(), sys.nvars()),
                                Polynomial(sys.field(), sys.nvars())};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < 9; ++k) {
      const FieldValue& v = a.basis()[i].coord(k);
      if (!v.is_zero()) out[k] = out[k] + v * sys.var(order[i]);
    }
  return out;
}

std::vector<std::string> coordinate_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i + 1));
  return names;
}

}  // namespace

Fingerprint Fingerprint::transposed() const {
  Fingerprint t = *this;
  std::swap(t.rad_in_left_ann, t.rad_in_right_ann);
  return t;
}

std::vector<std::string> Fingerprint::differences(const Fingerprint& o) const {
  std::vector<std::string> d;
  if (dim != o.dim) d.emplace_back("dim");
  if (rad_dim != o.rad_dim) d.emplace_back("rad_dim");
  if (rad_sq_dim != o.rad_sq_dim) d.emplace_back("rad_sq_dim");
  if (ss_dim != o.ss_dim) d.emplace_back("ss_dim");
  if (center_dim != o.center_dim) d.emplace_back("center_dim");
  const bool same_ann = (rad_in_left_ann == o.rad_in_left_ann && rad_in_right_ann == o.rad_in_right_ann) ||
                        (rad_in_left_ann == o.rad_in_right_ann && rad_in_right_ann == o.rad_in_left_ann);
  if (!same_ann) d.emplace_back("annihilator_flags");
  if (idem_trace_set != o.idem_trace_set) d.emplace_back("idem_trace_set");
  if (unit_on_rad_sq != o.unit_on_rad_sq) d.emplace_back("unit_on_rad_sq");
  if (is_m2 != o.is_m2) d.emplace_back("is_m2");
  return d;
}

bool Fingerprint::same_orbit_invariants(const Fingerprint& other) const { return differences(other).empty(); }

PolySystem idempotent_system(const Subalgebra& a, int trace, std::span<const std::size_t> variable_order) {
  const std::size_t n = a.dim();
  const auto order = order_or_identity(variable_order, n);
  PolySystem sys(a.field(), coordinate_names(n));
  // x^2 - x = 0 via structure constants: sum_ij c_i c_j gamma_ijk - c_k
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial eq = -a.field().one() * sys.var(order[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const FieldValue& g = a.structure_constant(i, j, k);
        if (!g.is_zero()) eq = eq + g * (sys.var(order[i]) * sys.var(order[j]));
      }
    sys.add(std::move(eq));
  }
  Polynomial tr = sys.constant(-a.field().from_int(trace));
  for (std::size_t i = 0; i < n; ++i) {
    FieldValue t = a.basis()[i].trace();
    if (!t.is_zero()) tr = tr + t * sys.var(order[i]);
  }
  sys.add(std::move(tr));
  return sys;
}

std::vector<int> idempotent_trace_set(const Subalgebra& a, const GroebnerOptions& opts,
                                      std::span<const std::size_t> variable_order) {
  require_char0(a);
  std::vector<int> out;
  for (int r = 0; r <= 3; ++r)
    if (is_consistent(idempotent_system(a, r, variable_order), opts)) out.push_back(r);
  return out;
}

bool unit_on_rad_sq(const Subalgebra& a, const GroebnerOptions& opts) {
  require_char0(a);
  const Subspace rad2 = radical_square(a);
  if (rad2.dim() == 0) return false;
  const auto order = order_or_identity({}, a.dim());
  for (int r = 1; r <= 3; ++r) {
    PolySystem sys = idempotent_system(a, r);
    const auto u = generic_element(sys, a, order);
    for (const auto& z : rad2.basis()) {
      // u z - z and z u - z, entrywise
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Polynomial left = sys.constant(-z(i, j));
          Polynomial right = sys.constant(-z(i, j));
          for (int k = 0; k < 3; ++k) {
            if (!z(k, j).is_zero()) left = left + z(k, j) * u[coord_index(i, k)];
            if (!z(i, k).is_zero()) right = right + z(i, k) * u[coord_index(k, j)];
          }
          if (!left.is_zero()) sys.add(std::move(left));
          if (!right.is_zero()) sys.add(std::move(right));
        }
    }
    if (is_consistent(sys, opts)) return true;
  }
  return false;
}

Fingerprint fingerprint(const Subalgebra& a, const GroebnerOptions& opts) {
  Fingerprint fp;
  const Subspace rad = radical(a);
  const Subspace rad2 = radical_square(a);
  const auto ann = annihilators(a);
  fp.dim = a.dim();
  fp.rad_dim = rad.dim();
  fp.rad_sq_dim = rad2.dim();
  fp.ss_dim = fp.dim - fp.rad_dim;
  fp.center_dim = center(a).dim();
  fp.rad_in_left_ann = ann.left.contains(rad);
  fp.rad_in_right_ann = ann.right.contains(rad);
  fp.is_m2 = fp.dim == 4 && fp.rad_dim == 0 && fp.center_dim == 1;
  if (a.field().characteristic() == 0) {
    fp.idem_trace_set = idempotent_trace_set(a, opts);
    fp.unit_on_rad_sq = unit_on_rad_sq(a, opts);
  }
  return fp;
}

// ---------------------------------------------------------------------------

bool SeparationReport::ok() const {
  for (const auto& p : pairs)
    if (p.differing.empty()) return false;
  return true;
}

SeparationReport separate_catalog(std::span<const CanonLabel> labels, bool throw_on_collision) {
  SeparationReport report;
  for (auto l : labels) report.rows.push_back({l, fingerprint(catalog_entry(l).S())});
  for (std::size_t i = 0; i < report.rows.size(); ++i)
    for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
      const auto &x = report.rows[i], &y = report.rows[j];
      if (standard_m_of(x.label) != standard_m_of(y.label)) continue;
      report.pairs.push_back({x.label, y.label, x.fp.differences(y.fp)});
      if (throw_on_collision && report.pairs.back().differing.empty())
        fail(ErrorCode::SeparationFailure,
             std::string(to_string(x.label)) + " and " + std::string(to_string(y.label)) + " share a fingerprint");
    }
  return report;
}

SeparationReport separate_catalog(bool throw_on_collision) {
  return separate_catalog(std::span<const CanonLabel>(kAllLabels), throw_on_collision);
}

std::string render_table(const SeparationReport& report) {
  std::ostringstream os;
  os << "label  M    dim rad rad2 ss center leftann rightann idem       unit_rad2 M2\n";
  for (const auto& r : report.rows) {
    const auto& f = r.fp;
    std::string idem = "n/a";
    if (f.idem_trace_set) {
      idem = "{";
      for (std::size_t i = 0; i < f.idem_trace_set->size(); ++i)
        idem += (i ? "," : "") + std::to_string((*f.idem_trace_set)[i]);
      idem += "}";
    }
    std::string unit = f.unit_on_rad_sq ? (*f.unit_on_rad_sq ? "yes" : "no") : "n/a";
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %-4s %3zu %3zu %4zu %2zu %6zu %-7s %-8s %-10s %-9s %s\n",
                  std::string(to_string(r.label)).c_str(), std::string(to_string(standard_m_of(r.label))).c_str(),
                  f.dim, f.rad_dim, f.rad_sq_dim, f.ss_dim, f.center_dim, f.rad_in_left_ann ? "yes" : "no",
                  f.rad_in_right_ann ? "yes" : "no", idem.c_str(), unit.c_str(), f.is_m2 ? "yes" : "no");
    os << line;
  }
  os << "\n";
  for (const auto& p : report.pairs) {
    os << to_string(p.a) << " vs " << to_string(p.b) << ": ";
    if (p.differing.empty()) {
      os << "COLLISION\n";
      continue;
    }
    for (std::size_t i = 0; i < p.differing.size(); ++i) os << (i ? ", " : "") << p.differing[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace matdecomp
