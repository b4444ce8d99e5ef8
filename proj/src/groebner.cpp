#include "matdecomp/groebner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace matdecomp {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) q[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial m{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) m[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

}  // namespace

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = kMaxVariables; i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Field& f, std::size_t nvars) : field_(f), nvars_(nvars) {
  if (nvars > kMaxVariables) fail(ErrorCode::TooManyVariables, std::to_string(nvars) + " variables");
}

Polynomial Polynomial::constant(const Field& f, std::size_t nvars, const FieldValue& c) {
  Polynomial p(f, nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, f.embed(c)});
  return p;
}

Polynomial Polynomial::variable(const Field& f, std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorCode::Internal, "variable index out of range");
  Polynomial p(f, nvars);
  Monomial m{};
  m[index] = 1;
  p.terms_.push_back({m, f.one()});
  return p;
}

bool Polynomial::is_nonzero_constant() const { return terms_.size() == 1 && total_degree(terms_[0].mono) == 0; }

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

Polynomial Polynomial::minus_scaled(const FieldValue& c, const Monomial& m, const Polynomial& g) const {
  Polynomial out(field_, nvars_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  while (it != terms_.end() || jt != g.terms_.end()) {
    if (jt == g.terms_.end()) {
      out.terms_.push_back(*it++);
      continue;
    }
    Monomial shifted = product(jt->mono, m);
    if (it == terms_.end() || grevlex_less(it->mono, shifted)) {
      out.terms_.push_back({shifted, -(c * jt->coef)});
      ++jt;
    } else if (grevlex_less(shifted, it->mono)) {
      out.terms_.push_back(*it++);
    } else {
      FieldValue v = it->coef - c * jt->coef;
      if (!v.is_zero()) out.terms_.push_back({shifted, std::move(v)});
      ++it;
      ++jt;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.minus_scaled(-a.field_.one(), Monomial{}, b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.minus_scaled(a.field_.one(), Monomial{}, b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::map<Monomial, FieldValue, GrevlexGreater> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Monomial m = product(x.mono, y.mono);
      auto [pos, inserted] = acc.try_emplace(m, x.coef * y.coef);
      if (!inserted) pos->second += x.coef * y.coef;
    }
  Polynomial out(a.field_, a.nvars_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

Polynomial operator*(const FieldValue& s, const Polynomial& a) {
  Polynomial out(a.field_, a.nvars_);
  if (s.is_zero()) return out;
  for (const auto& t : a.terms_) out.terms_.push_back({t.mono, s * t.coef});
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().coef.inv() * *this;
}

FieldValue Polynomial::evaluate(std::span<const FieldValue> point) const {
  if (point.size() != nvars_) fail(ErrorCode::Internal, "evaluation point has wrong arity");
  FieldValue acc = field_.zero();
  for (const auto& t : terms_) {
    FieldValue v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i]) v *= point[i].pow(t.mono[i]);
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) fail(ErrorCode::Internal, "permutation has wrong arity");
  std::map<Monomial, FieldValue, GrevlexGreater> acc;
  for (const auto& t : terms_) {
    Monomial m{};
    for (std::size_t i = 0; i < nvars_; ++i) m[perm[i]] = t.mono[i];
    acc.emplace(m, t.coef);
  }
  Polynomial out(field_, nvars_);
  for (auto& [m, c] : acc) out.terms_.push_back({m, c});
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    os << (k ? " + " : "");
    bool first = true;
    if (!t.coef.is_one() || total_degree(t.mono) == 0) {
      os << "(" << t.coef.to_string() << ")";
      first = false;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t.mono[i]) continue;
      os << (first ? "" : "*") << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      first = false;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Groebner bases

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g) {
  Polynomial p = f;
  Polynomial r(f.field(), f.nvars());
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& q : g)
      if (!q.is_zero() && divides(q.leading().mono, lt.mono)) {
        divisor = &q;
        break;
      }
    if (divisor) {
      p = p.minus_scaled(lt.coef / divisor->leading().coef, quotient(lt.mono, divisor->leading().mono), *divisor);
    } else {
      // leading terms leave p in decreasing order, so appending keeps r sorted
      r.terms_.push_back(lt);
      p.terms_.erase(p.terms_.begin());
    }
  }
  return r;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const GroebnerOptions& opts) {
  std::vector<Polynomial> g;
  for (auto& p : gens) {
    if (p.is_zero()) continue;
    if (p.is_nonzero_constant()) return {p.monic()};
    g.push_back(p.monic());
  }
  if (g.empty()) return g;
  const Field field = g.front().field();
  const std::size_t nvars = g.front().nvars();

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g[i].is_zero()) continue;
      const auto &a = g[i].leading().mono, &b = g[j].leading().mono;
      if (coprime(a, b)) continue;  // Buchberger's first criterion
      pairs.push_back({i, j, lcm(a, b)});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm first, ties by insertion order
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& x, const Pair& y) { return grevlex_less(x.lcm, y.lcm); });
    Pair pr = *best;
    pairs.erase(best);
    if (g[pr.i].is_zero() || g[pr.j].is_zero()) continue;
    if (++reductions > opts.max_reductions)
      fail(ErrorCode::BudgetExceeded, "more than " + std::to_string(opts.max_reductions) + " S-polynomial reductions");

    const Polynomial& a = g[pr.i];
    const Polynomial& b = g[pr.j];
    Polynomial s = Polynomial::constant(field, nvars, field.zero())
                       .minus_scaled(-field.one(), quotient(pr.lcm, a.leading().mono), a)
                       .minus_scaled(field.one(), quotient(pr.lcm, b.leading().mono), b);
    Polynomial h = normal_form(s, g);
    if (h.is_zero()) continue;
    if (h.is_nonzero_constant()) return {h.monic()};
    g.push_back(h.monic());
    add_pairs_for(g.size() - 1);
  }

  // minimal basis, then interreduce
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto &li = g[i].leading().mono, &lj = g[j].leading().mono;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& x, const Polynomial& y) { return grevlex_less(x.leading().mono, y.leading().mono); });
  return reduced;
}

// ---------------------------------------------------------------------------
// PolySystem

PolySystem::PolySystem(const Field& f, std::vector<std::string> variables) : field_(f), vars_(std::move(variables)) {
  if (vars_.size() > kMaxVariables)
    fail(ErrorCode::TooManyVariables, std::to_string(vars_.size()) + " > " + std::to_string(kMaxVariables));
}

void PolySystem::add(Polynomial eq) {
  if (eq.nvars() != vars_.size()) fail(ErrorCode::Internal, "equation arity does not match the system");
  if (eq.field() != field_) fail(ErrorCode::DescriptorMismatch, eq.field().name() + " vs " + field_.name());
  if (eq.degree() > kMaxDegree)
    fail(ErrorCode::DegreeTooHigh, "degree " + std::to_string(eq.degree()) + " exceeds " + std::to_string(kMaxDegree));
  eqs_.push_back(std::move(eq));
}

void PolySystem::add_field_equations() {
  const std::uint64_t q = field_.cardinality();
  if (q == 0) fail(ErrorCode::InvalidField, "field equations need a finite field");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    Monomial m{};
    m[i] = static_cast<std::uint16_t>(q);
    Polynomial xq = Polynomial::constant(field_, vars_.size(), field_.zero())
                        .minus_scaled(-field_.one(), m, constant(field_.one()));
    eqs_.push_back(xq - var(i));
  }
}

bool is_consistent(const PolySystem& sys, const GroebnerOptions& opts) {
  const auto gb = groebner_basis(sys.equations(), opts);
  for (const auto& p : gb)
    if (p.is_nonzero_constant()) return false;
  return true;
}

}  // namespace matdecomp
