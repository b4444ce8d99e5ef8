#include "matdecomp/ffsearch.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "matdecomp/canonical.hpp"

namespace matdecomp {

namespace {

using IMat = std::array<std::int64_t, 9>;

struct Layout {
  std::vector<std::size_t> pivots;  // pivots[j]: complement coordinate carried by v_j
  std::vector<std::size_t> free;    // coordinates of M
  std::vector<std::size_t> order;   // enumeration order of the v_j; order[0] carries the idempotent
};

Layout layout_of(StandardM m) {
  switch (m) {
    case StandardM::M6: return {{3, 6, 0}, {1, 2, 4, 5, 7, 8}, {2, 0, 1}};
    case StandardM::M5a: return {{3, 6, 7, 8}, {0, 1, 2, 4, 5}, {3, 0, 2, 1}};
    case StandardM::M5b: return {{3, 6, 7, 4}, {0, 1, 2, 5, 8}, {3, 0, 2, 1}};
  }
  fail(ErrorCode::Internal, "unknown M");
}

class Kernel {
 public:
  Kernel(std::int64_t p, StandardM m) : p_(p), lay_(layout_of(m)), k_(lay_.pivots.size()) {
    per_vector_ = 1;
    for (std::size_t i = 0; i < lay_.free.size(); ++i) per_vector_ *= static_cast<std::uint64_t>(p);
  }

  std::uint64_t per_vector() const { return per_vector_; }
  std::size_t k() const { return k_; }
  const Layout& layout() const { return lay_; }

  IMat vector(std::size_t j, std::uint64_t n) const {
    IMat v{};
    v[lay_.pivots[j]] = 1;
    for (auto c : lay_.free) {
      v[c] = static_cast<std::int64_t>(n % static_cast<std::uint64_t>(p_));
      n /= static_cast<std::uint64_t>(p_);
    }
    return v;
  }

  IMat mul(const IMat& a, const IMat& b) const {
    IMat c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < 3; ++l) s += a[i * 3 + l] * b[l * 3 + j];
        c[i * 3 + j] = s % p_;
      }
    return c;
  }

  /// Whether x's coefficients only involve chosen vectors.
  bool checkable(const IMat& x, const std::vector<bool>& chosen) const {
    for (std::size_t j = 0; j < k_; ++j)
      if (!chosen[j] && x[lay_.pivots[j]] != 0) return false;
    return true;
  }

  /// x == sum_j x[pivot_j] v_j over the chosen vectors.
  bool in_span(const IMat& x, const std::vector<IMat>& v, const std::vector<bool>& chosen) const {
    IMat y{};
    for (std::size_t j = 0; j < k_; ++j) {
      if (!chosen[j]) continue;
      const std::int64_t c = x[lay_.pivots[j]];
      if (c == 0) continue;
      for (std::size_t t = 0; t < 9; ++t) y[t] = (y[t] + c * v[j][t]) % p_;
    }
    return y == x;
  }

  /// Closure checks that become decidable once v[idx] joins the chosen set.
  bool new_checks_pass(std::size_t idx, const std::vector<IMat>& v, std::vector<bool>& chosen) const {
    std::vector<bool> before = chosen;
    before[idx] = false;
    chosen[idx] = true;
    for (std::size_t a = 0; a < k_; ++a) {
      if (!chosen[a]) continue;
      for (std::size_t b = 0; b < k_; ++b) {
        if (!chosen[b]) continue;
        const IMat x = mul(v[a], v[b]);
        const bool was = before[a] && before[b] && checkable(x, before);
        if (was || !checkable(x, chosen)) continue;
        if (!in_span(x, v, chosen)) return false;
      }
    }
    return true;
  }

  /// Full closure check with every vector chosen.
  bool closed(const std::vector<IMat>& v) const {
    const std::vector<bool> all(k_, true);
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = 0; b < k_; ++b)
        if (!in_span(mul(v[a], v[b]), v, all)) return false;
    return true;
  }

  /// The identity lies in S iff it equals the vector carrying the diagonal pivot.
  bool contains_identity(const std::vector<IMat>& v) const {
    const IMat e{1, 0, 0, 0, 1, 0, 0, 0, 1};
    for (std::size_t j = 0; j < k_; ++j)
      if (e[lay_.pivots[j]] == 1) return v[j] == e;
    return false;
  }

 private:
  std::int64_t p_;
  Layout lay_;
  std::size_t k_;
  std::uint64_t per_vector_ = 1;
};

struct Partial {
  std::uint64_t valid = 0;
  std::map<CanonLabel, std::uint64_t> hist;
  std::uint64_t ext = 0;
  std::map<CanonLabel, std::uint64_t> ext_hist;
  std::vector<std::string> failures;

  void merge_into(SearchReport& r) const {
    r.valid_decompositions += valid;
    for (auto [l, c] : hist) r.label_histogram[l] += c;
    r.extension_required += ext;
    for (auto [l, c] : ext_hist) r.extension_histogram[l] += c;
    r.failures.insert(r.failures.end(), failures.begin(), failures.end());
  }
};

std::string witness(const Decomposition& d) {
  std::string s = "S = span{";
  for (std::size_t i = 0; i < d.S().dim(); ++i) s += (i ? ", " : "") + d.S().basis()[i].to_string();
  return s + "}";
}

void classify(const Field& f, StandardM m, const std::vector<IMat>& v, Partial& out) {
  std::vector<Mat3> mats;
  for (const auto& x : v) {
    std::array<FieldValue, 9> c;
    for (std::size_t t = 0; t < 9; ++t) c[t] = f.from_int(x[t]);
    mats.push_back(Mat3::from_coords(f, c));
  }
  std::optional<Decomposition> d;
  try {
    d = Decomposition::validate(Subalgebra::make(f, mats), standard_m(m, f));
  } catch (const Error& e) {
    out.failures.push_back(std::string("validation: ") + e.what());
    return;
  }
  ++out.valid;
  auto check_label = [&](CanonLabel l) {
    if (!label_belongs_to(l, m))
      out.failures.push_back("UnexpectedLabel " + std::string(to_string(l)) + " for " + witness(*d));
  };
  try {
    CanonOptions strict;
    strict.allow_extension = false;
    const auto r = canonicalize(*d, strict);
    check_label(r.label);
    ++out.hist[r.label];
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RequiresExtension) {
      out.failures.push_back(std::string(error_code_name(e.code())) + ": " + e.what() + " at " + witness(*d));
      return;
    }
    ++out.ext;
    try {
      const auto r = canonicalize(*d);
      check_label(r.label);
      if (r.label != CanonLabel::B4 && r.label != CanonLabel::B9)
        out.failures.push_back("extension case landed on " + std::string(to_string(r.label)) + " at " + witness(*d));
      ++out.ext_hist[r.label];
    } catch (const Error& e2) {
      out.failures.push_back(std::string(error_code_name(e2.code())) + " after extension: " + e2.what() + " at " +
                             witness(*d));
    }
  }
}

void check_prime(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p > 101) fail(ErrorCode::InvalidField, "field too large for enumeration");
}

class BudgetCounter {
 public:
  explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}
  /// Adds n scans; false once the budget is exhausted.
  bool add(std::uint64_t n) {
    const std::uint64_t total = total_.fetch_add(n) + n;
    if (total > budget_) exceeded_ = true;
    return !exceeded_;
  }
  bool exceeded() const { return exceeded_; }
  std::uint64_t total() const { return total_; }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> total_{0};
  std::atomic<bool> exceeded_{false};
};

// Depth-first over the remaining levels with v[order[0]] fixed.
void descend(const Kernel& ker, const Field& f, StandardM m, std::size_t level, std::vector<IMat>& v,
             std::vector<bool>& chosen, BudgetCounter& budget, std::uint64_t& local, Partial& out) {
  const auto& order = ker.layout().order;
  if (level == ker.k()) {
    if (!ker.contains_identity(v)) classify(f, m, v, out);
    return;
  }
  const std::size_t idx = order[level];
  for (std::uint64_t n = 0; n < ker.per_vector(); ++n) {
    if (++local == 4096) {
      if (!budget.add(local)) return;
      local = 0;
    }
    v[idx] = ker.vector(idx, n);
    std::vector<bool> c = chosen;
    if (!ker.new_checks_pass(idx, v, c)) continue;
    descend(ker, f, m, level + 1, v, c, budget, local, out);
    if (budget.exceeded()) return;
  }
}

}  // namespace

bool SearchReport::ok() const { return failures.empty(); }

SearchReport search(std::int64_t p, StandardM m, const SearchOptions& opts) {
  check_prime(p);
  if (m != StandardM::M6 && p == 2)
    fail(ErrorCode::BadCharacteristic, "the 4+5 reductions complete a square; use an odd prime");
  const Field f = Field::prime(p);
  const Kernel ker(p, m);
  SearchReport report;
  report.field = f;
  report.m = m;
  BudgetCounter budget(opts.budget);

  // first level in the calling thread: the idempotent-bearing vector
  const std::size_t first = ker.layout().order[0];
  std::vector<IMat> firsts;
  for (std::uint64_t n = 0; n < ker.per_vector(); ++n) {
    if (!budget.add(1)) fail(ErrorCode::BudgetExceeded, "budget of " + std::to_string(opts.budget) + " exhausted");
    std::vector<IMat> v(ker.k());
    std::vector<bool> chosen(ker.k(), false);
    v[first] = ker.vector(first, n);
    if (ker.new_checks_pass(first, v, chosen)) firsts.push_back(v[first]);
  }

  std::vector<Partial> parts(firsts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::uint64_t local = 0;
    for (std::size_t i = next++; i < firsts.size() && !budget.exceeded(); i = next++) {
      std::vector<IMat> v(ker.k());
      std::vector<bool> chosen(ker.k(), false);
      chosen[first] = true;
      v[first] = firsts[i];
      descend(ker, f, m, 1, v, chosen, budget, local, parts[i]);
    }
    budget.add(local);
  };
  unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (budget.exceeded()) fail(ErrorCode::BudgetExceeded, "budget of " + std::to_string(opts.budget) + " exhausted");
  report.candidates_scanned = budget.total();
  for (const auto& part : parts) part.merge_into(report);
  return report;
}

SearchReport search63(std::int64_t p, const SearchOptions& opts) { return search(p, StandardM::M6, opts); }

SearchReport search54(std::int64_t p, StandardM m, const SearchOptions& opts) {
  if (m == StandardM::M6) fail(ErrorCode::UnsupportedM, "search54 takes M5a or M5b");
  return search(p, m, opts);
}

SearchReport sample_search(std::int64_t p, StandardM m, std::uint64_t n_samples, std::uint64_t seed) {
  check_prime(p);
  const Field f = Field::prime(p);
  const Kernel ker(p, m);
  SearchReport report;
  report.field = f;
  report.m = m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, ker.per_vector() - 1);
  Partial out;
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    std::vector<IMat> v(ker.k());
    for (std::size_t j = 0; j < ker.k(); ++j) v[j] = ker.vector(j, pick(rng));
    ++report.candidates_scanned;
    if (!ker.closed(v) || ker.contains_identity(v)) continue;
    classify(f, m, v, out);
  }
  out.merge_into(report);
  return report;
}

}  // namespace matdecomp
