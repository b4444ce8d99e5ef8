#include "matdecomp/field.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace matdecomp {

struct Field::Impl {
  FieldKind kind = FieldKind::rational;
  std::int64_t p = 0;  // characteristic
  std::optional<Field> base;    // quadratic only
  std::optional<FieldValue> d;  // quadratic only
};

struct FieldValue::QuadParts {
  FieldValue a;
  FieldValue b;
};

namespace {

const std::shared_ptr<const Field::Impl>& rational_impl() {
  static const auto impl = std::make_shared<const Field::Impl>();
  return impl;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_reduce(a, p);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return mod_reduce(t, p);
}

// Tonelli-Shanks; assumes a is a nonzero quadratic residue and p odd.
std::int64_t mod_sqrt(std::int64_t a, std::int64_t p) {
  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = mod_pow(z, q, p);
  std::int64_t t = mod_pow(a, q, p);
  std::int64_t r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t tt = t;
    while (tt != 1) {
      tt = mod_mul(tt, tt, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mod_mul(b, b, p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return std::min(r, p - r);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(trim(text));
  if (s.empty()) fail(ErrorCode::Parse, "empty scalar");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (s[0] == '+') s.erase(0, 1), start = 0;
  int slashes = 0;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      ++slashes;
      if (i == start || i + 1 == s.size()) fail(ErrorCode::Parse, "malformed rational '" + s + "'");
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      fail(ErrorCode::Parse, "malformed rational '" + s + "'");
    }
  }
  if (slashes > 1 || start == s.size()) fail(ErrorCode::Parse, "malformed rational '" + s + "'");
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::Parse, "malformed rational '" + s + "'");
  }
  if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

void require_same(const Field& a, const Field& b) {
  if (a != b) fail(ErrorCode::DescriptorMismatch, a.name() + " vs " + b.name());
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f <= n / f; f += 2)
    if (n % f == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field::Field() : impl_(rational_impl()) {}

Field Field::rational() { return Field(); }

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 62)) fail(ErrorCode::InvalidField, "modulus too large");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::prime;
  impl->p = p;
  return Field(std::move(impl));
}

Field Field::quadratic(const Field& base, const FieldValue& d) {
  if (base.kind() != FieldKind::rational && base.kind() != FieldKind::quadratic &&
      base.kind() != FieldKind::prime)
    fail(ErrorCode::InvalidField, "unknown base field");
  FieldValue dd = base.embed(d);
  if (dd.is_zero()) fail(ErrorCode::AlreadySquare, "radicand is zero");
  if (dd.try_sqrt()) fail(ErrorCode::AlreadySquare, dd.to_string() + " is already a square in " + base.name());
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::quadratic;
  impl->p = base.characteristic();
  impl->base = base;
  impl->d = dd;
  return Field(std::move(impl));
}

FieldKind Field::kind() const noexcept { return impl_->kind; }
std::int64_t Field::characteristic() const noexcept { return impl_->p; }

std::uint64_t Field::cardinality() const noexcept {
  switch (kind()) {
    case FieldKind::rational:
      return 0;
    case FieldKind::prime:
      return static_cast<std::uint64_t>(impl_->p);
    case FieldKind::quadratic: {
      std::uint64_t b = (*impl_->base).cardinality();
      if (b == 0 || b > (std::uint64_t{1} << 31)) return 0;
      return b * b;
    }
  }
  return 0;
}

const Field& Field::base() const {
  if (kind() != FieldKind::quadratic) fail(ErrorCode::InvalidField, name() + " has no base field");
  return (*impl_->base);
}

const FieldValue& Field::radicand() const {
  if (kind() != FieldKind::quadratic) fail(ErrorCode::InvalidField, name() + " has no radicand");
  return (*impl_->d);
}

FieldValue Field::zero() const { return from_int(0); }
FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(std::int64_t n) const {
  switch (kind()) {
    case FieldKind::rational:
      return FieldValue(*this, mpq_class(static_cast<long>(n)));
    case FieldKind::prime:
      return FieldValue(*this, mod_reduce(n, impl_->p));
    case FieldKind::quadratic:
      return FieldValue(*this, std::make_shared<const FieldValue::QuadParts>(
                                   FieldValue::QuadParts{(*impl_->base).from_int(n), (*impl_->base).zero()}));
  }
  return {};
}

FieldValue Field::from_rational(const mpq_class& q) const {
  switch (kind()) {
    case FieldKind::rational: {
      mpq_class c = q;
      c.canonicalize();
      return FieldValue(*this, c);
    }
    case FieldKind::prime: {
      mpz_class pm(static_cast<long>(impl_->p));
      mpz_class num = q.get_num() % pm;
      mpz_class den = q.get_den() % pm;
      if (den == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(impl_->p));
      std::int64_t n = mod_reduce(num.get_si(), impl_->p);
      std::int64_t d = mod_reduce(den.get_si(), impl_->p);
      return FieldValue(*this, mod_mul(n, mod_inv(d, impl_->p), impl_->p));
    }
    case FieldKind::quadratic:
      return embed((*impl_->base).from_rational(q));
  }
  return {};
}

bool Field::contains_subfield(const Field& sub) const {
  if (*this == sub) return true;
  return kind() == FieldKind::quadratic && (*impl_->base).contains_subfield(sub);
}

FieldValue Field::embed(const FieldValue& x) const {
  if (x.field() == *this) return x;
  if (kind() == FieldKind::quadratic && (*impl_->base).contains_subfield(x.field()))
    return FieldValue(*this, std::make_shared<const FieldValue::QuadParts>(
                                 FieldValue::QuadParts{(*impl_->base).embed(x), (*impl_->base).zero()}));
  fail(ErrorCode::DescriptorMismatch, "cannot embed " + x.field().name() + " into " + name());
}

FieldValue Field::from_parts(const FieldValue& a, const FieldValue& b) const {
  if (kind() != FieldKind::quadratic) fail(ErrorCode::InvalidField, name() + " is not a quadratic extension");
  return FieldValue(*this, std::make_shared<const FieldValue::QuadParts>(
                               FieldValue::QuadParts{(*impl_->base).embed(a), (*impl_->base).embed(b)}));
}

std::vector<FieldValue> Field::elements() const {
  std::vector<FieldValue> out;
  switch (kind()) {
    case FieldKind::rational:
      fail(ErrorCode::InvalidField, "Q has no finite element list");
    case FieldKind::prime:
      for (std::int64_t r = 0; r < impl_->p; ++r) out.push_back(FieldValue(*this, r));
      break;
    case FieldKind::quadratic: {
      auto base_elems = (*impl_->base).elements();
      for (const auto& b : base_elems)
        for (const auto& a : base_elems)
          out.push_back(FieldValue(*this, std::make_shared<const FieldValue::QuadParts>(FieldValue::QuadParts{a, b})));
      break;
    }
  }
  return out;
}

FieldValue Field::parse(std::string_view text) const {
  std::string_view s = strip_parens(text);
  switch (kind()) {
    case FieldKind::rational:
      return from_rational(parse_rational(s));
    case FieldKind::prime:
      return from_rational(parse_rational(s));
    case FieldKind::quadratic:
      break;
  }
  // a+b*sqrt(d), b*sqrt(d), or a plain base element.
  if (!s.empty() && s.back() == ')') {
    int depth = 0;
    std::size_t open = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 0;) {
      if (s[i] == ')') ++depth;
      if (s[i] == '(' && --depth == 0) {
        open = i;
        break;
      }
    }
    constexpr std::string_view marker = "*sqrt";
    if (open != std::string_view::npos && open >= marker.size() &&
        s.substr(open - marker.size(), marker.size()) == marker) {
      FieldValue d = (*impl_->base).parse(s.substr(open + 1, s.size() - open - 2));
      if (d != (*impl_->d))
        fail(ErrorCode::Parse, "radicand " + d.to_string() + " does not match field " + name());
      std::string_view prefix = s.substr(0, open - marker.size());
      std::size_t plus = std::string_view::npos;
      depth = 0;
      for (std::size_t i = 1; i < prefix.size(); ++i) {
        if (prefix[i] == '(') ++depth;
        if (prefix[i] == ')') --depth;
        if (depth == 0 && prefix[i] == '+') {
          plus = i;
          break;
        }
      }
      FieldValue a = (*impl_->base).zero();
      FieldValue b;
      if (plus == std::string_view::npos) {
        b = (*impl_->base).parse(prefix);
      } else {
        a = (*impl_->base).parse(prefix.substr(0, plus));
        b = (*impl_->base).parse(prefix.substr(plus + 1));
      }
      return FieldValue(*this, std::make_shared<const FieldValue::QuadParts>(FieldValue::QuadParts{a, b}));
    }
  }
  return embed((*impl_->base).parse(s));
}

std::string Field::name() const {
  switch (kind()) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::prime:
      return "F_" + std::to_string(impl_->p);
    case FieldKind::quadratic:
      return (*impl_->base).name() + "(sqrt(" + (*impl_->d).to_string() + "))";
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.kind() != b.kind() || a.characteristic() != b.characteristic()) return false;
  if (a.kind() != FieldKind::quadratic) return true;
  return *a.impl_->base == *b.impl_->base && *a.impl_->d == *b.impl_->d;
}

// ---------------------------------------------------------------------------
// FieldValue

FieldValue::FieldValue() : field_(), data_(mpq_class(0)) {}
FieldValue::FieldValue(Field f, mpq_class q) : field_(std::move(f)), data_(std::move(q)) {}
FieldValue::FieldValue(Field f, std::int64_t r) : field_(std::move(f)), data_(r) {}
FieldValue::FieldValue(Field f, std::shared_ptr<const QuadParts> parts)
    : field_(std::move(f)), data_(std::move(parts)) {}

const mpq_class& FieldValue::as_rational() const {
  if (field_.kind() != FieldKind::rational) fail(ErrorCode::DescriptorMismatch, "not a rational");
  return std::get<mpq_class>(data_);
}

std::int64_t FieldValue::as_residue() const {
  if (field_.kind() != FieldKind::prime) fail(ErrorCode::DescriptorMismatch, "not a prime-field element");
  return std::get<std::int64_t>(data_);
}

const FieldValue& FieldValue::quad_a() const {
  if (field_.kind() != FieldKind::quadratic) fail(ErrorCode::DescriptorMismatch, "not a quadratic element");
  return std::get<std::shared_ptr<const QuadParts>>(data_)->a;
}

const FieldValue& FieldValue::quad_b() const {
  if (field_.kind() != FieldKind::quadratic) fail(ErrorCode::DescriptorMismatch, "not a quadratic element");
  return std::get<std::shared_ptr<const QuadParts>>(data_)->b;
}

bool FieldValue::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return sgn(std::get<mpq_class>(data_)) == 0;
    case FieldKind::prime:
      return std::get<std::int64_t>(data_) == 0;
    case FieldKind::quadratic:
      return quad_a().is_zero() && quad_b().is_zero();
  }
  return false;
}

bool FieldValue::is_one() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return std::get<mpq_class>(data_) == 1;
    case FieldKind::prime:
      return std::get<std::int64_t>(data_) == 1;
    case FieldKind::quadratic:
      return quad_a().is_one() && quad_b().is_zero();
  }
  return false;
}

FieldValue FieldValue::operator-() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return FieldValue(field_, mpq_class(-std::get<mpq_class>(data_)));
    case FieldKind::prime: {
      std::int64_t r = std::get<std::int64_t>(data_);
      return FieldValue(field_, r == 0 ? 0 : field_.characteristic() - r);
    }
    case FieldKind::quadratic:
      return FieldValue(field_, std::make_shared<const QuadParts>(QuadParts{-quad_a(), -quad_b()}));
  }
  return {};
}

FieldValue operator+(const FieldValue& x, const FieldValue& y) {
  require_same(x.field_, y.field_);
  switch (x.field_.kind()) {
    case FieldKind::rational:
      return FieldValue(x.field_, mpq_class(std::get<mpq_class>(x.data_) + std::get<mpq_class>(y.data_)));
    case FieldKind::prime: {
      std::int64_t p = x.field_.characteristic();
      std::int64_t s = std::get<std::int64_t>(x.data_) + std::get<std::int64_t>(y.data_);
      return FieldValue(x.field_, s >= p ? s - p : s);
    }
    case FieldKind::quadratic:
      return FieldValue(x.field_, std::make_shared<const FieldValue::QuadParts>(
                                      FieldValue::QuadParts{x.quad_a() + y.quad_a(), x.quad_b() + y.quad_b()}));
  }
  return {};
}

FieldValue operator-(const FieldValue& x, const FieldValue& y) { return x + (-y); }

FieldValue operator*(const FieldValue& x, const FieldValue& y) {
  require_same(x.field_, y.field_);
  switch (x.field_.kind()) {
    case FieldKind::rational:
      return FieldValue(x.field_, mpq_class(std::get<mpq_class>(x.data_) * std::get<mpq_class>(y.data_)));
    case FieldKind::prime:
      return FieldValue(x.field_, mod_mul(std::get<std::int64_t>(x.data_), std::get<std::int64_t>(y.data_),
                                          x.field_.characteristic()));
    case FieldKind::quadratic: {
      const FieldValue& d = x.field_.radicand();
      const FieldValue &a = x.quad_a(), &b = x.quad_b(), &c = y.quad_a(), &e = y.quad_b();
      return FieldValue(x.field_, std::make_shared<const FieldValue::QuadParts>(
                                      FieldValue::QuadParts{a * c + d * b * e, a * e + b * c}));
    }
  }
  return {};
}

FieldValue FieldValue::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  switch (field_.kind()) {
    case FieldKind::rational:
      return FieldValue(field_, mpq_class(1 / std::get<mpq_class>(data_)));
    case FieldKind::prime:
      return FieldValue(field_, mod_inv(std::get<std::int64_t>(data_), field_.characteristic()));
    case FieldKind::quadratic: {
      // (a + b r)^-1 = (a - b r) / (a^2 - d b^2)
      const FieldValue &a = quad_a(), &b = quad_b();
      FieldValue norm_inv = (a * a - field_.radicand() * b * b).inv();
      return FieldValue(field_, std::make_shared<const QuadParts>(QuadParts{a * norm_inv, -b * norm_inv}));
    }
  }
  return {};
}

FieldValue operator/(const FieldValue& x, const FieldValue& y) {
  require_same(x.field_, y.field_);
  return x * y.inv();
}

FieldValue FieldValue::pow(unsigned e) const {
  FieldValue result = field_.one();
  FieldValue base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldValue& x, const FieldValue& y) {
  if (x.field_ != y.field_) {
    if (x.field_.contains_subfield(y.field_)) return x == x.field_.embed(y);
    if (y.field_.contains_subfield(x.field_)) return y.field_.embed(x) == y;
    fail(ErrorCode::DescriptorMismatch, x.field_.name() + " vs " + y.field_.name());
  }
  switch (x.field_.kind()) {
    case FieldKind::rational:
      return std::get<mpq_class>(x.data_) == std::get<mpq_class>(y.data_);
    case FieldKind::prime:
      return std::get<std::int64_t>(x.data_) == std::get<std::int64_t>(y.data_);
    case FieldKind::quadratic:
      return x.quad_a() == y.quad_a() && x.quad_b() == y.quad_b();
  }
  return false;
}

std::optional<FieldValue> FieldValue::try_sqrt() const {
  if (is_zero()) return *this;
  switch (field_.kind()) {
    case FieldKind::rational: {
      const mpq_class& q = std::get<mpq_class>(data_);
      if (sgn(q) < 0) return std::nullopt;
      if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return std::nullopt;
      mpq_class r(sqrt(q.get_num()), sqrt(q.get_den()));
      r.canonicalize();
      return FieldValue(field_, r);
    }
    case FieldKind::prime: {
      std::int64_t p = field_.characteristic();
      std::int64_t a = std::get<std::int64_t>(data_);
      if (p == 2) return *this;
      if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
      return FieldValue(field_, mod_sqrt(a, p));
    }
    case FieldKind::quadratic: {
      const Field& base = field_.base();
      const FieldValue& d = field_.radicand();
      const FieldValue &a = quad_a(), &b = quad_b();
      if (b.is_zero()) {
        if (auto r = a.try_sqrt()) return field_.embed(*r);
        // (s sqrt d)^2 = s^2 d
        if (auto s = (a / d).try_sqrt())
          return FieldValue(field_, std::make_shared<const QuadParts>(QuadParts{base.zero(), *s}));
        return std::nullopt;
      }
      if (field_.characteristic() == 2) return std::nullopt;
      // (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 = (a +- sqrt(a^2 - d b^2)) / 2, y = b / 2x
      auto n = (a * a - d * b * b).try_sqrt();
      if (!n) return std::nullopt;
      const FieldValue two = base.from_int(2);
      for (const FieldValue& cand : {*n, -*n}) {
        auto x = ((a + cand) / two).try_sqrt();
        if (!x || x->is_zero()) continue;
        FieldValue y = b / (two * *x);
        FieldValue root(field_, std::make_shared<const QuadParts>(QuadParts{*x, y}));
        if (root * root == *this) return root;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string FieldValue::to_string() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return std::get<mpq_class>(data_).get_str();
    case FieldKind::prime:
      return std::to_string(std::get<std::int64_t>(data_));
    case FieldKind::quadratic: {
      const bool nested = field_.base().kind() == FieldKind::quadratic;
      auto wrap = [nested](const FieldValue& v) { return nested ? "(" + v.to_string() + ")" : v.to_string(); };
      if (quad_b().is_zero()) return wrap(quad_a());
      return wrap(quad_a()) + "+" + wrap(quad_b()) + "*sqrt(" + wrap(field_.radicand()) + ")";
    }
  }
  return "?";
}

Field extend_with_sqrt(const Field& desc, const FieldValue& d) {
  if (d.is_zero()) fail(ErrorCode::AlreadySquare, "zero has a square root");
  return Field::quadratic(desc, d);
}

}  // namespace matdecomp
