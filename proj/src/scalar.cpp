#include "nakayama/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "nakayama/expr.hpp"

namespace nakayama {

using detail::Number;
using detail::RatFunc;
using detail::UPoly;

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division with remainder over Q; b nonzero.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const mpq_class& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// --- Q(zeta_n) --------------------------------------------------------------

Number num_zero(int n) { return Number(euler_phi(n), 0); }

Number num_from(const mpq_class& q, int n) {
  Number r = num_zero(n);
  r[0] = q;
  return r;
}

bool num_is_zero(const Number& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

bool num_is_rational(const Number& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

Number num_add(Number a, const Number& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Number num_sub(Number a, const Number& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Number num_neg(Number a) {
  for (auto& c : a) c = -c;
  return a;
}

Number reduce_mod_phi(const QPoly& p, int n) {
  const QPoly& phi = cyclotomic_polynomial(n);
  Number r = num_zero(n);
  QPoly rem = p.size() >= phi.size() ? qp_divmod(p, phi).second : p;
  for (std::size_t i = 0; i < rem.size(); ++i) r[i] = rem[i];
  return r;
}

Number num_mul(const Number& a, const Number& b, int n) {
  if (a.size() == 1) return {a[0] * b[0]};
  QPoly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  trim(pa);
  trim(pb);
  return reduce_mod_phi(qp_mul(pa, pb), n);
}

Number num_inv(const Number& a, int n) {
  if (num_is_zero(a)) throw DivisionByZero();
  if (a.size() == 1) return {1 / a[0]};
  // extended Euclid: s*a + u*phi = 1
  QPoly r0 = cyclotomic_polynomial(n), r1(a.begin(), a.end());
  trim(r1);
  QPoly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = qp_divmod(r0, r1);
    QPoly s2 = qp_sub(s0, qp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible
  NAKAYAMA_ASSERT(r0.size() == 1, "cyclotomic inverse: gcd not constant");
  mpq_class c = r0[0];
  for (auto& x : s0) x /= c;
  return reduce_mod_phi(s0, n);
}

// --- Q(zeta_n)[t] -----------------------------------------------------------

void trim(UPoly& p) {
  while (!p.empty() && num_is_zero(p.back())) p.pop_back();
}

UPoly up_const(const Number& c) {
  if (num_is_zero(c)) return {};
  return {c};
}

UPoly up_add(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Number(b.front().size(), 0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = num_add(std::move(a[i]), b[i]);
  trim(a);
  return a;
}

UPoly up_neg(UPoly a) {
  for (auto& c : a) c = num_neg(std::move(c));
  return a;
}

UPoly up_mul(const UPoly& a, const UPoly& b, int n) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, num_zero(n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (num_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = num_add(std::move(r[i + j]), num_mul(a[i], b[j], n));
  }
  trim(r);
  return r;
}

UPoly up_scale(UPoly a, const Number& c, int n) {
  for (auto& x : a) x = num_mul(x, c, n);
  trim(a);
  return a;
}

std::pair<UPoly, UPoly> up_divmod(UPoly a, const UPoly& b, int n) {
  NAKAYAMA_ASSERT(!b.empty(), "polynomial division by zero");
  trim(a);
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, num_zero(n));
  Number lead_inv = num_inv(b.back(), n);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Number c = num_mul(a.back(), lead_inv, n);
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = num_sub(std::move(a[shift + j]), num_mul(c, b[j], n));
    q[shift] = std::move(c);
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly up_monic(UPoly a, int n) {
  if (a.empty()) return a;
  return up_scale(std::move(a), num_inv(a.back(), n), n);
}

UPoly up_gcd(UPoly a, UPoly b, int n) {
  while (!b.empty()) {
    UPoly r = up_divmod(a, b, n).second;
    a = std::move(b);
    b = std::move(r);
  }
  return up_monic(std::move(a), n);
}

bool up_is_one(const UPoly& p) {
  if (p.size() != 1 || !num_is_rational(p[0])) return false;
  return p[0][0] == 1;
}

RatFunc normalize(UPoly num, UPoly den, int n) {
  if (den.empty()) throw DivisionByZero();
  if (num.empty()) return {{}, {num_from(1, n)}};
  if (den.size() == 1) {
    Number inv = num_inv(den[0], n);
    return {up_scale(std::move(num), inv, n), {num_from(1, n)}};
  }
  if (num.size() > 1) {
    UPoly g = up_gcd(num, den, n);
    if (g.size() > 1) {
      num = up_divmod(num, g, n).first;
      den = up_divmod(den, g, n).first;
    }
  }
  Number inv = num_inv(den.back(), n);
  return {up_scale(std::move(num), inv, n), up_scale(std::move(den), inv, n)};
}

bool is_const_fn(const RatFunc& r) { return r.num.size() <= 1 && r.den.size() == 1; }

// --- printing ---------------------------------------------------------------

std::string q_str(const mpq_class& q) { return q.get_str(); }

// Terms of a Number as (coefficient, power of z), highest power first.
std::string number_str(const Number& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] == 0) continue;
    mpq_class c = a[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << q_str(c);
      continue;
    }
    if (c != 1) os << q_str(c) << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

std::size_t number_terms(const Number& a) {
  std::size_t k = 0;
  for (const auto& c : a)
    if (c != 0) ++k;
  return k;
}

// Polynomial in t with exponents shifted by `shift` (for Laurent printing).
std::string upoly_str(const UPoly& p, long shift) {
  std::ostringstream os;
  bool first = true;
  std::size_t nonzero = 0;
  for (const auto& c : p)
    if (!num_is_zero(c)) ++nonzero;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Number& c = p[k];
    if (num_is_zero(c)) continue;
    long e = static_cast<long>(k) + shift;
    std::string cs = number_str(c);
    bool neg = false;
    if (number_terms(c) == 1 && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool compound = number_terms(c) > 1;
    if (e == 0) {
      os << (compound && nonzero > 1 ? "(" + cs + ")" : cs);
      continue;
    }
    if (cs != "1") os << (compound ? "(" + cs + ")" : cs) << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  if (first) return "0";
  return os.str();
}

std::size_t upoly_terms(const UPoly& p) {
  std::size_t k = 0;
  for (const auto& c : p)
    if (!num_is_zero(c)) k += number_terms(c);
  return k;
}

}  // namespace

// --- cyclotomic polynomials -------------------------------------------------

const std::vector<mpq_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  static std::map<int, std::vector<mpq_class>> cache;
  {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d
  QPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const QPoly& phd = cyclotomic_polynomial(d);
    auto [q, r] = qp_divmod(p, phd);
    NAKAYAMA_ASSERT(r.empty(), "cyclotomic division not exact");
    p = std::move(q);
  }
  std::lock_guard<std::mutex> lock(phi_mutex());
  return cache.emplace(n, std::move(p)).first->second;
}

// --- Field ------------------------------------------------------------------

Field Field::cyclotomic(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  return Field(n, false);
}

Field::Kind Field::kind() const {
  if (has_t_) return Kind::RationalFunctions;
  if (order_ > 0) return Kind::Cyclotomic;
  return Kind::Rationals;
}

int Field::extension_degree() const { return euler_phi(modulus_order()); }

std::string Field::name() const {
  std::string base = order_ > 0 ? "Q(z" + std::to_string(order_) + ")" : "Q";
  if (!has_t_) return base;
  return order_ > 0 ? base + "(t)" : "Qt";
}

// --- Scalar -----------------------------------------------------------------

Scalar::Scalar() : Scalar(Field::rationals(), RatFunc{{}, {Number{1}}}) {}

Scalar::Scalar(long v) : Scalar(mpq_class(v)) {}

Scalar::Scalar(const mpq_class& q) : Scalar(rational(Field::rationals(), q)) {}

Scalar Scalar::zero(const Field& f) { return rational(f, 0); }
Scalar Scalar::one(const Field& f) { return rational(f, 1); }
Scalar Scalar::integer(const Field& f, long v) { return rational(f, v); }

Scalar Scalar::rational(const Field& f, const mpq_class& q) {
  int n = f.modulus_order();
  mpq_class c = q;
  c.canonicalize();  // callers may pass e.g. mpq_class(2, 4)
  return Scalar(f, RatFunc{up_const(num_from(c, n)), {num_from(1, n)}});
}

Scalar Scalar::t(const Field& f) {
  if (!f.has_t()) throw FieldMismatch("t requires a rational-function field, field is " + f.name());
  int n = f.modulus_order();
  return Scalar(f, RatFunc{{num_zero(n), num_from(1, n)}, {num_from(1, n)}});
}

Scalar Scalar::z(const Field& f) {
  if (!f.has_z()) throw FieldMismatch("z requires cyclotomic field, field is " + f.name());
  int n = f.modulus_order();
  QPoly zp{0, 1};
  return Scalar(f, RatFunc{up_const(reduce_mod_phi(zp, n)), {num_from(1, n)}});
}

bool Scalar::is_one() const { return value_.den.size() == 1 && up_is_one(value_.num); }

bool Scalar::is_constant() const { return is_const_fn(value_); }

std::optional<mpq_class> Scalar::as_rational() const {
  if (!is_constant()) return std::nullopt;
  if (value_.num.empty()) return mpq_class(0);
  if (!num_is_rational(value_.num[0])) return std::nullopt;
  return value_.num[0][0];
}

Field Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return a.field_;
  if (a.field_ == Field::rationals()) return b.field_;
  if (b.field_ == Field::rationals()) return a.field_;
  throw FieldMismatch("mixed fields " + a.field_.name() + " and " + b.field_.name());
}

Scalar Scalar::in_field(const Field& f) const {
  if (field_ == f) return *this;
  if (!(field_ == Field::rationals()))
    throw FieldMismatch("cannot move " + field_.name() + " element into " + f.name());
  if (is_zero()) return zero(f);
  return rational(f, value_.num[0][0]);
}

Scalar Scalar::constant_in(const Field& base) const {
  if (!is_constant()) throw InvalidArgument("element depends on t");
  if (base.modulus_order() != field_.modulus_order() && !is_zero() && !num_is_rational(value_.num[0]))
    throw FieldMismatch("constant does not lie in " + base.name());
  if (base.modulus_order() == field_.modulus_order()) return Scalar(base, value_);
  return is_zero() ? zero(base) : rational(base, value_.num[0][0]);
}

Scalar Scalar::operator-() const { return Scalar(field_, RatFunc{up_neg(value_.num), value_.den}); }

Scalar Scalar::operator+(const Scalar& o) const {
  Field f = common_field(*this, o);
  Scalar a = in_field(f), b = o.in_field(f);
  int n = f.modulus_order();
  if (is_const_fn(a.value_) && is_const_fn(b.value_)) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Scalar(f, RatFunc{up_const(num_add(a.value_.num[0], b.value_.num[0])), a.value_.den});
  }
  if (a.value_.den == b.value_.den) return Scalar(f, normalize(up_add(a.value_.num, b.value_.num), a.value_.den, n));
  UPoly num = up_add(up_mul(a.value_.num, b.value_.den, n), up_mul(b.value_.num, a.value_.den, n));
  return Scalar(f, normalize(std::move(num), up_mul(a.value_.den, b.value_.den, n), n));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Field f = common_field(*this, o);
  Scalar a = in_field(f), b = o.in_field(f);
  int n = f.modulus_order();
  if (a.is_zero() || b.is_zero()) return zero(f);
  if (is_const_fn(a.value_) && is_const_fn(b.value_))
    return Scalar(f, RatFunc{up_const(num_mul(a.value_.num[0], b.value_.num[0], n)), a.value_.den});
  return Scalar(f, normalize(up_mul(a.value_.num, b.value_.num, n), up_mul(a.value_.den, b.value_.den, n), n));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  int n = field_.modulus_order();
  return Scalar(field_, normalize(value_.den, value_.num, n));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return *this * o.inverse();
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result = one(field_), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  Field f = common_field(*this, o);
  Scalar a = in_field(f), b = o.in_field(f);
  return a.value_.num == b.value_.num && a.value_.den == b.value_.den;
}

std::string Scalar::to_string() const {
  const UPoly& num = value_.num;
  const UPoly& den = value_.den;
  if (num.empty()) return "0";
  if (den.size() == 1) return upoly_str(num, 0);
  // monic monomial denominator t^k: print as a Laurent polynomial
  bool monomial = true;
  for (std::size_t i = 0; i + 1 < den.size(); ++i)
    if (!num_is_zero(den[i])) monomial = false;
  if (monomial) return upoly_str(num, -static_cast<long>(den.size() - 1));
  std::string ns = upoly_str(num, 0);
  if (upoly_terms(num) > 1) ns = "(" + ns + ")";
  return ns + "/(" + upoly_str(den, 0) + ")";
}

namespace {

struct ScalarPolicy {
  Field field;

  Scalar integer(const mpz_class& v, const expr::Token&) { return Scalar::rational(field, mpq_class(v)); }
  Scalar ident(const expr::Token& tok) {
    try {
      if (tok.text == "t") return Scalar::t(field);
      if (tok.text == "z") return Scalar::z(field);
    } catch (const FieldMismatch& e) {
      throw ParseError(e.what(), tok.line, tok.column);
    }
    throw ParseError("unknown scalar symbol '" + tok.text + "'", tok.line, tok.column);
  }
  Scalar add(Scalar a, Scalar b) { return a + b; }
  Scalar sub(Scalar a, Scalar b) { return a - b; }
  Scalar mul(Scalar a, Scalar b) { return a * b; }
  Scalar neg(Scalar a) { return -a; }
  Scalar div(Scalar a, Scalar b, const expr::Token& tok) {
    if (b.is_zero()) throw ParseError("division by zero", tok.line, tok.column);
    return a / b;
  }
  Scalar power(Scalar a, long k, const expr::Token& tok) {
    if (k < 0 && a.is_zero()) throw ParseError("zero to a negative power", tok.line, tok.column);
    return a.pow(k);
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const Field& f) {
  ScalarPolicy policy{f};
  return expr::parse_whole(text, policy);
}

// Roots of unity in Q(zeta_n) form a cyclic group generated by z (n even) or
// -z (n odd); in Q(zeta_n)(t) only constants can have finite order.
std::optional<long> multiplicative_order(const Scalar& s) {
  if (s.is_zero()) throw InvalidArgument("multiplicative order of zero");
  if (!s.is_constant()) return std::nullopt;
  const Field& f = s.field();
  Field base = f.has_z() ? Field::cyclotomic(f.cyclotomic_order()) : Field::rationals();
  int n = f.modulus_order();
  long m = n % 2 == 0 ? n : 2L * n;
  Scalar w = f.has_z() ? (n % 2 == 0 ? Scalar::z(base) : -Scalar::z(base)) : Scalar::integer(base, -1);
  Scalar target = s.constant_in(base);
  Scalar p = Scalar::one(base);
  for (long k = 0; k < m; ++k) {
    if (p == target) return m / std::gcd(m, k == 0 ? m : k);
    p *= w;
  }
  return std::nullopt;
}

}  // namespace nakayama
