#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/errors.hpp"

namespace nakayama {

/// An exact field of characteristic zero: Q, Q(zeta_n), Q(t) or Q(zeta_n)(t).
///
/// Q(zeta_n) is Q[z]/(Phi_n(z)); t is a single transcendental.
class Field {
 public:
  enum class Kind { Rationals, Cyclotomic, RationalFunctions };

  Field() = default;

  static Field rationals() { return Field(0, false); }
  static Field cyclotomic(int n);
  static Field rational_functions() { return Field(0, false).with_t(); }
  static Field rational_functions_cyclotomic(int n) { return cyclotomic(n).with_t(); }

  Kind kind() const;
  bool has_t() const { return has_t_; }
  bool has_z() const { return order_ > 0; }
  // Cyclotomic order n, or 0 when no z is adjoined.
  int cyclotomic_order() const { return order_; }
  // Order used for the coefficient arithmetic (1 for plain Q).
  int modulus_order() const { return order_ == 0 ? 1 : order_; }
  // deg Phi_n, the dimension of the constant subfield over Q.
  int extension_degree() const;

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(int order, bool t) : order_(order), has_t_(t) {}
  Field with_t() const { return Field(order_, true); }

  int order_ = 0;
  bool has_t_ = false;
};

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<mpq_class>& cyclotomic_polynomial(int n);

namespace detail {

// Element of Q(zeta_n): coefficients in z of a representative of degree
// < deg Phi_n. Always exactly deg Phi_n entries.
using Number = std::vector<mpq_class>;
// Polynomial in t over Q(zeta_n); no trailing zeros (empty means 0).
using UPoly = std::vector<Number>;

struct RatFunc {
  UPoly num;  // reduced against den
  UPoly den;  // monic
};

}  // namespace detail

/// Exact field element with a canonical representative.
///
/// Elements of Q combine freely with any field (Q embeds everywhere); any
/// other pair of distinct fields raises FieldMismatch.
class Scalar {
 public:
  Scalar();
  Scalar(long v);  // NOLINT(google-explicit-constructor): integer literals
  explicit Scalar(const mpq_class& q);

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar integer(const Field& f, long v);
  static Scalar rational(const Field& f, const mpq_class& q);
  static Scalar t(const Field& f);
  static Scalar z(const Field& f);

  const Field& field() const { return field_; }

  bool is_zero() const { return value_.num.empty(); }
  bool is_one() const;
  // No t-dependence.
  bool is_constant() const;
  std::optional<mpq_class> as_rational() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Printed in the literal grammar accepted by parse().
  std::string to_string() const;
  // Parses a scalar literal (integers, fractions, t, z, ^, *, /, +, -,
  // parentheses) and validates the symbols against the field.
  static Scalar parse(std::string_view text, const Field& f);

  // Moves a scalar into a larger field; only Q embeds into other fields.
  Scalar in_field(const Field& f) const;
  // The same constant viewed in a subfield without t (e.g. Q(z4)(t) -> Q(z4)).
  Scalar constant_in(const Field& base) const;

 private:
  Scalar(const Field& f, detail::RatFunc v) : field_(f), value_(std::move(v)) {}
  static Field common_field(const Scalar& a, const Scalar& b);

  Field field_;
  detail::RatFunc value_;
};

/// Least n with s^n = 1, or nullopt when s is not a root of unity.
std::optional<long> multiplicative_order(const Scalar& s);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace nakayama
