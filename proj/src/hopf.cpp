#include "nakayama/hopf.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "nakayama/expr.hpp"

namespace nakayama {

using linalg::Matrix;

HopfAlgebra::HopfAlgebra(Field f, std::vector<std::string> labels, std::vector<std::vector<HopfElement>> mult,
                         HopfElement unit, std::vector<std::vector<CoTerm>> comult, HopfElement counit,
                         std::vector<HopfElement> antipode, std::vector<bool> grouplike_flags)
    : field_(f),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      flags_(std::move(grouplike_flags)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidArgument("malformed Hopf algebra: empty basis");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) throw InvalidArgument("malformed Hopf algebra: duplicate label " + labels_[i]);
  auto fix = [&](HopfElement& v, const char* what) {
    if (v.size() != n)
      throw InvalidArgument(std::string("malformed Hopf algebra: ") + what + " has length " +
                            std::to_string(v.size()) + ", expected " + std::to_string(n));
    for (auto& s : v) s = s.in_field(field_);
  };
  if (mult_.size() != n) throw InvalidArgument("malformed Hopf algebra: mult has the wrong number of rows");
  for (auto& row : mult_) {
    if (row.size() != n) throw InvalidArgument("malformed Hopf algebra: mult row has the wrong length");
    for (auto& v : row) fix(v, "mult entry");
  }
  fix(unit_, "unit");
  fix(counit_, "counit");
  if (comult_.size() != n) throw InvalidArgument("malformed Hopf algebra: comult has the wrong length");
  for (auto& terms : comult_)
    for (auto& t : terms) {
      if (t.left >= n || t.right >= n) throw InvalidArgument("malformed Hopf algebra: comult index out of range");
      t.coef = t.coef.in_field(field_);
    }
  if (antipode_.size() != n) throw InvalidArgument("malformed Hopf algebra: antipode has the wrong length");
  for (auto& v : antipode_) fix(v, "antipode image");
  if (flags_.empty()) flags_.assign(n, false);
  if (flags_.size() != n) throw InvalidArgument("malformed Hopf algebra: grouplike flags have the wrong length");
}

void HopfAlgebra::check_element(const HopfElement& a) const {
  if (a.size() != dim()) throw AmbientMismatch("element does not belong to this Hopf algebra");
}

HopfElement HopfAlgebra::zero() const { return HopfElement(dim(), Scalar::zero(field_)); }

HopfElement HopfAlgebra::basis(std::size_t i) const {
  HopfElement v = zero();
  v.at(i) = Scalar::one(field_);
  return v;
}

HopfElement HopfAlgebra::scalar(const Scalar& s) const { return scale(unit_, s); }

HopfElement HopfAlgebra::add(const HopfElement& a, const HopfElement& b) const {
  check_element(a);
  check_element(b);
  HopfElement r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

HopfElement HopfAlgebra::sub(const HopfElement& a, const HopfElement& b) const { return add(a, scale(b, Scalar(-1))); }

HopfElement HopfAlgebra::scale(const HopfElement& a, const Scalar& s) const {
  check_element(a);
  HopfElement r = a;
  for (auto& x : r) x *= s;
  return r;
}

HopfElement HopfAlgebra::mul(const HopfElement& a, const HopfElement& b) const {
  check_element(a);
  check_element(b);
  HopfElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const auto& p = mult_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return r;
}

HopfElement HopfAlgebra::pow(const HopfElement& a, long k) const {
  if (k < 0) return pow(inverse(a), -k);
  HopfElement r = unit_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Matrix HopfAlgebra::left_mult_matrix(const HopfElement& a) const {
  Matrix m(dim(), dim(), Scalar::zero(field_));
  for (std::size_t j = 0; j < dim(); ++j) {
    HopfElement col = mul(a, basis(j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

HopfElement HopfAlgebra::apply(const Matrix& m, const HopfElement& a) const {
  check_element(a);
  HopfElement r = zero();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!a[j].is_zero()) r[i] += m(i, j) * a[j];
  return r;
}

HopfElement HopfAlgebra::inverse(const HopfElement& a) const {
  auto inv = left_mult_matrix(a).try_inverse();
  if (!inv) throw InvalidArgument("element is not invertible");
  HopfElement x = apply(*inv, unit_);
  if (mul(x, a) != unit_) throw InvalidArgument("element has no two-sided inverse");
  return x;
}

HopfElement HopfAlgebra::S(const HopfElement& a) const {
  check_element(a);
  HopfElement r = zero();
  for (std::size_t j = 0; j < dim(); ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!antipode_[j][i].is_zero()) r[i] += a[j] * antipode_[j][i];
  }
  return r;
}

Scalar HopfAlgebra::eps(const HopfElement& a) const {
  check_element(a);
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) s += a[i] * counit_[i];
  return s;
}

Matrix HopfAlgebra::delta(const HopfElement& a) const {
  check_element(a);
  Matrix m(dim(), dim(), Scalar::zero(field_));
  for (std::size_t k = 0; k < dim(); ++k) {
    if (a[k].is_zero()) continue;
    for (const auto& t : comult_[k]) m(t.left, t.right) += a[k] * t.coef;
  }
  return m;
}

Matrix HopfAlgebra::tensor(const HopfElement& a, const HopfElement& b) const {
  Matrix m(dim(), dim(), Scalar::zero(field_));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!b[j].is_zero()) m(i, j) = a[i] * b[j];
  }
  return m;
}

Matrix HopfAlgebra::tensor_mul(const Matrix& x, const Matrix& y) const {
  const std::size_t n = dim();
  Matrix r(n, n, Scalar::zero(field_));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (x(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (y(c, d).is_zero()) continue;
          Scalar coef = x(a, b) * y(c, d);
          const auto& left = mult_[a][c];
          const auto& right = mult_[b][d];
          for (std::size_t p = 0; p < n; ++p) {
            if (left[p].is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q)
              if (!right[q].is_zero()) r(p, q) += coef * left[p] * right[q];
          }
        }
    }
  return r;
}

Matrix HopfAlgebra::antipode_matrix() const {
  Matrix m(dim(), dim(), Scalar::zero(field_));
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = antipode_[j][i];
  return m;
}

bool HopfAlgebra::is_zero(const HopfElement& a) const {
  check_element(a);
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool HopfAlgebra::is_grouplike(const HopfElement& a) const {
  if (is_zero(a) || !eps(a).is_one()) return false;
  return delta(a) == tensor(a, a);
}

namespace {

struct ElementPolicy {
  const HopfAlgebra& K;

  HopfElement integer(const mpz_class& v, const expr::Token&) const {
    return K.scalar(Scalar::rational(K.field(), mpq_class(v)));
  }
  HopfElement ident(const expr::Token& t) const {
    const auto& labels = K.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == t.text) return K.basis(i);
    try {
      if (t.text == "t") return K.scalar(Scalar::t(K.field()));
      if (t.text == "z") return K.scalar(Scalar::z(K.field()));
    } catch (const FieldMismatch& e) {
      throw ParseError(e.what(), t.line, t.column);
    }
    throw ParseError("unknown basis label '" + t.text + "'", t.line, t.column);
  }
  HopfElement add(HopfElement a, HopfElement b) const { return K.add(a, b); }
  HopfElement sub(HopfElement a, HopfElement b) const { return K.sub(a, b); }
  HopfElement mul(HopfElement a, HopfElement b) const { return K.mul(a, b); }
  HopfElement neg(HopfElement a) const { return K.scale(a, Scalar(-1)); }
  HopfElement div(HopfElement a, HopfElement b, const expr::Token& t) const {
    try {
      return K.mul(a, K.inverse(b));
    } catch (const InvalidArgument&) {
      throw ParseError("divisor is not invertible", t.line, t.column);
    }
  }
  HopfElement power(HopfElement a, long k, const expr::Token& t) const {
    try {
      return K.pow(a, k);
    } catch (const InvalidArgument&) {
      throw ParseError("negative power of a non-invertible element", t.line, t.column);
    }
  }
};

}  // namespace

HopfElement HopfAlgebra::parse_element(std::string_view text) const {
  ElementPolicy policy{*this};
  return expr::parse_whole(text, policy);
}

std::string HopfAlgebra::to_string(const HopfElement& a) const {
  check_element(a);
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    std::string cs = a[i].to_string();
    bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool negative = cs[0] == '-' && !compound;
    std::string mag = negative ? cs.substr(1) : cs;
    if (compound) mag = "(" + mag + ")";
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    const std::string& label = labels_[i];
    if (label == "1") out += mag;
    else if (mag == "1") out += label;
    else out += mag + "*" + label;
  }
  return first ? "0" : out;
}

bool HopfAlgebra::operator==(const HopfAlgebra& o) const {
  if (!(field_ == o.field_) || labels_ != o.labels_ || mult_ != o.mult_ || unit_ != o.unit_ ||
      counit_ != o.counit_ || antipode_ != o.antipode_)
    return false;
  for (std::size_t k = 0; k < dim(); ++k)
    if (delta(basis(k)) != o.delta(o.basis(k))) return false;
  return true;
}

// --- verification -----------------------------------------------------------

namespace {

using Tensor3 = std::map<std::array<std::size_t, 3>, Scalar>;

void add3(Tensor3& t, std::array<std::size_t, 3> k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

bool same3(const Tensor3& a, const Tensor3& b) {
  if (a.size() != b.size()) return false;
  for (auto i = a.begin(), j = b.begin(); i != a.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

std::string tensor_str(const HopfAlgebra& K, const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string c = m(i, j).to_string();
      out += (c == "1" ? "" : "(" + c + ")*") + K.labels()[i] + "⊗" + K.labels()[j];
    }
  return out.empty() ? "0" : out;
}

}  // namespace

CheckList hopf_verify(const HopfAlgebra& K) {
  CheckList out;
  const std::size_t n = K.dim();
  const auto& L = K.labels();
  auto b = [&](std::size_t i) { return K.basis(i); };

  {
    Check c{"hopf.associativity", true, "", "", ""};
    for (std::size_t i = 0; i < n && c.pass; ++i)
      for (std::size_t j = 0; j < n && c.pass; ++j) {
        HopfElement ij = K.product_of_basis(i, j);
        for (std::size_t k = 0; k < n && c.pass; ++k) {
          HopfElement lhs = K.mul(ij, b(k));
          HopfElement rhs = K.mul(b(i), K.product_of_basis(j, k));
          if (lhs != rhs) {
            c.pass = false;
            c.lhs = K.to_string(lhs);
            c.rhs = K.to_string(rhs);
            c.witness = "(" + L[i] + "*" + L[j] + ")*" + L[k];
          }
        }
      }
    out.add(c);
  }
  {
    Check c{"hopf.unit", true, "", "", ""};
    for (std::size_t i = 0; i < n && c.pass; ++i) {
      if (K.mul(K.one(), b(i)) != b(i) || K.mul(b(i), K.one()) != b(i)) {
        c.pass = false;
        c.lhs = K.to_string(K.mul(K.one(), b(i)));
        c.rhs = L[i];
        c.witness = L[i];
      }
    }
    out.add(c);
  }
  {
    Check c{"hopf.coassociativity", true, "", "", ""};
    for (std::size_t k = 0; k < n && c.pass; ++k) {
      Tensor3 lhs, rhs;
      for (const auto& t : K.comult(k)) {
        Matrix dl = K.delta(b(t.left));
        Matrix dr = K.delta(b(t.right));
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            if (!dl(p, q).is_zero()) add3(lhs, {p, q, t.right}, t.coef * dl(p, q));
            if (!dr(p, q).is_zero()) add3(rhs, {t.left, p, q}, t.coef * dr(p, q));
          }
      }
      if (!same3(lhs, rhs)) {
        c.pass = false;
        c.witness = L[k];
      }
    }
    out.add(c);
  }
  {
    Check c{"hopf.counit", true, "", "", ""};
    for (std::size_t k = 0; k < n && c.pass; ++k) {
      HopfElement left = K.zero(), right = K.zero();
      for (const auto& t : K.comult(k)) {
        left = K.add(left, K.scale(b(t.right), t.coef * K.counit_vector()[t.left]));
        right = K.add(right, K.scale(b(t.left), t.coef * K.counit_vector()[t.right]));
      }
      if (left != b(k) || right != b(k)) {
        c.pass = false;
        c.lhs = K.to_string(left != b(k) ? left : right);
        c.rhs = L[k];
        c.witness = L[k];
      }
    }
    out.add(c);
  }
  {
    Check c{"hopf.comult_multiplicative", true, "", "", ""};
    if (K.delta(K.one()) != K.tensor(K.one(), K.one())) {
      c.pass = false;
      c.witness = "1";
      c.lhs = tensor_str(K, K.delta(K.one()));
    }
    for (std::size_t i = 0; i < n && c.pass; ++i) {
      Matrix di = K.delta(b(i));
      for (std::size_t j = 0; j < n && c.pass; ++j) {
        Matrix lhs = K.delta(K.product_of_basis(i, j));
        Matrix rhs = K.tensor_mul(di, K.delta(b(j)));
        if (lhs != rhs) {
          c.pass = false;
          c.lhs = tensor_str(K, lhs);
          c.rhs = tensor_str(K, rhs);
          c.witness = L[i] + "*" + L[j];
        }
      }
    }
    out.add(c);
  }
  {
    Check c{"hopf.counit_multiplicative", true, "", "", ""};
    if (!K.eps(K.one()).is_one()) {
      c.pass = false;
      c.witness = "1";
    }
    for (std::size_t i = 0; i < n && c.pass; ++i)
      for (std::size_t j = 0; j < n && c.pass; ++j) {
        Scalar lhs = K.eps(K.product_of_basis(i, j));
        Scalar rhs = K.counit_vector()[i] * K.counit_vector()[j];
        if (lhs != rhs) {
          c.pass = false;
          c.lhs = lhs.to_string();
          c.rhs = rhs.to_string();
          c.witness = L[i] + "*" + L[j];
        }
      }
    out.add(c);
  }
  {
    Check c{"hopf.antipode", true, "", "", ""};
    for (std::size_t k = 0; k < n && c.pass; ++k) {
      HopfElement left = K.zero(), right = K.zero();
      for (const auto& t : K.comult(k)) {
        left = K.add(left, K.scale(K.mul(K.antipode_image(t.left), b(t.right)), t.coef));
        right = K.add(right, K.scale(K.mul(b(t.left), K.antipode_image(t.right)), t.coef));
      }
      HopfElement expect = K.scalar(K.counit_vector()[k]);
      if (left != expect || right != expect) {
        c.pass = false;
        c.lhs = K.to_string(left != expect ? left : right);
        c.rhs = K.to_string(expect);
        c.witness = L[k];
      }
    }
    out.add(c);
  }
  return out;
}

// --- builtins ---------------------------------------------------------------

HopfAlgebra group_algebra(const Field& f, std::vector<std::string> labels,
                          const std::vector<std::vector<std::size_t>>& cayley) {
  const std::size_t n = labels.size();
  if (cayley.size() != n) throw InvalidArgument("Cayley table has the wrong size");
  for (std::size_t j = 0; j < n; ++j)
    if (cayley[0][j] != j || cayley[j][0] != j) throw InvalidArgument("Cayley table: element 0 must be the identity");
  auto e = [&](std::size_t i) {
    HopfElement v(n, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
  };
  std::vector<std::vector<HopfElement>> mult(n, std::vector<HopfElement>(n));
  std::vector<std::vector<CoTerm>> comult(n);
  std::vector<HopfElement> antipode(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cayley[i].size() != n) throw InvalidArgument("Cayley table has the wrong size");
    std::optional<std::size_t> inv;
    for (std::size_t j = 0; j < n; ++j) {
      if (cayley[i][j] >= n) throw InvalidArgument("Cayley table entry out of range");
      mult[i][j] = e(cayley[i][j]);
      if (cayley[i][j] == 0) inv = j;
    }
    if (!inv) throw InvalidArgument("Cayley table: element without inverse");
    comult[i] = {CoTerm{i, i, Scalar::one(f)}};
    antipode[i] = e(*inv);
  }
  return HopfAlgebra(f, std::move(labels), std::move(mult), e(0), std::move(comult),
                     HopfElement(n, Scalar::one(f)), std::move(antipode), std::vector<bool>(n, true));
}

namespace {

std::string power_label(const std::string& sym, int e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

std::string join_label(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out.empty() ? "1" : out;
}

}  // namespace

HopfAlgebra group_cyclic(const Field& f, int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  return group_abelian(f, {n});
}

HopfAlgebra group_abelian(const Field& f, const std::vector<int>& orders) {
  static const char* syms[] = {"g", "h", "k", "m", "u", "w"};
  if (orders.empty() || orders.size() > std::size(syms)) throw InvalidArgument("unsupported number of factors");
  std::size_t n = 1;
  for (int o : orders) {
    if (o < 1) throw InvalidArgument("group factor orders must be positive");
    n *= static_cast<std::size_t>(o);
  }
  auto digits = [&](std::size_t idx) {
    std::vector<int> d;
    for (int o : orders) {
      d.push_back(static_cast<int>(idx % static_cast<std::size_t>(o)));
      idx /= static_cast<std::size_t>(o);
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    std::size_t idx = 0;
    for (std::size_t r = orders.size(); r-- > 0;) idx = idx * static_cast<std::size_t>(orders[r]) + static_cast<std::size_t>(d[r]);
    return idx;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = digits(i);
    std::vector<std::string> parts;
    for (std::size_t r = 0; r < d.size(); ++r) parts.push_back(power_label(syms[r], d[r]));
    labels.push_back(join_label(parts));
  }
  std::vector<std::vector<std::size_t>> cayley(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto a = digits(i), b = digits(j);
      for (std::size_t r = 0; r < a.size(); ++r) a[r] = (a[r] + b[r]) % orders[r];
      cayley[i][j] = index(a);
    }
  return group_algebra(f, std::move(labels), cayley);
}

HopfAlgebra dual_group(const Field& f, int n) {
  if (n < 1) throw InvalidArgument("group order must be positive");
  const auto un = static_cast<std::size_t>(n);
  auto e = [&](std::size_t i) {
    HopfElement v(un, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < un; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::vector<HopfElement>> mult(un, std::vector<HopfElement>(un, HopfElement(un, Scalar::zero(f))));
  std::vector<std::vector<CoTerm>> comult(un);
  std::vector<HopfElement> antipode(un);
  HopfElement counit(un, Scalar::zero(f));
  counit[0] = Scalar::one(f);
  for (std::size_t i = 0; i < un; ++i) {
    mult[i][i] = e(i);
    for (std::size_t a = 0; a < un; ++a) comult[i].push_back(CoTerm{a, (i + un - a) % un, Scalar::one(f)});
    antipode[i] = e((un - i) % un);
  }
  return HopfAlgebra(f, std::move(labels), std::move(mult), HopfElement(un, Scalar::one(f)), std::move(comult),
                     counit, std::move(antipode));
}

HopfAlgebra taft(const Field& f, int n, const Scalar& q_in) {
  if (n < 2) throw InvalidArgument("taft algebra needs n >= 2");
  Scalar q = q_in.in_field(f);
  auto ord = multiplicative_order(q);
  if (!ord || *ord != n)
    throw InvalidArgument("taft parameter " + q.to_string() + " is not a primitive " + std::to_string(n) +
                          "-th root of unity in " + f.name());
  const auto un = static_cast<std::size_t>(n);
  const std::size_t dim = un * un;
  auto idx = [&](std::size_t a, std::size_t b) { return b * un + a; };
  auto e = [&](std::size_t i) {
    HopfElement v(dim, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
  };
  std::vector<std::string> labels(dim);
  std::vector<std::vector<HopfElement>> mult(dim, std::vector<HopfElement>(dim, HopfElement(dim, Scalar::zero(f))));
  HopfElement counit(dim, Scalar::zero(f));
  std::vector<bool> flags(dim, false);
  for (std::size_t b = 0; b < un; ++b)
    for (std::size_t a = 0; a < un; ++a) {
      labels[idx(a, b)] = join_label({power_label("g", static_cast<int>(a)), power_label("x", static_cast<int>(b))});
      if (b == 0) {
        counit[idx(a, b)] = Scalar::one(f);
        flags[idx(a, b)] = true;
      }
      for (std::size_t d = 0; d < un; ++d)
        for (std::size_t c = 0; c < un; ++c) {
          if (b + d >= un) continue;
          mult[idx(a, b)][idx(c, d)][idx((a + c) % un, b + d)] = q.pow(static_cast<long>(b * c));
        }
    }
  // Algebra structure first; Delta and S are then extended from g and x.
  HopfAlgebra alg(f, labels, mult, e(0), std::vector<std::vector<CoTerm>>(dim), counit,
                  std::vector<HopfElement>(dim, HopfElement(dim, Scalar::zero(f))));
  const HopfElement g = e(idx(1, 0)), x = e(idx(0, 1));
  const Matrix dg = alg.tensor(g, g);
  const Matrix dx = alg.tensor(x, e(0)) + alg.tensor(g, x);
  const HopfElement g_inv = alg.pow(g, n - 1);
  const HopfElement sg = g_inv;
  const HopfElement sx = alg.scale(alg.mul(g_inv, x), Scalar(-1));
  std::vector<std::vector<CoTerm>> comult(dim);
  std::vector<HopfElement> antipode(dim);
  for (std::size_t b = 0; b < un; ++b)
    for (std::size_t a = 0; a < un; ++a) {
      Matrix d = alg.tensor(e(0), e(0));
      HopfElement s = e(0);
      for (std::size_t k = 0; k < a; ++k) {
        d = alg.tensor_mul(d, dg);
        s = alg.mul(sg, s);
      }
      for (std::size_t k = 0; k < b; ++k) {
        d = alg.tensor_mul(d, dx);
        s = alg.mul(sx, s);
      }
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (!d(i, j).is_zero()) comult[idx(a, b)].push_back(CoTerm{i, j, d(i, j)});
      antipode[idx(a, b)] = s;
    }
  return HopfAlgebra(f, std::move(labels), std::move(mult), e(0), std::move(comult), std::move(counit),
                     std::move(antipode), std::move(flags));
}

HopfAlgebra sweedler(const Field& f) { return taft(f, 2, Scalar(-1)); }

// --- grouplikes -------------------------------------------------------------

namespace {

// Dense univariate polynomial, lowest degree first.
using SPoly = std::vector<Scalar>;

SPoly char_poly(const Matrix& A, const Field& f) {
  // Faddeev-LeVerrier
  const std::size_t n = A.rows();
  SPoly c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  Matrix M(n, n, Scalar::zero(f));
  for (std::size_t k = 1; k <= n; ++k) {
    M = A * M + Matrix::identity(n, f).scaled(c[n - k + 1]);
    Matrix AM = A * M;
    Scalar tr = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

Scalar poly_eval(const SPoly& p, const Scalar& x) {
  Scalar r = Scalar::zero(x.field());
  for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

// Divides p by (X - r); requires p(r) = 0.
SPoly deflate(const SPoly& p, const Scalar& r) {
  SPoly q(p.size() - 1, Scalar::zero(r.field()));
  Scalar carry = Scalar::zero(r.field());
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    carry = p[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  if (v == 0) return out;
  if (v > 1000000) return {1};  // large constant terms: only the trivial candidates
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

std::vector<Scalar> root_candidates(const SPoly& p, const Field& f) {
  std::vector<Scalar> cand{Scalar::zero(f), Scalar::one(f), Scalar(-1).in_field(f)};
  if (f.has_z()) {
    Scalar z = Scalar::z(f);
    Scalar zk = z;
    for (int k = 1; k < 2 * f.cyclotomic_order(); ++k, zk *= z) {
      cand.push_back(zk);
      cand.push_back(-zk);
    }
  }
  if (f.has_t()) {
    Scalar t = Scalar::t(f);
    for (long k = 1; k <= static_cast<long>(p.size()); ++k) {
      cand.push_back(t.pow(k));
      cand.push_back(t.pow(-k));
    }
  }
  // rational roots of a rational polynomial
  bool rational = true;
  for (const auto& c : p)
    if (!c.as_rational()) rational = false;
  if (rational) {
    std::vector<mpq_class> q;
    for (const auto& c : p) q.push_back(*c.as_rational());
    std::size_t lo = 0;
    while (lo < q.size() && q[lo] == 0) ++lo;
    if (lo + 1 < q.size()) {
      mpz_class lcm = 1;
      for (const auto& c : q) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
      mpz_class a0 = mpz_class(q[lo] * lcm), an = mpz_class(q.back() * lcm);
      for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an)) {
          mpq_class r(num, den);
          r.canonicalize();
          cand.push_back(Scalar::rational(f, r));
          cand.push_back(Scalar::rational(f, -r));
        }
    }
  }
  return cand;
}

// Distinct roots found in the field; `complete` reports whether they account
// for the full degree.
std::vector<Scalar> find_roots(SPoly p, const Field& f, bool& complete) {
  std::vector<Scalar> roots;
  auto cands = root_candidates(p, f);
  for (const auto& r : cands) {
    if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
    bool hit = false;
    while (p.size() > 1 && poly_eval(p, r).is_zero()) {
      p = deflate(p, r);
      hit = true;
    }
    if (hit) roots.push_back(r);
  }
  complete = p.size() <= 1;
  return roots;
}

// Solves the affine system rows * v = rhs; returns whether it is consistent.
bool consistent(const std::vector<std::vector<Scalar>>& rows, const std::vector<Scalar>& rhs, std::size_t n,
                const Field& f) {
  Matrix aug(rows.size(), n + 1, Scalar::zero(f));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = rows[i][j];
    aug(i, n) = rhs[i];
  }
  Matrix coef(rows.size(), n, Scalar::zero(f));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) coef(i, j) = rows[i][j];
  return aug.rank() == coef.rank();
}

}  // namespace

std::optional<long> element_order(const HopfAlgebra& K, const HopfElement& g, long bound) {
  HopfElement p = g;
  for (long k = 1; k <= bound; ++k) {
    if (p == K.one()) return k;
    p = K.mul(p, g);
  }
  return std::nullopt;
}

std::optional<long> linear_map_order(const Matrix& m, long bound) {
  if (!m.square() || m.rows() == 0) return std::nullopt;
  Matrix id = Matrix::identity(m.rows(), m(0, 0).field());
  Matrix p = m;
  for (long k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

GrouplikeResult grouplikes(const HopfAlgebra& K) {
  GrouplikeResult out;
  const std::size_t n = K.dim();
  const Field& f = K.field();
  std::vector<HopfElement> found;
  auto add_found = [&](const HopfElement& v) {
    if (std::find(found.begin(), found.end(), v) == found.end()) found.push_back(v);
  };
  for (std::size_t i = 0; i < n; ++i)
    if (K.grouplike_flags()[i] && K.is_grouplike(K.basis(i))) add_found(K.basis(i));

  if (found.size() == n) {
    // grouplikes are linearly independent, so a full flagged basis is all of them
    out.method = "flagged basis";
  } else if (n > kGrouplikeSearchCap) {
    out.method = "flagged candidates";
    out.complete = false;
  } else {
    // For a grouplike v, (b_k^* ⊗ id) Delta(v) = v_k v: the coordinates of v
    // are eigenvalues of the maps R_k. Enumerate eigenvalue tuples with
    // feasibility pruning, then verify each surviving tuple.
    out.method = "eigenvalue search";
    std::vector<Matrix> R(n, Matrix(n, n, Scalar::zero(f)));
    for (std::size_t s = 0; s < n; ++s) {
      Matrix d = K.delta(K.basis(s));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) R[k](m, s) = d(k, m);
    }
    std::vector<std::vector<Scalar>> spectra(n);
    for (std::size_t k = 0; k < n; ++k) {
      bool complete = true;
      spectra[k] = find_roots(char_poly(R[k], f), f, complete);
      out.complete = out.complete && complete;
    }
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    rows.push_back(K.counit_vector());
    rhs.push_back(Scalar::one(f));
    HopfElement v(n, Scalar::zero(f));
    auto search = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        if (K.is_grouplike(v)) add_found(v);
        return;
      }
      for (const auto& lam : spectra[k]) {
        std::size_t mark = rows.size();
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Scalar> row(n);
          for (std::size_t j = 0; j < n; ++j) row[j] = R[k](i, j) - (i == j ? lam : Scalar::zero(f));
          rows.push_back(std::move(row));
          rhs.push_back(Scalar::zero(f));
        }
        std::vector<Scalar> pin(n, Scalar::zero(f));
        pin[k] = Scalar::one(f);
        rows.push_back(std::move(pin));
        rhs.push_back(lam);
        if (consistent(rows, rhs, n, f)) {
          v[k] = lam;
          self(self, k + 1);
        }
        rows.resize(mark);
        rhs.resize(mark);
      }
    };
    search(search, 0);
  }
  const HopfElement one = K.one();
  std::sort(found.begin(), found.end(), [&one](const HopfElement& a, const HopfElement& b) {
    if ((a == one) != (b == one)) return a == one;
    auto lead = [](const HopfElement& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
      return v.size();
    };
    std::size_t la = lead(a), lb = lead(b);
    if (la != lb) return la < lb;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string sa = a[i].to_string(), sb = b[i].to_string();
      if (sa != sb) return sa < sb;
    }
    return false;
  });
  for (auto& g : found) out.grouplikes.push_back(Grouplike{g, element_order(K, g, static_cast<long>(n))});
  return out;
}

SquaredAntipode s_squared(const HopfAlgebra& K) {
  Matrix s = K.antipode_matrix();
  SquaredAntipode out{s * s, std::nullopt};
  out.order = linear_map_order(out.map, 4 * static_cast<long>(K.dim()));
  return out;
}

ConjugationAutomorphism conj_auto(const HopfAlgebra& K, const HopfElement& g) {
  if (!K.is_grouplike(g)) throw InvalidArgument("conjugation requires a grouplike element");
  HopfElement g_inv = K.S(g);
  if (K.mul(g, g_inv) != K.one() || K.mul(g_inv, g) != K.one())
    throw InvalidArgument("S(g) is not inverse to g");
  const std::size_t n = K.dim();
  ConjugationAutomorphism out{Matrix(n, n, Scalar::zero(K.field())), {}};
  std::vector<HopfElement> images;
  for (std::size_t j = 0; j < n; ++j) {
    images.push_back(K.mul(K.mul(g_inv, K.basis(j)), g));
    for (std::size_t i = 0; i < n; ++i) out.map(i, j) = images[j][i];
  }
  Check mult{"conj.multiplicative", true, "", "", ""};
  for (std::size_t i = 0; i < n && mult.pass; ++i)
    for (std::size_t j = 0; j < n && mult.pass; ++j)
      if (K.apply(out.map, K.product_of_basis(i, j)) != K.mul(images[i], images[j])) {
        mult.pass = false;
        mult.witness = K.labels()[i] + "*" + K.labels()[j];
      }
  out.checks.add(mult);
  Check comult{"conj.comultiplicative", true, "", "", ""};
  for (std::size_t k = 0; k < n && comult.pass; ++k) {
    Matrix lhs = K.delta(images[k]);
    Matrix d = K.delta(K.basis(k));
    Matrix rhs = out.map * d * out.map.transpose();
    if (lhs != rhs) {
      comult.pass = false;
      comult.witness = K.labels()[k];
    }
  }
  out.checks.add(comult);
  Check counit{"conj.counit", true, "", "", ""};
  for (std::size_t k = 0; k < n && counit.pass; ++k)
    if (K.eps(images[k]) != K.counit_vector()[k]) {
      counit.pass = false;
      counit.witness = K.labels()[k];
    }
  out.checks.add(counit);
  Check anti{"conj.antipode", true, "", "", ""};
  if (out.map * K.antipode_matrix() != K.antipode_matrix() * out.map) {
    anti.pass = false;
  }
  out.checks.add(anti);
  Check bij{"conj.bijective", out.map.rank() == n, "", "", ""};
  out.checks.add(bij);
  return out;
}

Closure subalgebra_closure(const HopfAlgebra& K, const std::vector<HopfElement>& gens) {
  const std::size_t n = K.dim();
  auto to_sparse = [&](const HopfElement& v) {
    linalg::SparseVec s;
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
  };
  auto from_sparse = [&](const linalg::SparseVec& s) {
    HopfElement v = K.zero();
    for (const auto& [i, c] : s) v[i] = c;
    return v;
  };
  std::vector<linalg::SparseVec> rows{to_sparse(K.one())};
  for (const auto& g : gens) {
    rows.push_back(to_sparse(g));
    rows.push_back(to_sparse(K.S(g)));
  }
  linalg::Echelon e = linalg::rref_serial(rows);
  while (true) {
    std::vector<HopfElement> basis;
    for (const auto& r : e.rows) basis.push_back(from_sparse(r));
    std::vector<linalg::SparseVec> grown = e.rows;
    for (const auto& u : basis) {
      grown.push_back(to_sparse(K.S(u)));
      for (const auto& v : basis) grown.push_back(to_sparse(K.mul(u, v)));
    }
    linalg::Echelon next = linalg::rref_serial(grown);
    if (next.rows.size() == e.rows.size()) break;
    e = std::move(next);
  }
  Closure out;
  out.dim = e.rows.size();
  for (auto it = e.rows.rbegin(); it != e.rows.rend(); ++it) out.basis.push_back(from_sparse(*it));
  return out;
}

}  // namespace nakayama
