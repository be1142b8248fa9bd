#include "nakayama/free_algebra.hpp"

#include <limits>

#include "nakayama/expr.hpp"

namespace nakayama {

std::uint64_t slice_size(int n, int degree) {
  std::uint64_t s = 1;
  for (int i = 0; i < degree; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
      throw DegreeCapExceeded("slice V^" + std::to_string(degree) + " too large to index");
    s *= static_cast<std::uint64_t>(n);
  }
  return s;
}

std::uint64_t word_index(const Word& w, int n) {
  std::uint64_t idx = 0;
  for (Letter l : w) idx = idx * static_cast<std::uint64_t>(n) + l;
  return idx;
}

Word word_from_index(std::uint64_t idx, int n, int degree) {
  Word w(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Letter>(idx % static_cast<std::uint64_t>(n));
    idx /= static_cast<std::uint64_t>(n);
  }
  return w;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += w[i] < names.size() ? names[w[i]] : "?" + std::to_string(w[i]);
  }
  return s;
}

NCPoly NCPoly::generator(int n, const Field& f, int i) {
  if (i < 0 || i >= n) throw InvalidArgument("generator index out of range");
  return monomial(n, f, Word{static_cast<Letter>(i)}, Scalar::one(f));
}

NCPoly NCPoly::monomial(int n, const Field& f, Word w, const Scalar& c) {
  NCPoly p(n, f);
  p.add_term(w, c);
  return p;
}

NCPoly NCPoly::constant(int n, const Field& f, const Scalar& c) { return monomial(n, f, Word{}, c); }

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

int NCPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

bool NCPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading word");
  return terms_.rbegin()->first;
}

const Scalar& NCPoly::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

void NCPoly::check_ambient(const NCPoly& o) const {
  if (n_ != o.n_)
    throw AmbientMismatch("polynomials over " + std::to_string(n_) + " and " + std::to_string(o.n_) +
                          " generators");
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (Letter l : w)
    if (l >= n_) throw InvalidArgument("letter outside the generator range");
  if (!(c.field() == Field::rationals()) && field_ == Field::rationals()) field_ = c.field();
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  check_ambient(o);
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const {
  check_ambient(o);
  NCPoly r(n_, field_ == Field::rationals() ? o.field_ : field_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

NCPoly NCPoly::operator*(const Scalar& s) const {
  NCPoly r(n_, field_);
  for (const auto& [w, c] : terms_) r.add_term(w, c * s);
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

linalg::SparseVec NCPoly::to_sparse(int d) const {
  linalg::SparseVec v;
  v.reserve(terms_.size());
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) != d) throw InvalidArgument("polynomial is not homogeneous of degree " + std::to_string(d));
    v.emplace_back(word_index(w, n_), c);
  }
  // map order is deglex, which within one degree is index order
  return v;
}

NCPoly NCPoly::from_sparse(int n, const Field& f, int d, const linalg::SparseVec& v) {
  NCPoly p(n, f);
  for (const auto& [idx, c] : v) p.add_term(word_from_index(idx, n, d), c);
  return p;
}

std::string NCPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Scalar& c = it->second;
    std::string cs = c.to_string();
    bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool negative = !cs.empty() && cs[0] == '-' && !compound;
    std::string mag = negative ? cs.substr(1) : cs;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (compound) mag = "(" + mag + ")";
    if (it->first.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += word_to_string(it->first, names);
    }
    first = false;
  }
  return out;
}

namespace {

struct PolyPolicy {
  const std::vector<std::string>& names;
  Field field;
  int n;

  NCPoly integer(const mpz_class& v, const expr::Token&) const {
    return NCPoly::constant(n, field, Scalar::rational(field, mpq_class(v)));
  }
  NCPoly ident(const expr::Token& t) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == t.text) return NCPoly::generator(n, field, static_cast<int>(i));
    try {
      if (t.text == "t") return NCPoly::constant(n, field, Scalar::t(field));
      if (t.text == "z") return NCPoly::constant(n, field, Scalar::z(field));
    } catch (const FieldMismatch& e) {
      throw ParseError(e.what(), t.line, t.column);
    }
    throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
  }
  NCPoly add(NCPoly a, NCPoly b) const { return a + b; }
  NCPoly sub(NCPoly a, NCPoly b) const { return a - b; }
  NCPoly mul(NCPoly a, NCPoly b) const { return a * b; }
  NCPoly neg(NCPoly a) const { return -a; }
  static Scalar as_constant(const NCPoly& p, const expr::Token& t, const char* what) {
    if (p.degree() > 0) throw ParseError(std::string(what) + " must be a scalar", t.line, t.column);
    return p.coefficient(Word{});
  }
  NCPoly div(NCPoly a, NCPoly b, const expr::Token& t) const {
    Scalar s = as_constant(b, t, "divisor");
    if (s.is_zero()) throw ParseError("division by zero", t.line, t.column);
    return a * s.inverse();
  }
  NCPoly power(NCPoly a, long k, const expr::Token& t) const {
    if (k < 0) {
      Scalar s = as_constant(a, t, "base of a negative power");
      if (s.is_zero()) throw ParseError("division by zero", t.line, t.column);
      return NCPoly::constant(n, field, s.pow(k));
    }
    NCPoly r = NCPoly::constant(n, field, Scalar::one(field));
    for (long i = 0; i < k; ++i) r = r * a;
    return r;
  }
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const std::vector<std::string>& names, const Field& f) {
  PolyPolicy policy{names, f, static_cast<int>(names.size())};
  return expr::parse_whole(text, policy);
}

SpanBasis span_reduce(const std::vector<NCPoly>& vs) {
  SpanBasis out;
  if (vs.empty()) return out;
  int n = vs.front().generators();
  Field f = vs.front().field();
  int d = -1;
  std::vector<linalg::SparseVec> rows;
  for (const auto& v : vs) {
    if (v.generators() != n) throw AmbientMismatch("span_reduce over different generator sets");
    if (!v.is_homogeneous()) throw InvalidArgument("span_reduce requires homogeneous input");
    if (!(v.field() == Field::rationals())) f = v.field();
    if (v.is_zero()) continue;
    if (d == -1) d = v.degree();
    if (v.degree() != d) throw InvalidArgument("span_reduce requires a common degree");
    rows.push_back(v.to_sparse(d));
  }
  auto e = linalg::rref(std::move(rows));
  for (const auto& r : e.rows) {
    out.basis.push_back(NCPoly::from_sparse(n, f, d, r));
    out.leading.push_back(out.basis.back().leading_word());
  }
  return out;
}

Scalar dual_pairing(const NCPoly& a, const NCPoly& f) {
  if (a.generators() != f.generators()) throw AmbientMismatch("pairing across different generator counts");
  if (!a.is_homogeneous() || !f.is_homogeneous()) throw InvalidArgument("pairing requires homogeneous input");
  if (!a.is_zero() && !f.is_zero() && a.degree() != f.degree())
    throw InvalidArgument("pairing requires equal degrees");
  Scalar s = Scalar::zero(a.field() == Field::rationals() ? f.field() : a.field());
  for (const auto& [w, c] : a.terms()) {
    auto it = f.terms().find(w);
    if (it != f.terms().end()) s += c * it->second;
  }
  return s;
}

}  // namespace nakayama
