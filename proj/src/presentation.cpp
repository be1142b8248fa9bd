#include "nakayama/presentation.hpp"

#include <algorithm>

namespace nakayama {

long GradedSlice::position(std::uint64_t idx) const {
  auto it = std::lower_bound(normal.begin(), normal.end(), idx);
  if (it == normal.end() || *it != idx) return -1;
  return static_cast<long>(it - normal.begin());
}

std::vector<std::string> default_names(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

GradedPresentation::GradedPresentation(std::vector<std::string> names, const std::vector<NCPoly>& relations,
                                       Field f, int degree_cap)
    : names_(std::move(names)), field_(f), cap_(degree_cap), cache_(std::make_shared<Cache>()) {
  if (names_.empty()) throw InvalidArgument("a presentation needs at least one generator");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InvalidArgument("duplicate generator name '" + names_[i] + "'");
  int n = generators();
  int N = -1;
  for (const auto& r : relations) {
    if (r.generators() != n) throw AmbientMismatch("relation over a different generator set");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw InvalidArgument("relation is not homogeneous");
    if (r.degree() < 2) throw InvalidArgument("relations must have degree at least 2");
    if (N == -1) N = r.degree();
    if (r.degree() != N) throw InvalidArgument("relations of mixed degree are not supported");
  }
  N_ = N == -1 ? 2 : N;
  relations_ = span_reduce(relations).basis;
  for (auto& r : relations_) {
    NCPoly copy(n, field_);
    for (const auto& [w, c] : r.terms()) copy.add_term(w, c.in_field(field_));
    r = std::move(copy);
  }
}

GradedPresentation GradedPresentation::with_degree_cap(int cap) const {
  return GradedPresentation(names_, relations_, field_, cap);
}

const GradedSlice& GradedPresentation::slice(int d) const {
  if (d < 0) throw InvalidArgument("negative degree");
  if (d > cap_)
    throw DegreeCapExceeded("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap_));
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->slices.find(d);
    if (it != cache_->slices.end()) return *it->second;
  }
  auto built = build_slice(d);
  std::lock_guard lock(cache_->mu);
  // first writer wins; later builds are identical anyway
  auto [it, inserted] = cache_->slices.emplace(d, std::move(built));
  return *it->second;
}

std::shared_ptr<const GradedSlice> GradedPresentation::build_slice(int d) const {
  const int n = generators();
  const auto un = static_cast<std::uint64_t>(n);
  auto s = std::make_shared<GradedSlice>();
  s->degree = d;
  const std::uint64_t size = slice_size(n, d);
  if (d >= N_ && !relations_.empty()) {
    std::vector<linalg::SparseVec> rows;
    if (d > N_) {
      const GradedSlice& prev = slice(d - 1);
      for (const auto& r : prev.ideal.rows)
        for (std::uint64_t a = 0; a < un; ++a) {
          linalg::SparseVec v;
          v.reserve(r.size());
          for (const auto& [c, x] : r) v.emplace_back(c * un + a, x);
          rows.push_back(std::move(v));
        }
    }
    const std::uint64_t prefixes = slice_size(n, d - N_);
    const std::uint64_t block = slice_size(n, N_);
    std::vector<linalg::SparseVec> rel_vecs;
    for (const auto& r : relations_) rel_vecs.push_back(r.to_sparse(N_));
    for (std::uint64_t u = 0; u < prefixes; ++u)
      for (const auto& r : rel_vecs) {
        linalg::SparseVec v;
        v.reserve(r.size());
        for (const auto& [c, x] : r) v.emplace_back(u * block + c, x);
        rows.push_back(std::move(v));
      }
    s->ideal = linalg::rref(std::move(rows));
  }
  auto piv = s->ideal.pivots();
  std::sort(piv.begin(), piv.end());
  std::size_t k = 0;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (k < piv.size() && piv[k] == idx) {
      ++k;
      continue;
    }
    s->normal.push_back(idx);
    s->normal_words.push_back(word_from_index(idx, n, d));
  }
  return s;
}

NCPoly GradedPresentation::normal_form(const NCPoly& f) const {
  if (f.generators() != generators()) throw AmbientMismatch("polynomial over a different generator set");
  std::map<int, NCPoly> by_degree;
  for (const auto& [w, c] : f.terms()) {
    auto& part = by_degree.try_emplace(static_cast<int>(w.size()), NCPoly(generators(), field_)).first->second;
    part.add_term(w, c);
  }
  NCPoly out(generators(), field_);
  for (const auto& [d, part] : by_degree) {
    auto v = linalg::reduce(slice(d).ideal, part.to_sparse(d));
    out += NCPoly::from_sparse(generators(), field_, d, v);
  }
  return out;
}

std::vector<Scalar> GradedPresentation::coordinates(const NCPoly& f, int d) const {
  const GradedSlice& s = slice(d);
  std::vector<Scalar> out(s.dim(), Scalar::zero(field_));
  auto v = linalg::reduce(s.ideal, f.to_sparse(d));
  for (const auto& [idx, c] : v) {
    long p = s.position(idx);
    NAKAYAMA_ASSERT(p >= 0, "reduced vector has a pivot column");
    out[static_cast<std::size_t>(p)] = c;
  }
  return out;
}

NCPoly GradedPresentation::from_coordinates(const std::vector<Scalar>& c, int d) const {
  const GradedSlice& s = slice(d);
  if (c.size() != s.dim()) throw InvalidArgument("coordinate vector has the wrong length");
  NCPoly out(generators(), field_);
  for (std::size_t i = 0; i < c.size(); ++i) out.add_term(s.normal_words[i], c[i]);
  return out;
}

GradedSlice graded_component(const GradedPresentation& P, int d) { return P.slice(d); }

linalg::Matrix quadratic_coefficients(const GradedPresentation& P) {
  if (!P.is_quadratic()) throw Unsupported("unsupported: N >= 3 dual out of scope");
  const auto n = static_cast<std::size_t>(P.generators());
  linalg::Matrix C(P.relations().size(), n * n, Scalar::zero(P.field()));
  for (std::size_t w = 0; w < P.relations().size(); ++w)
    for (const auto& [word, c] : P.relations()[w].terms()) C(w, word[0] * n + word[1]) = c;
  return C;
}

namespace {

std::string dual_name(const std::string& s) {
  if (!s.empty() && s.back() == '\'') return s.substr(0, s.size() - 1);
  return s + "'";
}

}  // namespace

GradedPresentation koszul_dual(const GradedPresentation& P) {
  const int n = P.generators();
  linalg::Matrix C = quadratic_coefficients(P);
  std::vector<NCPoly> rels;
  if (C.rows() == 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rels.push_back(NCPoly::monomial(n, P.field(), Word{Letter(i), Letter(j)}, Scalar::one(P.field())));
  } else {
    linalg::Matrix K = C.nullspace();
    for (std::size_t k = 0; k < K.cols(); ++k) {
      NCPoly r(n, P.field());
      for (std::size_t col = 0; col < K.rows(); ++col)
        r.add_term(Word{Letter(col / static_cast<std::size_t>(n)), Letter(col % static_cast<std::size_t>(n))},
                   K(col, k));
      rels.push_back(std::move(r));
    }
  }
  std::vector<std::string> names;
  for (const auto& s : P.names()) names.push_back(dual_name(s));
  return GradedPresentation(std::move(names), rels, P.field(), P.degree_cap());
}

std::vector<std::size_t> hilbert_series(const GradedPresentation& P, int D) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= D; ++d) out.push_back(P.dim(d));
  return out;
}

KoszulNumericResult koszul_numeric_check(const GradedPresentation& P, int D) {
  GradedPresentation dual = koszul_dual(P);
  KoszulNumericResult r;
  r.hilbert_a = hilbert_series(P, D);
  r.hilbert_dual = hilbert_series(dual, D);
  for (int k = 0; k <= D; ++k) {
    long s = 0;
    for (int i = 0; i <= k; ++i) {
      long term = static_cast<long>(r.hilbert_a[static_cast<std::size_t>(i)]) *
                  static_cast<long>(r.hilbert_dual[static_cast<std::size_t>(k - i)]);
      s += (k - i) % 2 == 0 ? term : -term;
    }
    r.product.push_back(s);
    long expected = k == 0 ? 1 : 0;
    if (s != expected && !r.first_failing_degree) {
      r.pass = false;
      r.first_failing_degree = k;
    }
  }
  return r;
}

SkewData skew_tools(const linalg::Matrix& p, const Field& f, std::vector<std::string> names, int degree_cap) {
  if (!p.square() || p.rows() == 0) throw InvalidArgument("skew parameters must form a nonempty square matrix");
  const std::size_t n = p.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p(i, i).is_one()) throw InvalidArgument("skew parameters need p_ii = 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (p(i, j).is_zero()) throw InvalidArgument("skew parameters must be nonzero");
      if (!(p(i, j) * p(j, i)).is_one()) throw InvalidArgument("skew parameters need p_ji = p_ij^-1");
    }
  }
  if (names.empty()) names = default_names("x", static_cast<int>(n));
  if (names.size() != n) throw InvalidArgument("wrong number of generator names");
  const int ni = static_cast<int>(n);
  std::vector<NCPoly> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      NCPoly r = NCPoly::monomial(ni, f, Word{Letter(j), Letter(i)}, Scalar::one(f));
      r.add_term(Word{Letter(i), Letter(j)}, -p(i, j));
      rels.push_back(std::move(r));
    }
  SkewData out{GradedPresentation(names, rels, f, degree_cap), linalg::Matrix(n, n), {}};
  out.orders.assign(n, std::vector<std::optional<long>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar q = Scalar::one(f);
      for (std::size_t a = 0; a < n; ++a) q *= p(i, a) * p(a, j);
      out.q(i, j) = q;
      out.orders[i][j] = multiplicative_order(q);
    }
  return out;
}

bool relation_span_equal(const GradedPresentation& a, const GradedPresentation& b) {
  if (a.generators() != b.generators())
    throw AmbientMismatch("presentations have different generator counts");
  if (!a.relations().empty() && !b.relations().empty() && a.relation_degree() != b.relation_degree())
    throw AmbientMismatch("presentations have different relation degrees");
  const auto& ra = a.relations();
  const auto& rb = b.relations();
  if (ra.size() != rb.size()) return false;
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i] != rb[i]) return false;
  return true;
}

}  // namespace nakayama
