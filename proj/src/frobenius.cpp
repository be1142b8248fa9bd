#include "nakayama/frobenius.hpp"

namespace nakayama {

using linalg::Matrix;

FDAlgebra::FDAlgebra(GradedPresentation P, int top_degree) : P_(std::move(P)), l_(top_degree) {
  if (l_ < 0) throw InvalidArgument("negative top degree");
  table_.resize(static_cast<std::size_t>(l_) + 1);
  for (int i = 0; i <= l_; ++i) {
    table_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(l_ - i) + 1);
    for (int j = 0; i + j <= l_; ++j) {
      auto& cell = table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& bi = basis(i);
      const auto& bj = basis(j);
      cell.reserve(bi.size() * bj.size());
      for (const auto& u : bi)
        for (const auto& v : bj) {
          Word w = u;
          w.insert(w.end(), v.begin(), v.end());
          cell.push_back(P_.coordinates(NCPoly::monomial(generators(), field(), w, Scalar::one(field())), i + j));
        }
    }
  }
}

std::size_t FDAlgebra::dim(int d) const {
  if (d < 0 || d > l_) return 0;
  return P_.dim(d);
}

std::vector<std::size_t> FDAlgebra::dims() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= l_; ++d) out.push_back(dim(d));
  return out;
}

const Vec& FDAlgebra::basis_product(int i, std::size_t a, int j, std::size_t b) const {
  if (i < 0 || j < 0 || i + j > l_) throw InvalidArgument("product leaves the algebra's degree range");
  return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][a * dim(j) + b];
}

Vec FDAlgebra::multiply(const Vec& u, int i, const Vec& v, int j) const {
  if (i + j > l_) return {};
  Vec out(dim(i + j), Scalar::zero(field()));
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[b].is_zero()) continue;
      Scalar c = u[a] * v[b];
      const Vec& p = basis_product(i, a, j, b);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

Vec FDAlgebra::unit_vector(int d, std::size_t k) const {
  Vec v(dim(d), Scalar::zero(field()));
  v.at(k) = Scalar::one(field());
  return v;
}

FDAlgebra finite_dim_algebra(const GradedPresentation& P, int cap) {
  GradedPresentation Q = cap > P.degree_cap() ? P.with_degree_cap(cap) : P;
  for (int d = 0; d <= cap; ++d)
    if (Q.dim(d) == 0) return FDAlgebra(Q, d - 1);
  throw InvalidArgument("not witnessed finite-dimensional within degree " + std::to_string(cap));
}

Matrix pairing_matrix(const FDAlgebra& E, int i) {
  const int l = E.top_degree();
  Matrix m(E.dim(i), E.dim(l - i), Scalar::zero(E.field()));
  if (E.dim(l) == 0) return m;
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) = E.basis_product(i, a, l - i, b)[0];
  return m;
}

FrobeniusCheck frobenius_check(const FDAlgebra& E) {
  FrobeniusCheck out;
  const int l = E.top_degree();
  out.top_dim = E.dim(l);
  out.pass = out.top_dim == 1;
  for (int i = 0; i <= l; ++i) {
    Matrix m = pairing_matrix(E, i);
    PairingDegree pd;
    pd.degree = i;
    pd.rows = m.rows();
    pd.cols = m.cols();
    pd.rank = m.rank();
    pd.pass = out.top_dim == 1 && m.square() && pd.rank == m.rows();
    if (!pd.pass) {
      Matrix left = m.left_nullspace();
      Matrix right = m.nullspace();
      if (left.cols() > 0) pd.witness = left.column(0);
      else if (right.cols() > 0) pd.witness = right.column(0);
    }
    out.pass = out.pass && pd.pass;
    out.degrees.push_back(std::move(pd));
  }
  return out;
}

Scalar frobenius_pairing(const FDAlgebra& E, const FrobeniusData& F, const Vec& u, int i, const Vec& v) {
  Vec p = E.multiply(u, i, v, E.top_degree() - i);
  return p.at(0) / F.top_scale;
}

namespace {

Vec mat_vec(const Matrix& m, const Vec& v) {
  Vec out(m.rows(), Scalar::zero(v.empty() ? Field::rationals() : v[0].field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

FrobeniusData dual_bases_and_nakayama(const FDAlgebra& E, const std::optional<Matrix>& a_in,
                                      const std::optional<Scalar>& top_scale) {
  const int l = E.top_degree();
  const std::size_t n = E.dim(1);
  const Field& f = E.field();
  if (l < 1) throw InvalidArgument("Nakayama data needs top degree at least 1");
  if (!frobenius_check(E).pass) throw InvalidArgument("pairing is degenerate; the algebra is not Frobenius");
  FrobeniusData F;
  F.top_degree = l;
  F.top_word = E.basis(l).front();
  F.top_scale = top_scale.value_or(Scalar::one(f));
  if (F.top_scale.is_zero()) throw InvalidArgument("top vector must be nonzero");
  F.a = a_in.value_or(Matrix::identity(n, f));
  if (F.a.rows() != n || F.a.cols() != n) throw InvalidArgument("slice-1 basis has the wrong shape");
  auto a_inv = F.a.try_inverse();
  if (!a_inv) throw InvalidArgument("slice-1 vectors do not form a basis");

  const Scalar inv_scale = F.top_scale.inverse();
  Matrix P1 = pairing_matrix(E, 1).scaled(inv_scale);      // slice_1 x slice_{l-1}
  Matrix Q = pairing_matrix(E, l - 1).scaled(inv_scale);   // slice_{l-1} x slice_1
  auto ap = (F.a * P1).try_inverse();
  NAKAYAMA_ASSERT(ap.has_value(), "dual basis solve is singular");
  F.b = ap->transpose();
  auto bq = (F.b * Q).try_inverse();
  NAKAYAMA_ASSERT(bq.has_value(), "second dual basis solve is singular");
  F.c = bq->transpose();
  F.alpha = F.c * *a_inv;

  // Nakayama map on slice 1: mu(a_i) = c_i, as a matrix on coordinate columns.
  Matrix mu1 = F.c.transpose() * a_inv->transpose();
  F.mu.push_back(Matrix::identity(1, f));
  F.mu.push_back(mu1);
  for (int d = 2; d <= l; ++d) {
    const auto& words = E.basis(d);
    Matrix md(E.dim(d), words.size(), Scalar::zero(f));
    for (std::size_t k = 0; k < words.size(); ++k) {
      Vec acc = mu1.column(words[k][0]);
      for (std::size_t s = 1; s < words[k].size(); ++s)
        acc = E.multiply(acc, static_cast<int>(s), mu1.column(words[k][s]), 1);
      for (std::size_t r = 0; r < acc.size(); ++r) md(r, k) = acc[r];
    }
    F.mu.push_back(std::move(md));
  }

  // The multiplicative extension is well defined only if the relations are
  // preserved; check that first, then the automorphism and pairing identities.
  const GradedPresentation& P = E.presentation();
  const int ng = P.generators();
  for (const auto& r : P.relations()) {
    if (r.degree() > l) continue;
    NCPoly image(ng, f);
    for (const auto& [w, c] : r.terms()) {
      NCPoly term = NCPoly::constant(ng, f, c);
      for (Letter x : w) {
        NCPoly lin(ng, f);
        Vec col = mu1.column(x);
        for (std::size_t u = 0; u < col.size(); ++u) lin.add_term(Word{Letter(u)}, col[u]);
        term = term * lin;
      }
      image += term;
    }
    NAKAYAMA_ASSERT(P.normal_form(image).is_zero(), "Nakayama map does not preserve the relations");
  }
  for (int i = 0; i <= l; ++i)
    for (int j = 0; i + j <= l; ++j)
      for (std::size_t u = 0; u < E.dim(i); ++u)
        for (std::size_t v = 0; v < E.dim(j); ++v) {
          Vec lhs = mat_vec(F.mu[static_cast<std::size_t>(i + j)], E.basis_product(i, u, j, v));
          Vec rhs = E.multiply(F.mu[static_cast<std::size_t>(i)].column(u), i,
                               F.mu[static_cast<std::size_t>(j)].column(v), j);
          NAKAYAMA_ASSERT(lhs == rhs, "Nakayama map is not multiplicative");
        }
  for (int i = 0; i <= l; ++i)
    for (std::size_t u = 0; u < E.dim(i); ++u)
      for (std::size_t v = 0; v < E.dim(l - i); ++v) {
        Vec uu = E.unit_vector(i, u);
        Vec vv = E.unit_vector(l - i, v);
        Scalar lhs = frobenius_pairing(E, F, uu, i, vv);
        Scalar rhs = frobenius_pairing(E, F, vv, l - i, F.mu[static_cast<std::size_t>(i)].column(u));
        NAKAYAMA_ASSERT(lhs == rhs, "pairing identity <u,v> = <v,mu(u)> fails");
      }
  F.mu_top = F.mu[static_cast<std::size_t>(l)](0, 0);
  NAKAYAMA_ASSERT(!F.mu_top.is_zero(), "Nakayama map kills the top slice");
  return F;
}

Matrix nakayama_of_A(const Matrix& alpha, int d) {
  if (!alpha.try_inverse()) throw InvalidArgument("Nakayama matrix alpha is singular");
  Scalar sign = (d + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
  return alpha.transpose().scaled(sign);
}

std::optional<Scalar> is_r_nakayama(const Matrix& M) {
  Scalar r;
  if (M.is_scalar_multiple_of_identity(&r)) return r;
  return std::nullopt;
}

}  // namespace nakayama
