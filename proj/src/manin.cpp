#include "nakayama/manin.hpp"

#include "nakayama/frobenius.hpp"

namespace nakayama {

std::vector<std::string> manin_names(int n) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      out.push_back(n >= 10 ? "y_" + std::to_string(k) + "_" + std::to_string(i)
                            : "y" + std::to_string(k) + std::to_string(i));
  return out;
}

GradedPresentation MatrixBialgebraPresentation::presentation(int degree_cap) const {
  return GradedPresentation(names, relations, field, degree_cap);
}

NCPoly MatrixBialgebraPresentation::parse(std::string_view text) const {
  auto ext = names;
  ext.push_back("D");
  NCPoly raw = parse_ncpoly(text, ext, field);
  const int g = n * n;
  bool uses_d = false;
  for (const auto& [w, c] : raw.terms())
    for (Letter x : w) uses_d = uses_d || x == g;
  if (uses_d && !codeterminant) throw InvalidArgument("D is not available: no codeterminant for this algebra");
  NCPoly out(g, field);
  for (const auto& [w, c] : raw.terms()) {
    NCPoly term = NCPoly::constant(g, field, c);
    for (Letter x : w) term = term * (x == g ? *codeterminant : NCPoly::generator(g, field, x));
    out += term;
  }
  return out;
}

MatrixBialgebraPresentation manin_matrix_relations(const GradedPresentation& A) {
  if (!A.is_quadratic()) throw Unsupported("quantum matrix relations need quadratic relations");
  const int n = A.generators();
  const Field& f = A.field();
  GradedPresentation dual = koszul_dual(A);
  linalg::Matrix c = quadratic_coefficients(A);
  linalg::Matrix d = quadratic_coefficients(dual);
  MatrixBialgebraPresentation out;
  out.n = n;
  out.names = manin_names(n);
  out.field = f;
  const int g = n * n;
  std::vector<NCPoly> raw;
  for (std::size_t w = 0; w < c.rows(); ++w)
    for (std::size_t u = 0; u < d.rows(); ++u) {
      NCPoly p(g, f);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Scalar& cij = c(w, static_cast<std::size_t>(i * n + j));
          if (cij.is_zero()) continue;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              const Scalar& dkl = d(u, static_cast<std::size_t>(k * n + l));
              if (dkl.is_zero()) continue;
              p.add_term(Word{Letter(k * n + i), Letter(l * n + j)}, cij * dkl);
            }
        }
      raw.push_back(std::move(p));
    }
  out.raw_count = raw.size();
  std::vector<NCPoly> nonzero;
  for (auto& p : raw)
    if (!p.is_zero()) nonzero.push_back(std::move(p));
  if (!nonzero.empty()) out.relations = span_reduce(nonzero).basis;
  try {
    out.codeterminant = codeterminant_element(A);
  } catch (const InvalidArgument&) {
    out.codeterminant.reset();
  }
  return out;
}

NCPoly codeterminant_element(const GradedPresentation& A) {
  if (!A.is_quadratic()) throw Unsupported("codeterminant needs quadratic relations");
  const int n = A.generators();
  const Field& f = A.field();
  GradedPresentation dual = koszul_dual(A);
  FDAlgebra E = finite_dim_algebra(dual, dual.degree_cap());
  const int l = E.top_degree();
  if (E.dim(l) != 1) throw InvalidArgument("top slice of the dual is not one-dimensional");
  const Word& top = E.basis(l).front();
  const int g = n * n;
  NCPoly out(g, f);
  const std::uint64_t total = slice_size(n, l);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word s = word_from_index(idx, n, l);
    Scalar coord = dual.coordinates(NCPoly::monomial(n, f, s, Scalar::one(f)), l)[0];
    if (coord.is_zero()) continue;
    Word y;
    for (int k = 0; k < l; ++k) y.push_back(static_cast<Letter>(top[k] * n + s[k]));
    out.add_term(y, coord);
  }
  return out;
}

MatrixBialgebraPresentation sl_relation_set(const GradedPresentation& A) {
  MatrixBialgebraPresentation out = manin_matrix_relations(A);
  if (!out.codeterminant) throw InvalidArgument("no codeterminant: the dual has no one-dimensional top slice");
  const int g = out.n * out.n;
  out.inhomogeneous = *out.codeterminant - NCPoly::constant(g, out.field, Scalar::one(out.field));
  return out;
}

bool consequence_check(const MatrixBialgebraPresentation& P, const NCPoly& target, int degree_cap) {
  if (target.is_zero()) return true;
  const int g = P.n * P.n;
  if (target.generators() != g) throw AmbientMismatch("target lives over a different generator set");
  const int top = target.degree();
  if (top > degree_cap) throw DegreeCapExceeded("target degree " + std::to_string(top) + " exceeds cap " +
                                                std::to_string(degree_cap));
  GradedPresentation ideal = P.presentation(std::max(degree_cap, 2));
  // split into homogeneous components
  std::map<int, NCPoly> parts;
  for (const auto& [w, c] : target.terms()) {
    auto [it, fresh] = parts.try_emplace(static_cast<int>(w.size()), NCPoly(g, P.field));
    it->second.add_term(w, c);
  }
  if (P.inhomogeneous) {
    const NCPoly& D = *P.codeterminant;
    const int l = D.degree();
    NCPoly lifted(g, P.field);
    for (auto& [deg, part] : parts) {
      if ((top - deg) % l != 0) return false;  // cannot be lifted through D - 1
      NCPoly term = part;
      for (int k = 0; k < (top - deg) / l; ++k) term = term * D;
      lifted += term;
    }
    return ideal.normal_form(lifted).is_zero();
  }
  for (const auto& [deg, part] : parts)
    if (!ideal.normal_form(part).is_zero()) return false;
  return true;
}

HopfElement substitute(const HopfAlgebra& K, const NCPoly& p, const HMatrix& Y) {
  const auto n = Y.size();
  if (p.generators() != static_cast<int>(n * n)) throw AmbientMismatch("polynomial and matrix sizes differ");
  HopfElement out = K.zero();
  for (const auto& [w, c] : p.terms()) {
    HopfElement term = K.scalar(c);
    for (Letter x : w) term = K.mul(term, Y[x / n][x % n]);
    out = K.add(out, term);
  }
  return out;
}

}  // namespace nakayama
