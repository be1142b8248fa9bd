#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/coaction.hpp"
#include "nakayama/presentation.hpp"

namespace nakayama {

// Generator y_ki (row k, column i, 0-based) is letter k*n + i, named y11,
// y12, ... (y_k_i once n >= 10).
std::vector<std::string> manin_names(int n);

struct MatrixBialgebraPresentation {
  int n = 0;
  std::vector<std::string> names;
  Field field;
  std::vector<NCPoly> relations;  // span-reduced
  std::size_t raw_count = 0;      // m (n^2 - m) products before reduction
  // Present when the dual has a one-dimensional top slice.
  std::optional<NCPoly> codeterminant;
  // Set by sl_relation_set: the relation D - 1.
  std::optional<NCPoly> inhomogeneous;

  GradedPresentation presentation(int degree_cap = kDefaultDegreeCap) const;
  std::string to_string(const NCPoly& p) const { return p.to_string(names); }
  // Parses a polynomial in the y's; the symbol D stands for the codeterminant.
  NCPoly parse(std::string_view text) const;
};

// Throws Unsupported for non-quadratic A.
MatrixBialgebraPresentation manin_matrix_relations(const GradedPresentation& A);

// Coefficient of e in rho(e) with the y's as free symbols. Throws
// InvalidArgument when the dual is not finite-dimensional with a
// one-dimensional top slice.
NCPoly codeterminant_element(const GradedPresentation& A);

MatrixBialgebraPresentation sl_relation_set(const GradedPresentation& A);

// Membership of target in the ideal at bounded degree. With an inhomogeneous
// D - 1 present, lower-degree components are first multiplied by powers of
// the codeterminant. Throws DegreeCapExceeded beyond `degree_cap`.
bool consequence_check(const MatrixBialgebraPresentation& P, const NCPoly& target,
                       int degree_cap = kDefaultDegreeCap);

// Image of a polynomial in the y's under y_ki -> Y[k][i].
HopfElement substitute(const HopfAlgebra& K, const NCPoly& p, const HMatrix& Y);

}  // namespace nakayama
