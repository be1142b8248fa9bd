#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakayama/check.hpp"
#include "nakayama/frobenius.hpp"
#include "nakayama/hopf.hpp"
#include "nakayama/presentation.hpp"

namespace nakayama {

// Square matrix with entries in a Hopf algebra.
using HMatrix = std::vector<std::vector<HopfElement>>;

HMatrix hm_identity(const HopfAlgebra& K, std::size_t n);
HMatrix hm_scalar_diag(const HopfAlgebra& K, std::size_t n, const HopfElement& d);
HMatrix hm_mul(const HopfAlgebra& K, const HMatrix& x, const HMatrix& y);
HMatrix hm_transpose(const HMatrix& x);
HMatrix hm_S(const HopfAlgebra& K, const HMatrix& x);
// Scalar matrices acting from the left / right.
HMatrix hm_lmul(const HopfAlgebra& K, const linalg::Matrix& m, const HMatrix& x);
HMatrix hm_rmul(const HopfAlgebra& K, const HMatrix& x, const linalg::Matrix& m);
std::vector<std::vector<std::string>> hm_strings(const HopfAlgebra& K, const HMatrix& x);
// Parses rows of element literals over K's labels.
HMatrix hm_parse(const HopfAlgebra& K, const std::vector<std::vector<std::string>>& rows);

// Right coaction rho(x_j) = sum_i x_i (x) Y[i][j] of K on A.
// Checks comodule.delta, comodule.counit and comodule.relations. Throws
// AmbientMismatch on shape or field mismatches.
CheckList verify_comodule_algebra(const GradedPresentation& A, const HopfAlgebra& K, const HMatrix& Y);

// Induced left coaction on E = A^!: rho(w) = sum_v R[d][w][v] (x) v over the
// normal words of each slice.
struct DualCoaction {
  FDAlgebra E;
  FrobeniusData frob;
  std::vector<HMatrix> R;
  HMatrix Y;  // on the a-basis of E_1: rho(a_i) = sum_s Y[i][s] (x) a_s
  HMatrix F;  // on the b-basis of E_{l-1}
  HMatrix G;  // on the c-basis of E_1
  HopfElement D;
};

// `a` picks the E_1 basis as in dual_bases_and_nakayama. Throws
// InternalAssertion when rho does not preserve the dual relations.
DualCoaction induced_dual_coaction(const GradedPresentation& A, const HopfAlgebra& K, const HMatrix& Y,
                                   const std::optional<linalg::Matrix>& a = std::nullopt);

// Grouplike, counit and invertibility checks on the codeterminant.
CheckList hcodet_checks(const HopfAlgebra& K, const HopfElement& D);

// Identities lemma31.a ... lemma31.g.
CheckList lemma31_report(const HopfAlgebra& K, const DualCoaction& data);

// D^{-1} S^2(Y) D = M^T Y (M^T)^{-1} with M = nakayama_of_A(alpha, d); d
// defaults to the top degree of E. Also records the Koszul numeric check and
// that the right-hand side does not depend on the parity of d.
CheckList check_main_theorem(const GradedPresentation& A, const HopfAlgebra& K, const HMatrix& Y,
                             std::optional<int> d = std::nullopt,
                             const std::optional<linalg::Matrix>& a = std::nullopt);

struct InnerFaithfulResult {
  bool inner_faithful = false;
  Closure closure;
};
InnerFaithfulResult inner_faithful(const HopfAlgebra& K, const HMatrix& Y);

// a -> D^{-1} S^2(a) D restricted to `closure`: multiplicativity and
// compatibility with Delta, counit.
CheckList eta_s2_checks(const HopfAlgebra& K, const HopfElement& D, const Closure& closure);

// S^2 = id on the closure; meaningful when alpha is scalar and D = 1.
Check s2_identity_on(const HopfAlgebra& K, const Closure& closure);

struct SolveResult {
  std::vector<HMatrix> coactions;
  bool partial = false;  // cap hit or an equation could not be solved exactly
  std::size_t patterns = 0;
  std::vector<std::string> notes;
};

inline constexpr std::size_t kDefaultPatternCap = 200000;

// Monomial ansatz Y[i][j] = lambda_ij * b_k or 0. Free scalings are fixed to
// 1. Every returned matrix passed verify_comodule_algebra.
SolveResult solve_coactions(const GradedPresentation& A, const HopfAlgebra& K,
                            std::size_t pattern_cap = kDefaultPatternCap);

}  // namespace nakayama
