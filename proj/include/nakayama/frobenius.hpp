#pragma once

#include <optional>
#include <vector>

#include "nakayama/linalg.hpp"
#include "nakayama/presentation.hpp"

namespace nakayama {

using Vec = std::vector<Scalar>;

/// Finite-dimensional connected graded algebra given by its normal-word
/// slices 0..l and the products between them.
class FDAlgebra {
 public:
  FDAlgebra(GradedPresentation P, int top_degree);

  const GradedPresentation& presentation() const { return P_; }
  const Field& field() const { return P_.field(); }
  int generators() const { return P_.generators(); }
  int top_degree() const { return l_; }
  std::size_t dim(int d) const;
  std::vector<std::size_t> dims() const;
  const std::vector<Word>& basis(int d) const { return P_.slice(d).normal_words; }

  // Coordinates of basis word a of degree i times basis word b of degree j.
  const Vec& basis_product(int i, std::size_t a, int j, std::size_t b) const;
  Vec multiply(const Vec& u, int i, const Vec& v, int j) const;
  Vec unit_vector(int d, std::size_t k) const;

 private:
  GradedPresentation P_;
  int l_;
  // table_[i][j][a * dim(j) + b]
  std::vector<std::vector<std::vector<Vec>>> table_;
};

// Throws InvalidArgument("not witnessed finite-dimensional") when no slice up
// to `cap` vanishes.
FDAlgebra finite_dim_algebra(const GradedPresentation& P, int cap = kDefaultDegreeCap);

struct PairingDegree {
  int degree = 0;  // i, pairing slice_i with slice_{l-i}
  std::size_t rows = 0, cols = 0, rank = 0;
  bool pass = false;
  Vec witness;  // nonzero kernel vector when the pairing degenerates
};

struct FrobeniusCheck {
  bool pass = false;
  std::size_t top_dim = 0;
  std::vector<PairingDegree> degrees;
};

// Pairing slice_i x slice_{l-i} -> k, read off as the coefficient of the
// first normal word of the top slice.
linalg::Matrix pairing_matrix(const FDAlgebra& E, int i);
FrobeniusCheck frobenius_check(const FDAlgebra& E);

struct FrobeniusData {
  int top_degree = 0;
  Word top_word;
  Scalar top_scale;                 // e = top_scale * top_word
  linalg::Matrix a, b, c;           // rows are basis vectors in normal-word coordinates
  linalg::Matrix alpha;             // c_i = sum_j alpha_ij a_j
  std::vector<linalg::Matrix> mu;   // mu[d] acts on coordinate columns of slice d
  Scalar mu_top;                    // mu(e) = mu_top * e
};

// Dual bases and the Nakayama matrix. `a` holds slice-1 basis vectors as rows
// (identity when omitted). Throws InvalidArgument when the pairing is
// degenerate and InternalAssertion if the extended Nakayama map fails its
// verification.
FrobeniusData dual_bases_and_nakayama(const FDAlgebra& E, const std::optional<linalg::Matrix>& a = std::nullopt,
                                      const std::optional<Scalar>& top_scale = std::nullopt);

// <u, v> for u of degree i and v of degree l-i, scaled so that <e> = 1.
Scalar frobenius_pairing(const FDAlgebra& E, const FrobeniusData& F, const Vec& u, int i, const Vec& v);

// M = (-1)^{d+1} alpha^T.
linalg::Matrix nakayama_of_A(const linalg::Matrix& alpha, int d);

// r with M = r I, if any.
std::optional<Scalar> is_r_nakayama(const linalg::Matrix& M);

}  // namespace nakayama
