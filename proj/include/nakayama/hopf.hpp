#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/check.hpp"
#include "nakayama/linalg.hpp"
#include "nakayama/scalar.hpp"

namespace nakayama {

// Coefficient vector over the basis of a HopfAlgebra.
using HopfElement = std::vector<Scalar>;

struct CoTerm {
  std::size_t left = 0, right = 0;
  Scalar coef;
  bool operator==(const CoTerm&) const = default;
};

/// Finite-dimensional Hopf algebra as structure constants. Nothing is assumed
/// about the axioms; hopf_verify checks them.
class HopfAlgebra {
 public:
  HopfAlgebra(Field f, std::vector<std::string> labels, std::vector<std::vector<HopfElement>> mult,
              HopfElement unit, std::vector<std::vector<CoTerm>> comult, HopfElement counit,
              std::vector<HopfElement> antipode, std::vector<bool> grouplike_flags = {});

  std::size_t dim() const { return labels_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const HopfElement& product_of_basis(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const std::vector<std::vector<HopfElement>>& mult_table() const { return mult_; }
  const HopfElement& unit() const { return unit_; }
  const std::vector<CoTerm>& comult(std::size_t k) const { return comult_[k]; }
  const std::vector<std::vector<CoTerm>>& comult_table() const { return comult_; }
  const HopfElement& counit_vector() const { return counit_; }
  // S(b_j).
  const HopfElement& antipode_image(std::size_t j) const { return antipode_[j]; }
  const std::vector<HopfElement>& antipode_table() const { return antipode_; }
  // Basis elements known to be grouplike by construction.
  const std::vector<bool>& grouplike_flags() const { return flags_; }

  HopfElement zero() const;
  HopfElement one() const { return unit_; }
  HopfElement basis(std::size_t i) const;
  HopfElement scalar(const Scalar& s) const;

  HopfElement add(const HopfElement& a, const HopfElement& b) const;
  HopfElement sub(const HopfElement& a, const HopfElement& b) const;
  HopfElement scale(const HopfElement& a, const Scalar& s) const;
  HopfElement mul(const HopfElement& a, const HopfElement& b) const;
  HopfElement pow(const HopfElement& a, long k) const;  // k < 0 uses inverse()
  // Two-sided inverse; throws InvalidArgument when not invertible.
  HopfElement inverse(const HopfElement& a) const;
  HopfElement S(const HopfElement& a) const;
  Scalar eps(const HopfElement& a) const;
  // Delta(a) as a dim x dim coefficient matrix of b_i (x) b_j.
  linalg::Matrix delta(const HopfElement& a) const;
  linalg::Matrix tensor(const HopfElement& a, const HopfElement& b) const;
  linalg::Matrix tensor_mul(const linalg::Matrix& x, const linalg::Matrix& y) const;

  // Column j holds the image of b_j.
  linalg::Matrix antipode_matrix() const;
  linalg::Matrix left_mult_matrix(const HopfElement& a) const;
  HopfElement apply(const linalg::Matrix& m, const HopfElement& a) const;

  bool is_zero(const HopfElement& a) const;
  bool is_grouplike(const HopfElement& a) const;

  // Linear combinations of basis labels and scalars, e.g. "z*g + x", "g^-1".
  HopfElement parse_element(std::string_view text) const;
  std::string to_string(const HopfElement& a) const;

  bool operator==(const HopfAlgebra& o) const;

 private:
  void check_element(const HopfElement& a) const;

  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<HopfElement>> mult_;
  HopfElement unit_;
  std::vector<std::vector<CoTerm>> comult_;
  HopfElement counit_;
  std::vector<HopfElement> antipode_;
  std::vector<bool> flags_;
};

CheckList hopf_verify(const HopfAlgebra& K);

// Builtins. Element labels: group_cyclic uses 1, g, g^2, ...; group_abelian
// names its factor generators g, h, k, ...; dual_group uses e0, e1, ...; taft
// uses g^a*x^b.
HopfAlgebra group_algebra(const Field& f, std::vector<std::string> labels,
                          const std::vector<std::vector<std::size_t>>& cayley);
HopfAlgebra group_cyclic(const Field& f, int n);
HopfAlgebra group_abelian(const Field& f, const std::vector<int>& orders);
HopfAlgebra dual_group(const Field& f, int n);
// Delta(x) = x⊗1 + g⊗x, g^n = 1, x^n = 0, xg = q gx. q must be a primitive
// n-th root of unity.
HopfAlgebra taft(const Field& f, int n, const Scalar& q);
HopfAlgebra sweedler(const Field& f);

struct Grouplike {
  HopfElement element;
  std::optional<long> order;
};

struct GrouplikeResult {
  std::vector<Grouplike> grouplikes;
  // False when some eigenvalue could not be found exactly, or when the
  // dimension forced the flagged-candidate fallback.
  bool complete = true;
  std::string method;
};

inline constexpr std::size_t kGrouplikeSearchCap = 16;
GrouplikeResult grouplikes(const HopfAlgebra& K);

std::optional<long> element_order(const HopfAlgebra& K, const HopfElement& g, long bound);
std::optional<long> linear_map_order(const linalg::Matrix& m, long bound);

struct SquaredAntipode {
  linalg::Matrix map;
  std::optional<long> order;
};
SquaredAntipode s_squared(const HopfAlgebra& K);

struct ConjugationAutomorphism {
  linalg::Matrix map;  // a -> g^{-1} a g, columns are images of basis elements
  CheckList checks;
};
// Throws InvalidArgument when g is not grouplike.
ConjugationAutomorphism conj_auto(const HopfAlgebra& K, const HopfElement& g);

struct Closure {
  std::size_t dim = 0;
  std::vector<HopfElement> basis;
};
// Smallest subspace containing 1 and gens closed under products and S.
Closure subalgebra_closure(const HopfAlgebra& K, const std::vector<HopfElement>& gens);

}  // namespace nakayama
