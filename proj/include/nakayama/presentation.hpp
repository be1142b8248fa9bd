#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/free_algebra.hpp"
#include "nakayama/linalg.hpp"

namespace nakayama {

inline constexpr int kDefaultDegreeCap = 8;

/// Basis data for A_d = V^{⊗d} / I_d.
struct GradedSlice {
  int degree = 0;
  linalg::Echelon ideal;            // I_d in word-index coordinates
  std::vector<std::uint64_t> normal;  // ascending word indices of normal words
  std::vector<Word> normal_words;

  std::size_t dim() const { return normal.size(); }
  // Position of a normal word index in `normal`, or -1.
  long position(std::uint64_t idx) const;
};

/// Connected graded algebra k<x_1..x_n>/(R), R homogeneous of one degree N.
///
/// Slices are computed lazily and memoized; copies share the cache, which is
/// safe because the presentation itself never changes after construction.
class GradedPresentation {
 public:
  GradedPresentation(std::vector<std::string> names, const std::vector<NCPoly>& relations, Field f,
                     int degree_cap = kDefaultDegreeCap);

  int generators() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Field& field() const { return field_; }
  // Span-reduced relations, descending leading words.
  const std::vector<NCPoly>& relations() const { return relations_; }
  // Relation degree N; 2 when there are no relations.
  int relation_degree() const { return N_; }
  bool is_quadratic() const { return N_ == 2; }
  int degree_cap() const { return cap_; }
  GradedPresentation with_degree_cap(int cap) const;

  const GradedSlice& slice(int d) const;
  std::size_t dim(int d) const { return slice(d).dim(); }

  NCPoly normal_form(const NCPoly& f) const;
  // Coordinates of a homogeneous degree-d polynomial in the normal-word basis.
  std::vector<Scalar> coordinates(const NCPoly& f, int d) const;
  NCPoly from_coordinates(const std::vector<Scalar>& c, int d) const;

  NCPoly generator(int i) const { return NCPoly::generator(generators(), field_, i); }
  NCPoly parse(std::string_view text) const { return parse_ncpoly(text, names_, field_); }
  std::string to_string(const NCPoly& p) const { return p.to_string(names_); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const GradedSlice>> slices;
  };
  std::shared_ptr<const GradedSlice> build_slice(int d) const;

  std::vector<std::string> names_;
  std::vector<NCPoly> relations_;
  Field field_;
  int N_ = 2;
  int cap_ = kDefaultDegreeCap;
  std::shared_ptr<Cache> cache_;
};

GradedSlice graded_component(const GradedPresentation& P, int d);

// Coefficient matrix of the quadratic relations: one row per relation, column
// i*n+j holding the coefficient of x_i x_j.
linalg::Matrix quadratic_coefficients(const GradedPresentation& P);

// Quadratic dual on primed generator names; throws Unsupported for N != 2.
GradedPresentation koszul_dual(const GradedPresentation& P);

std::vector<std::size_t> hilbert_series(const GradedPresentation& P, int D);

struct KoszulNumericResult {
  bool pass = true;
  std::optional<int> first_failing_degree;
  std::vector<long> product;  // coefficients of H_A(s) H_{A!}(-s) through degree D
  std::vector<std::size_t> hilbert_a, hilbert_dual;
};
KoszulNumericResult koszul_numeric_check(const GradedPresentation& P, int D);

struct SkewData {
  GradedPresentation presentation;
  linalg::Matrix q;
  std::vector<std::vector<std::optional<long>>> orders;
};

// Skew polynomial ring x_j x_i = p_ij x_i x_j (i < j). Requires p_ii = 1 and
// p_ji = p_ij^{-1}.
SkewData skew_tools(const linalg::Matrix& p, const Field& f, std::vector<std::string> names = {},
                    int degree_cap = kDefaultDegreeCap);

// Equality of relation spans; throws AmbientMismatch on differing generator
// counts or relation degrees.
bool relation_span_equal(const GradedPresentation& a, const GradedPresentation& b);

std::vector<std::string> default_names(const std::string& stem, int n);

}  // namespace nakayama
