#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/linalg.hpp"
#include "nakayama/scalar.hpp"

namespace nakayama {

using Letter = std::uint16_t;
// Letters are 0-based generator indices.
using Word = std::vector<Letter>;

// Degree first, then lexicographic on letters.
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Position of a word inside V^{⊗d} read as a base-n number; within a fixed
// degree this order agrees with deglex.
std::uint64_t word_index(const Word& w, int n);
Word word_from_index(std::uint64_t idx, int n, int degree);
// n^d, throwing DegreeCapExceeded when it does not fit the index type.
std::uint64_t slice_size(int n, int degree);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

/// Noncommutative polynomial over n indexed generators.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DeglexLess>;

  NCPoly() = default;
  NCPoly(int n, Field f) : n_(n), field_(f) {}

  static NCPoly generator(int n, const Field& f, int i);
  static NCPoly monomial(int n, const Field& f, Word w, const Scalar& c);
  static NCPoly constant(int n, const Field& f, const Scalar& c);

  int generators() const { return n_; }
  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // Deglex-greatest word with nonzero coefficient. Requires nonzero.
  const Word& leading_word() const;
  const Scalar& leading_coefficient() const;

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly operator*(const Scalar& s) const;
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  void add_term(const Word& w, const Scalar& c);

  // Coefficient vector in V^{⊗d}; requires homogeneity of degree d (or zero).
  linalg::SparseVec to_sparse(int d) const;
  static NCPoly from_sparse(int n, const Field& f, int d, const linalg::SparseVec& v);

  // Highest-deglex term first, e.g. "x2*x1 - t*x1*x2".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_ambient(const NCPoly& o) const;

  int n_ = 0;
  Field field_;
  Terms terms_;
};

// Parses `x1*x2 - t*x1*x1` style text. Generator names take precedence over
// the scalar symbols t and z. Juxtaposition is rejected by the grammar.
NCPoly parse_ncpoly(std::string_view text, const std::vector<std::string>& names, const Field& f);

struct SpanBasis {
  std::vector<NCPoly> basis;  // monic, descending leading words
  std::vector<Word> leading;
};

// Reduced echelon basis of the span of equal-degree homogeneous polynomials.
SpanBasis span_reduce(const std::vector<NCPoly>& vs);

// Pairing of V*^{⊗d} with V^{⊗d} in which dual words pair with equal words.
Scalar dual_pairing(const NCPoly& a, const NCPoly& f);

}  // namespace nakayama
