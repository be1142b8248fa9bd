#pragma once

// Algebras and Hopf algebras shared by the unit tests and the acceptance
// binary.

#include <string>
#include <vector>

#include "nakayama/coaction.hpp"
#include "nakayama/hopf.hpp"
#include "nakayama/presentation.hpp"

namespace corpus {

using namespace nakayama;

inline GradedPresentation algebra(const Field& f, const std::vector<std::string>& names,
                                  const std::vector<std::string>& rels, int cap = kDefaultDegreeCap) {
  std::vector<NCPoly> ps;
  for (const auto& r : rels) ps.push_back(parse_ncpoly(r, names, f));
  return GradedPresentation(names, ps, f, cap);
}

// k_p[x1, x2]: x2 x1 = p x1 x2.
inline GradedPresentation quantum_plane(const Field& f, const std::string& p) {
  return algebra(f, {"x1", "x2"}, {"x2*x1 - (" + p + ")*x1*x2"});
}

inline GradedPresentation jordan_plane(const Field& f) {
  return algebra(f, {"x1", "x2"}, {"x2*x1 - x1*x2 - x1*x1"});
}

// Skew ring with p_ij = gen(i, j) for i < j (0-based).
template <class Gen>
linalg::Matrix skew_matrix(const Field& f, int n, Gen gen) {
  linalg::Matrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Scalar::one(f));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar v = gen(i, j);
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      p(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v.inverse();
    }
  return p;
}

struct Case {
  std::string name;
  GradedPresentation A;
  HopfAlgebra K;
};

// quantum plane x {C2, C4, Sweedler} and Jordan plane x C2. The plane's
// parameter is -1 except with C4, where it is z over Q(z4).
inline std::vector<Case> coaction_corpus() {
  const Field q = Field::rationals();
  const Field c4 = Field::cyclotomic(4);
  std::vector<Case> out;
  out.push_back({"k_-1 x C2", quantum_plane(q, "-1"), group_cyclic(q, 2)});
  out.push_back({"k_z4 x C4", quantum_plane(c4, "z"), group_cyclic(c4, 4)});
  out.push_back({"k_-1 x Sweedler", quantum_plane(q, "-1"), sweedler(q)});
  out.push_back({"Jordan x C2", jordan_plane(q), group_cyclic(q, 2)});
  return out;
}

inline std::vector<std::pair<std::string, HopfAlgebra>> builtins() {
  const Field q = Field::rationals();
  const Field c3 = Field::cyclotomic(3);
  const Field c4 = Field::cyclotomic(4);
  std::vector<std::pair<std::string, HopfAlgebra>> out;
  out.emplace_back("C1", group_cyclic(q, 1));
  out.emplace_back("C2", group_cyclic(q, 2));
  out.emplace_back("C4", group_cyclic(c4, 4));
  out.emplace_back("C6", group_cyclic(q, 6));
  out.emplace_back("C2xC2", group_abelian(q, {2, 2}));
  out.emplace_back("C2xC3", group_abelian(q, {2, 3}));
  out.emplace_back("dual C3 over Q(z3)", dual_group(c3, 3));
  out.emplace_back("dual C4 over Q", dual_group(q, 4));
  out.emplace_back("Sweedler", sweedler(q));
  out.emplace_back("Taft3", taft(c3, 3, Scalar::z(c3)));
  out.emplace_back("Taft4", taft(c4, 4, Scalar::z(c4)));
  return out;
}

inline bool same_span(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b) {
  return span_reduce(a).basis == span_reduce(b).basis;
}

}  // namespace corpus
