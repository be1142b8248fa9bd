#pragma once

// Test-side reference computations over Q. Nothing here calls into the
// library: plain mpq_class matrices, dense Gaussian elimination, words as
// std::vector<int>.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
using Word = std::vector<int>;
using Poly = std::map<Word, Q>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Q>(c, Q(0))); }

inline Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat out = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat out = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

inline Mat inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat aug = zeros(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] >= n) throw std::runtime_error("oracle: singular matrix");
  Mat out = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

// Basis of {x : m x = 0}, one vector per entry.
inline std::vector<std::vector<Q>> nullspace(Mat m, std::size_t cols) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Q>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Q> v(cols, Q(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(v);
  }
  return out;
}

// Base-n index of a word, first letter most significant.
inline std::size_t index_of(const Word& w, int n) {
  std::size_t idx = 0;
  for (int x : w) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
  return idx;
}

inline Word word_at(std::size_t idx, int n, int d) {
  Word w(static_cast<std::size_t>(d));
  for (int k = d - 1; k >= 0; --k) {
    w[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
  }
  return w;
}

inline std::size_t power(int n, int d) {
  std::size_t out = 1;
  for (int i = 0; i < d; ++i) out *= static_cast<std::size_t>(n);
  return out;
}

// dim of the two-sided ideal generated by homogeneous `rels` (all of degree
// N) in degree d, by brute force over all u r v.
inline std::size_t ideal_dim(int n, const std::vector<Poly>& rels, int d) {
  if (rels.empty()) return 0;
  const int N = static_cast<int>(rels[0].begin()->first.size());
  if (d < N) return 0;
  const std::size_t cols = power(n, d);
  Mat rows;
  for (const auto& r : rels)
    for (int left = 0; left <= d - N; ++left)
      for (std::size_t a = 0; a < power(n, left); ++a)
        for (std::size_t b = 0; b < power(n, d - N - left); ++b) {
          std::vector<Q> row(cols, Q(0));
          Word u = word_at(a, n, left), v = word_at(b, n, d - N - left);
          for (const auto& [w, c] : r) {
            Word full = u;
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), v.begin(), v.end());
            row[index_of(full, n)] += c;
          }
          rows.push_back(std::move(row));
        }
  return rank(std::move(rows));
}

inline std::vector<std::size_t> hilbert(int n, const std::vector<Poly>& rels, int D) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= D; ++d) out.push_back(power(n, d) - ideal_dim(n, rels, d));
  return out;
}

// Quadratic dual relations: the annihilator of span(rels) in V*⊗V* under the
// pairing of x_i* x_j* with x_i x_j.
inline std::vector<Poly> koszul_dual(int n, const std::vector<Poly>& rels) {
  const std::size_t cols = power(n, 2);
  Mat m;
  for (const auto& r : rels) {
    std::vector<Q> row(cols, Q(0));
    for (const auto& [w, c] : r) row[index_of(w, n)] = c;
    m.push_back(std::move(row));
  }
  std::vector<Poly> out;
  if (m.empty()) m.push_back(std::vector<Q>(cols, Q(0)));
  for (const auto& v : nullspace(m, cols)) {
    Poly p;
    for (std::size_t i = 0; i < cols; ++i)
      if (v[i] != 0) p[word_at(i, n, 2)] = v[i];
    out.push_back(p);
  }
  return out;
}

// H_A(s) H_{A!}(-s) truncated at degree D.
inline std::vector<long> hilbert_product(const std::vector<std::size_t>& a, const std::vector<std::size_t>& e, int D) {
  std::vector<long> out(static_cast<std::size_t>(D + 1), 0);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) {
      long ej = j < static_cast<int>(e.size()) ? static_cast<long>(e[static_cast<std::size_t>(j)]) : 0;
      out[static_cast<std::size_t>(i + j)] +=
          static_cast<long>(a[static_cast<std::size_t>(i)]) * ej * (j % 2 == 0 ? 1 : -1);
    }
  return out;
}

// Nakayama matrix of a two-generator quadratic algebra with one relation r
// whose dual has dims [1, 2, 1]. The top functional of E_2 is r itself (the
// annihilator of R^perp is R), so P[i][j] = r(x_i x_j). With a = identity:
// B^T = P^-1, C^T = (B P)^-1 and alpha = C.
inline Mat nakayama_two_generators(const Poly& r) {
  Mat P = zeros(2, 2);
  for (const auto& [w, c] : r) P[static_cast<std::size_t>(w[0])][static_cast<std::size_t>(w[1])] = c;
  Mat B = transpose(inverse(P));
  Mat C = transpose(inverse(mul(B, P)));
  return C;
}

}  // namespace oracle
