#include "nakayama/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <map>

namespace nakayama::linalg {

namespace {

std::atomic<Kernel> g_kernel{Kernel::Auto};
constexpr std::size_t kParallelThreshold = 64;

const Scalar* find_coef(const SparseVec& v, std::uint64_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::uint64_t c) { return e.first < c; });
  if (it == v.end() || it->first != col) return nullptr;
  return &it->second;
}

void make_monic(SparseVec& v) {
  Scalar inv = v.back().second.inverse();
  if (inv.is_one()) return;
  for (auto& [c, s] : v) s *= inv;
}

// Eliminates column `col` of `target` using `pivot_row` (monic at col).
bool eliminate(SparseVec& target, const SparseVec& pivot_row, std::uint64_t col) {
  const Scalar* c = find_coef(target, col);
  if (c == nullptr) return false;
  target = axpy(target, -*c, pivot_row);
  return true;
}

}  // namespace

std::vector<std::uint64_t> Echelon::pivots() const {
  std::vector<std::uint64_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.back().first);
  return out;
}

const SparseVec* Echelon::row_for_pivot(std::uint64_t col) const {
  // rows are sorted by descending pivot
  auto it = std::lower_bound(rows.begin(), rows.end(), col,
                             [](const SparseVec& r, std::uint64_t c) { return r.back().first > c; });
  if (it == rows.end() || it->back().first != col) return nullptr;
  return &*it;
}

void set_kernel(Kernel k) { g_kernel.store(k); }
Kernel kernel() { return g_kernel.load(); }

SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar s = y[i].second + a * x[j].second;
      if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  if (a.is_zero()) return {};
  SparseVec out = x;
  for (auto& [c, s] : out) s *= a;
  return out;
}

SparseVec reduce(const Echelon& e, SparseVec v) {
  std::size_t pos = v.size();
  while (pos > 0) {
    --pos;
    std::uint64_t col = v[pos].first;
    const SparseVec* r = e.row_for_pivot(col);
    if (r == nullptr) continue;
    Scalar c = v[pos].second;
    v = axpy(v, -c, *r);
    // entries above col are untouched; continue from the first entry below col
    pos = static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), col, [](const auto& en, std::uint64_t cc) { return en.first < cc; }) -
        v.begin());
  }
  return v;
}

Echelon rref_serial(std::vector<SparseVec> rows) {
  std::map<std::uint64_t, SparseVec> piv;
  for (auto& v : rows) {
    // reduce v against all current pivots, highest column first
    std::size_t pos = v.size();
    while (pos > 0) {
      --pos;
      std::uint64_t col = v[pos].first;
      auto it = piv.find(col);
      if (it == piv.end()) continue;
      v = axpy(v, -v[pos].second, it->second);
      pos = static_cast<std::size_t>(
          std::lower_bound(v.begin(), v.end(), col, [](const auto& en, std::uint64_t cc) { return en.first < cc; }) -
          v.begin());
    }
    if (v.empty()) continue;
    make_monic(v);
    std::uint64_t lead = v.back().first;
    for (auto& [p, r] : piv) eliminate(r, v, lead);
    piv.emplace(lead, std::move(v));
  }
  Echelon e;
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) e.rows.push_back(std::move(it->second));
  return e;
}

Echelon rref_parallel(std::vector<SparseVec> rows) {
  std::vector<SparseVec> active;
  active.reserve(rows.size());
  for (auto& r : rows)
    if (!r.empty()) active.push_back(std::move(r));
  Echelon e;
  while (!active.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < active.size(); ++i)
      if (active[i].back().first > active[best].back().first) best = i;
    SparseVec pr = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    make_monic(pr);
    const std::uint64_t col = pr.back().first;
    const auto n_active = static_cast<std::ptrdiff_t>(active.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n_active; ++i) eliminate(active[static_cast<std::size_t>(i)], pr, col);
    const auto n_done = static_cast<std::ptrdiff_t>(e.rows.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n_done; ++i) eliminate(e.rows[static_cast<std::size_t>(i)], pr, col);
    std::erase_if(active, [](const SparseVec& r) { return r.empty(); });
    e.rows.push_back(std::move(pr));
  }
  return e;
}

Echelon rref(std::vector<SparseVec> rows) {
  switch (kernel()) {
    case Kernel::Serial:
      return rref_serial(std::move(rows));
    case Kernel::Parallel:
      return rref_parallel(std::move(rows));
    case Kernel::Auto:
      break;
  }
  if (rows.size() >= kParallelThreshold) return rref_parallel(std::move(rows));
  return rref_serial(std::move(rows));
}

// --- dense ------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size(), c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix shape mismatch in product");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch in sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return gauss_jordan(m).size();
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (!square()) return std::nullopt;
  std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  Field f = n > 0 ? (*this)(0, 0).field() : Field::rationals();
  for (const auto& x : data_)
    if (!(x.field() == Field::rationals())) f = x.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar::one(f);
  }
  auto piv = gauss_jordan(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw InvalidArgument("matrix is singular or not square");
  return *inv;
}

Matrix Matrix::nullspace() const {
  Matrix m = *this;
  auto piv = gauss_jordan(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix out(cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    out(fc, k) = Scalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r) out(piv[r], k) = -m(r, fc);
  }
  return out;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool Matrix::is_scalar_multiple_of_identity(Scalar* r) const {
  if (!square() || rows_ == 0) return false;
  const Scalar& d = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j && (*this)(i, j) != d) return false;
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  if (r) *r = d;
  return true;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

}  // namespace nakayama::linalg
