#include "lagnet/matrix.hpp"

#include <stdexcept>

namespace lagnet {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged initializer for Mat");
    for (const auto& x : r) a_.push_back(x);
  }
}

Mat Mat::identity(std::size_t m) {
  Mat id(m, m);
  for (std::size_t i = 0; i < m; ++i) id.at(i, i) = 1;
  return id;
}

Vec Mat::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Mat Mat::slice_rows(std::size_t r0, std::size_t r1) const {
  Mat out(r1 - r0, cols_);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i - r0, j) = at(i, j);
  return out;
}

Mat Mat::submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const {
  Mat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

Mat Mat::hconcat(const Mat& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hconcat: row count mismatch");
  Mat out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("add: shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sub: shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Mat operator*(const Rat& c, const Mat& a) {
  Mat out = a;
  for (auto& x : out.a_) x *= c;
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec operator*(const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec*mat: shape mismatch");
  Vec out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m.at(i, j);
      if (x != 0) out[j] += v[i] * x;
    }
  }
  return out;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.reduced = m;
  Mat& r = res.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Rat inv = Rat(1) / r.at(lead, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col) == 0) continue;
      Rat f = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::vector<Vec> kernel(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t prow = 0; prow < r.pivots.size(); ++prow)
      v[r.pivots[prow]] = -r.reduced.at(prow, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  Mat a = m;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rat inv = Rat(1) / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      Rat f = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  // Inconsistent iff some pivot lands in the last column.
  for (auto p : r.pivots)
    if (p == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t prow = 0; prow < r.pivots.size(); ++prow)
    x[r.pivots[prow]] = r.reduced.at(prow, a.cols());
  return x;
}

Mat solve_matrix(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve_matrix: shape mismatch");
  Mat aug = a.hconcat(b);
  RrefResult r = rref(aug);
  if (r.rank < a.rows() || (r.rank > 0 && r.pivots.back() >= a.cols()))
    throw std::domain_error("solve_matrix: singular system");
  Mat x(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = r.reduced.at(i, a.cols() + j);
  return x;
}

Mat inverse(const Mat& a) { return solve_matrix(a, Mat::identity(a.rows())); }

Mat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

bool span_contains(const std::vector<Vec>& outer, const std::vector<Vec>& inner) {
  if (inner.empty()) return true;
  std::size_t dim = inner.front().size();
  std::vector<Vec> all = outer;
  Mat mo = from_rows(outer, dim);
  std::size_t r_outer = rank(mo);
  all.insert(all.end(), inner.begin(), inner.end());
  return rank(from_rows(all, dim)) == r_outer;
}

bool subspace_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() && b.empty()) return true;
  std::size_t dim = a.empty() ? b.front().size() : a.front().size();
  for (const auto& v : a)
    if (v.size() != dim) throw std::invalid_argument("subspace_equal: dim mismatch");
  for (const auto& v : b)
    if (v.size() != dim) throw std::invalid_argument("subspace_equal: dim mismatch");
  std::size_t ra = rank(from_rows(a, dim));
  std::size_t rb = rank(from_rows(b, dim));
  if (ra != rb) return false;
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank(from_rows(all, dim)) == ra;
}

}  // namespace lagnet
