#ifndef LAGNET_MATRIX_HPP
#define LAGNET_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lagnet/rational.hpp"

namespace lagnet {

using Vec = std::vector<Rat>;

// Dense matrix of exact rationals, row-major, value semantics.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Mat transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  // Rows `r0 <= i < r1`, all columns.
  Mat slice_rows(std::size_t r0, std::size_t r1) const;
  // Submatrix on the given (0-based, strictly increasing) row/column lists.
  Mat submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  // Horizontal concatenation [*this | right].
  Mat hconcat(const Mat& right) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& c, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

Vec operator*(const Vec& v, const Mat& m);

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  Mat reduced;
};

// Unique reduced row echelon form, exact Gauss-Jordan.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// Basis of { v : M v = 0 }; size == cols - rank.
std::vector<Vec> kernel(const Mat& m);

Rat det(const Mat& m);

// Solves A x = b exactly; nullopt when inconsistent or underdetermined
// columns are involved (a particular solution with free vars at 0 is fine
// for our uses, so underdetermined-but-consistent systems do return one).
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Solves A X = B for square invertible A; throws std::domain_error if singular.
Mat solve_matrix(const Mat& a, const Mat& b);

Mat inverse(const Mat& a);  // throws std::domain_error if singular

// span(A) == span(B), both given as lists of equal-length vectors.
bool subspace_equal(const std::vector<Vec>& a, const std::vector<Vec>& b);

// span(inner) subset of span(outer).
bool span_contains(const std::vector<Vec>& outer, const std::vector<Vec>& inner);

Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

}  // namespace lagnet

#endif
