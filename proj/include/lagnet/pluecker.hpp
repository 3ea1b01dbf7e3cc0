#ifndef LAGNET_PLUECKER_HPP
#define LAGNET_PLUECKER_HPP

#include <vector>

#include "lagnet/matrix.hpp"
#include "lagnet/subsets.hpp"

namespace lagnet {

// Maximal minors of a k x n matrix in SubsetIndex (lexicographic) order:
// projective coordinates of the row span on Gr(k, n).
struct PlueckerVector {
  unsigned n = 0;
  unsigned k = 0;
  Vec coords;  // length C(n, k)

  const Rat& at(const std::vector<int>& subset) const;
  bool all_zero() const;
};

// Minor of m on the given 1-based row and column index sets (equal sizes).
Rat minor_1based(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols);

// coords[J] = det of the submatrix of m on columns J, for every k-subset J,
// where k = m.rows().
PlueckerVector pluecker(const Mat& m);

// True iff p = c*q for a single nonzero rational c.
bool scalar_equiv(const PlueckerVector& p, const PlueckerVector& q);

// Coordinate for a possibly unordered tuple with repetition: 0 on repeats,
// otherwise the sorted coordinate times the sign of the sorting permutation.
Rat coord_signed(const PlueckerVector& p, std::vector<int> tuple);

// Matrix of the k-th exterior power of m in SubsetIndex bases:
// entry[(I),(J)] = minor of m on rows I, columns J. Satisfies
// pluecker(X*m) = pluecker(X) * exterior_power(m, k) (Cauchy-Binet).
Mat exterior_power(const Mat& m, unsigned k);

// Display normalization only: scales so the first nonzero coordinate is
// positive. Grassmannian comparisons always go through scalar_equiv.
PlueckerVector sign_normalized(const PlueckerVector& p);

}  // namespace lagnet

#endif
