#include "lagnet/pluecker.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagnet {

const Rat& PlueckerVector::at(const std::vector<int>& subset) const {
  return coords[SubsetIndex(n, k).rank(subset)];
}

bool PlueckerVector::all_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Rat minor_1based(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<std::size_t> r, c;
  r.reserve(rows.size());
  c.reserve(cols.size());
  for (int i : rows) r.push_back(static_cast<std::size_t>(i - 1));
  for (int j : cols) c.push_back(static_cast<std::size_t>(j - 1));
  return det(m.submatrix(r, c));
}

PlueckerVector pluecker(const Mat& m) {
  const unsigned k = static_cast<unsigned>(m.rows());
  const unsigned n = static_cast<unsigned>(m.cols());
  if (k > n) throw std::invalid_argument("pluecker: more rows than columns");
  PlueckerVector p;
  p.n = n;
  p.k = k;
  SubsetIndex idx(n, k);
  p.coords.resize(idx.size());
  std::vector<int> all_rows(k);
  for (unsigned i = 0; i < k; ++i) all_rows[i] = static_cast<int>(i + 1);
  for (std::uint64_t r = 0; r < idx.size(); ++r)
    p.coords[r] = minor_1based(m, all_rows, idx.unrank(r));
  return p;
}

bool scalar_equiv(const PlueckerVector& p, const PlueckerVector& q) {
  if (p.n != q.n || p.k != q.k) return false;
  Rat c;  // q = c * p once a common nonzero pair is seen
  bool have_c = false;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const bool pz = (p.coords[i] == 0), qz = (q.coords[i] == 0);
    if (pz != qz) return false;
    if (pz) continue;
    Rat ratio = q.coords[i] / p.coords[i];
    if (!have_c) {
      c = ratio;
      have_c = true;
    } else if (ratio != c) {
      return false;
    }
  }
  return have_c;  // the all-zero vector represents no Grassmannian point
}

Rat coord_signed(const PlueckerVector& p, std::vector<int> tuple) {
  int sgn = 1;
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    for (std::size_t j = 0; j + 1 < tuple.size() - i; ++j)
      if (tuple[j] > tuple[j + 1]) {
        std::swap(tuple[j], tuple[j + 1]);
        sgn = -sgn;
      }
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    if (tuple[i] == tuple[i + 1]) return Rat(0);
  return Rat(sgn) * p.at(tuple);
}

Mat exterior_power(const Mat& m, unsigned k) {
  const unsigned r = static_cast<unsigned>(m.rows());
  const unsigned c = static_cast<unsigned>(m.cols());
  if (k > r || k > c) throw std::invalid_argument("exterior_power: k too large");
  SubsetIndex ridx(r, k), cidx(c, k);
  Mat out(ridx.size(), cidx.size());
  for (std::uint64_t i = 0; i < ridx.size(); ++i) {
    auto rows = ridx.unrank(i);
    for (std::uint64_t j = 0; j < cidx.size(); ++j)
      out.at(i, j) = minor_1based(m, rows, cidx.unrank(j));
  }
  return out;
}

PlueckerVector sign_normalized(const PlueckerVector& p) {
  PlueckerVector q = p;
  for (const auto& c : q.coords) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : q.coords) x = -x;
    break;
  }
  return q;
}

}  // namespace lagnet
