#include "lagnet/subsets.hpp"

#include <stdexcept>

namespace lagnet {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n > 40) throw std::out_of_range("binomial: n beyond desk-scale bound");
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;  // exact: C(n-k+i, i) is built up integrally
  }
  return c;
}

std::uint64_t catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

SubsetIndex::SubsetIndex(unsigned n, unsigned k) : n_(n), k_(k) {
  if (k > n) throw std::invalid_argument("SubsetIndex: k > n");
  size_ = binomial(n, k);
}

std::uint64_t SubsetIndex::rank(const std::vector<int>& s) const {
  if (s.size() != k_) throw std::invalid_argument("SubsetIndex::rank: wrong size");
  std::uint64_t r = 0;
  int prev = 0;
  for (unsigned i = 0; i < k_; ++i) {
    int c = s[i];
    if (c <= prev || c > static_cast<int>(n_))
      throw std::invalid_argument("SubsetIndex::rank: not a sorted subset of 1..n");
    for (int v = prev + 1; v < c; ++v) r += binomial(n_ - v, k_ - i - 1);
    prev = c;
  }
  return r;
}

std::vector<int> SubsetIndex::unrank(std::uint64_t r) const {
  if (r >= size_) throw std::out_of_range("SubsetIndex::unrank: rank out of range");
  std::vector<int> s(k_);
  int v = 1;
  for (unsigned i = 0; i < k_; ++i) {
    for (;; ++v) {
      std::uint64_t block = binomial(n_ - v, k_ - i - 1);
      if (r < block) break;
      r -= block;
    }
    s[i] = v;
    ++v;
  }
  return s;
}

}  // namespace lagnet
