#ifndef LAGNET_SUBSETS_HPP
#define LAGNET_SUBSETS_HPP

#include <cstdint>
#include <vector>

namespace lagnet {

// Exact for the desk-scale range used here (n <= 40 keeps everything in 64 bits).
std::uint64_t binomial(unsigned n, unsigned k);

std::uint64_t catalan(unsigned n);

// Lexicographic enumeration of sorted k-subsets of {1..n}. rank/unrank are
// mutually inverse bijections with [0, C(n,k)); this order is the index
// convention for every Plücker vector and concordance matrix in the library.
class SubsetIndex {
 public:
  SubsetIndex(unsigned n, unsigned k);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(const std::vector<int>& sorted_subset) const;
  std::vector<int> unrank(std::uint64_t r) const;

 private:
  unsigned n_, k_;
  std::uint64_t size_;
};

}  // namespace lagnet

#endif
