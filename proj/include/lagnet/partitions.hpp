#ifndef LAGNET_PARTITIONS_HPP
#define LAGNET_PARTITIONS_HPP

#include <string>
#include <vector>

#include "lagnet/matrix.hpp"

namespace lagnet {

// Set partition of {1..n} with no crossing on the circle: there are no
// a < b < c < d with a,c in one block and b,d in another. Canonical form:
// elements sorted inside each block, blocks sorted by their minimum.
struct NcPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(const NcPartition& o) const { return n == o.n && blocks == o.blocks; }
  int block_of(int element) const;
};

NcPartition make_partition(int n, std::vector<std::vector<int>> blocks);  // canonicalizes

bool is_noncrossing(const NcPartition& p);

// Block notation "1 4 6|2 3|5".
std::string partition_str(const NcPartition& p);
NcPartition partition_parse(int n, const std::string& s);

// All non-crossing partitions of {1..n} in canonical order (lexicographic on
// restricted-growth strings); count = Catalan(n). Bound n <= 8.
std::vector<NcPartition> enumerate_nc(int n);

// Kreweras complement on the interleaved circle: the unique maximal
// non-crossing partition of the tilde points compatible with p.
// Satisfies |p| + |dual(p)| = n + 1.
NcPartition kreweras_dual(const NcPartition& p);

// I is a sorted (n-1)-subset of [2n]. Concordant means: each block of sigma
// (odd labels, i -> 2i-1) and each block of its dual (even labels, i -> 2i)
// contains exactly one element of [2n] \ I.
bool is_concordant(const std::vector<int>& I, const NcPartition& sigma);

// a_{I,sigma} in {0,1}; rows: (n-1)-subsets of [2n] in SubsetIndex order,
// columns: NC_n in canonical order. Bound 2 <= n <= 6.
Mat concordance_matrix(int n);

}  // namespace lagnet

#endif
