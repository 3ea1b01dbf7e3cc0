#ifndef LAGNET_GROVES_HPP
#define LAGNET_GROVES_HPP

#include <map>

#include "lagnet/checks.hpp"
#include "lagnet/network.hpp"
#include "lagnet/partitions.hpp"

namespace lagnet {

// Exact grove measurements: L_sigma sums the weights of all spanning
// subforests in which every component holds a boundary vertex and whose
// boundary partition is sigma. Missing keys mean L_sigma = 0.
struct GroveTable {
  int n = 0;
  std::map<std::vector<std::vector<int>>, Rat> table;  // canonical blocks -> L_sigma
  Rat total;                                           // sum over all groves

  Rat value(const NcPartition& sigma) const;
  Rat value(const std::vector<std::vector<int>>& blocks) const;
  Rat L() const;                  // finest partition 1|2|...|n
  Rat L_pair(int i, int j) const; // ij | singletons
  Rat L_diag(int k) const;        // sum over i != k of L_pair(i, k)
};

// Exhaustive enumeration over edge subsets; requires |E| <= 20.
GroveTable groves(const ElectricalNetwork& net);

// x_ij == -L_ij / L for all i != j, with both sides computed independently
// (Schur complement vs. enumeration).
CheckOutcome kenyon_wilson_check(const ElectricalNetwork& net);

Rat grove_ratio(const ElectricalNetwork& net, const NcPartition& sigma);

}  // namespace lagnet

#endif
