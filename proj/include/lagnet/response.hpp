#ifndef LAGNET_RESPONSE_HPP
#define LAGNET_RESPONSE_HPP

#include "lagnet/checks.hpp"
#include "lagnet/matrix.hpp"
#include "lagnet/network.hpp"

namespace lagnet {

// Dirichlet-to-Neumann map of the network: the boundary Schur complement
// M_R = L_BB - L_BI L_II^{-1} L_IB of the weighted graph Laplacian. Always
// symmetric with zero row sums, non-negative diagonal, non-positive
// off-diagonal entries.
Mat response_matrix(const ElectricalNetwork& net);

// Checks the three ResponseMatrix invariants; witness names the first broken one.
CheckOutcome response_invariants(const Mat& m);

// Voltage at i under unit current from i to j with j grounded. Exact solve
// on the component containing both; throws NetworkError if i and j are in
// different components.
Rat effective_resistance(const ElectricalNetwork& net, int i, int j);

// For a connected network: the principal minor of M_R on rows/columns
// 1..n-1 (vertex n grounded) is invertible and its inverse equals
// (R_{in} + R_{jn} - R_{ij}) / 2 entrywise.
CheckOutcome kwrep_check(const ElectricalNetwork& net);

// Closed-form response update for a bridge of weight t between k and k+1.
Mat update_bridge(const Mat& m, int k, const Rat& t);

// Closed-form response update for a spike at k with parameter t (edge
// weight 1/t): x'_ij = x_ij - t x_ik x_kj / (t x_kk + 1).
Mat update_spike(const Mat& m, int k, const Rat& t);

}  // namespace lagnet

#endif
