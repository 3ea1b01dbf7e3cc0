#ifndef LAGNET_NETWORK_HPP
#define LAGNET_NETWORK_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagnet/rational.hpp"

namespace lagnet {

struct NetworkError : std::runtime_error {
  explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
  int id = 0;
  std::string u, v;
  Rat w;
};

/*
 * Circular planar electrical network: n boundary vertices b1..bn sitting
 * counterclockwise on a circle, weighted edges with positive conductances,
 * and a rotation system giving the counterclockwise order of incident edges
 * at every vertex. For boundary vertices the stored rotation is a *linear*
 * order anchored at the boundary: it starts next to the arc toward b_{k+1}
 * and ends next to the arc toward b_{k-1}.
 *
 * Validity (checked on every construction):
 *   - weights > 0, no self-loops (parallel edges fine);
 *   - every connected component contains a boundary vertex;
 *   - the rotation system is planar in the disk: tracing faces of the graph
 *     augmented with the n boundary arcs satisfies V - E + F = 2.
 */
class ElectricalNetwork {
 public:
  ElectricalNetwork(int n, std::vector<std::string> internal, std::vector<Edge> edges,
                    std::map<std::string, std::vector<int>> rotations);

  int n() const { return n_; }
  const std::vector<std::string>& internal() const { return internal_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<std::string, std::vector<int>>& rotations() const { return rotations_; }

  std::string boundary_name(int k) const { return "b" + std::to_string(k); }
  bool is_boundary(const std::string& v) const;
  // All vertices, boundary first (b1..bn) then internal in stored order.
  std::vector<std::string> vertex_order() const;
  const Edge& edge_by_id(int id) const;

  bool connected() const;

 private:
  int n_;
  std::vector<std::string> internal_;
  std::vector<Edge> edges_;
  std::map<std::string, std::vector<int>> rotations_;

  void validate() const;
};

struct FaceRegion {
  std::vector<std::string> walk;  // vertex cycle of the face boundary
  std::vector<int> arcs;          // boundary arcs (k, k+1) touched, by k
  bool interior = false;          // touches no boundary arc
};

// All connected regions of the disk minus the network (the outer face of the
// augmented map is excluded from `regions` but counted in face_count).
struct FaceDecomposition {
  int n = 0;
  std::vector<FaceRegion> regions;
  std::vector<int> region_of_arc;                 // arc k (1-based) -> region index
  std::vector<std::array<int, 2>> edge_regions;   // per edge: region on each side (u->v, v->u)
  std::size_t face_count_with_outer = 0;
};

FaceDecomposition faces(const ElectricalNetwork& net);

// Boundary-to-boundary edge of weight t between b_k and b_{k+1}, embedded
// along the boundary arc. 1 <= k <= n, t > 0.
ElectricalNetwork add_bridge(const ElectricalNetwork& net, int k, const Rat& t);

// Boundary spike at k with parameter t > 0: old b_k becomes internal, a new
// boundary vertex takes the label, joined to it by an edge of weight 1/t.
ElectricalNetwork add_spike(const ElectricalNetwork& net, int k, const Rat& t);

ElectricalNetwork delete_edge(const ElectricalNetwork& net, int edge_id);

// Contracts a non-boundary-to-boundary edge, splicing rotations planarly.
// Parallel copies of the contracted edge would become loops and are dropped.
ElectricalNetwork contract_edge(const ElectricalNetwork& net, int edge_id);

// Relabels boundary vertices one step: new b_i is the old b_{i+1}.
ElectricalNetwork shift_network(const ElectricalNetwork& net);

struct Move {
  enum class Kind { Spike, Bridge } kind;
  int k;
  Rat t;
};

ElectricalNetwork apply_move(const ElectricalNetwork& net, const Move& m);

ElectricalNetwork generate_empty(int n);
ElectricalNetwork generate_star(int n, const std::vector<Rat>& weights);
// Triangle on b1,b2,b3 with weights on edges (1,2), (2,3), (3,1).
ElectricalNetwork generate_triangle(const Rat& w12, const Rat& w23, const Rat& w31);
// Deterministic: `count` random spike/bridge moves from the empty network,
// weights p/q with 1 <= p,q <= 9.
ElectricalNetwork generate_moves(int n, std::uint64_t seed, int count);

ElectricalNetwork parse_network(const std::string& text);
std::string serialize_network(const ElectricalNetwork& net, bool pretty = false);

}  // namespace lagnet

#endif
