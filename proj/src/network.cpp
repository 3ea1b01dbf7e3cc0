#include "lagnet/network.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <set>

#include "lagnet/rng.hpp"

namespace lagnet {

namespace {

// Darts: edge index e gives darts 2e (u->v) and 2e+1 (v->u); boundary arc a
// (0-based, joining b_{a+1} to b_{a+2}) gives darts 2E+2a (forward, i.e.
// counterclockwise along the circle) and 2E+2a+1.
struct DartMap {
  int n;
  std::size_t num_edges;
  std::vector<int> dart_tail, dart_head;           // vertex indices
  std::vector<std::vector<int>> rot;               // per vertex: outgoing darts, ccw
  std::vector<int> dart_pos;                       // position of dart in rot[tail]
  std::vector<std::vector<int>> orbits;            // faces as dart cycles
  std::vector<int> face_of_dart;
};

int reverse_dart(int d) { return d ^ 1; }

DartMap trace_faces(const ElectricalNetwork& net) {
  DartMap dm;
  const auto& edges = net.edges();
  const int n = dm.n = net.n();
  dm.num_edges = edges.size();

  auto vertices = net.vertex_order();
  std::map<std::string, int> vidx;
  for (std::size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);

  const std::size_t ndarts = 2 * edges.size() + 2 * static_cast<std::size_t>(n);
  dm.dart_tail.resize(ndarts);
  dm.dart_head.resize(ndarts);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    dm.dart_tail[2 * e] = vidx.at(edges[e].u);
    dm.dart_head[2 * e] = vidx.at(edges[e].v);
    dm.dart_tail[2 * e + 1] = vidx.at(edges[e].v);
    dm.dart_head[2 * e + 1] = vidx.at(edges[e].u);
  }
  for (int a = 0; a < n; ++a) {
    int fwd = static_cast<int>(2 * edges.size()) + 2 * a;
    dm.dart_tail[fwd] = a;
    dm.dart_head[fwd] = (a + 1) % n;
    dm.dart_tail[fwd + 1] = (a + 1) % n;
    dm.dart_head[fwd + 1] = a;
  }

  std::map<int, std::size_t> edge_index_by_id;
  for (std::size_t e = 0; e < edges.size(); ++e) edge_index_by_id[edges[e].id] = e;

  auto outgoing_dart = [&](int edge_id, int vertex) {
    std::size_t e = edge_index_by_id.at(edge_id);
    return vidx.at(edges[e].u) == vertex ? static_cast<int>(2 * e) : static_cast<int>(2 * e + 1);
  };

  dm.rot.resize(vertices.size());
  const auto& stored = net.rotations();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::vector<int> r;
    if (v < static_cast<std::size_t>(n)) {
      // b_{v+1}: arc toward the next boundary vertex, then the graph edges,
      // then the arc toward the previous one.
      r.push_back(static_cast<int>(2 * edges.size()) + 2 * static_cast<int>(v));
      auto it = stored.find(vertices[v]);
      if (it != stored.end())
        for (int id : it->second) r.push_back(outgoing_dart(id, static_cast<int>(v)));
      int prev_arc = (static_cast<int>(v) + n - 1) % n;
      r.push_back(static_cast<int>(2 * edges.size()) + 2 * prev_arc + 1);
    } else {
      auto it = stored.find(vertices[v]);
      if (it != stored.end())
        for (int id : it->second) r.push_back(outgoing_dart(id, static_cast<int>(v)));
    }
    dm.rot[v] = std::move(r);
  }

  dm.dart_pos.assign(ndarts, -1);
  for (std::size_t v = 0; v < dm.rot.size(); ++v)
    for (std::size_t p = 0; p < dm.rot[v].size(); ++p) dm.dart_pos[dm.rot[v][p]] = static_cast<int>(p);

  // Face successor: reverse the dart, step one edge clockwise in the head's
  // rotation. Interior faces come out counterclockwise.
  auto next_dart = [&](int d) {
    int r = reverse_dart(d);
    int v = dm.dart_tail[r];
    const auto& rv = dm.rot[v];
    int p = dm.dart_pos[r];
    return rv[(static_cast<std::size_t>(p) + rv.size() - 1) % rv.size()];
  };

  dm.face_of_dart.assign(ndarts, -1);
  for (std::size_t d0 = 0; d0 < ndarts; ++d0) {
    if (dm.face_of_dart[d0] >= 0) continue;
    std::vector<int> orbit;
    int d = static_cast<int>(d0);
    while (dm.face_of_dart[d] < 0) {
      dm.face_of_dart[d] = static_cast<int>(dm.orbits.size());
      orbit.push_back(d);
      d = next_dart(d);
    }
    dm.orbits.push_back(std::move(orbit));
  }
  return dm;
}

std::string weight_str(const Rat& w) { return rat_str(w); }

}  // namespace

ElectricalNetwork::ElectricalNetwork(int n, std::vector<std::string> internal,
                                     std::vector<Edge> edges,
                                     std::map<std::string, std::vector<int>> rotations)
    : n_(n), internal_(std::move(internal)), edges_(std::move(edges)),
      rotations_(std::move(rotations)) {
  validate();
}

bool ElectricalNetwork::is_boundary(const std::string& v) const {
  for (int k = 1; k <= n_; ++k)
    if (v == boundary_name(k)) return true;
  return false;
}

std::vector<std::string> ElectricalNetwork::vertex_order() const {
  std::vector<std::string> out;
  out.reserve(n_ + internal_.size());
  for (int k = 1; k <= n_; ++k) out.push_back(boundary_name(k));
  for (const auto& v : internal_) out.push_back(v);
  return out;
}

const Edge& ElectricalNetwork::edge_by_id(int id) const {
  for (const auto& e : edges_)
    if (e.id == id) return e;
  throw NetworkError("no edge with id " + std::to_string(id));
}

bool ElectricalNetwork::connected() const {
  auto vertices = vertex_order();
  std::map<std::string, int> vidx;
  for (std::size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges_) parent[find(vidx.at(e.u))] = find(vidx.at(e.v));
  int root = find(0);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

void ElectricalNetwork::validate() const {
  if (n_ < 2) throw NetworkError("boundary vertex count must be at least 2");
  std::set<std::string> names;
  for (int k = 1; k <= n_; ++k) names.insert(boundary_name(k));
  for (const auto& v : internal_) {
    if (v.empty()) throw NetworkError("empty internal vertex name");
    if (!names.insert(v).second) throw NetworkError("duplicate vertex name: " + v);
  }

  std::set<int> ids;
  std::map<std::string, std::set<int>> incident;
  for (const auto& e : edges_) {
    if (!ids.insert(e.id).second)
      throw NetworkError("duplicate edge id " + std::to_string(e.id));
    if (!names.count(e.u) || !names.count(e.v))
      throw NetworkError("edge " + std::to_string(e.id) + " references unknown vertex");
    if (e.u == e.v) throw NetworkError("self-loop at edge " + std::to_string(e.id));
    if (e.w <= 0)
      throw NetworkError("non-positive weight on edge " + std::to_string(e.id));
    incident[e.u].insert(e.id);
    incident[e.v].insert(e.id);
  }

  for (const auto& [v, rot] : rotations_) {
    if (!names.count(v)) throw NetworkError("rotation for unknown vertex " + v);
    std::set<int> seen(rot.begin(), rot.end());
    if (seen.size() != rot.size())
      throw NetworkError("repeated edge in rotation at " + v);
    if (seen != incident[v])
      throw NetworkError("rotation at " + v + " does not list exactly the incident edges");
  }
  for (const auto& [v, inc] : incident)
    if (!inc.empty() && !rotations_.count(v))
      throw NetworkError("missing rotation for vertex " + v);

  // Every component must reach the boundary.
  auto vertices = vertex_order();
  std::map<std::string, int> vidx;
  for (std::size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges_) parent[find(vidx.at(e.u))] = find(vidx.at(e.v));
  std::vector<bool> touches_boundary(vertices.size(), false);
  for (int k = 0; k < n_; ++k) touches_boundary[find(k)] = true;
  for (std::size_t i = n_; i < vertices.size(); ++i)
    if (!touches_boundary[find(static_cast<int>(i))])
      throw NetworkError("floating component at internal vertex " + vertices[i]);

  // Euler check on the augmented map.
  DartMap dm = trace_faces(*this);
  long long V = static_cast<long long>(vertices.size());
  long long E = static_cast<long long>(edges_.size()) + n_;
  long long F = static_cast<long long>(dm.orbits.size());
  if (V - E + F != 2)
    throw NetworkError("Euler check failure: V-E+F = " + std::to_string(V - E + F) +
                       " (rotation system is not planar in the disk)");
}

FaceDecomposition faces(const ElectricalNetwork& net) {
  DartMap dm = trace_faces(net);
  const int n = net.n();
  const std::size_t E = net.edges().size();
  auto vertices = net.vertex_order();

  int outer = dm.face_of_dart[2 * E + 1];  // reversed arc darts bound the outer face
  FaceDecomposition fd;
  fd.n = n;
  fd.face_count_with_outer = dm.orbits.size();

  std::vector<int> region_index(dm.orbits.size(), -1);
  for (std::size_t f = 0; f < dm.orbits.size(); ++f) {
    if (static_cast<int>(f) == outer) continue;
    FaceRegion reg;
    for (int d : dm.orbits[f]) {
      reg.walk.push_back(vertices[dm.dart_tail[d]]);
      if (d >= static_cast<int>(2 * E) && (d - static_cast<int>(2 * E)) % 2 == 0)
        reg.arcs.push_back((d - static_cast<int>(2 * E)) / 2 + 1);
    }
    std::sort(reg.arcs.begin(), reg.arcs.end());
    reg.interior = reg.arcs.empty();
    region_index[f] = static_cast<int>(fd.regions.size());
    fd.regions.push_back(std::move(reg));
  }

  fd.region_of_arc.assign(n + 1, -1);
  for (int a = 0; a < n; ++a)
    fd.region_of_arc[a + 1] = region_index[dm.face_of_dart[2 * E + 2 * a]];
  fd.edge_regions.resize(E);
  for (std::size_t e = 0; e < E; ++e) {
    fd.edge_regions[e][0] = region_index[dm.face_of_dart[2 * e]];
    fd.edge_regions[e][1] = region_index[dm.face_of_dart[2 * e + 1]];
  }
  return fd;
}

namespace {

int fresh_edge_id(const std::vector<Edge>& edges) {
  int mx = 0;
  for (const auto& e : edges) mx = std::max(mx, e.id);
  return mx + 1;
}

std::string fresh_internal_name(const ElectricalNetwork& net) {
  std::set<std::string> names(net.internal().begin(), net.internal().end());
  for (int j = 1;; ++j) {
    std::string cand = "s" + std::to_string(j);
    if (!names.count(cand) && !net.is_boundary(cand)) return cand;
  }
}

}  // namespace

ElectricalNetwork add_bridge(const ElectricalNetwork& net, int k, const Rat& t) {
  const int n = net.n();
  if (k < 1 || k > n) throw NetworkError("add_bridge: k out of range");
  if (t <= 0) throw NetworkError("add_bridge: parameter must be positive");
  int k2 = k % n + 1;
  auto edges = net.edges();
  auto rot = net.rotations();
  Edge e{fresh_edge_id(edges), net.boundary_name(k), net.boundary_name(k2), t};
  edges.push_back(e);
  // The bridge hugs the arc (k, k+1): nearest the forward arc at b_k, nearest
  // the backward arc at b_{k+1}.
  auto& rk = rot[net.boundary_name(k)];
  rk.insert(rk.begin(), e.id);
  rot[net.boundary_name(k2)].push_back(e.id);
  return ElectricalNetwork(n, net.internal(), std::move(edges), std::move(rot));
}

ElectricalNetwork add_spike(const ElectricalNetwork& net, int k, const Rat& t) {
  const int n = net.n();
  if (k < 1 || k > n) throw NetworkError("add_spike: k out of range");
  if (t <= 0) throw NetworkError("add_spike: parameter must be positive");
  std::string bk = net.boundary_name(k);
  std::string moved = fresh_internal_name(net);

  auto internal = net.internal();
  internal.push_back(moved);
  auto edges = net.edges();
  for (auto& e : edges) {
    if (e.u == bk) e.u = moved;
    if (e.v == bk) e.v = moved;
  }
  Edge spike{fresh_edge_id(edges), bk, moved, Rat(1) / t};
  edges.push_back(spike);

  std::map<std::string, std::vector<int>> rot;
  for (const auto& [v, r] : net.rotations())
    rot[v == bk ? moved : v] = r;
  // The spike points outward at the sunk vertex: cyclically it sits between
  // the old clockwise-most and counterclockwise-most edges.
  rot[moved].push_back(spike.id);
  rot[bk] = {spike.id};
  return ElectricalNetwork(n, std::move(internal), std::move(edges), std::move(rot));
}

ElectricalNetwork delete_edge(const ElectricalNetwork& net, int edge_id) {
  net.edge_by_id(edge_id);
  std::vector<Edge> edges;
  for (const auto& e : net.edges())
    if (e.id != edge_id) edges.push_back(e);
  auto rot = net.rotations();
  for (auto& [v, r] : rot) r.erase(std::remove(r.begin(), r.end(), edge_id), r.end());
  return ElectricalNetwork(net.n(), net.internal(), std::move(edges), std::move(rot));
}

ElectricalNetwork contract_edge(const ElectricalNetwork& net, int edge_id) {
  const Edge e = net.edge_by_id(edge_id);
  bool ub = net.is_boundary(e.u), vb = net.is_boundary(e.v);
  if (ub && vb)
    throw NetworkError("contracting a boundary-to-boundary edge is out of scope");
  std::string keep = ub ? e.u : (vb ? e.v : e.u);
  std::string gone = (keep == e.u) ? e.v : e.u;

  auto rot = net.rotations();
  std::vector<int> rk = rot.at(keep);
  std::vector<int> rg = rot.at(gone);
  auto it = std::find(rg.begin(), rg.end(), edge_id);
  std::vector<int> splice;
  for (std::size_t s = 1; s < rg.size(); ++s)
    splice.push_back(rg[(static_cast<std::size_t>(it - rg.begin()) + s) % rg.size()]);
  auto kt = std::find(rk.begin(), rk.end(), edge_id);
  std::vector<int> merged(rk.begin(), kt);
  merged.insert(merged.end(), splice.begin(), splice.end());
  merged.insert(merged.end(), kt + 1, rk.end());

  std::vector<Edge> edges;
  std::set<int> loops;
  for (auto f : net.edges()) {
    if (f.id == edge_id) continue;
    if (f.u == gone) f.u = keep;
    if (f.v == gone) f.v = keep;
    if (f.u == f.v) {
      loops.insert(f.id);  // parallel copies of the contracted edge vanish
      continue;
    }
    edges.push_back(f);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [&](int id) { return loops.count(id) > 0; }),
               merged.end());
  rot.erase(gone);
  rot[keep] = std::move(merged);
  for (auto& [v, r] : rot)
    if (v != keep)
      r.erase(std::remove_if(r.begin(), r.end(), [&](int id) { return loops.count(id) > 0; }),
              r.end());

  std::vector<std::string> internal;
  for (const auto& v : net.internal())
    if (v != gone) internal.push_back(v);
  return ElectricalNetwork(net.n(), std::move(internal), std::move(edges), std::move(rot));
}

ElectricalNetwork shift_network(const ElectricalNetwork& net) {
  // New b_i := old b_{i+1}; geometry (rotation anchors at consecutive arcs)
  // is label-independent, so only names change.
  const int n = net.n();
  auto newname = [&](const std::string& v) -> std::string {
    for (int k = 1; k <= n; ++k)
      if (v == net.boundary_name(k)) return "b" + std::to_string((k + n - 2) % n + 1);
    return v;
  };
  std::vector<Edge> edges = net.edges();
  for (auto& e : edges) {
    e.u = newname(e.u);
    e.v = newname(e.v);
  }
  std::map<std::string, std::vector<int>> rot;
  for (const auto& [v, r] : net.rotations()) rot[newname(v)] = r;
  return ElectricalNetwork(n, net.internal(), std::move(edges), std::move(rot));
}

ElectricalNetwork apply_move(const ElectricalNetwork& net, const Move& m) {
  return m.kind == Move::Kind::Spike ? add_spike(net, m.k, m.t) : add_bridge(net, m.k, m.t);
}

ElectricalNetwork generate_empty(int n) { return ElectricalNetwork(n, {}, {}, {}); }

ElectricalNetwork generate_star(int n, const std::vector<Rat>& weights) {
  if (static_cast<int>(weights.size()) != n)
    throw NetworkError("generate_star: need one weight per boundary vertex");
  std::vector<Edge> edges;
  std::map<std::string, std::vector<int>> rot;
  for (int k = 1; k <= n; ++k) {
    if (weights[k - 1] <= 0) throw NetworkError("non-positive weight in star generator");
    edges.push_back(Edge{k, "v0", "b" + std::to_string(k), weights[k - 1]});
    rot["v0"].push_back(k);
    rot["b" + std::to_string(k)] = {k};
  }
  return ElectricalNetwork(n, {"v0"}, std::move(edges), std::move(rot));
}

ElectricalNetwork generate_triangle(const Rat& w12, const Rat& w23, const Rat& w31) {
  auto net = generate_empty(3);
  net = add_bridge(net, 1, w12);
  net = add_bridge(net, 2, w23);
  net = add_bridge(net, 3, w31);
  return net;
}

ElectricalNetwork generate_moves(int n, std::uint64_t seed, int count) {
  if (n < 2) throw NetworkError("generate_moves: n must be at least 2");
  if (count < 0) throw NetworkError("generate_moves: negative move count");
  SplitMix64 rng(seed ^ (0xABCDULL + static_cast<std::uint64_t>(n) * 0x1000193ULL));
  ElectricalNetwork net = generate_empty(n);
  for (int i = 0; i < count; ++i) {
    Move m;
    m.kind = rng.below(2) ? Move::Kind::Bridge : Move::Kind::Spike;
    m.k = static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(n)));
    m.t = rng.small_positive_rat();
    net = apply_move(net, m);
  }
  return net;
}

ElectricalNetwork parse_network(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw NetworkError(std::string("malformed document: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
      throw NetworkError("malformed document: missing integer field 'n'");
    int n = j["n"].get<int>();
    std::vector<std::string> internal;
    if (j.contains("internal"))
      for (const auto& v : j["internal"]) internal.push_back(v.get<std::string>());
    std::vector<Edge> edges;
    if (j.contains("edges"))
      for (const auto& je : j["edges"]) {
        Edge e;
        e.id = je.at("id").get<int>();
        e.u = je.at("ends").at(0).get<std::string>();
        e.v = je.at("ends").at(1).get<std::string>();
        if (!je.at("weight").is_string())
          throw NetworkError("malformed document: edge weight must be a \"p/q\" string");
        e.w = rat_parse(je.at("weight").get<std::string>());
        edges.push_back(std::move(e));
      }
    std::map<std::string, std::vector<int>> rot;
    if (j.contains("rotations"))
      for (const auto& [v, arr] : j["rotations"].items()) {
        std::vector<int> r;
        for (const auto& id : arr) r.push_back(id.get<int>());
        rot[v] = std::move(r);
      }
    return ElectricalNetwork(n, std::move(internal), std::move(edges), std::move(rot));
  } catch (const nlohmann::json::exception& e) {
    throw NetworkError(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw NetworkError(std::string("malformed document: ") + e.what());
  }
}

std::string serialize_network(const ElectricalNetwork& net, bool pretty) {
  nlohmann::json j;
  j["n"] = net.n();
  j["internal"] = net.internal();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : net.edges())
    j["edges"].push_back({{"id", e.id}, {"ends", {e.u, e.v}}, {"weight", weight_str(e.w)}});
  j["rotations"] = nlohmann::json::object();
  for (const auto& [v, r] : net.rotations())
    if (!r.empty()) j["rotations"][v] = r;
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace lagnet
