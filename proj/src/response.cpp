#include "lagnet/response.hpp"

#include <functional>
#include <map>

#include "lagnet/rational.hpp"

namespace lagnet {

namespace {

Mat laplacian(const ElectricalNetwork& net, const std::vector<std::string>& order) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
  Mat l(order.size(), order.size());
  for (const auto& e : net.edges()) {
    auto iu = idx.find(e.u), iv = idx.find(e.v);
    if (iu == idx.end() || iv == idx.end()) continue;
    l.at(iu->second, iu->second) += e.w;
    l.at(iv->second, iv->second) += e.w;
    l.at(iu->second, iv->second) -= e.w;
    l.at(iv->second, iu->second) -= e.w;
  }
  return l;
}

std::map<std::string, int> component_roots(const ElectricalNetwork& net) {
  auto vertices = net.vertex_order();
  std::map<std::string, int> vidx;
  for (std::size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : net.edges()) parent[find(vidx.at(e.u))] = find(vidx.at(e.v));
  std::map<std::string, int> root;
  for (const auto& v : vertices) root[v] = find(vidx.at(v));
  return root;
}

}  // namespace

Mat response_matrix(const ElectricalNetwork& net) {
  const int n = net.n();
  auto order = net.vertex_order();
  Mat l = laplacian(net, order);
  const std::size_t ni = net.internal().size();
  if (ni == 0) return l;

  std::vector<std::size_t> bidx(n), iidx(ni);
  for (int k = 0; k < n; ++k) bidx[k] = k;
  for (std::size_t j = 0; j < ni; ++j) iidx[j] = n + j;
  Mat lbb = l.submatrix(bidx, bidx);
  Mat lbi = l.submatrix(bidx, iidx);
  Mat lib = l.submatrix(iidx, bidx);
  Mat lii = l.submatrix(iidx, iidx);
  Mat x;
  try {
    x = solve_matrix(lii, lib);
  } catch (const std::domain_error&) {
    // Cannot happen for validated networks: every internal vertex reaches
    // the boundary, so the interior block is positive definite.
    throw std::logic_error("internal error: singular interior Laplacian block");
  }
  return lbb - lbi * x;
}

CheckOutcome response_invariants(const Mat& m) {
  if (!m.is_symmetric())
    return CheckOutcome::fail({{"identity", "symmetry"}});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j);
    if (s != 0)
      return CheckOutcome::fail(
          {{"identity", "zero row sum"}, {"row", i + 1}, {"sum", rat_str(s)}});
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j && m.at(i, j) < 0)
        return CheckOutcome::fail({{"identity", "non-negative diagonal"}, {"i", i + 1}});
      if (i != j && m.at(i, j) > 0)
        return CheckOutcome::fail({{"identity", "non-positive off-diagonal"},
                                   {"i", i + 1},
                                   {"j", j + 1},
                                   {"value", rat_str(m.at(i, j))}});
    }
  return CheckOutcome::pass();
}

Rat effective_resistance(const ElectricalNetwork& net, int i, int j) {
  if (i < 1 || i > net.n() || j < 1 || j > net.n())
    throw NetworkError("effective_resistance: boundary index out of range");
  if (i == j) return Rat(0);
  auto roots = component_roots(net);
  std::string vi = net.boundary_name(i), vj = net.boundary_name(j);
  if (roots.at(vi) != roots.at(vj))
    throw NetworkError("effective_resistance: vertices in different components");

  std::vector<std::string> comp;
  int r = roots.at(vi);
  for (const auto& v : net.vertex_order())
    if (roots.at(v) == r && v != vj) comp.push_back(v);  // ground j: drop its row/col
  Mat l = laplacian(net, comp);
  Vec rhs(comp.size());
  std::size_t pi = 0;
  for (std::size_t a = 0; a < comp.size(); ++a)
    if (comp[a] == vi) pi = a;
  rhs[pi] = 1;
  auto phi = solve(l, rhs);
  if (!phi) throw std::logic_error("internal error: grounded Laplacian is singular");
  return (*phi)[pi];
}

CheckOutcome kwrep_check(const ElectricalNetwork& net) {
  const int n = net.n();
  if (!net.connected())
    return CheckOutcome::fail({{"identity", "kw-rep"}, {"error", "network not connected"}});
  Mat m = response_matrix(net);
  std::vector<std::size_t> keep;
  for (int i = 0; i + 1 < n; ++i) keep.push_back(i);
  Mat principal = m.submatrix(keep, keep);
  Mat inv;
  try {
    inv = inverse(principal);
  } catch (const std::domain_error&) {
    return CheckOutcome::fail({{"identity", "kw-rep"}, {"error", "grounded response matrix singular"}});
  }
  std::vector<Rat> r_to_n(n);
  for (int i = 1; i < n; ++i) r_to_n[i] = effective_resistance(net, i, n);
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat rij = (i == j) ? Rat(0) : effective_resistance(net, i, j);
      Rat expected = (r_to_n[i] + r_to_n[j] - rij) / 2;
      if (inv.at(i - 1, j - 1) != expected)
        return CheckOutcome::fail({{"identity", "kw-rep entry"},
                                   {"i", i},
                                   {"j", j},
                                   {"lhs", rat_str(inv.at(i - 1, j - 1))},
                                   {"rhs", rat_str(expected)}});
    }
  return CheckOutcome::pass();
}

Mat update_bridge(const Mat& m, int k, const Rat& t) {
  const int n = static_cast<int>(m.rows());
  if (k < 1 || k > n) throw std::invalid_argument("update_bridge: k out of range");
  if (t <= 0) throw std::invalid_argument("update_bridge: parameter must be positive");
  int k2 = k % n + 1;
  Mat out = m;
  out.at(k - 1, k - 1) += t;
  out.at(k2 - 1, k2 - 1) += t;
  out.at(k - 1, k2 - 1) -= t;
  out.at(k2 - 1, k - 1) -= t;
  return out;
}

Mat update_spike(const Mat& m, int k, const Rat& t) {
  const int n = static_cast<int>(m.rows());
  if (k < 1 || k > n) throw std::invalid_argument("update_spike: k out of range");
  if (t <= 0) throw std::invalid_argument("update_spike: parameter must be positive");
  Rat denom = t * m.at(k - 1, k - 1) + 1;  // positive: x_kk >= 0, t > 0
  Mat out = m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at(i, j) = m.at(i, j) - t * m.at(i, k - 1) * m.at(k - 1, j) / denom;
  return out;
}

}  // namespace lagnet
