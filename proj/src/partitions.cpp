#include "lagnet/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lagnet/subsets.hpp"

namespace lagnet {

int NcPartition::block_of(int element) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b])
      if (x == element) return static_cast<int>(b);
  throw std::out_of_range("block_of: element not in partition");
}

NcPartition make_partition(int n, std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(n + 1, false);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n) throw std::invalid_argument("partition element out of range");
      if (seen[x]) throw std::invalid_argument("repeated partition element");
      seen[x] = true;
    }
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) throw std::invalid_argument("partition does not cover 1..n");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return NcPartition{n, std::move(blocks)};
}

bool is_noncrossing(const NcPartition& p) {
  // The definition, verbatim: a < b < c < d with a,c together and b,d together
  // in a different block.
  std::vector<int> blk(p.n + 1, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int x : p.blocks[b]) blk[x] = static_cast<int>(b);
  for (int a = 1; a <= p.n; ++a)
    for (int b = a + 1; b <= p.n; ++b)
      for (int c = b + 1; c <= p.n; ++c)
        for (int d = c + 1; d <= p.n; ++d)
          if (blk[a] == blk[c] && blk[b] == blk[d] && blk[a] != blk[b]) return false;
  return true;
}

std::string partition_str(const NcPartition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += '|';
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(p.blocks[b][i]);
    }
  }
  return s;
}

NcPartition partition_parse(int n, const std::string& s) {
  std::vector<std::vector<int>> blocks;
  std::stringstream byblock(s);
  std::string blocktext;
  while (std::getline(byblock, blocktext, '|')) {
    std::vector<int> block;
    std::stringstream be(blocktext);
    int x;
    while (be >> x) block.push_back(x);
    blocks.push_back(std::move(block));
  }
  return make_partition(n, std::move(blocks));
}

std::vector<NcPartition> enumerate_nc(int n) {
  if (n < 1 || n > 8) throw std::out_of_range("enumerate_nc: n out of bound 1..8");
  // Restricted-growth strings in lexicographic order; RGS order is the
  // canonical order everywhere (emitted as legends in reports).
  std::vector<NcPartition> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    int maxb = 0;
    for (int i = 0; i < n; ++i) maxb = std::max(maxb, rgs[i] + 1);
    std::vector<std::vector<int>> blocks(maxb);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    NcPartition p{n, blocks};
    if (is_noncrossing(p)) out.push_back(std::move(p));
    // next RGS
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

NcPartition kreweras_dual(const NcPartition& p) {
  const int n = p.n;
  // Blocks as increasing cycles give a permutation pi; the complement is the
  // cycle decomposition of pi^{-1} composed with the long cycle (1 2 ... n).
  std::vector<int> pi(n + 1), inv(n + 1);
  for (const auto& b : p.blocks)
    for (std::size_t i = 0; i < b.size(); ++i) pi[b[i]] = b[(i + 1) % b.size()];
  for (int i = 1; i <= n; ++i) inv[pi[i]] = i;
  std::vector<int> comp(n + 1);
  for (int i = 1; i <= n; ++i) comp[i] = inv[i % n + 1];
  std::vector<bool> used(n + 1, false);
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) {
    if (used[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!used[j]) {
      used[j] = true;
      cyc.push_back(j);
      j = comp[j];
    }
    blocks.push_back(std::move(cyc));
  }
  return make_partition(n, std::move(blocks));
}

bool is_concordant(const std::vector<int>& I, const NcPartition& sigma) {
  const int n = sigma.n;
  if (static_cast<int>(I.size()) != n - 1)
    throw std::invalid_argument("is_concordant: |I| must be n-1");
  std::vector<bool> in_I(2 * n + 1, false);
  for (int x : I) {
    if (x < 1 || x > 2 * n) throw std::invalid_argument("is_concordant: I not within 1..2n");
    in_I[x] = true;
  }
  auto exactly_one_missing = [&](const std::vector<int>& block, int scale_offset) {
    int missing = 0;
    for (int i : block)
      if (!in_I[2 * i - scale_offset]) ++missing;
    return missing == 1;
  };
  for (const auto& b : sigma.blocks)
    if (!exactly_one_missing(b, 1)) return false;  // odd labels 2i-1
  NcPartition dual = kreweras_dual(sigma);
  for (const auto& b : dual.blocks)
    if (!exactly_one_missing(b, 0)) return false;  // even labels 2i
  return true;
}

Mat concordance_matrix(int n) {
  if (n < 2 || n > 6) throw std::out_of_range("concordance_matrix: n out of bound 2..6");
  auto sigmas = enumerate_nc(n);
  SubsetIndex idx(2 * n, n - 1);
  Mat a(idx.size(), sigmas.size());
  for (std::uint64_t r = 0; r < idx.size(); ++r) {
    auto I = idx.unrank(r);
    for (std::size_t c = 0; c < sigmas.size(); ++c)
      if (is_concordant(I, sigmas[c])) a.at(r, c) = 1;
  }
  return a;
}

}  // namespace lagnet
