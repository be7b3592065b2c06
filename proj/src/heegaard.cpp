#include "gem/heegaard.hpp"

#include <algorithm>

namespace gem {

PairPartition make_pair_partition(std::array<int, 2> a, std::array<int, 2> b,
                                  const std::vector<int>& colors) {
  if (colors.size() != 4)
    throw GemError(Err::BadPairPartition, "need exactly 4 colors to partition");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> got{a[0], a[1], b[0], b[1]};
  std::sort(got.begin(), got.end());
  std::vector<int> want(colors);
  std::sort(want.begin(), want.end());
  if (got != want || a[0] == a[1] || b[0] == b[1])
    throw GemError(Err::BadPairPartition, "pairs do not partition the four colors");
  if (a[0] > b[0]) std::swap(a, b);
  return {a, b};
}

std::vector<PairPartition> heegaard_partitions() {
  return {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
}

HeegaardData heegaard_split(const ColoredGraph& g, const PairPartition& pairs) {
  if (g.rank() != 3)
    throw GemError(Err::WrongRank, "splitting needs rank 3, got " + std::to_string(g.rank()));
  PairPartition p = make_pair_partition(pairs.first, pairs.second, {0, 1, 2, 3});

  // the jacket missing exactly these two pairs has them as its diagonals:
  // cyclic order (first0, second0, first1, second1)
  std::vector<int> order{p.first[0], p.second[0], p.first[1], p.second[1]};
  // canonical form: anchor at 0, smaller neighbor first
  while (order[0] != 0) std::rotate(order.begin(), order.begin() + 1, order.end());
  if (order[1] > order[3]) std::reverse(order.begin() + 1, order.end());

  HeegaardData h;
  h.pairs = p;
  h.jacket_order = order;
  h.face_count = 0;
  for (int t = 0; t < 4; ++t) {
    auto cycles = bicolored_cycles(g, std::min(order[t], order[(t + 1) % 4]),
                                   std::max(order[t], order[(t + 1) % 4]));
    h.face_count += (int)cycles.size();
  }
  int V = g.nodes(), E = g.lines();
  int chi = V - E + h.face_count;
  h.genus = (2 - chi) / 2;
  int reduced = 1 + V / 2 - h.face_count / 2;
  if (h.genus != reduced)
    throw GemError(Err::SemanticError, "genus formulas disagree");  // cannot happen

  h.alpha_candidates = bicolored_cycles(g, p.first[0], p.first[1]);
  h.beta_candidates = bicolored_cycles(g, p.second[0], p.second[1]);

  auto [sk, cmp] = dual_skeleton_genus(g, p);
  h.skeleton_genus = sk;
  h.comparison = cmp;
  return h;
}

std::pair<int, int> dual_skeleton_genus(const ColoredGraph& g, const PairPartition& pairs) {
  if (g.rank() != 3)
    throw GemError(Err::WrongRank, "dual skeleton genus needs rank 3");
  int V = g.nodes(), E = g.lines();
  int genus = E - V + 1;  // = 2n + 1

  // how far the splitting surface genus falls below it: -(V + F)/2
  PairPartition p = make_pair_partition(pairs.first, pairs.second, {0, 1, 2, 3});
  int F = 0;
  std::array<std::array<int, 2>, 4> mixed{{{p.first[0], p.second[0]},
                                           {p.first[0], p.second[1]},
                                           {p.first[1], p.second[0]},
                                           {p.first[1], p.second[1]}}};
  for (auto& pr : mixed) F += (int)bicolored_cycles(g, pr[0], pr[1]).size();
  int genus_sigma = 1 + V / 2 - F / 2;
  int comparison = genus_sigma - genus;
  if (comparison != -(V + F) / 2)
    throw GemError(Err::SemanticError, "comparison identity failed");  // cannot happen
  return {genus, comparison};
}

}  // namespace gem
