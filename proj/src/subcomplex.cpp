#include "gem/subcomplex.hpp"

#include <algorithm>
#include <numeric>

namespace gem {

std::vector<BicoloredCycle> bicolored_cycles(const ColoredGraph& g, int i, int j) {
  if (i == j) throw GemError(Err::SameColor, "both colors are " + std::to_string(i));
  std::vector<BicoloredCycle> out;
  std::vector<char> seen(g.half(), 0);
  for (int start = 0; start < g.half(); ++start) {
    if (seen[start]) continue;
    BicoloredCycle cyc{i, j, {}};
    int b = start;
    do {
      seen[b] = 1;
      int w = g.white(i, b);
      cyc.nodes.push_back({Sign::Pos, b});
      cyc.nodes.push_back({Sign::Neg, w});
      b = g.black_of(j, w);
    } while (b != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<Bubble> bubbles(const ColoredGraph& g, std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  if (colors.empty()) throw GemError(Err::EmptyColorSet, "no colors given");
  if (colors.size() < 2)
    throw GemError(Err::TooFewColors, "need at least 2 colors, got 1");

  std::vector<Bubble> out;
  for (auto& comp : components(g, colors)) {
    Bubble b{colors, comp, ColoredGraph((int)colors.size() - 1, 1), {}, {}};
    for (NodeRef v : comp)
      (v.sign == Sign::Pos ? b.pos_nodes : b.neg_nodes).push_back(v.index);
    int m = (int)b.pos_nodes.size();
    std::vector<int> neg_rank(g.half(), -1);
    for (int k = 0; k < m; ++k) neg_rank[b.neg_nodes[k]] = k;
    std::vector<std::vector<int>> pi(colors.size(), std::vector<int>(m));
    for (int ci = 0; ci < (int)colors.size(); ++ci)
      for (int k = 0; k < m; ++k)
        pi[ci][k] = neg_rank[g.white(colors[ci], b.pos_nodes[k])];
    b.as_graph = ColoredGraph((int)colors.size() - 1, std::move(pi));
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

// cyclic color orders anchored at color 0, one of each reversal pair,
// sorted lexicographically
std::vector<std::vector<int>> jacket_orders(int rank) {
  std::vector<int> rest(rank);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (rest.front() > rest.back()) continue;  // keep one direction only
    std::vector<int> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    out.push_back(std::move(order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int cycle_count(const ColoredGraph& g, int i, int j) {
  // orbits of pi_j^{-1} . pi_i over positive nodes
  std::vector<char> seen(g.half(), 0);
  int cnt = 0;
  for (int s = 0; s < g.half(); ++s) {
    if (seen[s]) continue;
    ++cnt;
    int b = s;
    while (!seen[b]) {
      seen[b] = 1;
      b = g.black_of(j, g.white(i, b));
    }
  }
  return cnt;
}

}  // namespace

std::vector<Jacket> jackets(const ColoredGraph& g) {
  std::vector<Jacket> out;
  for (auto& order : jacket_orders(g.rank())) {
    int F = 0;
    int len = (int)order.size();
    for (int t = 0; t < len; ++t) F += cycle_count(g, order[t], order[(t + 1) % len]);
    Jacket j{order, F, 2 * g.half() - (g.rank() + 1) * g.half() + F, 0};
    j.genus = (2 - j.chi) / 2;
    out.push_back(std::move(j));
  }
  return out;
}

int gurau_degree(const ColoredGraph& g) {
  int total = 0;
  for (const auto& j : jackets(g)) total += j.genus;
  return total;
}

BubbleTopology classify_bubble(const Bubble& b) {
  const ColoredGraph& h = b.as_graph;
  if (h.rank() == 1) {
    // two colors: the bubble is a cycle, i.e. a circle
    return {BubbleTopology::Kind::CertifiedSphere, -1, 0};
  }
  if (h.rank() == 2) {
    int genus = jackets(h)[0].genus;  // the single jacket is the surface itself
    return {BubbleTopology::Kind::Surface, genus, genus};
  }
  int deg = gurau_degree(h);
  if (deg == 0) return {BubbleTopology::Kind::CertifiedSphere, -1, 0};
  return {BubbleTopology::Kind::Unknown, -1, deg};
}

ManifoldReport manifold_report(const ColoredGraph& g) {
  ManifoldReport rep;
  rep.verdict = ManifoldReport::Verdict::CertifiedManifold;
  std::vector<int> all(g.rank() + 1);
  std::iota(all.begin(), all.end(), 0);
  for (int miss = 0; miss <= g.rank(); ++miss) {
    std::vector<int> colors;
    for (int c : all)
      if (c != miss) colors.push_back(c);
    auto bs = bubbles(g, colors);
    for (int k = 0; k < (int)bs.size(); ++k) {
      BubbleReport br{miss, k, classify_bubble(bs[k])};
      if (!br.topo.certified_sphere()) {
        rep.verdict = ManifoldReport::Verdict::Unknown;
        rep.noncertified.push_back(br);
      }
      rep.bubbles.push_back(std::move(br));
      if (g.rank() == 4) {
        // is this 3-dimensional bubble itself a manifold? its own 3-bubbles
        // are rank-2, so the check is exact
        const ColoredGraph& h = bs[k].as_graph;
        bool ok = true;
        for (int sub_miss = 0; sub_miss <= h.rank() && ok; ++sub_miss) {
          std::vector<int> sub;
          for (int c = 0; c <= h.rank(); ++c)
            if (c != sub_miss) sub.push_back(c);
          for (const auto& inner : bubbles(h, sub))
            if (!classify_bubble(inner).certified_sphere()) {
              ok = false;
              break;
            }
        }
        rep.screen.push_back({miss, k, ok});
      }
    }
  }
  return rep;
}

}  // namespace gem
