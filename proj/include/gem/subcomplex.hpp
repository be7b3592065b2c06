#pragma once

#include <array>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// Closed walk alternating lines of two colors. Starting node is the smallest
// positive node on the cycle; the walk leaves it along color_i. nodes.size()
// equals the number of lines on the cycle.
struct BicoloredCycle {
  int color_i;
  int color_j;
  std::vector<NodeRef> nodes;

  int length() const { return static_cast<int>(nodes.size()); }
};

// Orbits of pi_j^{-1} . pi_i, walked deterministically. Requires i != j.
std::vector<BicoloredCycle> bicolored_cycles(const ColoredGraph& g, int i, int j);

// A connected component of the subgraph spanned by >= 2 colors, re-encoded as
// a standalone graph of rank |colors|-1. Colors are relabeled order
// preserving (sorted colors -> 0,1,2,...); pos_nodes/neg_nodes map the
// re-encoded 0-based indices back to the parent graph.
struct Bubble {
  std::vector<int> colors;
  std::vector<NodeRef> nodes;  // sorted by node order
  ColoredGraph as_graph;
  std::vector<int> pos_nodes;
  std::vector<int> neg_nodes;
};

std::vector<Bubble> bubbles(const ColoredGraph& g, std::vector<int> colors);

// A jacket is a cyclic order of all d+1 colors up to rotation and reversal;
// its faces are the bicolored cycles of consecutive color pairs. `order` is
// canonical: anchored at color 0 and lexicographically smallest between the
// two directions.
struct Jacket {
  std::vector<int> order;
  int face_count;
  int chi;    // V - E + F of the jacket surface
  int genus;  // (2 - chi) / 2
};

// All d!/2 jackets, sorted lexicographically by canonical order.
std::vector<Jacket> jackets(const ColoredGraph& g);

// Sum of jacket genera.
int gurau_degree(const ColoredGraph& g);

// What we can say about the space a bubble is dual to. Degree zero certifies
// a sphere; a positive degree proves nothing, so the verdict is Unknown,
// never "not a sphere". Rank-2 bubbles are surfaces and classified exactly.
struct BubbleTopology {
  enum class Kind { CertifiedSphere, Surface, Unknown } kind;
  int genus;   // exact surface genus when kind == Surface, else -1
  int degree;  // the degree used as evidence (rank >= 2)

  bool certified_sphere() const {
    return kind == Kind::CertifiedSphere || (kind == Kind::Surface && genus == 0);
  }
};

BubbleTopology classify_bubble(const Bubble& b);

struct BubbleReport {
  int missing_color;  // the bubble is a component of all colors but this one
  int index;          // position within bubbles(g, colors \ {missing_color})
  BubbleTopology topo;
};

// Rank-4 only: does the d-bubble numbered (missing_color, index) have all its
// own 3-bubbles certified as 2-spheres? (Exact: those are rank-2 bubbles.)
struct LinkScreen {
  int missing_color;
  int index;
  bool all_spheres;
};

struct ManifoldReport {
  enum class Verdict { CertifiedManifold, Unknown } verdict;
  std::vector<BubbleReport> bubbles;        // every d-bubble, all hatted colors
  std::vector<BubbleReport> noncertified;   // the ones not certified spheres
  std::vector<LinkScreen> screen;           // rank-4 input only, else empty
};

// The dual complex is a manifold iff every d-bubble is a sphere. We can only
// certify spheres (degree 0), hence the two-valued verdict.
ManifoldReport manifold_report(const ColoredGraph& g);

}  // namespace gem
