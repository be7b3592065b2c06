#pragma once

#include <vector>

#include "gem/heegaard.hpp"
#include "gem/surface.hpp"

namespace gem {

// One way to read a rank-4 graph as a trisection: a special color c whose
// bubbles carry the central surface pieces, and a pair partition of the four
// remaining colors deciding which handlebody the alpha / beta systems bound.
struct TrisectionChoice {
  int special;
  PairPartition pairs;

  friend bool operator==(const TrisectionChoice&, const TrisectionChoice&) = default;
};

TrisectionChoice make_choice(const ColoredGraph& g, int special,
                             std::array<int, 2> a, std::array<int, 2> b);

// The 15 choices of a rank-4 graph: special color ascending, partitions in
// lexical order.
std::vector<TrisectionChoice> all_choices(const ColoredGraph& g);

// The graph with every c-hat bubble collapsed to a node; each special-color
// line becomes an edge (self-loops allowed). loop_rank = E - V + 1.
struct CollapsedGraph {
  int node_count;
  std::vector<LineId> edge_lines;            // by ascending black node
  std::vector<std::array<int, 2>> edge_ends; // (bubble of +end, bubble of -end)
  int loop_rank;
};

CollapsedGraph collapse(const ColoredGraph& g, int special);

// Central surface genus: per-bubble genus of the jacket whose faces are the
// four mixed pairs of the partition, plus the collapsed graph's loop rank.
struct CentralGenus {
  int genus;  // sum of bubble_genera + loop_rank
  std::vector<int> bubble_genera;
  int loop_rank;
};

CentralGenus central_genus(const ColoredGraph& g, const TrisectionChoice& choice);

// Builds the central surface as a CW complex: per bubble the jacket
// quadrangulation (one square per graph node, sides colored j1,k1,j2,k2
// cyclically, corners the mixed bicolored cycles), each square's interior
// disc replaced by an annulus of four quads, and one four-rectangle tube per
// special-color line joining the two emptied squares color-aligned.
CwSurface build_surface(const ColoredGraph& g, const TrisectionChoice& choice);

// Candidate attaching curves on build_surface(g, choice):
//   alpha: one per {j1,j2}-cycle (crossing squares between the opposite
//          j-sides) plus one tube meridian per special line;
//   beta:  same with {k1,k2} and the k-sides, meridians at the other tube end;
//   gamma: one per {c,i}-cycle for every i != c, running through tubes
//          longitudinally and across squares at their color-i sides.
std::vector<CurveOnSurface> candidate_curves(const ColoredGraph& g,
                                             const TrisectionChoice& choice,
                                             const CwSurface& s);

enum class TriStatus { Trisection, QuasiTrisection, Uncertified };

const char* status_name(TriStatus s);

struct TrisectionDiagram {
  TrisectionChoice choice;
  CentralGenus central;
  CwSurface surface;                   // genus equals central.genus (checked)
  std::vector<CurveOnSurface> curves;  // selected flags set
  SelectionResult selection;
  TriStatus status;
  std::vector<BubbleReport> noncertified;  // bubbles blocking Trisection
};

TrisectionDiagram trisect(const ColoredGraph& g, const TrisectionChoice& choice);

// All 15 diagrams, deterministic order; independent and embarrassingly
// parallel but cheap enough to run serially.
std::vector<TrisectionDiagram> enumerate_all(const ColoredGraph& g);

// Scope classification per special color c:
//   AllSphereBubbles - every d-bubble certified, result is a genuine trisection
//   InGs             - single c-hat bubble, every other family certified
//   InGsBar          - every non-certified bubble is a c-hat bubble
//   OutOfScope       - some non-certified bubble misses another color
enum class QuasiKind { AllSphereBubbles, InGs, InGsBar, OutOfScope };

const char* quasi_name(QuasiKind k);

struct QuasiColorReport {
  int special;
  QuasiKind kind;
  std::vector<BubbleReport> noncertified;  // offending bubbles, if any
};

std::vector<QuasiColorReport> quasi_check(const ColoredGraph& g);

}  // namespace gem
