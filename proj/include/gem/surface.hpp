#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// Directed edge id: edge e traversed forward (ends[0] -> ends[1]) is 2e,
// reversed is 2e+1.
inline int de_fwd(int e) { return 2 * e; }
inline int de_rev(int e) { return 2 * e + 1; }
inline int de_edge(int de) { return de >> 1; }
inline bool de_reversed(int de) { return de & 1; }
inline int de_flip(int de) { return de ^ 1; }

// 2-dimensional CW complex: counted vertices, edges with endpoints, faces as
// closed boundary walks of directed edge ids (consecutive edges chain head to
// tail, and the walk closes up). Labels say which part of a graph produced
// each cell; they are carried verbatim into JSON and SVG output.
struct CwSurface {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces;

  std::vector<std::string> vertex_labels;
  std::vector<std::string> edge_labels;
  std::vector<std::string> face_labels;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }

  int de_from(int de) const { return edges[de_edge(de)][de_reversed(de) ? 1 : 0]; }
  int de_to(int de) const { return edges[de_edge(de)][de_reversed(de) ? 0 : 1]; }

  int add_vertex(std::string label);
  int add_edge(int u, int v, std::string label);
  int add_face(std::vector<int> walk, std::string label);
};

struct EulerData {
  int chi;
  int genus;
};

// Checks the complex is a closed connected surface combinatorially (face
// walks chain and close, every edge lies on exactly two face sides) and
// returns chi = V - E + F and genus = (2 - chi)/2. Throws NotClosed /
// NotConnected.
EulerData euler_genus(const CwSurface& s);

enum class CurveFamily { Alpha = 0, Beta = 1, Gamma = 2 };

const char* family_name(CurveFamily f);

// Where a candidate curve comes from. Selection order is Stabilization
// first, then JacketCycle by bubble, then ZeroICycle by color.
struct CurveProvenance {
  enum class Kind { Stabilization, JacketCycle, ZeroICycle } kind = Kind::Stabilization;
  LineId line{-1, -1};           // Stabilization: the special-color line
  std::array<int, 2> pair{-1, -1};  // JacketCycle: the bicolored pair
  int bubble = -1;               // JacketCycle: bubble index
  int color = -1;                // ZeroICycle: the non-special color i
  int index = -1;                // cycle index within its pair
};

std::string provenance_text(const CurveProvenance& p);

// Closed curve running along edges of the surface.
struct CurveOnSurface {
  CurveFamily family;
  std::vector<int> walk;  // closed directed-edge walk
  CurveProvenance provenance;
  bool selected = false;
};

// GF(2) homology class of a curve, reduced against the face-boundary space;
// equal vectors == homologous curves.
struct H1Class {
  std::vector<std::uint64_t> bits;

  bool is_zero() const;
  friend bool operator==(const H1Class&, const H1Class&) = default;
};

struct HomologyData {
  int h1_rank;                       // == 2 * genus for closed orientable
  std::vector<H1Class> classes;      // one per input curve
  std::array<int, 3> family_rank;    // span of each family's classes
};

HomologyData h1_rank_and_classes(const CwSurface& s,
                                 const std::vector<CurveOnSurface>& curves);

struct SelectionFailure {
  CurveFamily family;
  int achieved;  // rank reached, < target
};

struct SelectionResult {
  std::array<std::vector<int>, 3> selected;  // curve indices per family
  std::vector<SelectionFailure> failures;
};

// Greedy per-family choice of `target` homologically independent curves, in
// deterministic provenance order. Marks curves[i].selected. Falling short is
// reported, not padded.
SelectionResult select_independent(const CwSurface& s,
                                   std::vector<CurveOnSurface>& curves,
                                   int target);

}  // namespace gem
