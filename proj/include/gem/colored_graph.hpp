#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gem {

// Error kinds used across the library. Each thrown GemError carries one of
// these plus a human-readable message naming the offending token/argument.
enum class Err {
  SyntaxError,       // malformed .gem text
  SemanticError,     // well-formed text describing an impossible graph
  EmptyColorSet,
  TooFewColors,
  SameColor,
  WrongRank,
  BadPairPartition,
  NoSuchLine,
  NotADipole,
  ColorMismatch,
  BadRank,
  SchemaError,       // malformed diagram JSON
  NotClosed,         // CW complex is not a closed surface
  NotConnected,
};

struct GemError : std::runtime_error {
  Err kind;
  GemError(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

enum class Sign { Pos, Neg };

// One node of the bipartite node set. Positive and negative nodes are indexed
// separately; indices are 0-based in memory (the .gem format is 1-based).
struct NodeRef {
  Sign sign;
  int index;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// A line is named by its color and the positive node it leaves from.
struct LineId {
  int color;
  int black;  // 0-based positive node index

  friend bool operator==(const LineId&, const LineId&) = default;
};

// Bipartite (d+1)-regular properly edge-colored graph: n positive ("black")
// and n negative ("white") nodes, and for every color c in 0..d a matching
// pi_c sending positive to negative nodes. Line (c,b) joins +b to -pi_c(b).
// The matchings are stored as given; validate() reports defects as data.
class ColoredGraph {
 public:
  ColoredGraph(int rank, int half);  // identity matchings
  ColoredGraph(int rank, std::vector<std::vector<int>> matchings);

  int rank() const { return rank_; }
  int half() const { return half_; }
  int colors() const { return rank_ + 1; }
  int nodes() const { return 2 * half_; }
  int lines() const { return (rank_ + 1) * half_; }

  int white(int color, int black) const { return pi_[color][black]; }
  int black_of(int color, int white) const;  // pi_c^{-1}
  void set(int color, int black, int white) { pi_[color][black] = white; }

  const std::vector<std::vector<int>>& matchings() const { return pi_; }

  bool is_connected() const;

  // total order on nodes used everywhere a "smallest node" is needed:
  // +0 < +1 < ... < -0 < -1 < ...
  int node_id(NodeRef v) const {
    return v.sign == Sign::Pos ? v.index : half_ + v.index;
  }
  NodeRef node_from_id(int id) const {
    return id < half_ ? NodeRef{Sign::Pos, id} : NodeRef{Sign::Neg, id - half_};
  }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int rank_;
  int half_;
  std::vector<std::vector<int>> pi_;  // pi_[color][black] = white
};

enum class DefectKind { BadRank, MatchingNotBijective, ColorCountMismatch, Disconnected };

struct Defect {
  DefectKind kind;
  std::string where;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Defect> defects;
};

const char* defect_name(DefectKind k);

// .gem text format:
//   gem 1
//   rank <d>
//   half <n>
//   <color> <black> <white>     one record per line, 1-based node indices
// '#' starts a comment; blank lines are ignored.
ColoredGraph parse_gem(const std::string& text);
// Canonical form: header then records sorted by (color, black), no comments.
std::string serialize_gem(const ColoredGraph& g);

ValidationReport validate(const ColoredGraph& g);

// Connected components of the subgraph keeping only lines of the given
// colors. Every node appears in exactly one component; components are sorted
// by their smallest node, nodes within a component likewise.
std::vector<std::vector<NodeRef>> components(const ColoredGraph& g,
                                             const std::vector<int>& colors);

// The unique 2-node rank-d graph: every matching is the identity on {0}.
ColoredGraph generate_melon(int rank);

std::string node_name(NodeRef v);  // "+1", "-3", ... (1-based display)

}  // namespace gem
