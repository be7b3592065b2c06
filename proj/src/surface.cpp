#include "gem/surface.hpp"

#include <algorithm>
#include <tuple>

namespace gem {

int CwSurface::add_vertex(std::string label) {
  vertex_labels.push_back(std::move(label));
  return vertex_count++;
}

int CwSurface::add_edge(int u, int v, std::string label) {
  edges.push_back({u, v});
  edge_labels.push_back(std::move(label));
  return (int)edges.size() - 1;
}

int CwSurface::add_face(std::vector<int> walk, std::string label) {
  faces.push_back(std::move(walk));
  face_labels.push_back(std::move(label));
  return (int)faces.size() - 1;
}

const char* family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::Alpha: return "alpha";
    case CurveFamily::Beta: return "beta";
    case CurveFamily::Gamma: return "gamma";
  }
  return "?";
}

std::string provenance_text(const CurveProvenance& p) {
  using K = CurveProvenance::Kind;
  switch (p.kind) {
    case K::Stabilization:
      return "stab " + std::to_string(p.line.color) + ":" + std::to_string(p.line.black + 1);
    case K::JacketCycle:
      return "jacket {" + std::to_string(p.pair[0]) + "," + std::to_string(p.pair[1]) +
             "} bubble " + std::to_string(p.bubble) + " #" + std::to_string(p.index);
    case K::ZeroICycle:
      return "cycle {" + std::to_string(p.pair[0]) + "," + std::to_string(p.pair[1]) +
             "} #" + std::to_string(p.index);
  }
  return "?";
}

EulerData euler_genus(const CwSurface& s) {
  // each face walk must chain head-to-tail and close up
  std::vector<int> side_count(s.edges.size(), 0);
  for (int f = 0; f < s.face_count(); ++f) {
    const auto& walk = s.faces[f];
    if (walk.empty()) throw GemError(Err::NotClosed, "face " + std::to_string(f) + " is empty");
    int len = (int)walk.size();
    for (int t = 0; t < len; ++t) {
      int de = walk[t], next = walk[(t + 1) % len];
      if (de_edge(de) < 0 || de_edge(de) >= s.edge_count())
        throw GemError(Err::NotClosed, "face " + std::to_string(f) + " uses a missing edge");
      if (s.de_to(de) != s.de_from(next))
        throw GemError(Err::NotClosed, "face " + std::to_string(f) + " walk does not chain");
      ++side_count[de_edge(de)];
    }
  }
  for (int e = 0; e < s.edge_count(); ++e)
    if (side_count[e] != 2)
      throw GemError(Err::NotClosed, "edge " + std::to_string(e) + " lies on " +
                                         std::to_string(side_count[e]) + " face sides");

  // connectivity over vertices through edges
  if (s.vertex_count == 0) throw GemError(Err::NotConnected, "no vertices");
  std::vector<std::vector<int>> adj(s.vertex_count);
  for (auto& e : s.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<char> seen(s.vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        stack.push_back(v);
      }
  }
  if (cnt != s.vertex_count) throw GemError(Err::NotConnected, "surface is disconnected");

  int chi = s.vertex_count - s.edge_count() + s.face_count();
  if ((2 - chi) % 2 != 0) throw GemError(Err::NotClosed, "odd Euler characteristic");
  return {chi, (2 - chi) / 2};
}

namespace {

// GF(2) row vectors over the edge set
using Row = std::vector<std::uint64_t>;

Row make_row(int bits) { return Row((bits + 63) / 64, 0); }

void flip(Row& r, int i) { r[i / 64] ^= (std::uint64_t)1 << (i % 64); }

bool get(const Row& r, int i) { return (r[i / 64] >> (i % 64)) & 1; }

void xor_into(Row& a, const Row& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
}

bool is_zero(const Row& r) {
  for (auto w : r)
    if (w) return false;
  return true;
}

// echelon basis with remembered pivot positions; reduce() gives the unique
// residue modulo the span
struct Gf2Basis {
  std::vector<std::pair<int, Row>> rows;  // (pivot, fully reduced row)

  Row reduce(Row v) const {
    for (auto& [piv, row] : rows)
      if (get(v, piv)) xor_into(v, row);
    return v;
  }

  bool add(Row v) {  // returns true if v was independent
    v = reduce(v);
    if (is_zero(v)) return false;
    int piv = 0;
    while (!get(v, piv)) ++piv;
    for (auto& [p, row] : rows)
      if (get(row, piv)) xor_into(row, v);
    rows.push_back({piv, std::move(v)});
    return true;
  }

  int rank() const { return (int)rows.size(); }
};

Row curve_chain(const CwSurface& s, const CurveOnSurface& c) {
  Row r = make_row(s.edge_count());
  for (int de : c.walk) flip(r, de_edge(de));
  return r;
}

Gf2Basis boundary_basis(const CwSurface& s) {
  Gf2Basis b;
  for (const auto& walk : s.faces) {
    Row r = make_row(s.edge_count());
    for (int de : walk) flip(r, de_edge(de));
    b.add(std::move(r));
  }
  return b;
}

int vertex_boundary_rank(const CwSurface& s) {
  // rank of d1: edges -> vertices
  Gf2Basis b;
  for (auto& e : s.edges) {
    Row r = make_row(s.vertex_count);
    if (e[0] != e[1]) {
      flip(r, e[0]);
      flip(r, e[1]);
    }
    b.add(std::move(r));
  }
  return b.rank();
}

// deterministic processing order within a family: stabilizations by line,
// then jacket cycles by bubble, then {c,i}-cycles by color; ties by index
std::vector<int> family_order(const std::vector<CurveOnSurface>& curves, CurveFamily fam) {
  std::vector<int> idx;
  for (int i = 0; i < (int)curves.size(); ++i)
    if (curves[i].family == fam) idx.push_back(i);
  auto key = [&](int i) {
    const auto& p = curves[i].provenance;
    return std::tuple((int)p.kind, p.line.color, p.line.black, p.bubble, p.color, p.index);
  };
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) < key(b); });
  return idx;
}

}  // namespace

bool H1Class::is_zero() const {
  for (auto w : bits)
    if (w) return false;
  return true;
}

HomologyData h1_rank_and_classes(const CwSurface& s,
                                 const std::vector<CurveOnSurface>& curves) {
  Gf2Basis bound = boundary_basis(s);
  int cycle_rank = s.edge_count() - vertex_boundary_rank(s);
  HomologyData out;
  out.h1_rank = cycle_rank - bound.rank();
  out.classes.reserve(curves.size());
  for (const auto& c : curves) out.classes.push_back({bound.reduce(curve_chain(s, c))});
  for (int f = 0; f < 3; ++f) {
    Gf2Basis fam = bound;  // rank over and above the boundaries
    int before = fam.rank();
    for (int i : family_order(curves, (CurveFamily)f)) fam.add(curve_chain(s, curves[i]));
    out.family_rank[f] = fam.rank() - before;
  }
  return out;
}

SelectionResult select_independent(const CwSurface& s,
                                   std::vector<CurveOnSurface>& curves, int target) {
  Gf2Basis bound = boundary_basis(s);
  SelectionResult res;
  for (auto& c : curves) c.selected = false;
  for (int f = 0; f < 3; ++f) {
    Gf2Basis basis = bound;
    int got = 0;
    for (int i : family_order(curves, (CurveFamily)f)) {
      if (got == target) break;
      if (basis.add(curve_chain(s, curves[i]))) {
        curves[i].selected = true;
        res.selected[f].push_back(i);
        ++got;
      }
    }
    if (got < target) res.failures.push_back({(CurveFamily)f, got});
  }
  return res;
}

}  // namespace gem
