#include "gem/trisector.hpp"

#include <algorithm>
#include <numeric>

namespace gem {

TrisectionChoice make_choice(const ColoredGraph& g, int special,
                             std::array<int, 2> a, std::array<int, 2> b) {
  if (g.rank() != 4)
    throw GemError(Err::WrongRank, "trisections need rank 4, got " + std::to_string(g.rank()));
  if (special < 0 || special > 4)
    throw GemError(Err::BadPairPartition, "special color " + std::to_string(special) + " out of range");
  std::vector<int> rest;
  for (int c = 0; c <= 4; ++c)
    if (c != special) rest.push_back(c);
  return {special, make_pair_partition(a, b, rest)};
}

std::vector<TrisectionChoice> all_choices(const ColoredGraph& g) {
  if (g.rank() != 4)
    throw GemError(Err::WrongRank, "trisections need rank 4, got " + std::to_string(g.rank()));
  std::vector<TrisectionChoice> out;
  for (int special = 0; special <= 4; ++special) {
    std::vector<int> r;
    for (int c = 0; c <= 4; ++c)
      if (c != special) r.push_back(c);
    // the three partitions of {r0,r1,r2,r3}, lexical
    out.push_back(make_choice(g, special, {r[0], r[1]}, {r[2], r[3]}));
    out.push_back(make_choice(g, special, {r[0], r[2]}, {r[1], r[3]}));
    out.push_back(make_choice(g, special, {r[0], r[3]}, {r[1], r[2]}));
  }
  return out;
}

namespace {

std::vector<int> nonspecial_colors(const ColoredGraph& g, int special) {
  std::vector<int> out;
  for (int c = 0; c <= g.rank(); ++c)
    if (c != special) out.push_back(c);
  return out;
}

std::vector<int> bubble_of_node(const ColoredGraph& g, const std::vector<Bubble>& bs) {
  std::vector<int> owner(2 * g.half(), -1);
  for (int k = 0; k < (int)bs.size(); ++k)
    for (NodeRef v : bs[k].nodes) owner[g.node_id(v)] = k;
  return owner;
}

}  // namespace

CollapsedGraph collapse(const ColoredGraph& g, int special) {
  if (g.rank() != 4)
    throw GemError(Err::WrongRank, "collapse needs rank 4, got " + std::to_string(g.rank()));
  auto bs = bubbles(g, nonspecial_colors(g, special));
  auto owner = bubble_of_node(g, bs);
  CollapsedGraph out;
  out.node_count = (int)bs.size();
  for (int b = 0; b < g.half(); ++b) {
    out.edge_lines.push_back({special, b});
    out.edge_ends.push_back({owner[b], owner[g.half() + g.white(special, b)]});
  }
  out.loop_rank = g.half() - out.node_count + 1;
  return out;
}

CentralGenus central_genus(const ColoredGraph& g, const TrisectionChoice& choice) {
  auto ch = make_choice(g, choice.special, choice.pairs.first, choice.pairs.second);
  auto bs = bubbles(g, nonspecial_colors(g, ch.special));
  auto owner = bubble_of_node(g, bs);

  // per-bubble face count of the jacket whose faces are the mixed pairs
  std::vector<int> face_count(bs.size(), 0);
  for (int a : ch.pairs.first)
    for (int b : ch.pairs.second)
      for (const auto& cyc : bicolored_cycles(g, std::min(a, b), std::max(a, b)))
        ++face_count[owner[g.node_id(cyc.nodes[0])]];

  CentralGenus out;
  out.loop_rank = g.half() - (int)bs.size() + 1;
  out.genus = out.loop_rank;
  for (int k = 0; k < (int)bs.size(); ++k) {
    int two_m = (int)bs[k].nodes.size();  // the bubble jacket has V = 2m, E = 4m
    int chi = face_count[k] - two_m;
    out.bubble_genera.push_back((2 - chi) / 2);
    out.genus += out.bubble_genera.back();
  }
  return out;
}

namespace {

// Everything build_surface creates, with the cell-id bookkeeping the curve
// constructions need. Square side t carries color side[t] and runs from
// corner t to corner t+1; corner t is the mixed bicolored cycle of pair
// {side[t-1], side[t]} through the node.
struct Scaffold {
  CwSurface s;
  std::array<int, 4> side;                 // position -> color (j1,k1,j2,k2)
  std::array<int, 5> pos_of;               // color -> position (special: -1)
  std::array<std::vector<BicoloredCycle>, 4> corner_cycles;
  std::array<std::vector<int>, 4> corner_vertex;  // [t][cycle index]
  std::array<std::vector<int>, 4> cycle_at;       // [t][node id] -> cycle index
  std::vector<std::vector<int>> line_edge;        // [color][black]
  std::vector<std::array<int, 4>> inner;          // [node id][t] -> vertex
  std::vector<std::array<int, 4>> diag;           // [node id][t] -> edge
  std::vector<std::array<int, 4>> arc;            // [node id][t] -> edge
  std::vector<std::array<int, 4>> longi;          // [black][t] -> edge

  int corner_of(int t, int node_id) const { return corner_vertex[t][cycle_at[t][node_id]]; }
};

std::string pair_text(int a, int b) {
  if (a > b) std::swap(a, b);
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

Scaffold build_scaffold(const ColoredGraph& g, const TrisectionChoice& choice) {
  auto ch = make_choice(g, choice.special, choice.pairs.first, choice.pairs.second);
  int n = g.half();
  Scaffold sc;
  sc.side = {ch.pairs.first[0], ch.pairs.second[0], ch.pairs.first[1], ch.pairs.second[1]};
  sc.pos_of.fill(-1);
  for (int t = 0; t < 4; ++t) sc.pos_of[sc.side[t]] = t;

  auto node_text = [&](int id) { return node_name(g.node_from_id(id)); };

  // vertices: one per mixed bicolored cycle (the square corners) ...
  for (int t = 0; t < 4; ++t) {
    int a = sc.side[(t + 3) % 4], b = sc.side[t];
    sc.corner_cycles[t] = bicolored_cycles(g, std::min(a, b), std::max(a, b));
    sc.cycle_at[t].assign(2 * n, -1);
    for (int k = 0; k < (int)sc.corner_cycles[t].size(); ++k) {
      sc.corner_vertex[t].push_back(
          sc.s.add_vertex("cyc " + pair_text(a, b) + " #" + std::to_string(k)));
      for (NodeRef v : sc.corner_cycles[t][k].nodes) sc.cycle_at[t][g.node_id(v)] = k;
    }
  }
  // ... plus four inner vertices per emptied square
  sc.inner.assign(2 * n, {});
  for (int id = 0; id < 2 * n; ++id)
    for (int t = 0; t < 4; ++t)
      sc.inner[id][t] = sc.s.add_vertex("inner " + node_text(id) + ":" + std::to_string(t));

  // edges: the bubble lines (square sides), ...
  sc.line_edge.assign(5, {});
  for (int c = 0; c <= 4; ++c) {
    if (c == ch.special) continue;
    int t = sc.pos_of[c];
    sc.line_edge[c].assign(n, -1);
    for (int b = 0; b < n; ++b)
      sc.line_edge[c][b] =
          sc.s.add_edge(sc.corner_of(t, b), sc.corner_of((t + 1) % 4, b),
                        "line " + std::to_string(c) + ":" + std::to_string(b + 1));
  }
  // ... the annulus diagonals and inner arcs, ...
  sc.diag.assign(2 * n, {});
  sc.arc.assign(2 * n, {});
  for (int id = 0; id < 2 * n; ++id)
    for (int t = 0; t < 4; ++t)
      sc.diag[id][t] = sc.s.add_edge(sc.corner_of(t, id), sc.inner[id][t],
                                     "diag " + node_text(id) + ":" + std::to_string(t));
  for (int id = 0; id < 2 * n; ++id)
    for (int t = 0; t < 4; ++t)
      sc.arc[id][t] = sc.s.add_edge(sc.inner[id][t], sc.inner[id][(t + 1) % 4],
                                    "arc " + node_text(id) + ":" + std::to_string(t));
  // ... and the tube longitudinals, color-aligned between matched arcs
  sc.longi.assign(n, {});
  for (int b = 0; b < n; ++b) {
    int w = n + g.white(ch.special, b);
    for (int t = 0; t < 4; ++t)
      sc.longi[b][t] = sc.s.add_edge(sc.inner[b][t], sc.inner[w][t],
                                     "long " + std::to_string(ch.special) + ":" +
                                         std::to_string(b + 1) + ":" + std::to_string(t));
  }

  // faces: four annulus quads per square; negative squares run backwards so
  // the two sides of every edge traverse it oppositely
  for (int id = 0; id < 2 * n; ++id) {
    for (int t = 0; t < 4; ++t) {
      int c = sc.side[t];
      int black = id < n ? id : g.black_of(c, id - n);
      int s_edge = sc.line_edge[c][black];
      std::vector<int> walk;
      if (id < n)
        walk = {de_fwd(s_edge), de_fwd(sc.diag[id][(t + 1) % 4]), de_rev(sc.arc[id][t]),
                de_rev(sc.diag[id][t])};
      else
        walk = {de_fwd(sc.diag[id][t]), de_fwd(sc.arc[id][t]),
                de_rev(sc.diag[id][(t + 1) % 4]), de_rev(s_edge)};
      sc.s.add_face(std::move(walk), "quad " + node_text(id) + ":" + std::to_string(t));
    }
  }
  for (int b = 0; b < n; ++b) {
    int w = n + g.white(ch.special, b);
    for (int t = 0; t < 4; ++t)
      sc.s.add_face({de_fwd(sc.arc[b][t]), de_fwd(sc.longi[b][(t + 1) % 4]),
                     de_rev(sc.arc[w][t]), de_rev(sc.longi[b][t])},
                    "rect " + std::to_string(ch.special) + ":" + std::to_string(b + 1) + ":" +
                        std::to_string(t));
  }
  return sc;
}

}  // namespace

CwSurface build_surface(const ColoredGraph& g, const TrisectionChoice& choice) {
  return build_scaffold(g, choice).s;
}

std::vector<CurveOnSurface> candidate_curves(const ColoredGraph& g,
                                             const TrisectionChoice& choice,
                                             const CwSurface& s) {
  auto ch = make_choice(g, choice.special, choice.pairs.first, choice.pairs.second);
  Scaffold sc = build_scaffold(g, ch);
  if (s.vertex_count != sc.s.vertex_count || s.edges != sc.s.edges)
    throw GemError(Err::SemanticError, "surface was not built from this graph and choice");

  int n = g.half();
  auto bs = bubbles(g, nonspecial_colors(g, ch.special));
  auto owner = bubble_of_node(g, bs);
  std::vector<CurveOnSurface> out;

  // jacket curve of one {j1,j2}- or {k1,k2}-cycle: cross each square between
  // its two opposite same-pair sides, rounding the removed disc
  auto jacket_curve = [&](const BicoloredCycle& cyc, int lo, int hi) {
    // lo/hi: annulus path runs corner hi -> arc between -> corner lo on
    // positive squares (entered through the second pair color), reversed on
    // negative ones; lo/hi are the two crossing-corner slots, lo < hi=lo+1
    std::vector<int> walk;
    for (int k = 0; k < (int)cyc.nodes.size(); ++k) {
      int id = g.node_id(cyc.nodes[k]);
      if (cyc.nodes[k].sign == Sign::Pos)
        walk.insert(walk.end(), {de_fwd(sc.diag[id][hi]), de_rev(sc.arc[id][lo]),
                                 de_rev(sc.diag[id][lo])});
      else
        walk.insert(walk.end(), {de_fwd(sc.diag[id][lo]), de_fwd(sc.arc[id][lo]),
                                 de_rev(sc.diag[id][hi])});
    }
    return walk;
  };

  // alpha: tube meridians at the positive end, then {j1,j2}-cycle curves
  for (int b = 0; b < n; ++b) {
    CurveOnSurface c{CurveFamily::Alpha,
                     {de_fwd(sc.arc[b][0]), de_fwd(sc.arc[b][1]), de_fwd(sc.arc[b][2]),
                      de_fwd(sc.arc[b][3])},
                     {},
                     false};
    c.provenance.kind = CurveProvenance::Kind::Stabilization;
    c.provenance.line = {ch.special, b};
    out.push_back(std::move(c));
  }
  auto alpha_cycles = bicolored_cycles(g, ch.pairs.first[0], ch.pairs.first[1]);
  for (int k = 0; k < (int)alpha_cycles.size(); ++k) {
    CurveOnSurface c{CurveFamily::Alpha, jacket_curve(alpha_cycles[k], 1, 2), {}, false};
    c.provenance.kind = CurveProvenance::Kind::JacketCycle;
    c.provenance.pair = ch.pairs.first;
    c.provenance.bubble = owner[g.node_id(alpha_cycles[k].nodes[0])];
    c.provenance.index = k;
    out.push_back(std::move(c));
  }

  // beta: meridians at the negative end, then {k1,k2}-cycle curves
  for (int b = 0; b < n; ++b) {
    int w = n + g.white(ch.special, b);
    CurveOnSurface c{CurveFamily::Beta,
                     {de_fwd(sc.arc[w][0]), de_fwd(sc.arc[w][1]), de_fwd(sc.arc[w][2]),
                      de_fwd(sc.arc[w][3])},
                     {},
                     false};
    c.provenance.kind = CurveProvenance::Kind::Stabilization;
    c.provenance.line = {ch.special, b};
    out.push_back(std::move(c));
  }
  auto beta_cycles = bicolored_cycles(g, ch.pairs.second[0], ch.pairs.second[1]);
  for (int k = 0; k < (int)beta_cycles.size(); ++k) {
    CurveOnSurface c{CurveFamily::Beta, jacket_curve(beta_cycles[k], 2, 3), {}, false};
    c.provenance.kind = CurveProvenance::Kind::JacketCycle;
    c.provenance.pair = ch.pairs.second;
    c.provenance.bubble = owner[g.node_id(beta_cycles[k].nodes[0])];
    c.provenance.index = k;
    out.push_back(std::move(c));
  }

  // gamma: one curve per {special,i}-cycle, running tubes lengthwise and
  // crossing squares at their color-i corners
  for (int i : nonspecial_colors(g, ch.special)) {
    int t = sc.pos_of[i];
    auto cycles = bicolored_cycles(g, std::min(ch.special, i), std::max(ch.special, i));
    for (int k = 0; k < (int)cycles.size(); ++k) {
      const auto& nodes = cycles[k].nodes;
      std::vector<int> walk;
      int m = (int)nodes.size();
      for (int step = 0; step < m; ++step) {
        int id = g.node_id(nodes[step]);
        int next = g.node_id(nodes[(step + 1) % m]);
        bool via_special =  // which color joins nodes[step] to nodes[step+1]?
            (step % 2 == 0) == (cycles[k].color_i == ch.special);
        if (via_special) {
          int black = nodes[step].sign == Sign::Pos ? nodes[step].index
                                                    : nodes[(step + 1) % m].index;
          walk.push_back(nodes[step].sign == Sign::Pos ? de_fwd(sc.longi[black][t])
                                                       : de_rev(sc.longi[black][t]));
        } else {
          walk.push_back(de_rev(sc.diag[id][t]));
          walk.push_back(de_fwd(sc.diag[next][t]));
        }
      }
      CurveOnSurface c{CurveFamily::Gamma, std::move(walk), {}, false};
      c.provenance.kind = CurveProvenance::Kind::ZeroICycle;
      c.provenance.pair = {ch.special, i};
      c.provenance.color = i;
      c.provenance.index = k;
      out.push_back(std::move(c));
    }
  }
  return out;
}

const char* status_name(TriStatus s) {
  switch (s) {
    case TriStatus::Trisection: return "trisection";
    case TriStatus::QuasiTrisection: return "quasi-trisection";
    case TriStatus::Uncertified: return "uncertified";
  }
  return "?";
}

const char* quasi_name(QuasiKind k) {
  switch (k) {
    case QuasiKind::AllSphereBubbles: return "all-sphere-bubbles";
    case QuasiKind::InGs: return "single-singular-bubble";
    case QuasiKind::InGsBar: return "singular-at-special-only";
    case QuasiKind::OutOfScope: return "out-of-scope";
  }
  return "?";
}

TrisectionDiagram trisect(const ColoredGraph& g, const TrisectionChoice& choice) {
  TrisectionDiagram d;
  d.choice = make_choice(g, choice.special, choice.pairs.first, choice.pairs.second);
  d.central = central_genus(g, d.choice);
  d.surface = build_surface(g, d.choice);
  if (euler_genus(d.surface).genus != d.central.genus)
    throw GemError(Err::SemanticError, "surface genus disagrees with the counting formula");
  d.curves = candidate_curves(g, d.choice, d.surface);
  d.selection = select_independent(d.surface, d.curves, d.central.genus);

  auto rep = manifold_report(g);
  d.noncertified = rep.noncertified;
  if (rep.verdict == ManifoldReport::Verdict::CertifiedManifold) {
    d.status = TriStatus::Trisection;
  } else {
    bool special_only = std::all_of(
        rep.noncertified.begin(), rep.noncertified.end(),
        [&](const BubbleReport& br) { return br.missing_color == d.choice.special; });
    d.status = special_only ? TriStatus::QuasiTrisection : TriStatus::Uncertified;
  }
  return d;
}

std::vector<TrisectionDiagram> enumerate_all(const ColoredGraph& g) {
  std::vector<TrisectionDiagram> out;
  for (const auto& ch : all_choices(g)) out.push_back(trisect(g, ch));
  return out;
}

std::vector<QuasiColorReport> quasi_check(const ColoredGraph& g) {
  if (g.rank() != 4)
    throw GemError(Err::WrongRank, "scope check needs rank 4, got " + std::to_string(g.rank()));
  auto rep = manifold_report(g);
  std::vector<QuasiColorReport> out;
  for (int c = 0; c <= 4; ++c) {
    QuasiColorReport r{c, QuasiKind::OutOfScope, {}};
    if (rep.verdict == ManifoldReport::Verdict::CertifiedManifold) {
      r.kind = QuasiKind::AllSphereBubbles;
      out.push_back(std::move(r));
      continue;
    }
    std::vector<BubbleReport> at_c, elsewhere;
    for (const auto& br : rep.noncertified)
      (br.missing_color == c ? at_c : elsewhere).push_back(br);
    if (elsewhere.empty()) {
      int chat_bubbles = 0;
      for (const auto& br : rep.bubbles) chat_bubbles += br.missing_color == c;
      r.kind = chat_bubbles == 1 ? QuasiKind::InGs : QuasiKind::InGsBar;
      r.noncertified = std::move(at_c);
    } else {
      r.kind = QuasiKind::OutOfScope;
      r.noncertified = rep.noncertified;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gem
