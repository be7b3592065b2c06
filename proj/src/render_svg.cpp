#include "gem/render_svg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

namespace gem {

namespace {

struct Pt {
  int x, y;
};

constexpr int kSquare = 120;   // outer square side
constexpr int kInset = 18;     // corner -> inner vertex pull
constexpr int kPitch = 180;    // square spacing within a row
constexpr int kRowPitch = 200; // bubble row spacing
constexpr int kMargin = 60;

// side t runs corner t -> corner t+1: bottom, right, top, left
Pt corner_xy(Pt base, int t) {
  switch (t) {
    case 0: return {base.x, base.y + kSquare};
    case 1: return {base.x + kSquare, base.y + kSquare};
    case 2: return {base.x + kSquare, base.y};
    default: return {base.x, base.y};
  }
}

Pt toward_center(Pt base, Pt p) {
  Pt c{base.x + kSquare / 2, base.y + kSquare / 2};
  return {p.x + (c.x - p.x) * kInset * 2 / kSquare, p.y + (c.y - p.y) * kInset * 2 / kSquare};
}

// "diag +2:3" -> ("+2", 3); returns slot -1 if the label is not of that shape
std::pair<std::string, int> split_slot(const std::string& label, const std::string& prefix) {
  if (label.rfind(prefix, 0) != 0) return {"", -1};
  auto colon = label.rfind(':');
  if (colon == std::string::npos || colon <= prefix.size()) return {"", -1};
  return {label.substr(prefix.size(), colon - prefix.size()),
          std::stoi(label.substr(colon + 1))};
}

struct Layout {
  std::vector<std::string> square_names;       // construction order
  std::map<std::string, int> square_index;
  std::vector<Pt> square_base;                 // per square
  std::map<int, std::pair<int, int>> corner_at;  // diag edge -> (square, slot)
  std::vector<Pt> vertex_pos;                  // canonical position per vertex
  std::vector<std::string> hole_mark;          // tube line name per square
};

Layout plan_layout(const DiagramDoc& doc) {
  Layout L;
  const CwSurface& s = doc.surface;

  // squares and their corner/inner slots come from the diagonal edges
  std::vector<std::array<int, 4>> diag_edge;  // per square
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [node, t] = split_slot(s.edge_labels[e], "diag ");
    if (t < 0) continue;
    if (!L.square_index.count(node)) {
      L.square_index[node] = (int)L.square_names.size();
      L.square_names.push_back(node);
      diag_edge.push_back({-1, -1, -1, -1});
    }
    diag_edge[L.square_index[node]][t] = e;
    L.corner_at[e] = {L.square_index[node], t};
  }
  int nsq = (int)L.square_names.size();

  // two squares sharing a "line" edge sit in the same bubble; recover that
  // from the quad faces, then lay bubbles out one row each
  std::vector<int> group(nsq);
  for (int i = 0; i < nsq; ++i) group[i] = i;
  std::function<int(int)> find = [&](int v) { return group[v] == v ? v : group[v] = find(group[v]); };
  std::map<int, int> line_owner;  // line edge -> first square seen
  for (int f = 0; f < s.face_count(); ++f) {
    auto [node, t] = split_slot(s.face_labels[f], "quad ");
    if (t < 0) continue;
    for (int de : s.faces[f]) {
      int e = de_edge(de);
      if (s.edge_labels[e].rfind("line ", 0) != 0) continue;
      int sq = L.square_index[node];
      if (line_owner.count(e)) group[find(sq)] = find(line_owner[e]);
      else line_owner[e] = sq;
    }
  }
  std::vector<int> row(nsq, -1), slot(nsq, 0);
  int rows = 0;
  std::vector<int> row_fill;
  for (int i = 0; i < nsq; ++i) {  // bubble row = first square's order
    int root = find(i);
    if (row[root] < 0) {
      row[root] = rows++;
      row_fill.push_back(0);
    }
    row[i] = row[root];
    slot[i] = row_fill[row[i]]++;
  }
  L.square_base.resize(nsq);
  for (int i = 0; i < nsq; ++i)
    L.square_base[i] = {kMargin + slot[i] * kPitch, kMargin + row[i] * kRowPitch};

  // canonical vertex positions: inner vertices live on one square only;
  // corner vertices take their first square copy
  L.vertex_pos.assign(s.vertex_count, {-1, -1});
  for (int i = 0; i < nsq; ++i)
    for (int t = 0; t < 4; ++t) {
      int e = diag_edge[i][t];
      if (e < 0) continue;
      Pt c = corner_xy(L.square_base[i], t);
      if (L.vertex_pos[s.edges[e][0]].x < 0) L.vertex_pos[s.edges[e][0]] = c;
      L.vertex_pos[s.edges[e][1]] = toward_center(L.square_base[i], c);
    }

  // each emptied square is one end of a tube; mark it with the line name
  L.hole_mark.assign(nsq, "");
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [rest, t] = split_slot(s.edge_labels[e], "long ");
    if (t < 0) continue;
    for (int end = 0; end < 2; ++end) {
      // find which square owns this inner vertex
      for (int i = 0; i < nsq; ++i)
        for (int tt = 0; tt < 4; ++tt)
          if (diag_edge[i][tt] >= 0 && s.edges[diag_edge[i][tt]][1] == s.edges[e][end])
            L.hole_mark[i] = rest;
    }
  }
  return L;
}

struct SvgOut {
  std::ostringstream os;

  void text(Pt p, const std::string& anchor, int size, const std::string& fill,
            const std::string& body) {
    os << "<text x=\"" << p.x << "\" y=\"" << p.y << "\" font-family=\"monospace\" font-size=\""
       << size << "\" text-anchor=\"" << anchor << "\" fill=\"" << fill << "\">" << body
       << "</text>\n";
  }
  void line(Pt a, Pt b, const std::string& style) {
    os << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
       << "\" " << style << "/>\n";
  }
  void circle(Pt c, int r, const std::string& style) {
    os << "<circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << r << "\" " << style
       << "/>\n";
  }
};

std::string xml_escape(const std::string& in) {
  std::string out;
  for (char ch : in) {
    if (ch == '&') out += "&amp;";
    else if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else out += ch;
  }
  return out;
}

}  // namespace

std::string render_svg(const DiagramDoc& doc) {
  const CwSurface& s = doc.surface;
  Layout L = plan_layout(doc);
  int nsq = (int)L.square_names.size();

  int width = 2 * kMargin, height = 2 * kMargin + 40;
  for (Pt b : L.square_base) {
    width = std::max(width, b.x + kSquare + kMargin);
    height = std::max(height, b.y + kSquare + kMargin + 40);
  }

  SvgOut svg;
  svg.os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
         << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg.os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // base layer: squares with side/corner labels and the emptied discs
  const std::string gray = "stroke=\"#999\" stroke-width=\"1\" fill=\"none\"";
  for (int i = 0; i < nsq; ++i) {
    Pt base = L.square_base[i];
    for (int t = 0; t < 4; ++t) {
      Pt a = corner_xy(base, t), b = corner_xy(base, (t + 1) % 4);
      svg.line(a, b, "stroke=\"#444\" stroke-width=\"1.5\"");
      svg.line(a, toward_center(base, a), gray);
    }
    // removed disc, marked with its tube line
    Pt i0 = toward_center(base, corner_xy(base, 0)), i1 = toward_center(base, corner_xy(base, 1)),
       i2 = toward_center(base, corner_xy(base, 2)), i3 = toward_center(base, corner_xy(base, 3));
    svg.os << "<polygon points=\"" << i0.x << "," << i0.y << " " << i1.x << "," << i1.y << " "
           << i2.x << "," << i2.y << " " << i3.x << "," << i3.y
           << "\" fill=\"#eeeeee\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    Pt center{base.x + kSquare / 2, base.y + kSquare / 2};
    svg.text({center.x, center.y + 4}, "middle", 11, "#555", xml_escape(L.hole_mark[i]));
    svg.text({base.x, base.y - 8}, "start", 12, "#000", xml_escape(L.square_names[i]));
  }
  // side color labels, read off the square side edges via the quad faces
  for (int f = 0; f < s.face_count(); ++f) {
    auto [node, t] = split_slot(s.face_labels[f], "quad ");
    if (t < 0) continue;
    for (int de : s.faces[f]) {
      int e = de_edge(de);
      const std::string& lbl = s.edge_labels[e];
      if (lbl.rfind("line ", 0) != 0) continue;
      int sq = L.square_index[node];
      Pt a = corner_xy(L.square_base[sq], t), b = corner_xy(L.square_base[sq], (t + 1) % 4);
      Pt mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
      Pt out{mid.x + (mid.x - (L.square_base[sq].x + kSquare / 2)) * 14 / (kSquare / 2),
             mid.y + (mid.y - (L.square_base[sq].y + kSquare / 2)) * 14 / (kSquare / 2)};
      svg.text({out.x, out.y + 4}, "middle", 10, "#666", xml_escape(lbl.substr(5)));
    }
  }
  // corner identification labels: vertex number at every copy
  for (auto& [e, at] : L.corner_at) {
    auto [sq, t] = at;
    Pt c = corner_xy(L.square_base[sq], t);
    svg.circle(c, 2, "fill=\"#222\"");
    Pt off{c.x + (t == 0 || t == 3 ? -4 : 4), c.y + (t == 0 || t == 1 ? 12 : -6)};
    svg.text(off, t == 0 || t == 3 ? "end" : "start", 9, "#888",
             "v" + std::to_string(s.edges[e][0]));
  }
  // pair the marked discs: one dotted connector per tube
  {
    std::map<std::string, std::vector<int>> ends;  // line name -> squares
    for (int i = 0; i < nsq; ++i)
      if (!L.hole_mark[i].empty()) ends[L.hole_mark[i]].push_back(i);
    for (auto& [name, sqs] : ends)
      if (sqs.size() == 2) {
        Pt a{L.square_base[sqs[0]].x + kSquare / 2, L.square_base[sqs[0]].y + kSquare / 2};
        Pt b{L.square_base[sqs[1]].x + kSquare / 2, L.square_base[sqs[1]].y + kSquare / 2};
        svg.line(a, b, "stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"2 4\"");
      }
  }

  // curves: alpha red, beta green, gamma blue; selected solid, rest dashed.
  // Walks jump pen-up where a shared corner is drawn once per square; a small
  // per-curve nudge keeps overlapping runs visible.
  const char* color[3] = {"red", "green", "blue"};
  int fam_seen[3] = {0, 0, 0};
  for (const auto& c : doc.curves) {
    int f = (int)c.family;
    int nudge = (fam_seen[f]++ % 4) - 2 + (f - 1);
    std::ostringstream d;
    Pt pen{-1000000, -1000000};
    for (int de : c.walk) {
      int e = de_edge(de);
      Pt a = L.vertex_pos[s.edges[e][0]], b = L.vertex_pos[s.edges[e][1]];
      if (auto it = L.corner_at.find(e); it != L.corner_at.end())
        a = corner_xy(L.square_base[it->second.first], it->second.second);  // the square's own copy
      if (de_reversed(de)) std::swap(a, b);
      a.x += nudge; a.y += nudge; b.x += nudge; b.y += nudge;
      if (!(pen.x == a.x && pen.y == a.y)) d << "M" << a.x << " " << a.y << " ";
      d << "L" << b.x << " " << b.y << " ";
      pen = b;
    }
    svg.os << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << color[f]
           << "\" stroke-width=\"" << (c.selected ? "2.5" : "1.2") << "\""
           << (c.selected ? "" : " stroke-dasharray=\"6 4\" opacity=\"0.75\"") << "/>\n";
  }

  // caption
  std::ostringstream cap;
  cap << "special " << doc.choice.special << "  pairs {" << doc.choice.pairs.first[0] << ","
      << doc.choice.pairs.first[1] << "}{" << doc.choice.pairs.second[0] << ","
      << doc.choice.pairs.second[1] << "}  genus " << doc.genus << "  status " << doc.status;
  svg.text({kMargin, height - 20}, "start", 12, "#000", xml_escape(cap.str()));

  svg.os << "</svg>\n";
  return svg.os.str();
}

}  // namespace gem
