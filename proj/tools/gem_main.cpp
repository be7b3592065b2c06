#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#if defined(_WIN32)
#include <io.h>
#define GEM_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define GEM_ISATTY isatty(fileno(stdout))
#endif

#include "gem/colored_graph.hpp"
#include "gem/diagram_io.hpp"
#include "gem/heegaard.hpp"
#include "gem/moves.hpp"
#include "gem/render_svg.hpp"
#include "gem/subcomplex.hpp"
#include "gem/trisector.hpp"

namespace {

using namespace gem;
using Json = nlohmann::ordered_json;

// ANSI styling for tables; GEM_COLOR=never|auto (default auto: only on a tty)
struct Palette {
  std::string bold, red, green, off;
};

Palette make_palette() {
  bool on = GEM_ISATTY;
  if (const char* env = std::getenv("GEM_COLOR")) {
    std::string v = env;
    if (v == "never") on = false;
    else if (v == "always") on = true;
  }
  if (!on) return {};
  return {"\033[1m", "\033[31m", "\033[32m", "\033[0m"};
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

// Parses, validates, and prints defects to stderr before giving up. Analysis
// commands refuse defective graphs; `validate` is the one that reports them.
ColoredGraph load_valid(const std::string& path, bool allow_disconnected = false) {
  ColoredGraph g = parse_gem(slurp(path));
  ValidationReport rep = validate(g);
  bool fatal = false;
  for (const Defect& d : rep.defects) {
    if (allow_disconnected && d.kind == DefectKind::Disconnected) continue;
    std::cerr << "defect " << defect_name(d.kind) << ": " << d.where << "\n";
    fatal = true;
  }
  if (fatal) throw GemError(Err::SemanticError, "invalid graph: " + path);
  return g;
}

// "c:b" with a 1-based black node, matching the .gem record notation
LineId parse_line_spec(const std::string& s) {
  auto colon = s.find(':');
  std::size_t done1 = 0, done2 = 0;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    int c = std::stoi(s.substr(0, colon), &done1);
    int b = std::stoi(s.substr(colon + 1), &done2);
    if (done1 != colon || done2 != s.size() - colon - 1 || b < 1 || c < 0)
      throw std::invalid_argument("");
    return {c, b - 1};
  } catch (const std::exception&) {
    throw GemError(Err::SyntaxError, "line spec must be color:black (1-based), got '" + s + "'");
  }
}

// "12,34" -> pairs {1,2} and {3,4}; single-digit colors
std::pair<std::array<int, 2>, std::array<int, 2>> parse_pairs(const std::string& s) {
  auto bad = [&] {
    return GemError(Err::SyntaxError, "pairs must look like 12,34 (two color digits each), got '" + s + "'");
  };
  if (s.size() != 5 || s[2] != ',') throw bad();
  auto dig = [&](char ch) {
    if (ch < '0' || ch > '9') throw bad();
    return ch - '0';
  };
  return {{dig(s[0]), dig(s[1])}, {dig(s[3]), dig(s[4])}};
}

std::string pair_text(const std::array<int, 2>& p) {
  return "{" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "}";
}

std::string order_text(const std::vector<int>& order) {
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i)
    out += (i ? "," : "") + std::to_string(order[i]);
  return out + ")";
}

const char* status_display(TriStatus s) {
  switch (s) {
    case TriStatus::Trisection: return "Trisection";
    case TriStatus::QuasiTrisection: return "QuasiTrisection";
    case TriStatus::Uncertified: return "Uncertified";
  }
  return "?";
}

std::string topo_text(const BubbleTopology& t) {
  switch (t.kind) {
    case BubbleTopology::Kind::CertifiedSphere:
      return "sphere (degree " + std::to_string(t.degree) + ")";
    case BubbleTopology::Kind::Surface:
      return "genus " + std::to_string(t.genus) + " surface";
    default:
      return "unknown (degree " + std::to_string(t.degree) + ")";
  }
}

std::string report_text(const BubbleReport& r) {
  return std::to_string(r.missing_color) + "-hat #" + std::to_string(r.index) +
         " (degree " + std::to_string(r.topo.degree) + ")";
}

int cmd_validate(const std::string& file) {
  const Palette pal = make_palette();
  ColoredGraph g = parse_gem(slurp(file));
  std::cout << "rank " << g.rank() << "  half " << g.half() << "  nodes " << g.nodes()
            << "  lines " << g.lines() << "\n";
  ValidationReport rep = validate(g);
  for (const Defect& d : rep.defects)
    std::cout << pal.red << "defect " << defect_name(d.kind) << pal.off << ": " << d.where << "\n";
  if (rep.ok) std::cout << pal.green << "ok" << pal.off << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_info(const std::string& file) {
  const Palette pal = make_palette();
  ColoredGraph g = load_valid(file, /*allow_disconnected=*/true);
  std::cout << "rank " << g.rank() << "  half " << g.half() << "  colors " << g.colors()
            << "  nodes " << g.nodes() << "  lines " << g.lines() << "\n";
  std::cout << "connected " << (g.is_connected() ? "yes" : "no") << "\n";
  std::cout << pal.bold << "bicolored cycles" << pal.off << "\n";
  for (int i = 0; i < g.colors(); ++i)
    for (int j = i + 1; j < g.colors(); ++j)
      std::cout << "  {" << i << "," << j << "}  " << bicolored_cycles(g, i, j).size() << "\n";
  if (g.rank() >= 2) {
    std::cout << pal.bold << "bubbles" << pal.off << "\n";
    for (int c = 0; c < g.colors(); ++c) {
      std::vector<int> colors;
      for (int x = 0; x < g.colors(); ++x)
        if (x != c) colors.push_back(x);
      std::cout << "  " << c << "-hat  " << bubbles(g, colors).size() << "\n";
    }
    std::cout << "degree " << gurau_degree(g) << "\n";
  }
  return 0;
}

int cmd_jackets(const std::string& file) {
  const Palette pal = make_palette();
  ColoredGraph g = load_valid(file);
  std::cout << pal.bold << "order  faces  genus" << pal.off << "\n";
  int degree = 0;
  for (const Jacket& j : jackets(g)) {
    std::cout << order_text(j.order) << "  " << j.face_count << "  "
              << (j.genus ? pal.red : pal.green) << j.genus << pal.off << "\n";
    degree += j.genus;
  }
  std::cout << "degree " << degree << "\n";
  return 0;
}

int cmd_manifold(const std::string& file) {
  const Palette pal = make_palette();
  ColoredGraph g = load_valid(file);
  ManifoldReport rep = manifold_report(g);
  bool certified = rep.verdict == ManifoldReport::Verdict::CertifiedManifold;
  std::cout << "verdict " << (certified ? pal.green : pal.red)
            << (certified ? "certified-manifold" : "unknown") << pal.off << "\n";
  std::cout << pal.bold << "bubbles" << pal.off << "\n";
  for (const BubbleReport& b : rep.bubbles)
    std::cout << "  " << b.missing_color << "-hat #" << b.index << "  " << topo_text(b.topo)
              << "\n";
  std::cout << "noncertified " << rep.noncertified.size() << "\n";
  if (!rep.screen.empty()) {
    std::cout << pal.bold << "link screen" << pal.off << "\n";
    for (const LinkScreen& s : rep.screen)
      std::cout << "  " << s.missing_color << "-hat #" << s.index << "  all-sphere-links "
                << (s.all_spheres ? "yes" : "no") << "\n";
  }
  return 0;
}

void print_heegaard(const HeegaardData& h) {
  std::cout << "pairs " << pair_text(h.pairs.first) << pair_text(h.pairs.second) << "  jacket "
            << order_text(h.jacket_order) << "  faces " << h.face_count << "  genus " << h.genus
            << "  alpha " << h.alpha_candidates.size() << "  beta " << h.beta_candidates.size()
            << "  skeleton " << h.skeleton_genus << "  comparison " << h.comparison << "\n";
}

int cmd_heegaard(const std::string& file, const std::string& pairs_spec) {
  ColoredGraph g = load_valid(file);
  if (pairs_spec.empty()) {
    for (const PairPartition& p : heegaard_partitions()) print_heegaard(heegaard_split(g, p));
  } else {
    auto [a, b] = parse_pairs(pairs_spec);
    std::vector<int> colors;
    for (int c = 0; c < g.colors(); ++c) colors.push_back(c);
    print_heegaard(heegaard_split(g, make_pair_partition(a, b, colors)));
  }
  return 0;
}

TrisectionChoice choice_from_flags(const ColoredGraph& g, int special,
                                   const std::string& pairs_spec) {
  if (g.rank() != 4) throw GemError(Err::WrongRank, "trisection needs a rank-4 graph");
  if (special < 0 || special >= g.colors())
    throw GemError(Err::BadPairPartition,
                   "special color " + std::to_string(special) + " out of range");
  if (!pairs_spec.empty()) {
    auto [a, b] = parse_pairs(pairs_spec);
    return make_choice(g, special, a, b);
  }
  std::vector<int> rest;
  for (int c = 0; c < g.colors(); ++c)
    if (c != special) rest.push_back(c);
  return make_choice(g, special, {rest[0], rest[1]}, {rest[2], rest[3]});
}

std::string bubble_genera_text(const std::vector<int>& genera) {
  std::string out;
  for (std::size_t i = 0; i < genera.size(); ++i)
    out += (i ? ", g=" : "g=") + std::to_string(genera[i]);
  return out;
}

void print_trisect_summary(const TrisectionDiagram& d) {
  std::cout << "genus " << d.central.genus << "; L=" << d.central.loop_rank << "; bubbles: "
            << d.central.bubble_genera.size() << " (" << bubble_genera_text(d.central.bubble_genera)
            << "); status " << status_display(d.status) << "\n";
}

int cmd_trisect(const std::string& file, int special, const std::string& pairs_spec,
                bool as_json, const std::string& out, const std::string& svg) {
  ColoredGraph g = load_valid(file);
  TrisectionDiagram d = trisect(g, choice_from_flags(g, special, pairs_spec));
  DiagramDoc doc = make_doc(d);
  if (!out.empty()) spit(out, doc_to_json(doc));
  if (!svg.empty()) spit(svg, render_svg(doc));
  if (as_json) {
    spit("-", doc_to_json(doc));
  } else {
    print_trisect_summary(d);
    EulerData eu = euler_genus(d.surface);
    std::cout << "surface: V=" << d.surface.vertex_count << " E=" << d.surface.edge_count()
              << " F=" << d.surface.face_count() << " chi=" << eu.chi << "\n";
    for (int f = 0; f < 3; ++f) {
      auto fam = static_cast<CurveFamily>(f);
      int candidates = 0;
      for (const CurveOnSurface& c : d.curves) candidates += c.family == fam;
      std::cout << family_name(fam) << ": " << d.selection.selected[f].size() << "/"
                << d.central.genus << " selected of " << candidates << " candidates\n";
    }
    if (!d.noncertified.empty()) {
      std::cout << "noncertified:";
      for (const BubbleReport& b : d.noncertified) std::cout << " " << report_text(b);
      std::cout << "\n";
    }
  }
  for (const SelectionFailure& f : d.selection.failures)
    std::cerr << "selection failure: " << family_name(f.family) << " reached " << f.achieved
              << " of " << d.central.genus << "\n";
  return d.selection.failures.empty() ? 0 : 1;
}

int cmd_trisect_all(const std::string& file, bool as_json) {
  ColoredGraph g = load_valid(file);
  std::vector<TrisectionDiagram> all = enumerate_all(g);
  std::vector<QuasiColorReport> scope = quasi_check(g);
  bool failed = false;
  for (const TrisectionDiagram& d : all) failed |= !d.selection.failures.empty();
  if (as_json) {
    Json out;
    out["format"] = "gem-trisect-all 1";
    out["results"] = Json::array();
    for (const TrisectionDiagram& d : all) {
      Json r;
      r["special"] = d.choice.special;
      r["pair1"] = d.choice.pairs.first;
      r["pair2"] = d.choice.pairs.second;
      r["genus"] = d.central.genus;
      r["loop_rank"] = d.central.loop_rank;
      r["bubble_genera"] = d.central.bubble_genera;
      r["status"] = status_name(d.status);
      Json sel = Json::array();
      for (int f = 0; f < 3; ++f) sel.push_back(d.selection.selected[f].size());
      r["selected"] = sel;
      Json fails = Json::array();
      for (const SelectionFailure& sf : d.selection.failures)
        fails.push_back({{"family", family_name(sf.family)}, {"achieved", sf.achieved}});
      r["selection_failures"] = fails;
      out["results"].push_back(r);
    }
    out["scope"] = Json::array();
    for (const QuasiColorReport& q : scope) {
      Json s;
      s["special"] = q.special;
      s["kind"] = quasi_name(q.kind);
      Json bad = Json::array();
      for (const BubbleReport& b : q.noncertified) bad.push_back(report_text(b));
      s["noncertified"] = bad;
      out["scope"].push_back(s);
    }
    spit("-", out.dump(2) + "\n");
  } else {
    const Palette pal = make_palette();
    for (const TrisectionDiagram& d : all) {
      std::cout << "special " << d.choice.special << "  pairs "
                << pair_text(d.choice.pairs.first) << pair_text(d.choice.pairs.second)
                << "  genus " << d.central.genus << "  L " << d.central.loop_rank << "  status "
                << status_display(d.status) << "  selected " << d.selection.selected[0].size()
                << "+" << d.selection.selected[1].size() << "+" << d.selection.selected[2].size()
                << "\n";
    }
    std::cout << pal.bold << "scope" << pal.off << "\n";
    for (const QuasiColorReport& q : scope) {
      std::cout << "  color " << q.special << ": " << quasi_name(q.kind);
      for (const BubbleReport& b : q.noncertified) std::cout << "  " << report_text(b);
      std::cout << "\n";
    }
  }
  return failed ? 1 : 0;
}

int cmd_gen(const std::string& what, int rank, const std::string& out) {
  if (what != "melon") throw GemError(Err::SyntaxError, "unknown generator '" + what + "'");
  spit(out, serialize_gem(generate_melon(rank)));
  return 0;
}

int cmd_render(const std::string& file, const std::string& out) {
  spit(out, render_svg(doc_from_json(slurp(file))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colored-graph pipeline: bubbles, jackets, splittings, trisection diagrams"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file, file2, out, svg, pairs_spec, line_spec, line_spec2, what = "melon";
  int special = 0, rank = 3, pos = 1, neg = 1;
  bool as_json = false;

  auto* validate_cmd = app.add_subcommand("validate", "parse a .gem file and report defects");
  validate_cmd->add_option("file", file, ".gem file (or - for stdin)")->required();
  validate_cmd->callback([&] { rc = cmd_validate(file); });

  auto* info_cmd = app.add_subcommand("info", "basic counts, cycles, bubbles, degree");
  info_cmd->add_option("file", file, ".gem file")->required();
  info_cmd->callback([&] { rc = cmd_info(file); });

  auto* jackets_cmd = app.add_subcommand("jackets", "all jackets with faces and genus");
  jackets_cmd->add_option("file", file, ".gem file")->required();
  jackets_cmd->callback([&] { rc = cmd_jackets(file); });

  auto* manifold_cmd = app.add_subcommand("manifold", "bubble classification and verdict");
  manifold_cmd->add_option("file", file, ".gem file")->required();
  manifold_cmd->callback([&] { rc = cmd_manifold(file); });

  auto* heegaard_cmd = app.add_subcommand("heegaard", "rank-3 splitting data per pair partition");
  heegaard_cmd->add_option("file", file, ".gem file")->required();
  heegaard_cmd->add_option("--pairs", pairs_spec, "one partition, e.g. 01,23 (default: all three)");
  heegaard_cmd->callback([&] { rc = cmd_heegaard(file, pairs_spec); });

  auto* trisect_cmd = app.add_subcommand("trisect", "rank-4 trisection diagram for one choice");
  trisect_cmd->add_option("file", file, ".gem file")->required();
  trisect_cmd->add_option("--color", special, "special color")->required();
  trisect_cmd->add_option("--pairs", pairs_spec, "partition of the other four colors, e.g. 12,34");
  trisect_cmd->add_flag("--json", as_json, "print the diagram JSON instead of the summary");
  trisect_cmd->add_option("--out", out, "also write the diagram JSON to a file");
  trisect_cmd->add_option("--svg", svg, "also write an SVG rendering to a file");
  trisect_cmd->callback([&] { rc = cmd_trisect(file, special, pairs_spec, as_json, out, svg); });

  auto* all_cmd = app.add_subcommand("trisect-all", "all 15 choices plus per-color scope");
  all_cmd->add_option("file", file, ".gem file")->required();
  all_cmd->add_flag("--json", as_json, "machine-readable summary");
  all_cmd->callback([&] { rc = cmd_trisect_all(file, as_json); });

  auto* gen_cmd = app.add_subcommand("gen", "generate a named graph");
  gen_cmd->add_option("what", what, "melon")->required()->check(CLI::IsMember({"melon"}));
  gen_cmd->add_option("--rank", rank, "graph rank")->required();
  gen_cmd->add_option("--out", out, "output file (default stdout)");
  gen_cmd->callback([&] { rc = cmd_gen(what, rank, out); });

  auto* move_cmd = app.add_subcommand("move", "graph rewrites; result .gem on stdout");
  move_cmd->require_subcommand(1);
  auto* dipole_cmd = move_cmd->add_subcommand("dipole", "insert a d-dipole into a line");
  dipole_cmd->add_option("file", file, ".gem file")->required();
  dipole_cmd->add_option("--line", line_spec, "line to split, color:black (1-based)")->required();
  dipole_cmd->add_option("--out", out, "output file (default stdout)");
  dipole_cmd->callback([&] {
    spit(out, serialize_gem(insert_dipole(load_valid(file), parse_line_spec(line_spec))));
  });
  auto* contract_cmd = move_cmd->add_subcommand("contract", "contract a d-dipole node pair");
  contract_cmd->add_option("file", file, ".gem file")->required();
  contract_cmd->add_option("--pos", pos, "positive node (1-based)")->required();
  contract_cmd->add_option("--neg", neg, "negative node (1-based)")->required();
  contract_cmd->add_option("--out", out, "output file (default stdout)");
  contract_cmd->callback([&] {
    spit(out, serialize_gem(contract_dipole(load_valid(file), pos - 1, neg - 1)));
  });
  auto* connsum_cmd = move_cmd->add_subcommand("connsum", "connected sum along two lines");
  connsum_cmd->add_option("file1", file, "first .gem file")->required();
  connsum_cmd->add_option("file2", file2, "second .gem file")->required();
  connsum_cmd->add_option("--line1", line_spec, "cut line in the first graph")->required();
  connsum_cmd->add_option("--line2", line_spec2, "cut line in the second graph")->required();
  connsum_cmd->add_option("--out", out, "output file (default stdout)");
  connsum_cmd->callback([&] {
    spit(out, serialize_gem(connected_sum(load_valid(file), load_valid(file2),
                                          parse_line_spec(line_spec),
                                          parse_line_spec(line_spec2))));
  });

  auto* render_cmd = app.add_subcommand("render", "diagram JSON -> SVG");
  render_cmd->add_option("file", file, "diagram JSON file")->required();
  render_cmd->add_option("--out", out, "output file (default stdout)");
  render_cmd->callback([&] { rc = cmd_render(file, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const GemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
