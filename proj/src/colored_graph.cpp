#include "gem/colored_graph.hpp"

#include <algorithm>
#include <sstream>

namespace gem {

ColoredGraph::ColoredGraph(int rank, int half) : rank_(rank), half_(half) {
  pi_.assign(rank_ + 1, std::vector<int>(half_));
  for (auto& row : pi_)
    for (int b = 0; b < half_; ++b) row[b] = b;
}

ColoredGraph::ColoredGraph(int rank, std::vector<std::vector<int>> matchings)
    : rank_(rank), half_(matchings.empty() ? 0 : (int)matchings[0].size()),
      pi_(std::move(matchings)) {}

int ColoredGraph::black_of(int color, int white) const {
  for (int b = 0; b < half_; ++b)
    if (pi_[color][b] == white) return b;
  return -1;
}

bool ColoredGraph::is_connected() const {
  if (half_ == 0) return false;
  std::vector<char> seen(2 * half_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    for (int c = 0; c <= rank_; ++c) {
      int nb = id < half_ ? half_ + pi_[c][id] : black_of(c, id - half_);
      if (nb >= 0 && !seen[nb]) {
        seen[nb] = 1;
        ++cnt;
        stack.push_back(nb);
      }
    }
  }
  return cnt == 2 * half_;
}

const char* defect_name(DefectKind k) {
  switch (k) {
    case DefectKind::BadRank: return "bad-rank";
    case DefectKind::MatchingNotBijective: return "matching-not-bijective";
    case DefectKind::ColorCountMismatch: return "color-count-mismatch";
    case DefectKind::Disconnected: return "disconnected";
  }
  return "?";
}

std::string node_name(NodeRef v) {
  return (v.sign == Sign::Pos ? "+" : "-") + std::to_string(v.index + 1);
}

namespace {

[[noreturn]] void syntax(int lineno, const std::string& what) {
  throw GemError(Err::SyntaxError, "line " + std::to_string(lineno) + ": " + what);
}

[[noreturn]] void semantic(const std::string& what) {
  throw GemError(Err::SemanticError, what);
}

}  // namespace

ColoredGraph parse_gem(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  // header lines: "gem 1", "rank d", "half n", then (d+1)*n records
  int stage = 0;  // 0 magic, 1 rank, 2 half, 3 records
  int rank = -1, half = -1;
  std::vector<std::vector<int>> pi;
  std::vector<std::vector<char>> have;
  int records = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    auto want_int = [&](const std::string& t) {
      size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(t, &pos);
      } catch (...) {
        syntax(lineno, "expected integer, got '" + t + "'");
      }
      if (pos != t.size()) syntax(lineno, "expected integer, got '" + t + "'");
      return (int)v;
    };

    switch (stage) {
      case 0:
        if (tok.size() != 2 || tok[0] != "gem") syntax(lineno, "expected 'gem 1' header");
        if (tok[1] != "1") syntax(lineno, "unsupported format version '" + tok[1] + "'");
        stage = 1;
        break;
      case 1:
        if (tok.size() != 2 || tok[0] != "rank") syntax(lineno, "expected 'rank <d>'");
        rank = want_int(tok[1]);
        if (rank < 2) semantic("rank must be at least 2, got " + tok[1]);
        stage = 2;
        break;
      case 2:
        if (tok.size() != 2 || tok[0] != "half") syntax(lineno, "expected 'half <n>'");
        half = want_int(tok[1]);
        if (half < 1) semantic("half size must be at least 1, got " + tok[1]);
        pi.assign(rank + 1, std::vector<int>(half, -1));
        have.assign(rank + 1, std::vector<char>(half, 0));
        stage = 3;
        break;
      case 3: {
        if (tok.size() != 3) syntax(lineno, "expected '<color> <black> <white>'");
        int c = want_int(tok[0]), b = want_int(tok[1]), w = want_int(tok[2]);
        if (c < 0 || c > rank) semantic("color " + tok[0] + " out of range 0.." + std::to_string(rank));
        if (b < 1 || b > half) semantic("black node " + tok[1] + " out of range 1.." + std::to_string(half));
        if (w < 1 || w > half) semantic("white node " + tok[2] + " out of range 1.." + std::to_string(half));
        if (have[c][b - 1])
          semantic("duplicate line: color " + tok[0] + " black " + tok[1]);
        have[c][b - 1] = 1;
        pi[c][b - 1] = w - 1;
        ++records;
        break;
      }
    }
  }
  if (stage != 3) throw GemError(Err::SyntaxError, "truncated header");
  if (records != (rank + 1) * half) {
    for (int c = 0; c <= rank; ++c) {
      int cnt = 0;
      for (int b = 0; b < half; ++b) cnt += have[c][b];
      if (cnt != half)
        semantic("color-count-mismatch: color " + std::to_string(c) + " has " +
                 std::to_string(cnt) + " lines, expected " + std::to_string(half));
    }
  }
  return ColoredGraph(rank, std::move(pi));
}

std::string serialize_gem(const ColoredGraph& g) {
  std::ostringstream out;
  out << "gem 1\n";
  out << "rank " << g.rank() << "\n";
  out << "half " << g.half() << "\n";
  for (int c = 0; c <= g.rank(); ++c)
    for (int b = 0; b < g.half(); ++b)
      out << c << " " << b + 1 << " " << g.white(c, b) + 1 << "\n";
  return out.str();
}

ValidationReport validate(const ColoredGraph& g) {
  ValidationReport rep;
  auto flag = [&](DefectKind k, std::string where) {
    rep.ok = false;
    rep.defects.push_back({k, std::move(where)});
  };
  if (g.rank() < 2) flag(DefectKind::BadRank, "rank " + std::to_string(g.rank()));
  if ((int)g.matchings().size() != g.rank() + 1)
    flag(DefectKind::ColorCountMismatch,
         std::to_string(g.matchings().size()) + " matchings for rank " + std::to_string(g.rank()));
  for (int c = 0; c < (int)g.matchings().size(); ++c) {
    const auto& row = g.matchings()[c];
    if ((int)row.size() != g.half()) {
      flag(DefectKind::ColorCountMismatch, "color " + std::to_string(c));
      continue;
    }
    std::vector<char> hit(g.half(), 0);
    bool bad = false;
    for (int w : row) {
      if (w < 0 || w >= g.half() || hit[w]) {
        bad = true;
        break;
      }
      hit[w] = 1;
    }
    if (bad) flag(DefectKind::MatchingNotBijective, "color " + std::to_string(c));
  }
  if (rep.ok && !g.is_connected()) flag(DefectKind::Disconnected, "full color set");
  return rep;
}

std::vector<std::vector<NodeRef>> components(const ColoredGraph& g,
                                             const std::vector<int>& colors) {
  if (colors.empty()) throw GemError(Err::EmptyColorSet, "no colors given");
  for (int c : colors)
    if (c < 0 || c > g.rank())
      throw GemError(Err::SemanticError, "color " + std::to_string(c) + " out of range");

  int total = 2 * g.half();
  std::vector<char> seen(total, 0);
  std::vector<std::vector<NodeRef>> out;
  for (int start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<int> stack{start}, comp;
    seen[start] = 1;
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      comp.push_back(id);
      for (int c : colors) {
        int nb = id < g.half() ? g.half() + g.white(c, id) : g.black_of(c, id - g.half());
        if (nb >= 0 && !seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<NodeRef> refs;
    refs.reserve(comp.size());
    for (int id : comp) refs.push_back(g.node_from_id(id));
    out.push_back(std::move(refs));
  }
  return out;
}

ColoredGraph generate_melon(int rank) {
  if (rank < 2) throw GemError(Err::BadRank, "rank must be at least 2, got " + std::to_string(rank));
  return ColoredGraph(rank, 1);
}

}  // namespace gem
