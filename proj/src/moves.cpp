#include "gem/moves.hpp"

#include <string>

namespace gem {

namespace {

void check_line(const ColoredGraph& g, LineId line, const char* which) {
  if (line.color < 0 || line.color > g.rank() || line.black < 0 || line.black >= g.half())
    throw GemError(Err::NoSuchLine, std::string(which) + ": no line with color " +
                                        std::to_string(line.color) + " and black node " +
                                        std::to_string(line.black + 1));
}

}  // namespace

ColoredGraph insert_dipole(const ColoredGraph& g, LineId line) {
  check_line(g, line, "dipole");
  int n = g.half();
  ColoredGraph out(g.rank(), n + 1);
  for (int c = 0; c <= g.rank(); ++c) {
    for (int b = 0; b < n; ++b) out.set(c, b, g.white(c, b));
    out.set(c, n, n);  // the new pair, joined by every color but line.color
  }
  out.set(line.color, line.black, n);                       // +v -> -new
  out.set(line.color, n, g.white(line.color, line.black));  // +new -> -w
  return out;
}

ColoredGraph contract_dipole(const ColoredGraph& g, int pos, int neg) {
  if (pos < 0 || pos >= g.half() || neg < 0 || neg >= g.half())
    throw GemError(Err::NotADipole, "no such node pair");
  int joined = 0, free_color = -1;
  for (int c = 0; c <= g.rank(); ++c) {
    if (g.white(c, pos) == neg) ++joined;
    else free_color = c;
  }
  if (joined != g.rank())
    throw GemError(Err::NotADipole, "+" + std::to_string(pos + 1) + "/-" +
                                        std::to_string(neg + 1) + " share " +
                                        std::to_string(joined) + " lines, need " +
                                        std::to_string(g.rank()));
  int n = g.half();
  // renumber order-preserving so contract undoes insert exactly
  auto new_pos = [&](int b) { return b - (b > pos); };
  auto new_neg = [&](int w) { return w - (w > neg); };
  ColoredGraph out(g.rank(), n - 1);
  for (int c = 0; c <= g.rank(); ++c)
    for (int b = 0; b < n; ++b) {
      if (b == pos) continue;
      out.set(c, new_pos(b), new_neg(g.white(c, b)));
    }
  // reconnect the cut line: +v went to -pos's partner through the dipole
  int v = g.black_of(free_color, neg);
  int w = g.white(free_color, pos);
  out.set(free_color, new_pos(v), new_neg(w));
  return out;
}

ColoredGraph connected_sum(const ColoredGraph& g1, const ColoredGraph& g2,
                           LineId line1, LineId line2) {
  if (g1.rank() != g2.rank())
    throw GemError(Err::ColorMismatch, "ranks differ: " + std::to_string(g1.rank()) + " vs " +
                                           std::to_string(g2.rank()));
  if (line1.color != line2.color)
    throw GemError(Err::ColorMismatch, "lines have colors " + std::to_string(line1.color) +
                                           " and " + std::to_string(line2.color));
  check_line(g1, line1, "first line");
  check_line(g2, line2, "second line");
  int n1 = g1.half(), n2 = g2.half();
  ColoredGraph out(g1.rank(), n1 + n2);
  for (int c = 0; c <= g1.rank(); ++c) {
    for (int b = 0; b < n1; ++b) out.set(c, b, g1.white(c, b));
    for (int b = 0; b < n2; ++b) out.set(c, n1 + b, n1 + g2.white(c, b));
  }
  // cut both lines, cross the ends
  out.set(line1.color, line1.black, n1 + g2.white(line2.color, line2.black));
  out.set(line2.color, n1 + line2.black, g1.white(line1.color, line1.black));
  return out;
}

}  // namespace gem
