#pragma once

#include "gem/colored_graph.hpp"

namespace gem {

// Inserts a d-dipole into line (i, black): a new node pair joined by d
// parallel lines of every color but i, spliced into the line so that the
// original +v -> -w becomes +v -> -new and +new -> -w.
ColoredGraph insert_dipole(const ColoredGraph& g, LineId line);

// Inverse move. (pos, neg) must be joined by exactly d lines (NotADipole
// otherwise; melon node pairs share d+1 lines and do not qualify). Remaining
// nodes are renumbered order-preserving, so contract(insert(g, l)) == g.
ColoredGraph contract_dipole(const ColoredGraph& g, int pos, int neg);

// Cuts line1 in g1 and line2 in g2 (same color required) and cross-joins the
// free ends. g2's nodes are appended after g1's.
ColoredGraph connected_sum(const ColoredGraph& g1, const ColoredGraph& g2,
                           LineId line1, LineId line2);

}  // namespace gem
