#pragma once

#include <string>

#include "gem/trisector.hpp"

namespace gem {

// JSON-facing form of a trisection diagram. Field order in the emitted JSON
// is fixed; walks are signed 1-based edge numbers (+k forward along edge k-1,
// -k reversed). The full schema is documented in the README.
struct DiagramDoc {
  TrisectionChoice choice;
  int genus = 0;
  int loop_rank = 0;
  std::vector<int> bubble_genera;
  std::string status;                      // "trisection" | "quasi-trisection" | "uncertified"
  std::vector<std::string> noncertified;   // human-readable bubble descriptions
  CwSurface surface;
  std::vector<CurveOnSurface> curves;
  std::vector<SelectionFailure> failures;
};

DiagramDoc make_doc(const TrisectionDiagram& d);

std::string doc_to_json(const DiagramDoc& doc);          // deterministic bytes
DiagramDoc doc_from_json(const std::string& text);       // throws SchemaError

}  // namespace gem
