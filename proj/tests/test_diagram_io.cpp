#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "gem/diagram_io.hpp"
#include "gem/render_svg.hpp"
#include "support.hpp"

using namespace gem;
using namespace testsup;
using Json = nlohmann::ordered_json;

namespace {

TrisectionDiagram melon_diagram() {
  ColoredGraph g = generate_melon(4);
  return trisect(g, make_choice(g, 0, {1, 2}, {3, 4}));
}

// an uncertified diagram whose gamma candidates fall short of the genus
TrisectionDiagram shortfall_diagram() {
  ColoredGraph g(4, {{2, 1, 3, 0}, {2, 1, 0, 3}, {1, 0, 2, 3}, {1, 0, 2, 3}, {2, 3, 0, 1}});
  TrisectionDiagram d = trisect(g, make_choice(g, 0, {1, 2}, {3, 4}));
  REQUIRE(!d.selection.failures.empty());
  return d;
}

std::string mutated(const std::string& text, void (*tweak)(Json&)) {
  Json j = Json::parse(text);
  tweak(j);
  return j.dump(2) + "\n";
}

}  // namespace

TEST_CASE("make_doc copies the diagram bookkeeping") {
  TrisectionDiagram d = melon_diagram();
  DiagramDoc doc = make_doc(d);
  CHECK(doc.choice == d.choice);
  CHECK(doc.genus == 1);
  CHECK(doc.loop_rank == 1);
  CHECK(doc.bubble_genera == std::vector<int>{0});
  CHECK(doc.status == "trisection");
  CHECK(doc.noncertified.empty());
  CHECK(doc.curves.size() == d.curves.size());
  CHECK(doc.failures.empty());

  DiagramDoc bad = make_doc(shortfall_diagram());
  CHECK(bad.status == "uncertified");
  CHECK(!bad.noncertified.empty());
  CHECK(bad.noncertified[0].substr(1, 5) == "-hat ");
  CHECK(!bad.failures.empty());
}

TEST_CASE("json bytes are deterministic and newline-terminated") {
  DiagramDoc doc = make_doc(melon_diagram());
  std::string a = doc_to_json(doc), b = doc_to_json(make_doc(melon_diagram()));
  CHECK(a == b);
  REQUIRE(!a.empty());
  CHECK(a.back() == '\n');
  CHECK(a.find("\"format\": \"gem-diagram 1\"") != std::string::npos);
}

TEST_CASE("parse of emit reproduces the bytes exactly") {
  for (const TrisectionDiagram& d : {melon_diagram(), shortfall_diagram()}) {
    std::string bytes = doc_to_json(make_doc(d));
    DiagramDoc back = doc_from_json(bytes);
    CHECK(doc_to_json(back) == bytes);
  }
}

TEST_CASE("a transported surface still measures the same") {
  DiagramDoc doc = doc_from_json(doc_to_json(make_doc(melon_diagram())));
  CHECK(euler_genus(doc.surface).genus == doc.genus);
  CHECK(orientation_coherent(doc.surface));
  for (const auto& c : doc.curves) CHECK(walk_closed(doc.surface, c.walk));
}

TEST_CASE("schema violations are rejected as such") {
  std::string good = doc_to_json(make_doc(melon_diagram()));

  auto rejects = [](const std::string& text) {
    try {
      doc_from_json(text);
      return false;
    } catch (const GemError& e) {
      return e.kind == Err::SchemaError;
    }
  };

  CHECK(rejects("not json at all"));
  CHECK(rejects("{}"));
  CHECK(rejects(mutated(good, [](Json& j) { j["format"] = "gem-diagram 2"; })));
  CHECK(rejects(mutated(good, [](Json& j) { j.erase("genus"); })));
  CHECK(rejects(mutated(good, [](Json& j) { j["genus"] = "one"; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["curves"][0]["family"] = "delta"; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["curves"][0]["provenance"]["kind"] = "wish"; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["curves"][0]["walk"][0] = 0; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["curves"][0]["walk"][0] = 100000; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["curves"][0]["walk"][0] = 1.5; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["surface"]["edges"][0]["ends"][0] = -1; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["surface"]["faces"][0]["walk"][0] = 99999; })));
  CHECK(rejects(mutated(good, [](Json& j) { j["curves"][0]["provenance"].erase("line"); })));

  // unharmed original still parses
  CHECK(doc_to_json(doc_from_json(good)) == good);
}

TEST_CASE("svg output is deterministic and shows selection") {
  DiagramDoc doc = make_doc(melon_diagram());
  std::string svg = render_svg(doc);
  CHECK(svg == render_svg(doc));
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  auto count = [&](const std::string& hay, const std::string& needle) {
    int k = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
      ++k;
    return k;
  };
  // one path per candidate curve; unselected ones dashed
  CHECK(count(svg, "<path ") == (int)doc.curves.size());
  int unselected = 0;
  for (const auto& c : doc.curves) unselected += !c.selected;
  CHECK(count(svg, "stroke-dasharray=\"6 4\"") == unselected);
  // one emptied polygon per graph node
  CHECK(count(svg, "<polygon ") == 2);
  CHECK(svg.find("status trisection") != std::string::npos);

  // rendering survives the json round-trip byte-for-byte
  CHECK(render_svg(doc_from_json(doc_to_json(doc))) == svg);
}

TEST_CASE("svg of a failed selection keeps every curve dashed or solid as flagged") {
  DiagramDoc doc = make_doc(shortfall_diagram());
  std::string svg = render_svg(doc);
  CHECK(svg.find("status uncertified") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(render_svg(doc_from_json(doc_to_json(doc))) == svg);
}
