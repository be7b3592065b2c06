#include "gem/diagram_io.hpp"

#include <json.hpp>

namespace gem {

namespace {

using Json = nlohmann::ordered_json;

Json walk_to_json(const std::vector<int>& walk) {
  Json arr = Json::array();
  for (int de : walk) {
    int signed1 = de_edge(de) + 1;
    arr.push_back(de_reversed(de) ? -signed1 : signed1);
  }
  return arr;
}

std::vector<int> walk_from_json(const Json& arr, int edge_count) {
  std::vector<int> walk;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw GemError(Err::SchemaError, "walk entries must be integers");
    int s = v.get<int>();
    int e = (s < 0 ? -s : s) - 1;
    if (s == 0 || e >= edge_count)
      throw GemError(Err::SchemaError, "walk references edge " + std::to_string(s));
    walk.push_back(s < 0 ? de_rev(e) : de_fwd(e));
  }
  return walk;
}

Json provenance_to_json(const CurveProvenance& p) {
  Json j;
  switch (p.kind) {
    case CurveProvenance::Kind::Stabilization:
      j["kind"] = "stabilization";
      j["line"] = {p.line.color, p.line.black + 1};
      break;
    case CurveProvenance::Kind::JacketCycle:
      j["kind"] = "jacket-cycle";
      j["pair"] = {p.pair[0], p.pair[1]};
      j["bubble"] = p.bubble;
      j["index"] = p.index;
      break;
    case CurveProvenance::Kind::ZeroICycle:
      j["kind"] = "special-cycle";
      j["pair"] = {p.pair[0], p.pair[1]};
      j["index"] = p.index;
      break;
  }
  return j;
}

CurveProvenance provenance_from_json(const Json& j) {
  CurveProvenance p;
  if (!j.contains("kind") || !j["kind"].is_string())
    throw GemError(Err::SchemaError, "curve provenance needs a kind");
  std::string kind = j["kind"];
  try {
    if (kind == "stabilization") {
      p.kind = CurveProvenance::Kind::Stabilization;
      p.line = {j.at("line").at(0).get<int>(), j.at("line").at(1).get<int>() - 1};
    } else if (kind == "jacket-cycle") {
      p.kind = CurveProvenance::Kind::JacketCycle;
      p.pair = {j.at("pair").at(0).get<int>(), j.at("pair").at(1).get<int>()};
      p.bubble = j.at("bubble").get<int>();
      p.index = j.at("index").get<int>();
    } else if (kind == "special-cycle") {
      p.kind = CurveProvenance::Kind::ZeroICycle;
      p.pair = {j.at("pair").at(0).get<int>(), j.at("pair").at(1).get<int>()};
      p.color = p.pair[1];
      p.index = j.at("index").get<int>();
    } else {
      throw GemError(Err::SchemaError, "unknown provenance kind '" + kind + "'");
    }
  } catch (const Json::exception&) {
    throw GemError(Err::SchemaError, "malformed provenance for kind '" + kind + "'");
  }
  return p;
}

}  // namespace

DiagramDoc make_doc(const TrisectionDiagram& d) {
  DiagramDoc doc;
  doc.choice = d.choice;
  doc.genus = d.central.genus;
  doc.loop_rank = d.central.loop_rank;
  doc.bubble_genera = d.central.bubble_genera;
  doc.status = status_name(d.status);
  for (const auto& br : d.noncertified)
    doc.noncertified.push_back(std::to_string(br.missing_color) + "-hat #" +
                               std::to_string(br.index) + " (degree " +
                               std::to_string(br.topo.degree) + ")");
  doc.surface = d.surface;
  doc.curves = d.curves;
  doc.failures = d.selection.failures;
  return doc;
}

std::string doc_to_json(const DiagramDoc& doc) {
  Json j;
  j["format"] = "gem-diagram 1";
  j["choice"] = {{"special", doc.choice.special},
                 {"pair1", {doc.choice.pairs.first[0], doc.choice.pairs.first[1]}},
                 {"pair2", {doc.choice.pairs.second[0], doc.choice.pairs.second[1]}}};
  j["genus"] = doc.genus;
  j["loop_rank"] = doc.loop_rank;
  j["bubble_genera"] = doc.bubble_genera;
  j["status"] = doc.status;
  j["noncertified"] = doc.noncertified;

  Json surf;
  surf["vertices"] = Json::array();
  for (int v = 0; v < doc.surface.vertex_count; ++v)
    surf["vertices"].push_back({{"id", v}, {"label", doc.surface.vertex_labels[v]}});
  surf["edges"] = Json::array();
  for (int e = 0; e < doc.surface.edge_count(); ++e)
    surf["edges"].push_back({{"id", e},
                             {"label", doc.surface.edge_labels[e]},
                             {"ends", {doc.surface.edges[e][0], doc.surface.edges[e][1]}}});
  surf["faces"] = Json::array();
  for (int f = 0; f < doc.surface.face_count(); ++f)
    surf["faces"].push_back({{"id", f},
                             {"label", doc.surface.face_labels[f]},
                             {"walk", walk_to_json(doc.surface.faces[f])}});
  j["surface"] = std::move(surf);

  j["curves"] = Json::array();
  for (const auto& c : doc.curves)
    j["curves"].push_back({{"family", family_name(c.family)},
                           {"provenance", provenance_to_json(c.provenance)},
                           {"walk", walk_to_json(c.walk)},
                           {"selected", c.selected}});

  j["selection_failures"] = Json::array();
  for (const auto& f : doc.failures)
    j["selection_failures"].push_back(
        {{"family", family_name(f.family)}, {"achieved", f.achieved}});

  return j.dump(2) + "\n";
}

DiagramDoc doc_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw GemError(Err::SchemaError, std::string("not valid JSON: ") + e.what());
  }
  DiagramDoc doc;
  try {
    if (j.at("format") != "gem-diagram 1")
      throw GemError(Err::SchemaError, "unknown format tag");
    const auto& ch = j.at("choice");
    doc.choice.special = ch.at("special").get<int>();
    doc.choice.pairs.first = {ch.at("pair1").at(0).get<int>(), ch.at("pair1").at(1).get<int>()};
    doc.choice.pairs.second = {ch.at("pair2").at(0).get<int>(), ch.at("pair2").at(1).get<int>()};
    doc.genus = j.at("genus").get<int>();
    doc.loop_rank = j.at("loop_rank").get<int>();
    doc.bubble_genera = j.at("bubble_genera").get<std::vector<int>>();
    doc.status = j.at("status").get<std::string>();
    doc.noncertified = j.at("noncertified").get<std::vector<std::string>>();

    const auto& surf = j.at("surface");
    doc.surface.vertex_count = (int)surf.at("vertices").size();
    for (const auto& v : surf.at("vertices"))
      doc.surface.vertex_labels.push_back(v.at("label").get<std::string>());
    for (const auto& e : surf.at("edges")) {
      int a = e.at("ends").at(0).get<int>(), b = e.at("ends").at(1).get<int>();
      if (a < 0 || b < 0 || a >= doc.surface.vertex_count || b >= doc.surface.vertex_count)
        throw GemError(Err::SchemaError, "edge endpoint out of range");
      doc.surface.edges.push_back({a, b});
      doc.surface.edge_labels.push_back(e.at("label").get<std::string>());
    }
    for (const auto& f : surf.at("faces")) {
      doc.surface.faces.push_back(walk_from_json(f.at("walk"), doc.surface.edge_count()));
      doc.surface.face_labels.push_back(f.at("label").get<std::string>());
    }

    for (const auto& c : j.at("curves")) {
      CurveOnSurface curve;
      std::string fam = c.at("family").get<std::string>();
      if (fam == "alpha") curve.family = CurveFamily::Alpha;
      else if (fam == "beta") curve.family = CurveFamily::Beta;
      else if (fam == "gamma") curve.family = CurveFamily::Gamma;
      else throw GemError(Err::SchemaError, "unknown curve family '" + fam + "'");
      curve.provenance = provenance_from_json(c.at("provenance"));
      curve.walk = walk_from_json(c.at("walk"), doc.surface.edge_count());
      curve.selected = c.at("selected").get<bool>();
      doc.curves.push_back(std::move(curve));
    }
    for (const auto& f : j.at("selection_failures")) {
      std::string fam = f.at("family").get<std::string>();
      CurveFamily cf = fam == "alpha"   ? CurveFamily::Alpha
                       : fam == "beta"  ? CurveFamily::Beta
                       : fam == "gamma" ? CurveFamily::Gamma
                                        : throw GemError(Err::SchemaError, "unknown family");
      doc.failures.push_back({cf, f.at("achieved").get<int>()});
    }
  } catch (const Json::exception& e) {
    throw GemError(Err::SchemaError, std::string("missing or mistyped field: ") + e.what());
  }
  return doc;
}

}  // namespace gem
