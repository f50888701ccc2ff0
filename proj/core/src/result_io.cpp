#include <stdexcept>

#include <json.hpp>

#include "kscontext/error.hpp"
#include "kscontext/solver.hpp"

namespace kscontext {

using nlohmann::json;

std::string to_json(const SolveResult& result) {
  json labels = json::array();
  for (Label l : result.labeling) labels.push_back(std::string(1, label_char(l)));
  json stats = {{"nodes", result.stats.nodes}, {"millis", result.stats.millis},
                {"lower_bound", result.stats.lower_bound}};
  if (result.stats.seed) stats["seed"] = *result.stats.seed;
  json doc;
  doc["qs"] = result.qs;
  doc["q"] = result.q().get_str();
  doc["n"] = result.n;
  doc["labeling"] = std::move(labels);
  doc["transversal"] = result.transversal;
  doc["independent_part"] = result.independent_part;
  doc["optimal"] = result.optimal;
  doc["stats"] = std::move(stats);
  return doc.dump();
}

SolveResult solve_result_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(InputErrorKind::kSyntax, std::string("malformed JSON: ") + e.what());
  }
  try {
    Labeling labeling;
    for (const auto& l : doc.at("labeling")) {
      auto s = l.get<std::string>();
      if (s == "0") {
        labeling.push_back(Label::kZero);
      } else if (s == "C") {
        labeling.push_back(Label::kContextual);
      } else if (s == "1") {
        labeling.push_back(Label::kOne);
      } else {
        throw InputError(InputErrorKind::kSchema, "labels must be \"0\", \"C\" or \"1\"");
      }
    }
    SolveResult r = result_from_labeling(std::move(labeling));
    if (doc.at("qs").get<int>() != r.qs || doc.at("n").get<int>() != r.n ||
        doc.at("q").get<std::string>() != r.q().get_str() ||
        doc.at("transversal").get<std::vector<int>>() != r.transversal ||
        doc.at("independent_part").get<std::vector<int>>() != r.independent_part) {
      throw InputError(InputErrorKind::kInconsistentGraph, "solve result fields disagree with its labeling");
    }
    r.optimal = doc.at("optimal").get<bool>();
    const auto& stats = doc.at("stats");
    r.stats.nodes = stats.at("nodes").get<std::uint64_t>();
    r.stats.millis = stats.at("millis").get<double>();
    r.stats.lower_bound = stats.value("lower_bound", 0);
    if (stats.contains("seed")) r.stats.seed = stats["seed"].get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(InputErrorKind::kSchema, std::string("bad solve result: ") + e.what());
  }
}

}  // namespace kscontext
