#pragma once

#include "congestlb/instance.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace congestlb {

// The on-disk graph document. Owners are absent for plain graphs.
struct GraphDocument {
  std::string construction = "plain";
  nlohmann::json params = nlohmann::json::object();
  Graph graph;
  std::vector<std::optional<Owner>> owner;
  std::vector<EdgeIndex> cut;
  std::optional<std::vector<EdgeIndex>> h_edges;
};

nlohmann::json to_json(const GraphDocument& doc);
GraphDocument document_from_json(const nlohmann::json& j);

GraphDocument plain_document(const Graph& g);
GraphDocument instance_document(const Instance& inst);
nlohmann::json instance_params(const Instance& inst);

std::string to_dot(const GraphDocument& doc);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace congestlb
