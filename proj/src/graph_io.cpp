#include "congestlb/graph_io.hpp"
#include "congestlb/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace congestlb {

using nlohmann::json;

json to_json(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  json j;
  j["version"] = 1;
  j["construction"] = doc.construction;
  j["params"] = doc.params;
  json nodes = json::array();
  for (NodeId v = 0; v < g.n(); ++v) {
    json node{{"id", v}, {"label", g.label(v).str()}};
    if (v < doc.owner.size() && doc.owner[v])
      node["owner"] = *doc.owner[v] == Owner::Alice ? "A" : "B";
    else
      node["owner"] = nullptr;
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json ed{{"u", e.u}, {"v", e.v}};
    if (g.weighted()) ed["w"] = e.w;
    edges.push_back(std::move(ed));
  }
  j["edges"] = std::move(edges);
  j["cut"] = doc.cut;
  if (doc.h_edges) j["h_edges"] = *doc.h_edges;
  return j;
}

GraphDocument document_from_json(const json& j) {
  try {
    if (j.at("version").get<int>() != 1) throw PreconditionError("unsupported graph document version");
    GraphDocument doc;
    doc.construction = j.at("construction").get<std::string>();
    doc.params = j.at("params");
    const auto& nodes = j.at("nodes");
    const auto& edges = j.at("edges");
    bool weighted = false;
    for (const auto& e : edges)
      if (e.contains("w")) weighted = true;
    GraphBuilder b(weighted);
    std::vector<NodeLabel> labels;
    std::vector<std::optional<Owner>> owner;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& nd = nodes[i];
      if (nd.at("id").get<std::size_t>() != i) throw PreconditionError("node ids must be 0..n-1 in order");
      labels.push_back(NodeLabel::parse(nd.at("label").get<std::string>()));
      b.add_node(labels.back());
      const auto& o = nd.at("owner");
      if (o.is_null())
        owner.emplace_back();
      else if (o == "A")
        owner.emplace_back(Owner::Alice);
      else if (o == "B")
        owner.emplace_back(Owner::Bob);
      else
        throw PreconditionError("owner must be \"A\", \"B\" or null");
    }
    for (const auto& e : edges) {
      auto u = e.at("u").get<std::size_t>(), v = e.at("v").get<std::size_t>();
      if (u >= labels.size() || v >= labels.size()) throw PreconditionError("edge endpoint out of range");
      b.add_edge(labels[u], labels[v], e.value("w", std::int64_t{1}));
    }
    doc.graph = b.build();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (doc.graph.label(static_cast<NodeId>(i)) != labels[i])
        throw PreconditionError("node ids are not in canonical label order at id " + std::to_string(i));
    doc.owner = std::move(owner);
    doc.cut = j.at("cut").get<std::vector<EdgeIndex>>();
    if (j.contains("h_edges")) doc.h_edges = j.at("h_edges").get<std::vector<EdgeIndex>>();
    for (EdgeIndex e : doc.cut)
      if (e >= doc.graph.edge_count()) throw PreconditionError("cut edge index out of range");
    return doc;
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("malformed graph document: ") + ex.what());
  }
}

GraphDocument plain_document(const Graph& g) {
  GraphDocument doc;
  doc.graph = g;
  doc.owner.assign(g.n(), std::nullopt);
  return doc;
}

json instance_params(const Instance& inst) {
  json p;
  p["k"] = inst.meta.k;
  p["P"] = inst.meta.P;
  p["shaved"] = inst.meta.shaved;
  p["sa"] = bits_to_string(inst.input.sa);
  p["sb"] = bits_to_string(inst.input.sb);
  p["polarity"] = std::string(polarity_name(inst.input.polarity));
  if (inst.meta.spanner) {
    const auto& s = *inst.meta.spanner;
    p["alpha"] = to_string(s.alpha);
    p["beta"] = to_string(s.beta);
    p["x"] = s.x;
    p["weighted"] = s.weighted;
    p["clique_pad"] = s.clique_pad ? json(*s.clique_pad) : json(nullptr);
  }
  return p;
}

GraphDocument instance_document(const Instance& inst) {
  GraphDocument doc;
  doc.construction = std::string(construction_name(inst.meta.construction));
  doc.params = instance_params(inst);
  doc.graph = inst.graph;
  for (Owner o : inst.owner) doc.owner.emplace_back(o);
  doc.cut = inst.cut;
  if (inst.meta.construction == Construction::Spanner) doc.h_edges = inst.h_edges;
  return doc;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  std::ostringstream os;
  os << "graph \"" << dot_escape(doc.construction) << "\" {\n";
  os << "  node [style=filled];\n";
  for (NodeId v = 0; v < g.n(); ++v) {
    std::string color = "white";
    if (v < doc.owner.size() && doc.owner[v]) color = *doc.owner[v] == Owner::Alice ? "lightblue" : "lightsalmon";
    os << "  " << v << " [label=\"" << dot_escape(g.label(v).str()) << "\", fillcolor=" << color << "];\n";
  }
  std::vector<bool> in_cut(g.edge_count(), false), in_h(g.edge_count(), !doc.h_edges.has_value());
  for (EdgeIndex e : doc.cut) in_cut[e] = true;
  if (doc.h_edges)
    for (EdgeIndex e : *doc.h_edges) in_h[e] = true;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    os << "  " << ed.u << " -- " << ed.v;
    std::vector<std::string> attrs;
    if (g.weighted()) attrs.push_back("label=\"" + std::to_string(ed.w) + "\"");
    if (in_cut[e]) attrs.push_back("color=red, penwidth=2");
    if (!in_h[e]) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw PreconditionError("'" + path + "' is not valid JSON: " + ex.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

}  // namespace congestlb
