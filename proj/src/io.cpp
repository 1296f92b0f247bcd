#include "seg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace seg {

using nlohmann::json;
using nlohmann::ordered_json;

std::string write_labeling(const RootedTree& tree, const EdgeLabeling& f) {
  ordered_json doc;
  doc["spec"] = format_spec(tree.spec());
  ordered_json edges = ordered_json::object();
  for (int e = 0; e < f.edge_count() && e < tree.edge_count(); ++e)
    if (f.has(e)) edges[tree.vertex_name(RootedTree::edge_child(e))] = f.at(e);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

LabelingDocument read_labeling(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LabelingError(std::string("malformed labeling file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("spec") || !doc["spec"].is_string())
    throw LabelingError("labeling file needs a string field 'spec'");
  if (!doc.contains("edges") || !doc["edges"].is_object())
    throw LabelingError("labeling file needs an object field 'edges'");

  LabelingDocument out{parse_spec(doc["spec"].get<std::string>()), EdgeLabeling{}, {}};
  const RootedTree tree(out.spec);
  out.labeling = EdgeLabeling(tree.edge_count());
  for (const auto& [key, value] : doc["edges"].items()) {
    if (!value.is_number_integer()) throw LabelingError("label for '" + key + "' is not an integer");
    const auto v = tree.find_vertex(key);
    if (!v || *v == RootedTree::root()) {
      out.unknown_keys.push_back(key);
      continue;
    }
    out.labeling.set(RootedTree::parent_edge(*v), value.get<Label>());
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LabelingDocument load_labeling_file(const std::string& path) { return read_labeling(read_text_file(path)); }

VerificationReport verify_document(const LabelingDocument& doc) {
  const RootedTree tree(doc.spec);
  VerificationReport report = verify(tree, doc.labeling);
  if (!doc.unknown_keys.empty()) {
    std::string keys;
    for (const auto& k : doc.unknown_keys) keys += (keys.empty() ? "" : ",") + k;
    report.violations.push_back(
        {Violation::Kind::DomainMismatch, {}, {}, "keys naming no edge of " + format_spec(doc.spec) + ": " + keys});
    report.is_seg = false;
  }
  return report;
}

std::string write_certificate(const Certificate& c) {
  ordered_json doc;
  doc["spec"] = c.spec;
  doc["q"] = c.edges;
  doc["edge_target"] = c.edge_target;
  doc["vertex_target"] = c.vertex_target;
  doc["flags"] = {{"break_negation", c.break_negation},
                  {"break_leaf_permutations", c.break_leaf_permutations},
                  {"break_equal_spine_vertices", c.break_equal_spine_vertices},
                  {"prune_pendant_zero", c.prune_pendant_zero}};
  doc["nodes_visited"] = c.nodes_visited;
  doc["outcome"] = c.outcome;
  doc["artifact_version"] = c.artifact_version;
  return doc.dump(2) + "\n";
}

Certificate read_certificate(std::string_view text) {
  try {
    const json doc = json::parse(text);
    Certificate c;
    c.spec = doc.at("spec").get<std::string>();
    c.edges = doc.at("q").get<int>();
    c.edge_target = doc.at("edge_target").get<std::vector<Label>>();
    c.vertex_target = doc.at("vertex_target").get<std::vector<Label>>();
    const json& flags = doc.at("flags");
    c.break_negation = flags.at("break_negation").get<bool>();
    c.break_leaf_permutations = flags.at("break_leaf_permutations").get<bool>();
    c.break_equal_spine_vertices = flags.at("break_equal_spine_vertices").get<bool>();
    c.prune_pendant_zero = flags.at("prune_pendant_zero").get<bool>();
    c.nodes_visited = doc.at("nodes_visited").get<std::uint64_t>();
    c.outcome = doc.at("outcome").get<std::string>();
    c.artifact_version = doc.at("artifact_version").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
}

std::string export_dot(const RootedTree& tree, const std::optional<EdgeLabeling>& f) {
  std::optional<VertexLabeling> sums;
  if (f) sums = induce(tree, *f);
  auto node_name = [&](VertexId v) {
    std::string name = tree.vertex_name(v);
    for (char& c : name)
      if (c == '.') c = '_';
    return name;
  };

  std::ostringstream out;
  out << "// spec: " << format_spec(tree.spec()) << "\n";
  out << "graph seg {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    out << "  " << node_name(v) << " [label=\"";
    if (sums)
      out << (*sums)[static_cast<std::size_t>(v)];
    else
      out << tree.vertex_name(v);
    out << "\"];\n";
  }
  for (int e = 0; e < tree.edge_count(); ++e) {
    const VertexId child = RootedTree::edge_child(e);
    out << "  " << node_name(tree.parent(child)) << " -- " << node_name(child);
    if (f) out << " [label=\"" << f->at(e) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

TreeSpec spec_from_dot(std::string_view dot) {
  constexpr std::string_view marker = "// spec: ";
  const auto at = dot.find(marker);
  if (at == std::string_view::npos) throw SpecError(SpecError::Kind::Syntax, "DOT text carries no spec comment");
  std::string_view rest = dot.substr(at + marker.size());
  return parse_spec(rest.substr(0, rest.find('\n')));
}

}  // namespace seg
