#include "hookforest/json_io.hpp"

#include <algorithm>

namespace hookforest {

namespace {

json tree_to_json(const PlaneTree& tree) {
  json out = json::array();
  for (const PlaneTree& child : tree.children) out.push_back(tree_to_json(child));
  return out;
}

PlaneTree tree_from_json(const json& j) {
  if (!j.is_array()) throw error("tree node must be a JSON array");
  PlaneTree tree;
  for (const json& child : j) tree.children.push_back(tree_from_json(child));
  return tree;
}

}  // namespace

json forest_to_json(const PlaneForest& forest) {
  json out = json::array();
  for (const PlaneTree& tree : forest.trees) out.push_back(tree_to_json(tree));
  return out;
}

PlaneForest forest_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw error("forest must be a nonempty JSON array of trees");
  PlaneForest forest;
  for (const json& tree : j) forest.trees.push_back(tree_from_json(tree));
  return forest;
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const std::string& c : p.coeff_strings()) out.push_back(c);
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw error("polynomial must be a JSON array of coefficient strings");
  std::vector<std::string> strings;
  for (const json& c : j) {
    if (c.is_string())
      strings.push_back(c.get<std::string>());
    else if (c.is_number_integer())
      strings.push_back(std::to_string(c.get<long long>()));
    else
      throw error("polynomial coefficient must be a string");
  }
  return Polynomial::from_coeff_strings(strings);
}

json degree_sequence_to_json(const DegreeSequence& r) {
  json out = json::array();
  for (long long c : r.counts()) out.push_back(c);
  return out;
}

DegreeSequence degree_sequence_from_json(const json& j) {
  if (!j.is_array()) throw error("degree sequence must be a JSON array");
  std::vector<long long> counts;
  for (const json& c : j) {
    if (!c.is_number_integer()) throw error("degree sequence entries must be integers");
    counts.push_back(c.get<long long>());
  }
  return DegreeSequence::from_counts(std::move(counts));
}

namespace {

json color_to_json(const Color& color) {
  json out = json::object();
  out[color.special ? "s" : "e"] = color.index;
  return out;
}

Color color_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw error("color must be {\"e\": j} or {\"s\": t}");
  if (j.contains("e")) return Color{false, j.at("e").get<int>()};
  if (j.contains("s")) return Color{true, j.at("s").get<int>()};
  throw error("color must be {\"e\": j} or {\"s\": t}");
}

json colored_node_to_json(const PlaneTree& tree, const std::vector<int>& labels,
                          const std::vector<Color>& colors, std::size_t& cursor) {
  json node = json::object();
  bool internal = !tree.is_leaf();
  std::size_t idx = 0;
  if (internal) idx = cursor++;
  json children = json::array();
  for (const PlaneTree& child : tree.children)
    children.push_back(colored_node_to_json(child, labels, colors, cursor));
  node["c"] = std::move(children);
  if (internal) {
    node["label"] = labels[idx];
    node["color"] = color_to_json(colors[idx]);
  }
  return node;
}

void colored_node_from_json(const json& j, PlaneTree& tree, std::vector<int>& labels,
                            std::vector<Color>& colors) {
  if (!j.is_object() || !j.contains("c")) throw error("colored node must be {\"c\": [...], ...}");
  const json& children = j.at("c");
  if (!children.is_array()) throw error("colored node children must be an array");
  bool internal = !children.empty();
  if (internal != j.contains("label") || internal != j.contains("color"))
    throw error("label/color must be present exactly on internal vertices");
  std::size_t slot = 0;
  if (internal) {
    slot = labels.size();
    labels.push_back(j.at("label").get<int>());
    colors.push_back(color_from_json(j.at("color")));
  }
  (void)slot;
  for (const json& child : children) {
    tree.children.emplace_back();
    colored_node_from_json(child, tree.children.back(), labels, colors);
  }
}

}  // namespace

json colored_to_json(const ColoredLabelledForest& forest) {
  json out = json::array();
  std::size_t cursor = 0;
  for (const PlaneTree& tree : forest.base.shape.trees)
    out.push_back(colored_node_to_json(tree, forest.base.labels, forest.colors, cursor));
  return out;
}

ColoredLabelledForest colored_from_json(const json& j, long long k) {
  if (!j.is_array() || j.empty())
    throw error("colored forest must be a nonempty JSON array of nodes");
  ColoredLabelledForest out;
  out.k = k;
  for (const json& node : j) {
    out.base.shape.trees.emplace_back();
    colored_node_from_json(node, out.base.shape.trees.back(), out.base.labels, out.colors);
  }
  validate_colored(out);
  return out;
}

json partition_to_json(const PartitionS& s) {
  json out = json::object();
  for (long long d = 1; d <= s.max_degree(); ++d) {
    if (s.class_of_degree(d).empty()) continue;
    json cls = json::array();
    for (int label : s.class_of_degree(d)) cls.push_back(label);
    out[std::to_string(d)] = std::move(cls);
  }
  return out;
}

PartitionS partition_from_json(const json& j) {
  if (!j.is_object()) throw error("partition must be a JSON object keyed by degree");
  long long max_degree = 0;
  for (const auto& [key, value] : j.items()) {
    long long d = 0;
    try {
      d = std::stoll(key);
    } catch (const std::exception&) {
      throw error("partition key must be a degree: \"" + key + "\"");
    }
    if (d < 1) throw error("partition degree keys start at 1");
    max_degree = std::max(max_degree, d);
    if (!value.is_array()) throw error("partition class must be an array of labels");
  }
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(max_degree));
  for (const auto& [key, value] : j.items()) {
    long long d = std::stoll(key);
    for (const json& label : value)
      classes[static_cast<std::size_t>(d - 1)].push_back(label.get<int>());
  }
  return PartitionS::from_classes(std::move(classes));
}

json codes_to_json(const CodeSequence& codes) {
  json out = json::object();
  out["k"] = codes.k;
  json g = json::object();
  for (const auto& [label, value] : codes.g) g[std::to_string(label)] = value;
  out["g"] = std::move(g);
  json f = json::object();
  for (const auto& [index, value] : codes.f) f[std::to_string(index)] = value;
  out["f"] = std::move(f);
  return out;
}

CodeSequence codes_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("g") || !j.contains("f"))
    throw error("code sequence must be {\"k\":..., \"g\":{...}, \"f\":{...}}");
  CodeSequence codes;
  codes.k = j.at("k").get<long long>();
  auto parse_key = [](const std::string& key) {
    try {
      return std::stoi(key);
    } catch (const std::exception&) {
      throw error("code sequence key must be an integer: \"" + key + "\"");
    }
  };
  for (const auto& [key, value] : j.at("g").items()) codes.g[parse_key(key)] = value.get<int>();
  for (const auto& [key, value] : j.at("f").items()) codes.f[parse_key(key)] = value.get<int>();
  return codes;
}

json hook_report_to_json(const HookReport& report) {
  json out = json::object();
  out["r"] = degree_sequence_to_json(report.r);
  out["brute"] = polynomial_to_json(report.brute);
  out["closed"] = polynomial_to_json(report.closed);
  out["equal"] = report.equal;
  out["count"] = int_to_string(report.forest_count);
  return out;
}

}  // namespace hookforest
