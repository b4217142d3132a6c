#include "skewlr/hasse.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace skewlr {

HasseGraph build_order(
    const std::vector<std::pair<std::string, SkewShape>>& diagrams,
    const ComputeOptions& opt) {
  HasseGraph g;
  if (diagrams.empty()) return g;
  for (const auto& [label, shape] : diagrams) {
    if (shape.box_count() != diagrams.front().second.box_count())
      throw std::invalid_argument("build_order: diagrams must have equal box counts");
    if (label.empty())
      throw std::invalid_argument("build_order: labels must be nonempty");
  }

  struct Group {
    std::vector<std::string> labels;
    SkewShape shape;
    SchurExpansion expansion;
  };
  std::vector<Group> groups;
  for (const auto& [label, shape] : diagrams) {
    SchurExpansion e = skew_schur_expansion(shape, opt);
    auto same = std::find_if(groups.begin(), groups.end(), [&](const Group& grp) {
      return grp.expansion.terms == e.terms;
    });
    if (same == groups.end())
      groups.push_back({{label}, shape, std::move(e)});
    else
      same->labels.push_back(label);
  }
  for (Group& grp : groups) std::sort(grp.labels.begin(), grp.labels.end());
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return a.labels.front() < b.labels.front();
  });

  const size_t count = groups.size();
  g.dominance.assign(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i) {
    g.nodes.push_back({groups[i].labels, groups[i].shape});
    g.dominance[i][i] = true;
    for (size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      g.dominance[i][j] = is_schur_positive(
          subtract(groups[i].expansion, groups[j].expansion));
    }
  }
  for (size_t i = 0; i < count; ++i)
    for (size_t j = 0; j < count; ++j)
      if (i != j && g.dominance[i][j] && g.dominance[j][i])
        throw std::logic_error("build_order: distinct nodes dominate each other");
  for (size_t i = 0; i < count; ++i)
    for (size_t j = 0; j < count; ++j)
      for (size_t m = 0; m < count; ++m)
        if (g.dominance[i][j] && g.dominance[j][m] && !g.dominance[i][m])
          throw std::logic_error("build_order: dominance is not transitive");

  return transitive_reduction(g);
}

HasseGraph transitive_reduction(const HasseGraph& g) {
  HasseGraph out = g;
  out.edges.clear();
  const size_t count = g.nodes.size();
  if (g.dominance.size() != count)
    throw std::invalid_argument("transitive_reduction: bad dominance matrix");
  auto strict = [&](size_t i, size_t j) {
    return i != j && g.dominance[i][j];
  };
  for (size_t i = 0; i < count; ++i) {
    if (g.dominance[i].size() != count)
      throw std::invalid_argument("transitive_reduction: bad dominance matrix");
    for (size_t j = 0; j < count; ++j) {
      if (!strict(i, j)) continue;
      bool covered = true;
      for (size_t m = 0; m < count && covered; ++m)
        if (m != i && m != j && strict(i, m) && strict(m, j)) covered = false;
      if (covered)
        out.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

std::string joined_labels(const HasseGraph::Node& node) {
  std::string out;
  for (size_t i = 0; i < node.labels.size(); ++i) {
    if (i) out += " = ";
    out += node.labels[i];
  }
  return out;
}

}  // namespace

std::string emit_dot(const HasseGraph& g) {
  std::string out = "digraph hasse {\n";
  out += "  // edge direction: dominating -> dominated\n";
  for (const auto& node : g.nodes)
    out += "  \"" + joined_labels(node) + "\";\n";
  for (const auto& [from, to] : g.edges)
    out += "  \"" + joined_labels(g.nodes[from]) + "\" -> \"" +
           joined_labels(g.nodes[to]) + "\";\n";
  out += "}\n";
  return out;
}

std::string hasse_json(const HasseGraph& g) {
  nlohmann::ordered_json out;
  out["nodes"] = nlohmann::ordered_json::array();
  for (const auto& node : g.nodes) {
    nlohmann::ordered_json n;
    n["labels"] = node.labels;
    n["shape"] = format_skew(node.shape);
    out["nodes"].push_back(std::move(n));
  }
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& [from, to] : g.edges)
    out["edges"].push_back({from, to});
  return out.dump();
}

}  // namespace skewlr
