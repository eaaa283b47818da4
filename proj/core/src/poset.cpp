#include "orbitforce/poset.hpp"

#include <json.hpp>

#include <sstream>

#include "orbitforce/language.hpp"
#include "orbitforce/realization.hpp"
#include "orbitforce/rewrite.hpp"

namespace orbitforce {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::derive:    return "derive";
    case Method::construct: return "construct";
    case Method::realize:   return "realize";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) noexcept {
  if (name == "derive") return Method::derive;
  if (name == "construct") return Method::construct;
  if (name == "realize") return Method::realize;
  return std::nullopt;
}

bool ForcingGraph::has_edge(const Word& w, const Word& u) const {
  auto it = edges.find(w);
  return it != edges.end() && it->second.contains(u);
}

const PatternSet& ForcingGraph::successors(const Word& w) const {
  static const PatternSet empty;
  auto it = edges.find(w);
  return it == edges.end() ? empty : it->second;
}

std::size_t ForcingGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& [w, succ] : edges) n += succ.size();
  return n;
}

ForcingGraph forcing_graph(std::size_t max_len, Method method) {
  ForcingGraph g;
  g.max_len = max_len;
  g.method = method;
  g.nodes = words_up_to_length(max_len);

  LanguageTable table;
  for (const Word& w : g.nodes) {
    PatternSet forced;
    switch (method) {
      case Method::derive:    forced = derivable_set(w); break;
      case Method::construct: forced = table.language(w); break;
      case Method::realize:   forced = forced_set_via_realization(w); break;
    }
    forced.erase(w);
    g.edges.emplace(w, std::move(forced));
  }
  return g;
}

ForcingGraph hasse(const ForcingGraph& g) {
  for (const auto& [w, succ] : g.edges) {
    for (const Word& u : succ) {
      if (u == w) {
        throw NotAPartialOrder("reflexive edge at " + format_word(w));
      }
      if (g.has_edge(u, w)) {
        throw NotAPartialOrder("antisymmetry fails between " + format_word(w) +
                               " and " + format_word(u));
      }
    }
  }

  ForcingGraph reduced;
  reduced.max_len = g.max_len;
  reduced.method = g.method;
  reduced.nodes = g.nodes;
  for (const auto& [w, succ] : g.edges) {
    PatternSet covers;
    for (const Word& u : succ) {
      bool shortcut = false;
      for (const Word& v : succ) {
        if (v != u && g.has_edge(v, u)) {
          shortcut = true;
          break;
        }
      }
      if (!shortcut) covers.insert(u);
    }
    reduced.edges.emplace(w, std::move(covers));
  }
  return reduced;
}

std::string export_dot(const ForcingGraph& g) {
  std::ostringstream os;
  os << "digraph forcing {\n";
  for (const Word& w : g.nodes) os << "  " << format_word(w) << ";\n";
  for (const Word& w : g.nodes) {
    for (const Word& u : g.successors(w)) {
      os << "  " << format_word(w) << " -> " << format_word(u) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const ForcingGraph& g) {
  nlohmann::ordered_json j;
  j["max_len"] = g.max_len;
  j["method"] = std::string(method_name(g.method));
  auto nodes = nlohmann::ordered_json::array();
  for (const Word& w : g.nodes) nodes.push_back(format_word(w));
  j["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (const Word& w : g.nodes) {
    for (const Word& u : g.successors(w)) {
      edges.push_back({format_word(w), format_word(u)});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

ForcingGraph import_json_graph(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ForcingGraph g;
  g.max_len = j.at("max_len").get<std::size_t>();
  auto method = method_from_name(j.at("method").get<std::string>());
  if (!method) {
    throw std::runtime_error("import_json_graph: unknown method \"" +
                             j.at("method").get<std::string>() + "\"");
  }
  g.method = *method;
  for (const auto& node : j.at("nodes")) {
    g.nodes.push_back(parse_word(node.get<std::string>()));
  }
  for (const Word& w : g.nodes) g.edges.emplace(w, PatternSet{});
  for (const auto& edge : j.at("edges")) {
    if (!edge.is_array() || edge.size() != 2) {
      throw std::runtime_error("import_json_graph: edge is not a pair");
    }
    Word w = parse_word(edge[0].get<std::string>());
    Word u = parse_word(edge[1].get<std::string>());
    auto it = g.edges.find(w);
    if (it == g.edges.end() || !g.edges.contains(u)) {
      throw std::runtime_error("import_json_graph: edge endpoint not a node");
    }
    it->second.insert(std::move(u));
  }
  return g;
}

}  // namespace orbitforce
