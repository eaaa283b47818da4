#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "orbitforce/word.hpp"

namespace orbitforce {

struct NotAPartialOrder : std::runtime_error {
  explicit NotAPartialOrder(const std::string& what)
      : std::runtime_error(what) {}
};

/// Which characterization produced the forcing sets.
enum class Method : unsigned char { derive, construct, realize };

std::string_view method_name(Method m) noexcept;
std::optional<Method> method_from_name(std::string_view name) noexcept;

/// The forcing relation on all words of length <= max_len. forcing_graph
/// stores the full (transitively closed) relation; hasse() is the cover
/// view of the same nodes.
struct ForcingGraph {
  std::size_t max_len = 0;
  Method method = Method::derive;
  std::vector<Word> nodes;           // shortlex order
  std::map<Word, PatternSet> edges;  // w -> { u : w forces u, u != w }

  bool has_edge(const Word& w, const Word& u) const;

  /// Out-neighbours of w (the empty set when it has none).
  const PatternSet& successors(const Word& w) const;

  std::size_t edge_count() const;

  friend bool operator==(const ForcingGraph&, const ForcingGraph&) = default;
};

/// Builds the relation by computing the chosen characterization's set for
/// every node. Forced patterns never outgrow their source, so the length
/// restriction is downward closed.
ForcingGraph forcing_graph(std::size_t max_len, Method method);

/// Transitive reduction: keeps (w, u) only when no v has both (w, v) and
/// (v, u). Unique for finite partial orders. Throws NotAPartialOrder when
/// the input relation is reflexive or not antisymmetric.
ForcingGraph hasse(const ForcingGraph& g);

/// DOT digraph text; nodes then edges, each on its own line, both in
/// shortlex order. Byte-stable for identical graphs.
std::string export_dot(const ForcingGraph& g);

/// {"max_len": N, "method": "...", "nodes": [...], "edges": [[w, u], ...]}
/// with shortlex ordering throughout.
std::string export_json(const ForcingGraph& g);

/// Inverse of export_json. Throws std::runtime_error on malformed input.
ForcingGraph import_json_graph(std::string_view text);

}  // namespace orbitforce
