#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphic/word.hpp"

namespace morphic {

/// Undirected graph on the letters 0..vertex_count-1; loops allowed.
/// A word is a walk when each pair of adjacent letters is an edge.
///
/// Hatted vertices of the five-vertex path are encoded as digits: 2^ = 3, 0^ = 4.
class LabelledGraph {
 public:
  explicit LabelledGraph(int vertex_count);

  /// Parses "0-1 1-2 2-2"; vertex_count is one more than the largest endpoint.
  static LabelledGraph parse_edges(std::string_view text);

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const { return adjacent_[idx(a)][idx(b)]; }
  int vertex_count() const { return vertex_count_; }

  /// Edges (a, b) with a <= b, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::string to_string() const;

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  int vertex_count_;
  std::array<std::array<bool, kMaxAlphabet>, kMaxAlphabet> adjacent_{};
};

/// K3, C4, K13, P5, P4 or P3STAR. Throws DomainError for other names.
LabelledGraph builtin_graph(std::string_view name);

/// Throws DomainError if w uses a letter that is not a vertex.
bool is_walk(const Word& w, const LabelledGraph& g);

}  // namespace morphic
