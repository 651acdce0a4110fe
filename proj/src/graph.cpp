#include "morphic/graph.hpp"

#include <algorithm>
#include <sstream>

#include "morphic/error.hpp"

namespace morphic {

LabelledGraph::LabelledGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1 || vertex_count > kMaxAlphabet)
    throw AlphabetError("graph: vertex count must be 1..10, got " + std::to_string(vertex_count));
}

void LabelledGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_)
    throw DomainError("graph: edge " + std::to_string(a) + "-" + std::to_string(b) + " outside the vertex set");
  adjacent_[idx(a)][idx(b)] = true;
  adjacent_[idx(b)][idx(a)] = true;
}

LabelledGraph LabelledGraph::parse_edges(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::istringstream in{std::string(text)};
  std::string tok;
  int top = 0;
  while (in >> tok) {
    if (tok.size() != 3 || tok[1] != '-' || tok[0] < '0' || tok[0] > '9' || tok[2] < '0' || tok[2] > '9')
      throw SyntaxError("graph: bad edge '" + tok + "' (expected a-b with digit vertices)");
    int a = tok[0] - '0', b = tok[2] - '0';
    edges.emplace_back(a, b);
    top = std::max({top, a, b});
  }
  if (edges.empty()) throw SyntaxError("graph: no edges");
  LabelledGraph g(top + 1);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::vector<std::pair<int, int>> LabelledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < vertex_count_; ++a)
    for (int b = a; b < vertex_count_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

std::string LabelledGraph::to_string() const {
  std::string out;
  for (auto [a, b] : edges()) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

LabelledGraph builtin_graph(std::string_view name) {
  auto make = [](int n, std::initializer_list<std::pair<int, int>> edges) {
    LabelledGraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  };
  if (name == "K3") return make(3, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "C4") return make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  if (name == "K13") return make(4, {{3, 0}, {3, 1}, {3, 2}});
  if (name == "P5") return make(5, {{2, 0}, {0, 1}, {1, 3}, {3, 4}});  // 2 - 0 - 1 - 2^ - 0^
  if (name == "P4") return make(4, {{0, 1}, {1, 2}, {2, 3}});
  if (name == "P3STAR") return make(3, {{0, 1}, {1, 2}, {2, 2}});
  throw DomainError("unknown builtin graph '" + std::string(name) + "' (known: K3 C4 K13 P5 P4 P3STAR)");
}

bool is_walk(const Word& w, const LabelledGraph& g) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= g.vertex_count())
      throw DomainError("is_walk: letter " + std::to_string(w[i]) + " is not a vertex");
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!g.has_edge(w[i - 1], w[i])) return false;
  }
  return true;
}

}  // namespace morphic
