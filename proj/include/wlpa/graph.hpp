#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlpa/scalar.hpp"

namespace wlpa {

// Finite weighted directed graph. Vertices and edges keep input order;
// string ids at the boundary, dense indices internally.
class WeightedGraph {
 public:
  struct Edge {
    std::string id;
    int src = 0;
    int dst = 0;
    int weight = 1;
  };

  WeightedGraph() = default;
  static WeightedGraph make(const std::vector<std::string>& vertex_ids,
                            const std::vector<std::tuple<std::string, std::string, std::string, int>>&
                                edges /* id, src, dst, weight */);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }

  int vertex_index(const std::string& id) const;  // throws UnknownVertex
  int edge_index(const std::string& id) const;    // throws UnknownEdge
  std::optional<int> try_vertex(const std::string& id) const;
  std::optional<int> try_edge(const std::string& id) const;

  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }
  bool is_sink(int v) const { return out_[v].empty(); }

  // w(v) = max weight over outgoing edges, 0 for sinks.
  int vertex_weight(int v) const;
  // n for the Z^n length map: max edge weight, 0 for edgeless graphs.
  int max_weight() const;
  bool all_weights_one() const;
  // connected as an undirected graph (true for the empty graph)
  bool connected() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_by_id_, edge_by_id_;
  std::vector<std::vector<int>> out_, in_;
};

// Edge of the hat graph: a structure edge with a tag in 1..w(st).
struct TaggedEdge {
  int edge = 0;  // index into E.edges()
  int tag = 1;

  bool operator==(const TaggedEdge& o) const { return edge == o.edge && tag == o.tag; }
  bool operator!=(const TaggedEdge& o) const { return !(*this == o); }
  bool operator<(const TaggedEdge& o) const {
    return edge != o.edge ? edge < o.edge : tag < o.tag;
  }
};

enum class Direction { real, ghost };

// Letter of the double hat graph: a tagged edge traversed forward or backward.
struct Letter {
  TaggedEdge base;
  Direction dir = Direction::real;

  bool operator==(const Letter& o) const { return base == o.base && dir == o.dir; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  bool operator<(const Letter& o) const {
    if (base != o.base) return base < o.base;
    return dir == Direction::real && o.dir == Direction::ghost;
  }
  Letter inverse() const { return {base, dir == Direction::real ? Direction::ghost : Direction::real}; }
};

int letter_source(const WeightedGraph& e, const Letter& l);
int letter_target(const WeightedGraph& e, const Letter& l);
// "e[1]" / "e[1]*"
std::string letter_to_string(const WeightedGraph& e, const Letter& l);
std::string tagged_edge_to_string(const WeightedGraph& e, const TaggedEdge& t);

// Finite word over the double hat alphabet anchored at a source vertex.
// An empty letter list is the trivial path at `source`.
struct PathWord {
  int source = 0;
  std::vector<Letter> letters;
};

// Ê^1 in deterministic order: edge order, then tag.
std::vector<TaggedEdge> build_hat_graph(const WeightedGraph& e);
// All letters of the double hat graph: (edge order, tag, real before ghost).
std::vector<Letter> all_letters(const WeightedGraph& e);

bool is_composable(const WeightedGraph& e, const PathWord& p);
int path_target(const WeightedGraph& e, const PathWord& p);  // requires composable
// no adjacent pair e_i e_i^* or e_i^* e_i (same tagged edge)
bool is_reduced(const PathWord& p);
PathWord reverse_word(const WeightedGraph& e, const PathWord& p);  // p*
std::string word_to_string(const WeightedGraph& e, const PathWord& p);

using DegreeVector = std::vector<long long>;
DegreeVector zero_degree(const WeightedGraph& e);
DegreeVector length_vector(const WeightedGraph& e, const PathWord& p);
DegreeVector unit_degree(const WeightedGraph& e, int tag);

// Weight-preserving graph homomorphism F -> G by index maps.
struct GraphHom {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

// Throws MalformedHomomorphism if s/r/weight compatibility fails.
void check_homomorphism(const WeightedGraph& f, const WeightedGraph& g, const GraphHom& hom);
bool is_immersion(const WeightedGraph& f, const WeightedGraph& g, const GraphHom& hom);
bool is_covering(const WeightedGraph& f, const WeightedGraph& g, const GraphHom& hom);

// Ê realized as a weight-1 graph over the same vertices; edge ids are "e[i]".
WeightedGraph hat_as_graph(const WeightedGraph& e);

// Depth-truncated tree of reduced words over the double hat alphabet, rooted at
// `base`, projecting into hat_as_graph(e). Vertex ids are the path words; the
// root keeps the base vertex id. Frontier lists vertices at exactly `depth`.
struct UniversalCover {
  WeightedGraph tree;
  WeightedGraph hat;
  GraphHom projection;           // tree -> hat
  std::vector<int> frontier;     // tree vertex indices
  std::vector<PathWord> words;   // defining word per tree vertex (over e)
};
UniversalCover universal_cover(const WeightedGraph& e, int base, int depth);

}  // namespace wlpa
