#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlpa/graph.hpp"

namespace wlpa {

// Representation graph (F, phi) of a weighted graph E: a directed graph whose
// edges carry images in the hat graph, subject to the two lifting axioms.
// Doubles as a deterministic partial automaton over the double hat alphabet.
//
// A nonempty frontier marks a truncation of an infinite graph: the exactly-one
// axioms are only asserted at non-frontier vertices, and action walks refuse
// to step from frontier vertices (truncation, not genuine zero).
class RepGraph {
 public:
  struct RVertex {
    std::string id;
    int image = 0;  // vertex of E
  };
  struct REdge {
    std::string id;
    int src = 0;
    int dst = 0;
    TaggedEdge image;
  };

  RepGraph() = default;
  static RepGraph make(WeightedGraph base, const std::vector<std::pair<std::string, std::string>>& vertices,
                       const std::vector<std::tuple<std::string, std::string, std::string, std::string, int>>&
                           edges /* id, src, dst, structure edge id, tag */,
                       const std::vector<std::string>& frontier_ids = {});

  const WeightedGraph& base() const { return base_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<RVertex>& vertices() const { return vertices_; }
  const std::vector<REdge>& redges() const { return edges_; }
  const RVertex& vertex(int v) const { return vertices_[v]; }
  const REdge& redge(int f) const { return edges_[f]; }
  int vertex_index(const std::string& id) const;
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  bool is_frontier(int v) const { return frontier_[v] != 0; }
  bool truncated() const;
  std::vector<int> frontier_vertices() const;

  bool connected() const;  // as an undirected graph; true when nonempty and linked
  WeightedGraph underlying_graph() const;  // weight-1 copy, for covering checks / DOT

 private:
  WeightedGraph base_;
  std::vector<RVertex> vertices_;
  std::vector<REdge> edges_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<char> frontier_;
  std::unordered_map<std::string, int> vertex_by_id_;
};

struct ValidationIssue {
  std::string axiom;   // "hom", "axiom1", "axiom2"
  std::string vertex;  // offending F-vertex id (or edge id for "hom")
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

// Axioms (1) and (2) of a representation graph; exactly-one checks are skipped
// at frontier vertices, at-most-one violations are reported everywhere.
ValidationReport validate(const RepGraph& f);

// Partial deterministic transition: real letters follow the unique outgoing
// edge with that image, ghost letters walk the unique incoming edge backwards.
std::optional<int> lift_step(const RepGraph& f, int u, const Letter& l);
// Letter-by-letter lift of a word; nullopt when any step is undefined.
std::optional<int> lift_word(const RepGraph& f, int u, const std::vector<Letter>& word);

// Blocks numbered by first member in vertex order.
struct Partition {
  std::vector<int> block_of;
  int block_count = 0;
  std::vector<std::vector<int>> blocks() const;
};

// Coarsest automaton congruence ~ (equality of prefix-closed label languages),
// by Moore refinement seeded with (image vertex, defined letter set).
Partition similarity_partition(const RepGraph& f);

// Connected and no two (non-frontier) vertices are language-equivalent.
bool is_irreducible(const RepGraph& f);

// Quotient by an admissible equivalence; throws NotAdmissible with a witness.
RepGraph quotient(const RepGraph& f, const Partition& p);

// quotient(F, ~); the unique irreducible graph of F's class. Throws DisconnectedGraph.
RepGraph minimize(const RepGraph& f);

struct Morphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

// A morphism F -> G over the hat graph, if one exists: root = first F-vertex,
// candidates tried in stored order, extension by determinism. Any returned
// morphism has been verified to be a covering of the underlying graphs.
std::optional<Morphism> find_morphism(const RepGraph& f, const RepGraph& g);
bool is_quotient_of(const RepGraph& f, const RepGraph& g);

// Some F-vertex is language-equivalent to some G-vertex (one refinement pass
// on the disjoint union).
bool are_equivalent(const RepGraph& f, const RepGraph& g);

bool is_isomorphic(const RepGraph& f, const RepGraph& g);

// Depth-truncated universal representation T_C of the class of (F, u):
// the tree over the non-backtracking words of phi(uPath(F_d)).
struct UniversalRep {
  RepGraph graph;
  int root = 0;
  std::vector<int> frontier;
  std::vector<PathWord> words;  // defining word per vertex, over the base graph
  // annotation per the theory: the module of the full T_C is indecomposable
  bool indecomposable_by_theorem = true;
};
UniversalRep universal_representation(const RepGraph& f, int u, int depth);

}  // namespace wlpa
