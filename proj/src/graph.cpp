#include "wlpa/graph.hpp"

#include <algorithm>
#include <deque>

namespace wlpa {

WeightedGraph WeightedGraph::make(
    const std::vector<std::string>& vertex_ids,
    const std::vector<std::tuple<std::string, std::string, std::string, int>>& edges) {
  WeightedGraph g;
  for (const auto& id : vertex_ids) {
    if (g.vertex_by_id_.count(id)) throw Error("DuplicateVertex", "duplicate vertex id '" + id + "'");
    g.vertex_by_id_[id] = g.vertex_count();
    g.vertex_ids_.push_back(id);
  }
  g.out_.resize(vertex_ids.size());
  g.in_.resize(vertex_ids.size());
  for (const auto& [id, src, dst, weight] : edges) {
    if (g.edge_by_id_.count(id)) throw Error("DuplicateEdge", "duplicate edge id '" + id + "'");
    auto s = g.try_vertex(src), d = g.try_vertex(dst);
    if (!s || !d)
      throw Error("DanglingEdge", "edge '" + id + "' references unknown vertex '" +
                                      (s ? dst : src) + "'");
    if (weight < 1)
      throw Error("BadWeight", "edge '" + id + "' has non-positive weight");
    g.edge_by_id_[id] = g.edge_count();
    g.out_[*s].push_back(g.edge_count());
    g.in_[*d].push_back(g.edge_count());
    g.edges_.push_back({id, *s, *d, weight});
  }
  return g;
}

int WeightedGraph::vertex_index(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) throw Error("UnknownVertex", "unknown vertex '" + id + "'");
  return it->second;
}

int WeightedGraph::edge_index(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) throw Error("UnknownEdge", "unknown edge '" + id + "'");
  return it->second;
}

std::optional<int> WeightedGraph::try_vertex(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> WeightedGraph::try_edge(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

int WeightedGraph::vertex_weight(int v) const {
  int w = 0;
  for (int e : out_[v]) w = std::max(w, edges_[e].weight);
  return w;
}

int WeightedGraph::max_weight() const {
  int w = 0;
  for (const auto& e : edges_) w = std::max(w, e.weight);
  return w;
}

bool WeightedGraph::all_weights_one() const {
  for (const auto& e : edges_)
    if (e.weight != 1) return false;
  return true;
}

bool WeightedGraph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto visit = [&](int u) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        queue.push_back(u);
      }
    };
    for (int e : out_[v]) visit(edges_[e].dst);
    for (int e : in_[v]) visit(edges_[e].src);
  }
  return reached == vertex_count();
}

int letter_source(const WeightedGraph& e, const Letter& l) {
  const auto& edge = e.edge(l.base.edge);
  return l.dir == Direction::real ? edge.src : edge.dst;
}

int letter_target(const WeightedGraph& e, const Letter& l) {
  const auto& edge = e.edge(l.base.edge);
  return l.dir == Direction::real ? edge.dst : edge.src;
}

std::string tagged_edge_to_string(const WeightedGraph& e, const TaggedEdge& t) {
  return e.edge(t.edge).id + "[" + std::to_string(t.tag) + "]";
}

std::string letter_to_string(const WeightedGraph& e, const Letter& l) {
  std::string s = tagged_edge_to_string(e, l.base);
  if (l.dir == Direction::ghost) s += "*";
  return s;
}

std::vector<TaggedEdge> build_hat_graph(const WeightedGraph& e) {
  std::vector<TaggedEdge> hat;
  for (int i = 0; i < e.edge_count(); ++i)
    for (int tag = 1; tag <= e.edge(i).weight; ++tag) hat.push_back({i, tag});
  return hat;
}

std::vector<Letter> all_letters(const WeightedGraph& e) {
  std::vector<Letter> letters;
  for (const auto& t : build_hat_graph(e)) {
    letters.push_back({t, Direction::real});
    letters.push_back({t, Direction::ghost});
  }
  return letters;
}

bool is_composable(const WeightedGraph& e, const PathWord& p) {
  int at = p.source;
  for (const auto& l : p.letters) {
    if (l.base.tag < 1 || l.base.tag > e.edge(l.base.edge).weight) return false;
    if (letter_source(e, l) != at) return false;
    at = letter_target(e, l);
  }
  return true;
}

int path_target(const WeightedGraph& e, const PathWord& p) {
  int at = p.source;
  for (const auto& l : p.letters) at = letter_target(e, l);
  return at;
}

bool is_reduced(const PathWord& p) {
  for (std::size_t i = 0; i + 1 < p.letters.size(); ++i)
    if (p.letters[i].base == p.letters[i + 1].base && p.letters[i].dir != p.letters[i + 1].dir)
      return false;
  return true;
}

PathWord reverse_word(const WeightedGraph& e, const PathWord& p) {
  PathWord r;
  r.source = path_target(e, p);
  for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it)
    r.letters.push_back(it->inverse());
  return r;
}

std::string word_to_string(const WeightedGraph& e, const PathWord& p) {
  if (p.letters.empty()) return e.vertex_id(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    if (i) s += " ";
    s += letter_to_string(e, p.letters[i]);
  }
  return s;
}

DegreeVector zero_degree(const WeightedGraph& e) {
  return DegreeVector(static_cast<std::size_t>(e.max_weight()), 0);
}

DegreeVector unit_degree(const WeightedGraph& e, int tag) {
  DegreeVector d = zero_degree(e);
  d[tag - 1] = 1;
  return d;
}

DegreeVector length_vector(const WeightedGraph& e, const PathWord& p) {
  DegreeVector d = zero_degree(e);
  for (const auto& l : p.letters) d[l.base.tag - 1] += l.dir == Direction::real ? 1 : -1;
  return d;
}

void check_homomorphism(const WeightedGraph& f, const WeightedGraph& g, const GraphHom& hom) {
  if (static_cast<int>(hom.vertex_map.size()) != f.vertex_count() ||
      static_cast<int>(hom.edge_map.size()) != f.edge_count())
    throw Error("MalformedHomomorphism", "map sizes do not match the domain graph");
  for (int v = 0; v < f.vertex_count(); ++v)
    if (hom.vertex_map[v] < 0 || hom.vertex_map[v] >= g.vertex_count())
      throw Error("MalformedHomomorphism", "vertex image out of range");
  for (int i = 0; i < f.edge_count(); ++i) {
    int j = hom.edge_map[i];
    if (j < 0 || j >= g.edge_count())
      throw Error("MalformedHomomorphism", "edge image out of range");
    const auto& fe = f.edge(i);
    const auto& ge = g.edge(j);
    if (hom.vertex_map[fe.src] != ge.src || hom.vertex_map[fe.dst] != ge.dst)
      throw Error("MalformedHomomorphism",
                  "edge '" + fe.id + "' does not commute with source/range maps");
    if (fe.weight != ge.weight)
      throw Error("MalformedHomomorphism", "edge '" + fe.id + "' does not preserve weight");
  }
}

bool is_immersion(const WeightedGraph& f, const WeightedGraph& g, const GraphHom& hom) {
  check_homomorphism(f, g, hom);
  for (int v = 0; v < f.vertex_count(); ++v) {
    std::vector<int> images;
    for (int e : f.out_edges(v)) images.push_back(hom.edge_map[e]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

bool is_covering(const WeightedGraph& f, const WeightedGraph& g, const GraphHom& hom) {
  check_homomorphism(f, g, hom);
  std::vector<char> v_hit(g.vertex_count(), 0), e_hit(g.edge_count(), 0);
  for (int v : hom.vertex_map) v_hit[v] = 1;
  for (int e : hom.edge_map) e_hit[e] = 1;
  if (std::count(v_hit.begin(), v_hit.end(), 1) != g.vertex_count()) return false;
  if (std::count(e_hit.begin(), e_hit.end(), 1) != g.edge_count()) return false;
  auto fiber_bijective = [&](const std::vector<int>& fiber, const std::vector<int>& target_fiber) {
    if (fiber.size() != target_fiber.size()) return false;
    std::vector<int> images;
    for (int e : fiber) images.push_back(hom.edge_map[e]);
    std::sort(images.begin(), images.end());
    std::vector<int> expect = target_fiber;
    std::sort(expect.begin(), expect.end());
    return images == expect;
  };
  for (int v = 0; v < f.vertex_count(); ++v) {
    int w = hom.vertex_map[v];
    if (!fiber_bijective(f.out_edges(v), g.out_edges(w))) return false;
    if (!fiber_bijective(f.in_edges(v), g.in_edges(w))) return false;
  }
  return true;
}

WeightedGraph hat_as_graph(const WeightedGraph& e) {
  std::vector<std::tuple<std::string, std::string, std::string, int>> edges;
  for (const auto& t : build_hat_graph(e)) {
    const auto& st = e.edge(t.edge);
    edges.emplace_back(tagged_edge_to_string(e, t), e.vertex_id(st.src), e.vertex_id(st.dst), 1);
  }
  return WeightedGraph::make(e.vertex_ids(), edges);
}

UniversalCover universal_cover(const WeightedGraph& e, int base, int depth) {
  if (!e.connected()) throw Error("DisconnectedGraph", "universal cover needs a connected graph");
  if (depth < 0) throw Error("BadDepth", "negative depth");

  UniversalCover out;
  out.hat = hat_as_graph(e);

  std::vector<Letter> letters = all_letters(e);
  struct Node {
    PathWord word;
    int end;  // vertex of e the word reaches
  };
  std::vector<Node> nodes;
  nodes.push_back({PathWord{base, {}}, base});
  std::vector<std::tuple<int, int, Letter>> tree_edges;  // parent node, child node, appended letter
  std::size_t level_begin = 0, level_end = 1;
  for (int d = 0; d < depth; ++d) {
    std::size_t next_begin = nodes.size();
    for (std::size_t n = level_begin; n < level_end; ++n) {
      for (const auto& l : letters) {
        if (letter_source(e, l) != nodes[n].end) continue;
        if (!nodes[n].word.letters.empty()) {
          const Letter& last = nodes[n].word.letters.back();
          if (last.base == l.base && last.dir != l.dir) continue;  // backtracking
        }
        PathWord w = nodes[n].word;
        w.letters.push_back(l);
        nodes.push_back({std::move(w), letter_target(e, l)});
        tree_edges.emplace_back(static_cast<int>(n), static_cast<int>(nodes.size() - 1), l);
      }
    }
    level_begin = next_begin;
    level_end = nodes.size();
  }

  std::vector<std::string> vertex_ids;
  for (const auto& n : nodes) vertex_ids.push_back(word_to_string(e, n.word));
  std::vector<std::tuple<std::string, std::string, std::string, int>> edges;
  std::vector<int> edge_images;
  for (const auto& [parent, child, l] : tree_edges) {
    // real letters point away from the root, ghost letters toward it
    int src = l.dir == Direction::real ? parent : child;
    int dst = l.dir == Direction::real ? child : parent;
    std::string id = "(" + vertex_ids[child] + ")";
    edges.emplace_back(id, vertex_ids[src], vertex_ids[dst], 1);
    edge_images.push_back(out.hat.edge_index(tagged_edge_to_string(e, l.base)));
  }
  out.tree = WeightedGraph::make(vertex_ids, edges);
  out.projection.vertex_map.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) out.projection.vertex_map[i] = nodes[i].end;
  out.projection.edge_map = edge_images;
  // vertices at exactly `depth`; their fibers may be incomplete
  for (std::size_t i = level_begin; i < level_end; ++i)
    out.frontier.push_back(static_cast<int>(i));
  for (const auto& n : nodes) out.words.push_back(n.word);
  return out;
}

}  // namespace wlpa
