#include "wlpa/rep_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wlpa {

RepGraph RepGraph::make(
    WeightedGraph base, const std::vector<std::pair<std::string, std::string>>& vertices,
    const std::vector<std::tuple<std::string, std::string, std::string, std::string, int>>& edges,
    const std::vector<std::string>& frontier_ids) {
  RepGraph f;
  f.base_ = std::move(base);
  for (const auto& [id, image] : vertices) {
    if (f.vertex_by_id_.count(id))
      throw Error("DuplicateVertex", "duplicate representation vertex '" + id + "'");
    f.vertex_by_id_[id] = f.vertex_count();
    f.vertices_.push_back({id, f.base_.vertex_index(image)});
  }
  f.out_.resize(f.vertices_.size());
  f.in_.resize(f.vertices_.size());
  f.frontier_.assign(f.vertices_.size(), 0);
  std::unordered_map<std::string, int> edge_ids;
  for (const auto& [id, src, dst, edge, tag] : edges) {
    if (edge_ids.count(id))
      throw Error("DuplicateEdge", "duplicate representation edge '" + id + "'");
    edge_ids[id] = 1;
    int s = f.vertex_index(src);
    int d = f.vertex_index(dst);
    int e = f.base_.edge_index(edge);
    if (tag < 1 || tag > f.base_.edge(e).weight)
      throw Error("BadTag", "edge '" + id + "': tag " + std::to_string(tag) +
                                " outside 1..w(" + edge + ")");
    f.out_[s].push_back(f.edge_count());
    f.in_[d].push_back(f.edge_count());
    f.edges_.push_back({id, s, d, TaggedEdge{e, tag}});
  }
  for (const auto& id : frontier_ids) f.frontier_[f.vertex_index(id)] = 1;
  return f;
}

int RepGraph::vertex_index(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) throw Error("UnknownVertex", "unknown representation vertex '" + id + "'");
  return it->second;
}

bool RepGraph::truncated() const {
  return std::find(frontier_.begin(), frontier_.end(), 1) != frontier_.end();
}

std::vector<int> RepGraph::frontier_vertices() const {
  std::vector<int> r;
  for (int v = 0; v < vertex_count(); ++v)
    if (frontier_[v]) r.push_back(v);
  return r;
}

bool RepGraph::connected() const {
  if (vertex_count() == 0) return false;
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

WeightedGraph RepGraph::underlying_graph() const {
  std::vector<std::string> ids;
  for (const auto& v : vertices_) ids.push_back(v.id);
  std::vector<std::tuple<std::string, std::string, std::string, int>> edges;
  for (const auto& e : edges_)
    edges.emplace_back(e.id, vertices_[e.src].id, vertices_[e.dst].id, 1);
  return WeightedGraph::make(ids, edges);
}

ValidationReport validate(const RepGraph& f) {
  ValidationReport report;
  const WeightedGraph& e = f.base();
  auto issue = [&](const std::string& axiom, const std::string& vertex, const std::string& detail) {
    report.ok = false;
    report.issues.push_back({axiom, vertex, detail});
  };

  for (const auto& edge : f.redges()) {
    const auto& st = e.edge(edge.image.edge);
    if (f.vertex(edge.src).image != st.src || f.vertex(edge.dst).image != st.dst)
      issue("hom", edge.id,
            "image " + tagged_edge_to_string(e, edge.image) + " does not match endpoint images");
  }
  if (!report.ok) return report;  // axioms presuppose the homomorphism

  for (int v = 0; v < f.vertex_count(); ++v) {
    const std::string& vid = f.vertex(v).id;
    int w = e.vertex_weight(f.vertex(v).image);
    // Axiom (1): per tag 1..w(phi(v)), precisely one outgoing edge
    std::vector<int> by_tag(static_cast<std::size_t>(w) + 1, 0);
    for (int fe : f.out_edges(v)) ++by_tag[f.redge(fe).image.tag];
    for (int tag = 1; tag <= w; ++tag) {
      if (by_tag[tag] > 1)
        issue("axiom1", vid, "tag " + std::to_string(tag) + " emitted " +
                                 std::to_string(by_tag[tag]) + " times");
      else if (by_tag[tag] == 0 && !f.is_frontier(v))
        issue("axiom1", vid, "tag " + std::to_string(tag) + " not emitted");
    }
    // Axiom (2): per structure edge arriving at phi(v), precisely one incoming edge
    std::map<int, int> by_structure;
    for (int fe : f.in_edges(v)) ++by_structure[f.redge(fe).image.edge];
    for (int ee : e.in_edges(f.vertex(v).image)) {
      int count = by_structure.count(ee) ? by_structure[ee] : 0;
      if (count > 1)
        issue("axiom2", vid, "structure edge '" + e.edge(ee).id + "' received " +
                                 std::to_string(count) + " times");
      else if (count == 0 && !f.is_frontier(v))
        issue("axiom2", vid, "structure edge '" + e.edge(ee).id + "' not received");
    }
  }
  return report;
}

std::optional<int> lift_step(const RepGraph& f, int u, const Letter& l) {
  if (l.dir == Direction::real) {
    for (int fe : f.out_edges(u))
      if (f.redge(fe).image == l.base) return f.redge(fe).dst;
  } else {
    for (int fe : f.in_edges(u))
      if (f.redge(fe).image == l.base) return f.redge(fe).src;
  }
  return std::nullopt;
}

std::optional<int> lift_word(const RepGraph& f, int u, const std::vector<Letter>& word) {
  int at = u;
  for (const auto& l : word) {
    auto next = lift_step(f, at, l);
    if (!next) return std::nullopt;
    at = *next;
  }
  return at;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> bs(block_count);
  for (int v = 0; v < static_cast<int>(block_of.size()); ++v) bs[block_of[v]].push_back(v);
  return bs;
}

namespace {

// Transition tables of the deterministic partial automaton of one graph,
// indexed by the global letter order of the base graph.
struct Automaton {
  std::vector<Letter> letters;
  std::vector<std::vector<int>> next;  // [letter][state] -> state or -1
  std::vector<int> image;              // state -> E-vertex

  explicit Automaton(const RepGraph& f) {
    letters = all_letters(f.base());
    next.assign(letters.size(), std::vector<int>(f.vertex_count(), -1));
    image.resize(f.vertex_count());
    for (int v = 0; v < f.vertex_count(); ++v) image[v] = f.vertex(v).image;
    std::map<TaggedEdge, int> letter_at;
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (letters[i].dir == Direction::real) letter_at[letters[i].base] = static_cast<int>(i);
    for (const auto& e : f.redges()) {
      int li = letter_at.at(e.image);
      next[li][e.src] = e.dst;        // real
      next[li + 1][e.dst] = e.src;    // ghost follows in the letter order
    }
  }
};

std::vector<int> moore_refine(const std::vector<const Automaton*>& parts) {
  int n = 0;
  for (const auto* a : parts) n += static_cast<int>(a->image.size());
  std::size_t letter_count = parts.empty() ? 0 : parts[0]->letters.size();

  auto state_next = [&](int s, std::size_t l) {
    for (const auto* a : parts) {
      int size = static_cast<int>(a->image.size());
      if (s < size) {
        int t = a->next[l][s];
        return t;  // local index; offset applied by caller
      }
      s -= size;
    }
    return -1;
  };
  auto state_offset = [&](int s) {
    int off = 0;
    for (const auto* a : parts) {
      int size = static_cast<int>(a->image.size());
      if (s < size) return off;
      s -= size;
      off += size;
    }
    return off;
  };

  // seed: (image vertex, defined letter set)
  std::vector<int> block(n);
  {
    std::map<std::vector<int>, int> ids;
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      int local = s, img = -1;
      for (const auto* a : parts) {
        int size = static_cast<int>(a->image.size());
        if (local < size) {
          img = a->image[local];
          break;
        }
        local -= size;
      }
      sig.push_back(img);
      for (std::size_t l = 0; l < letter_count; ++l)
        if (state_next(s, l) >= 0) sig.push_back(static_cast<int>(l));
      auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
      block[s] = it->second;
    }
  }

  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next_block(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig{block[s]};
      for (std::size_t l = 0; l < letter_count; ++l) {
        int t = state_next(s, l);
        if (t >= 0) sig.push_back(block[t + state_offset(s)]);
      }
      auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
      next_block[s] = it->second;
    }
    if (next_block == block) break;
    block = std::move(next_block);
  }

  // renumber by first occurrence
  std::vector<int> remap(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (remap[block[s]] == -1) remap[block[s]] = count++;
    block[s] = remap[block[s]];
  }
  return block;
}

void require_same_base(const RepGraph& f, const RepGraph& g) {
  const auto& a = f.base();
  const auto& b = g.base();
  bool same = a.vertex_ids() == b.vertex_ids() && a.edge_count() == b.edge_count();
  for (int i = 0; same && i < a.edge_count(); ++i)
    same = a.edge(i).id == b.edge(i).id && a.edge(i).src == b.edge(i).src &&
           a.edge(i).dst == b.edge(i).dst && a.edge(i).weight == b.edge(i).weight;
  if (!same) throw Error("BaseMismatch", "representation graphs have different base graphs");
}

}  // namespace

Partition similarity_partition(const RepGraph& f) {
  Automaton a(f);
  Partition p;
  p.block_of = moore_refine({&a});
  p.block_count = p.block_of.empty() ? 0 : *std::max_element(p.block_of.begin(), p.block_of.end()) + 1;
  return p;
}

bool is_irreducible(const RepGraph& f) {
  if (!f.connected()) return false;
  Partition p = similarity_partition(f);
  std::vector<int> core_members(p.block_count, 0);
  for (int v = 0; v < f.vertex_count(); ++v) {
    if (f.is_frontier(v)) continue;
    if (++core_members[p.block_of[v]] > 1) return false;
  }
  return true;
}

RepGraph quotient(const RepGraph& f, const Partition& p) {
  if (static_cast<int>(p.block_of.size()) != f.vertex_count())
    throw Error("NotAdmissible", "partition does not cover the vertex set");

  Partition sim = similarity_partition(f);
  auto blocks = p.blocks();
  for (const auto& block : blocks) {
    for (std::size_t i = 1; i < block.size(); ++i)
      if (sim.block_of[block[i]] != sim.block_of[block[0]])
        throw Error("NotAdmissible", "not finer than ~: vertices '" + f.vertex(block[0]).id +
                                         "' and '" + f.vertex(block[i]).id +
                                         "' have different languages");
  }
  // one-step congruence; definedness already agrees within a ~-class
  std::vector<Letter> letters = all_letters(f.base());
  for (const auto& block : blocks) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      for (const auto& l : letters) {
        auto a = lift_step(f, block[0], l);
        auto b = lift_step(f, block[i], l);
        if (a.has_value() != b.has_value())
          throw Error("NotAdmissible", "one-step congruence fails at ('" +
                                           f.vertex(block[0]).id + "', '" + f.vertex(block[i]).id +
                                           "') on letter " + letter_to_string(f.base(), l));
        if (a && p.block_of[*a] != p.block_of[*b])
          throw Error("NotAdmissible",
                      "one-step congruence fails at ('" + f.vertex(block[0]).id + "', '" +
                          f.vertex(block[i]).id + "') on letter " + letter_to_string(f.base(), l) +
                          ": targets '" + f.vertex(*a).id + "' and '" + f.vertex(*b).id +
                          "' are not identified");
      }
    }
  }

  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::string> frontier_ids;
  for (const auto& block : blocks) {
    const auto& rep = f.vertex(block[0]);
    vertices.emplace_back(rep.id, f.base().vertex_id(rep.image));
    for (int v : block)
      if (f.is_frontier(v)) {
        frontier_ids.push_back(rep.id);
        break;
      }
  }
  // edge classes: (source block, image); representative from the minimal source id
  std::map<std::pair<int, TaggedEdge>, int> chosen;
  for (int fe = 0; fe < f.edge_count(); ++fe) {
    const auto& edge = f.redge(fe);
    auto key = std::make_pair(p.block_of[edge.src], edge.image);
    auto it = chosen.find(key);
    if (it == chosen.end() || f.redge(it->second).src > edge.src) chosen[key] = fe;
  }
  std::vector<int> reps;
  for (const auto& [key, fe] : chosen) reps.push_back(fe);
  std::sort(reps.begin(), reps.end());
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  for (int fe : reps) {
    const auto& edge = f.redge(fe);
    edges.emplace_back(edge.id, f.vertex(blocks[p.block_of[edge.src]][0]).id,
                       f.vertex(blocks[p.block_of[edge.dst]][0]).id,
                       f.base().edge(edge.image.edge).id, edge.image.tag);
  }
  return RepGraph::make(f.base(), vertices, edges, frontier_ids);
}

RepGraph minimize(const RepGraph& f) {
  if (!f.connected()) throw Error("DisconnectedGraph", "minimize needs a connected graph");
  return quotient(f, similarity_partition(f));
}

std::optional<Morphism> find_morphism(const RepGraph& f, const RepGraph& g) {
  require_same_base(f, g);
  if (f.vertex_count() == 0 || g.vertex_count() == 0) return std::nullopt;

  Automaton fa(f), ga(g);
  std::vector<int> joint = moore_refine({&fa, &ga});
  int root = 0;
  std::vector<Letter> letters = all_letters(f.base());

  for (int cand = 0; cand < g.vertex_count(); ++cand) {
    if (joint[f.vertex_count() + cand] != joint[root]) continue;
    std::vector<int> alpha(f.vertex_count(), -1);
    alpha[root] = cand;
    std::deque<int> queue{root};
    bool failed = false;
    while (!queue.empty() && !failed) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& l : letters) {
        auto fx = lift_step(f, x, l);
        if (!fx) continue;
        auto gy = lift_step(g, alpha[x], l);
        if (!gy) {
          failed = true;
          break;
        }
        if (alpha[*fx] == -1) {
          alpha[*fx] = *gy;
          queue.push_back(*fx);
        } else if (alpha[*fx] != *gy) {
          failed = true;
          break;
        }
      }
    }
    if (failed) continue;
    if (std::find(alpha.begin(), alpha.end(), -1) != alpha.end()) continue;  // F not connected

    Morphism m;
    m.vertex_map = alpha;
    m.edge_map.assign(f.edge_count(), -1);
    bool edges_ok = true;
    for (int fe = 0; fe < f.edge_count() && edges_ok; ++fe) {
      const auto& edge = f.redge(fe);
      edges_ok = false;
      for (int ge : g.out_edges(alpha[edge.src])) {
        if (g.redge(ge).image == edge.image) {
          if (g.redge(ge).dst != alpha[edge.dst]) break;
          m.edge_map[fe] = ge;
          edges_ok = true;
          break;
        }
      }
    }
    if (!edges_ok) continue;
    // Any morphism of representation graphs is a covering; verify.
    GraphHom hom{m.vertex_map, m.edge_map};
    if (!is_covering(f.underlying_graph(), g.underlying_graph(), hom))
      throw Error("InternalError", "constructed morphism is not a covering");
    return m;
  }
  return std::nullopt;
}

bool is_quotient_of(const RepGraph& f, const RepGraph& g) {
  return find_morphism(f, g).has_value();
}

bool are_equivalent(const RepGraph& f, const RepGraph& g) {
  require_same_base(f, g);
  Automaton fa(f), ga(g);
  std::vector<int> joint = moore_refine({&fa, &ga});
  for (int u = 0; u < f.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v)
      if (joint[u] == joint[f.vertex_count() + v]) return true;
  return false;
}

bool is_isomorphic(const RepGraph& f, const RepGraph& g) {
  if (f.vertex_count() != g.vertex_count() || f.edge_count() != g.edge_count()) return false;
  return find_morphism(f, g).has_value();  // a covering between equal-size graphs is bijective
}

UniversalRep universal_representation(const RepGraph& f, int u, int depth) {
  if (!f.connected()) throw Error("DisconnectedGraph", "universal representation needs a connected graph");
  if (depth < 0) throw Error("BadDepth", "negative depth");
  const WeightedGraph& e = f.base();
  std::vector<Letter> letters = all_letters(e);

  struct Node {
    PathWord word;  // over the base graph, starting at phi(u)
    int end;        // endpoint of the unique lift from u
  };
  std::vector<Node> nodes;
  nodes.push_back({PathWord{f.vertex(u).image, {}}, u});
  std::vector<std::tuple<int, int, Letter>> tree_edges;
  std::size_t level_begin = 0, level_end = 1;
  for (int d = 0; d < depth; ++d) {
    std::size_t next_begin = nodes.size();
    for (std::size_t n = level_begin; n < level_end; ++n) {
      for (const auto& l : letters) {
        if (!nodes[n].word.letters.empty()) {
          const Letter& last = nodes[n].word.letters.back();
          if (last.base == l.base && last.dir != l.dir) continue;
        }
        auto target = lift_step(f, nodes[n].end, l);
        if (!target) continue;
        PathWord w = nodes[n].word;
        w.letters.push_back(l);
        nodes.push_back({std::move(w), *target});
        tree_edges.emplace_back(static_cast<int>(n), static_cast<int>(nodes.size() - 1), l);
      }
    }
    level_begin = next_begin;
    level_end = nodes.size();
  }

  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::string> ids;
  for (const auto& n : nodes) {
    ids.push_back(word_to_string(e, n.word));
    int image = n.word.letters.empty() ? n.word.source : path_target(e, n.word);
    vertices.emplace_back(ids.back(), e.vertex_id(image));
  }
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  for (const auto& [parent, child, l] : tree_edges) {
    int src = l.dir == Direction::real ? parent : child;
    int dst = l.dir == Direction::real ? child : parent;
    edges.emplace_back("(" + ids[child] + ")", ids[src], ids[dst], e.edge(l.base.edge).id,
                       l.base.tag);
  }
  std::vector<std::string> frontier_ids;
  std::vector<int> frontier;
  for (std::size_t i = level_begin; i < level_end; ++i) {
    frontier.push_back(static_cast<int>(i));
    frontier_ids.push_back(ids[i]);
  }

  UniversalRep out;
  out.graph = RepGraph::make(e, vertices, edges, frontier_ids);
  out.root = 0;
  out.frontier = std::move(frontier);
  for (const auto& n : nodes) out.words.push_back(n.word);
  return out;
}

}  // namespace wlpa
