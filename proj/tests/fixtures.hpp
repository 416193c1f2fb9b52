#pragma once

// Shared fixture graphs for the test suites: the one-vertex weighted graphs,
// the seven-graph quotient lattice, the L(2,3) truncation, and the weight-one
// Chen graphs. Builders are deterministic; the shipped JSON fixtures are
// generated from these exact builders.

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "wlpa/chen.hpp"
#include "wlpa/rep_graph.hpp"

namespace fixtures {

using namespace wlpa;

// xorshift-style deterministic generator for property tests
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 2654435769u + 1) {}
  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

// one vertex, `loops` loops of weight `weight`; edge ids "e","f","g",...
inline WeightedGraph one_vertex(int loops, int weight) {
  std::vector<std::tuple<std::string, std::string, std::string, int>> edges;
  for (int i = 0; i < loops; ++i)
    edges.emplace_back(std::string(1, static_cast<char>('e' + i)), "v", "v", weight);
  return WeightedGraph::make({"v"}, edges);
}

inline WeightedGraph three_loops() { return one_vertex(3, 1); }   // loops e, f, g
inline WeightedGraph two_loops_w2() { return one_vertex(2, 2); }  // loops e, f
inline WeightedGraph two_loops_w3() { return one_vertex(2, 3); }  // the L(2,3) graph

// two vertices u -> v with parallel edges e, f of weight 2
inline WeightedGraph parallel_pair() {
  return WeightedGraph::make({"u", "v"}, {{"e", "u", "v", 2}, {"f", "u", "v", 2}});
}

// ---- the seven-graph lattice over two loops of weight 2 ------------------
//
// Finite members of one equivalence class: vertices carry a free-group action
// through e[1]-steps (x) and f[2]-steps (y), so quotient arrows are exactly
// the stabilizer containments. F1 = Z/4 x Z/8, F2 = Z/4 x Z/4, F3/F4 =
// 4-cycles with loops, F5/F6 = 2-cycles with loops, F7 = one vertex.

inline RepGraph torus_rep(const std::string& prefix, int nx, int ny) {
  WeightedGraph e = two_loops_w2();
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  auto id = [&](int i, int j) {
    return prefix + std::to_string((i + nx) % nx) + "_" + std::to_string((j + ny) % ny);
  };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) vertices.emplace_back(id(i, j), "v");
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      edges.emplace_back("x_" + id(i, j), id(i, j), id(i + 1, j), "e", 1);
      edges.emplace_back("y_" + id(i, j), id(i, j), id(i, j + 1), "f", 2);
    }
  return RepGraph::make(e, vertices, edges);
}

inline RepGraph F1() { return torus_rep("u", 4, 8); }
inline RepGraph F2() { return torus_rep("t", 4, 4); }

// cycle in one letter, loops in the other
inline RepGraph cycle_rep(const std::string& prefix, int n, bool cycle_is_e) {
  WeightedGraph e = two_loops_w2();
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  auto id = [&](int i) { return prefix + std::to_string((i + n) % n); };
  for (int i = 0; i < n; ++i) vertices.emplace_back(id(i), "v");
  for (int i = 0; i < n; ++i) {
    if (cycle_is_e) {
      edges.emplace_back("x_" + id(i), id(i), id(i + 1), "e", 1);
      edges.emplace_back("y_" + id(i), id(i), id(i), "f", 2);
    } else {
      edges.emplace_back("x_" + id(i), id(i), id(i), "e", 1);
      edges.emplace_back("y_" + id(i), id(i), id(i + 1), "f", 2);
    }
  }
  return RepGraph::make(e, vertices, edges);
}

inline RepGraph F3() { return cycle_rep("a", 4, true); }
inline RepGraph F4() { return cycle_rep("b", 4, false); }
inline RepGraph F5() { return cycle_rep("c", 2, true); }
inline RepGraph F6() { return cycle_rep("d", 2, false); }
inline RepGraph F7() { return cycle_rep("v", 1, true); }

inline std::vector<RepGraph> lattice_fixtures() {
  return {F1(), F2(), F3(), F4(), F5(), F6(), F7()};
}

// ---- the L(2,3) introduction graph, truncated ----------------------------
//
// v_0, v_1, v_2 are special; from the pair (v_3, v_4) on, the pattern is
// v_{2m-1} emitting e[1..3] to v_{3m-2..3m} and v_{2m} emitting f[1..3] to
// v_{3m-1..3m+1}. No finite graph over this base exists (3|V| out-slots vs
// 2|V| in-slots), so the fixture is a truncation with vertices past the core
// marked frontier.
inline RepGraph l23_truncated(int last = 25) {
  WeightedGraph e = two_loops_w3();
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  auto id = [](int i) { return "v_" + std::to_string(i); };
  for (int i = 0; i <= last; ++i) vertices.emplace_back(id(i), "v");
  std::vector<char> cut(static_cast<std::size_t>(last) + 1, 0);
  auto emit = [&](int src, const std::string& st, int tag, int dst) {
    if (dst > last) {
      cut[src] = 1;
      return;
    }
    edges.emplace_back(st + std::to_string(tag) + "@" + id(src), id(src), id(dst), st, tag);
  };
  emit(0, "e", 1, 0);
  emit(0, "f", 2, 0);
  emit(0, "f", 3, 1);
  emit(1, "e", 1, 1);
  emit(1, "e", 2, 2);
  emit(1, "e", 3, 3);
  emit(2, "f", 1, 2);
  emit(2, "f", 2, 3);
  emit(2, "f", 3, 4);
  for (int m = 2; 2 * m - 1 <= last; ++m) {
    int odd = 2 * m - 1, even = 2 * m;
    for (int tag = 1; tag <= 3; ++tag) emit(odd, "e", tag, 3 * m - 3 + tag);
    if (even <= last)
      for (int tag = 1; tag <= 3; ++tag) emit(even, "f", tag, 3 * m - 2 + tag);
  }
  std::vector<std::string> frontier;
  for (int i = 0; i <= last; ++i)
    if (cut[i]) frontier.push_back(id(i));
  return RepGraph::make(e, vertices, edges, frontier);
}

// ---- weight-one graphs of the introduction --------------------------------

// The rational representation graph for the cycle efg over the 3-loop graph,
// with the introduction's vertex names: spine v_1 v_2 v_3, first ring
// v_4..v_9, and a depth-2 leaf ring marked frontier.
inline RepGraph rational_efg_named() {
  WeightedGraph e = three_loops();
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  for (int i = 1; i <= 9; ++i) vertices.emplace_back("v_" + std::to_string(i), "v");
  edges.emplace_back("s_1", "v_1", "v_2", "e", 1);
  edges.emplace_back("s_2", "v_2", "v_3", "f", 1);
  edges.emplace_back("s_3", "v_3", "v_1", "g", 1);
  // ring arrivals per the figure: v_4, v_5 -> v_1 (e, f); v_6, v_7 -> v_2
  // (f, g); v_8, v_9 -> v_3 (g, e)
  const std::vector<std::tuple<std::string, std::string, std::string>> ring = {
      {"v_4", "v_1", "e"}, {"v_5", "v_1", "f"}, {"v_6", "v_2", "f"},
      {"v_7", "v_2", "g"}, {"v_8", "v_3", "g"}, {"v_9", "v_3", "e"}};
  for (const auto& [src, dst, st] : ring)
    edges.emplace_back("r_" + src, src, dst, st, 1);
  std::vector<std::string> frontier;
  for (const auto& [src, dst, st] : ring) {
    (void)dst;
    (void)st;
    for (const std::string leaf_st : {"e", "f", "g"}) {
      std::string leaf = src + leaf_st;
      vertices.emplace_back(leaf, "v");
      edges.emplace_back("l_" + leaf, leaf, src, leaf_st, 1);
      frontier.push_back(leaf);
    }
  }
  return RepGraph::make(e, vertices, edges, frontier);
}

inline std::vector<int> edge_list(const WeightedGraph& e, const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const auto& id : ids) out.push_back(e.edge_index(id));
  return out;
}

// q = ef ef^2 ef^3 ... prefix e,f,e,f,f
inline RepGraph irrational_truncated(const WeightedGraph& e, int depth = 1) {
  return irrational_rep_graph(e, edge_list(e, {"e", "f", "e", "f", "f"}), depth);
}

// the same infinite path cut after ef ef^2 ef^3 ef^4: deep enough that spine
// vertices near the start separate without reaching the frontier
inline RepGraph irrational_deep(const WeightedGraph& e, int depth = 2) {
  return irrational_rep_graph(
      e, edge_list(e, {"e", "f", "e", "f", "f", "e", "f", "f", "f", "e", "f", "f", "f", "f"}),
      depth);
}

// x --a--> u (sink), y --b--> x, y --c--> y (loop)
inline WeightedGraph sink_graph() {
  return WeightedGraph::make({"x", "y", "u"},
                             {{"a", "x", "u", 1}, {"b", "y", "x", 1}, {"c", "y", "y", 1}});
}

// 5x5 grid patch of the infinite Z^2 representation graph; the boundary is
// frontier. Used for gradedness of the infinite grid.
inline RepGraph grid_patch(int n = 5) {
  WeightedGraph e = two_loops_w2();
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  std::vector<std::string> frontier;
  auto id = [](int i, int j) { return "g" + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      vertices.emplace_back(id(i, j), "v");
      if (i == 0 || j == 0 || i == n - 1 || j == n - 1) frontier.push_back(id(i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i + 1 < n) edges.emplace_back("x_" + id(i, j), id(i, j), id(i + 1, j), "e", 1);
      if (j + 1 < n) edges.emplace_back("y_" + id(i, j), id(i, j), id(i, j + 1), "f", 2);
    }
  return RepGraph::make(e, vertices, edges, frontier);
}

// two-vertex base: the double cover F of the folded graph G
inline RepGraph parallel_cover() {
  WeightedGraph e = parallel_pair();
  return RepGraph::make(e,
                        {{"u_1", "u"}, {"u_2", "u"}, {"v_1", "v"}, {"v_2", "v"}},
                        {{"a_1", "u_1", "v_1", "e", 1},
                         {"b_1", "u_1", "v_2", "f", 2},
                         {"a_2", "u_2", "v_2", "e", 1},
                         {"b_2", "u_2", "v_1", "f", 2}});
}

inline RepGraph parallel_folded() {
  WeightedGraph e = parallel_pair();
  return RepGraph::make(e, {{"u", "u"}, {"v", "v"}},
                        {{"a", "u", "v", "e", 1}, {"b", "u", "v", "f", 2}});
}

// Rooted lockstep comparison of two (possibly truncated) representation
// graphs: a bijective pairing extending (root_f, root_g) that agrees on every
// letter transition. Truncation-safe, unlike the covering-verified morphisms.
inline bool rooted_isomorphic(const RepGraph& f, const RepGraph& g, int root_f = 0,
                              int root_g = 0) {
  if (f.vertex_count() != g.vertex_count() || f.edge_count() != g.edge_count()) return false;
  if (f.vertex(root_f).image != g.vertex(root_g).image) return false;
  std::vector<int> pair_fg(f.vertex_count(), -1), pair_gf(g.vertex_count(), -1);
  pair_fg[root_f] = root_g;
  pair_gf[root_g] = root_f;
  std::deque<int> queue{root_f};
  std::vector<Letter> letters = all_letters(f.base());
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    int y = pair_fg[x];
    for (const auto& l : letters) {
      auto fx = lift_step(f, x, l);
      auto gy = lift_step(g, y, l);
      if (fx.has_value() != gy.has_value()) return false;
      if (!fx) continue;
      if (pair_fg[*fx] == -1 && pair_gf[*gy] == -1) {
        pair_fg[*fx] = *gy;
        pair_gf[*gy] = *fx;
        queue.push_back(*fx);
      } else if (pair_fg[*fx] != *gy) {
        return false;
      }
    }
  }
  for (int v = 0; v < f.vertex_count(); ++v)
    if (pair_fg[v] == -1) return false;
  return true;
}

}  // namespace fixtures
