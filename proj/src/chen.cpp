#include "wlpa/chen.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace wlpa {

namespace {

void require_weight_one(const WeightedGraph& e) {
  if (!e.all_weights_one())
    throw Error("NotWeightOne", "this construction needs a weight-one graph");
}

void require_path(const WeightedGraph& e, const std::vector<int>& edges) {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (e.edge(edges[i]).dst != e.edge(edges[i + 1]).src)
      throw Error("NotComposable", "edge list is not a composable path");
}

std::string edges_to_string(const WeightedGraph& e, const std::vector<int>& edges) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ".";
    s += e.edge(edges[i]).id;
  }
  return s;
}

}  // namespace

std::vector<int> primitive_root(const std::vector<int>& word) {
  // failure function; smallest period divides the length iff the word is a power
  std::size_t n = word.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i];
    while (k && word[i] != word[k]) k = fail[k];
    fail[i + 1] = word[i] == word[k] ? k + 1 : 0;
  }
  std::size_t period = n - fail[n];
  if (period < n && n % period == 0)
    return std::vector<int>(word.begin(), word.begin() + static_cast<long>(period));
  return word;
}

bool is_primitive(const std::vector<int>& word) { return primitive_root(word) == word; }

EvPeriodicPath make_ev_path(const WeightedGraph& e, std::vector<int> prefix,
                            std::vector<int> cycle) {
  require_weight_one(e);
  if (cycle.empty()) throw Error("EmptyCycle", "cycle must be nontrivial");
  require_path(e, prefix);
  require_path(e, cycle);
  if (e.edge(cycle.back()).dst != e.edge(cycle.front()).src)
    throw Error("NotClosed", "cycle is not closed");
  if (!prefix.empty() && e.edge(prefix.back()).dst != e.edge(cycle.front()).src)
    throw Error("NotComposable", "prefix does not end where the cycle starts");

  cycle = primitive_root(cycle);
  // shortest prefix: absorb while its last edge repeats the cycle's last edge
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  return {std::move(prefix), std::move(cycle)};
}

int ev_path_source(const WeightedGraph& e, const EvPeriodicPath& p) {
  return p.prefix.empty() ? e.edge(p.cycle.front()).src : e.edge(p.prefix.front()).src;
}

std::string ev_path_to_string(const WeightedGraph& e, const EvPeriodicPath& p) {
  return "(" + edges_to_string(e, p.prefix) + ", " + edges_to_string(e, p.cycle) + ")";
}

bool tail_equivalent(const WeightedGraph& e, const EvPeriodicPath& p, const EvPeriodicPath& q) {
  (void)e;
  if (p.cycle.size() != q.cycle.size()) return false;
  std::vector<int> doubled = p.cycle;
  doubled.insert(doubled.end(), p.cycle.begin(), p.cycle.end());
  return std::search(doubled.begin(), doubled.end(), q.cycle.begin(), q.cycle.end()) !=
         doubled.end();
}

void ChenVector::add(const EvPeriodicPath& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = support.find(p);
  if (it == support.end()) {
    support.emplace(p, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) support.erase(it);
  }
}

void SinkVector::add(const SinkPath& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = support.find(p);
  if (it == support.end()) {
    support.emplace(p, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) support.erase(it);
  }
}

namespace {

std::optional<EvPeriodicPath> ev_step(const WeightedGraph& e, const EvPeriodicPath& p,
                                      const Letter& l) {
  int edge = l.base.edge;
  if (l.dir == Direction::real) {
    int first = p.prefix.empty() ? p.cycle.front() : p.prefix.front();
    if (first != edge) return std::nullopt;
    EvPeriodicPath t = p;
    if (!t.prefix.empty()) {
      t.prefix.erase(t.prefix.begin());
    } else {
      std::rotate(t.cycle.begin(), t.cycle.begin() + 1, t.cycle.end());
    }
    return make_ev_path(e, t.prefix, t.cycle);
  }
  if (e.edge(edge).dst != ev_path_source(e, p)) return std::nullopt;
  EvPeriodicPath t = p;
  t.prefix.insert(t.prefix.begin(), edge);
  return make_ev_path(e, t.prefix, t.cycle);
}

std::optional<EvPeriodicPath> ev_walk(const WeightedGraph& e, EvPeriodicPath p,
                                      const Monomial& m) {
  if (m.source != ev_path_source(e, p)) return std::nullopt;
  for (const auto& l : m.letters) {
    auto next = ev_step(e, p, l);
    if (!next) return std::nullopt;
    p = *next;
  }
  return p;
}

std::optional<SinkPath> sink_step(const WeightedGraph& e, int sink, const SinkPath& p,
                                  const Letter& l) {
  int edge = l.base.edge;
  int source = p.edges.empty() ? sink : e.edge(p.edges.front()).src;
  if (l.dir == Direction::real) {
    if (p.edges.empty() || p.edges.front() != edge) return std::nullopt;
    SinkPath t = p;
    t.edges.erase(t.edges.begin());
    return t;
  }
  if (e.edge(edge).dst != source) return std::nullopt;
  SinkPath t = p;
  t.edges.insert(t.edges.begin(), edge);
  return t;
}

std::optional<SinkPath> sink_walk(const WeightedGraph& e, int sink, SinkPath p,
                                  const Monomial& m) {
  int source = p.edges.empty() ? sink : e.edge(p.edges.front()).src;
  if (m.source != source) return std::nullopt;
  for (const auto& l : m.letters) {
    auto next = sink_step(e, sink, p, l);
    if (!next) return std::nullopt;
    p = *next;
  }
  return p;
}

}  // namespace

ChenVector chen_act(const WeightedGraph& e, const ChenVector& x, const AlgebraElement& a) {
  require_weight_one(e);
  if (x.field != a.field) throw Error("FieldMismatch", "vector and element over different fields");
  ChenVector r = ChenVector::zero(x.field);
  for (const auto& [p, cp] : x.support)
    for (const auto& [m, cm] : a.terms)
      if (auto q = ev_walk(e, p, m)) r.add(*q, cp * cm);
  return r;
}

SinkVector sink_act(const WeightedGraph& e, int sink, const SinkVector& x,
                    const AlgebraElement& a) {
  require_weight_one(e);
  if (x.field != a.field) throw Error("FieldMismatch", "vector and element over different fields");
  SinkVector r = SinkVector::zero(x.field);
  for (const auto& [p, cp] : x.support)
    for (const auto& [m, cm] : a.terms)
      if (auto q = sink_walk(e, sink, p, m)) r.add(*q, cp * cm);
  return r;
}

namespace {

// Truncated trees of nontrivial paths arriving at `target`, excluding paths
// whose last edge equals `excluded` (pass -1 for no exclusion).
std::vector<std::vector<int>> arriving_paths(const WeightedGraph& e, int target, int excluded,
                                             int depth) {
  std::vector<std::vector<int>> out;
  if (depth < 1) return out;
  std::size_t level_begin = 0;
  for (int ee : e.in_edges(target))
    if (ee != excluded) out.push_back({ee});
  std::size_t level_end = out.size();
  for (int d = 1; d < depth; ++d) {
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int ee : e.in_edges(e.edge(out[i].front()).src)) {
        std::vector<int> longer{ee};
        longer.insert(longer.end(), out[i].begin(), out[i].end());
        out.push_back(std::move(longer));
      }
    level_begin = level_end;
    level_end = out.size();
  }
  return out;
}

bool extendable(const WeightedGraph& e, int start_vertex) {
  return !e.in_edges(start_vertex).empty();
}

}  // namespace

ChenRational rational_rep_graph(const WeightedGraph& e, const std::vector<int>& cycle,
                                int depth) {
  require_weight_one(e);
  if (cycle.empty()) throw Error("EmptyCycle", "cycle must be nontrivial");
  require_path(e, cycle);
  if (e.edge(cycle.back()).dst != e.edge(cycle.front()).src)
    throw Error("NotClosed", "cycle is not closed");
  if (!is_primitive(cycle))
    throw Error("NotSimpleCycle", "cycle is a power of a shorter closed path");
  if (depth < 0) throw Error("BadDepth", "negative depth");

  int n = static_cast<int>(cycle.size());
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  std::vector<std::string> frontier;
  std::map<int, EvPeriodicPath> gamma;

  auto spine_id = [&](int i) { return "v_" + std::to_string(i + 1); };
  auto side_id = [&](int i, const std::vector<int>& q) {
    return spine_id(i) + "," + edges_to_string(e, q);
  };

  for (int i = 0; i < n; ++i) {
    vertices.emplace_back(spine_id(i), e.vertex_id(e.edge(cycle[i]).src));
    std::vector<int> rotated(cycle.begin() + i, cycle.end());
    rotated.insert(rotated.end(), cycle.begin(), cycle.begin() + i);
    gamma.emplace(static_cast<int>(vertices.size()) - 1, EvPeriodicPath{{}, rotated});
  }
  for (int i = 0; i < n; ++i)
    edges.emplace_back("f_" + std::to_string(i + 1), spine_id(i), spine_id((i + 1) % n),
                       e.edge(cycle[i]).id, 1);

  for (int i = 0; i < n; ++i) {
    int excluded = cycle[(i + n - 1) % n];
    auto paths = arriving_paths(e, e.edge(cycle[i]).src, excluded, depth);
    if (depth == 0 && static_cast<int>(e.in_edges(e.edge(cycle[i]).src).size()) > 1)
      frontier.push_back(spine_id(i));
    std::vector<int> rotated(cycle.begin() + i, cycle.end());
    rotated.insert(rotated.end(), cycle.begin(), cycle.begin() + i);
    for (const auto& q : paths) {
      vertices.emplace_back(side_id(i, q), e.vertex_id(e.edge(q.front()).src));
      gamma.emplace(static_cast<int>(vertices.size()) - 1, make_ev_path(e, q, rotated));
      std::string target =
          q.size() >= 2 ? side_id(i, std::vector<int>(q.begin() + 1, q.end())) : spine_id(i);
      edges.emplace_back("f_" + side_id(i, q).substr(2), side_id(i, q), target,
                         e.edge(q.front()).id, 1);
      if (static_cast<int>(q.size()) == depth && extendable(e, e.edge(q.front()).src))
        frontier.push_back(side_id(i, q));
    }
  }

  ChenRational out;
  out.graph = RepGraph::make(e, vertices, edges, frontier);
  out.gamma = std::move(gamma);
  return out;
}

ChenSink sink_rep_graph(const WeightedGraph& e, int sink, int depth) {
  require_weight_one(e);
  if (!e.is_sink(sink))
    throw Error("NotASink", "vertex '" + e.vertex_id(sink) + "' emits edges");
  if (depth < 0) throw Error("BadDepth", "negative depth");

  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  std::vector<std::string> frontier;
  std::map<int, SinkPath> alpha;

  auto side_id = [&](const std::vector<int>& q) { return "v_" + edges_to_string(e, q); };
  vertices.emplace_back("v", e.vertex_id(sink));
  alpha.emplace(0, SinkPath{});
  if (depth == 0 && extendable(e, sink)) frontier.push_back("v");

  for (const auto& q : arriving_paths(e, sink, -1, depth)) {
    vertices.emplace_back(side_id(q), e.vertex_id(e.edge(q.front()).src));
    alpha.emplace(static_cast<int>(vertices.size()) - 1, SinkPath{q});
    std::string target = q.size() >= 2 ? side_id(std::vector<int>(q.begin() + 1, q.end())) : "v";
    edges.emplace_back("f_" + edges_to_string(e, q), side_id(q), target, e.edge(q.front()).id, 1);
    if (static_cast<int>(q.size()) == depth && extendable(e, e.edge(q.front()).src))
      frontier.push_back(side_id(q));
  }

  ChenSink out;
  out.graph = RepGraph::make(e, vertices, edges, frontier);
  out.alpha = std::move(alpha);
  return out;
}

RepGraph irrational_rep_graph(const WeightedGraph& e, const std::vector<int>& prefix_edges,
                              int depth, int start) {
  require_weight_one(e);
  require_path(e, prefix_edges);
  if (depth < 0) throw Error("BadDepth", "negative depth");
  int m = static_cast<int>(prefix_edges.size());
  if (m == 0) {
    if (start < 0) throw Error("MissingStart", "empty prefix needs an explicit start vertex");
    return RepGraph::make(e, {{"v_1", e.vertex_id(start)}}, {}, {"v_1"});
  }

  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> edges;
  std::vector<std::string> frontier;
  auto spine_id = [&](int i) { return "v_" + std::to_string(i + 1); };
  auto side_id = [&](int i, const std::vector<int>& q) {
    return spine_id(i) + "," + edges_to_string(e, q);
  };

  for (int i = 0; i < m; ++i)
    vertices.emplace_back(spine_id(i), e.vertex_id(e.edge(prefix_edges[i]).src));
  vertices.emplace_back(spine_id(m), e.vertex_id(e.edge(prefix_edges[m - 1]).dst));
  for (int i = 0; i < m; ++i)
    edges.emplace_back("f_" + std::to_string(i + 1), spine_id(i), spine_id(i + 1),
                       e.edge(prefix_edges[i]).id, 1);
  frontier.push_back(spine_id(m));  // the infinite tail is unknown

  for (int i = 0; i <= m; ++i) {
    int at = i < m ? e.edge(prefix_edges[i]).src : e.edge(prefix_edges[m - 1]).dst;
    int excluded = i >= 1 ? prefix_edges[i - 1] : -1;
    auto paths = arriving_paths(e, at, excluded, depth);
    if (depth == 0 && i < m) {
      bool has_candidate = false;
      for (int ee : e.in_edges(at))
        if (ee != excluded) has_candidate = true;
      if (has_candidate) frontier.push_back(spine_id(i));
    }
    for (const auto& q : paths) {
      vertices.emplace_back(side_id(i, q), e.vertex_id(e.edge(q.front()).src));
      std::string target =
          q.size() >= 2 ? side_id(i, std::vector<int>(q.begin() + 1, q.end())) : spine_id(i);
      edges.emplace_back("f_" + side_id(i, q).substr(2), side_id(i, q), target,
                         e.edge(q.front()).id, 1);
      if (static_cast<int>(q.size()) == depth && extendable(e, e.edge(q.front()).src))
        frontier.push_back(side_id(i, q));
    }
  }
  return RepGraph::make(e, vertices, edges, frontier);
}

AgreementReport ev_agreement_mismatches(const RepGraph& f,
                                        const std::map<int, EvPeriodicPath>& gamma, int budget) {
  AgreementReport report;
  const WeightedGraph& e = f.base();
  std::vector<Letter> letters = all_letters(e);

  // depth-first over words, pruned at the frontier
  struct Frame {
    int gv;
    EvPeriodicPath cp;
    int remaining;
  };
  std::deque<Frame> stack;
  for (int v = 0; v < f.vertex_count(); ++v) {
    if (f.is_frontier(v)) continue;
    stack.push_back({v, gamma.at(v), budget});
  }
  while (!stack.empty()) {
    Frame fr = stack.front();
    stack.pop_front();
    if (fr.remaining == 0 || f.is_frontier(fr.gv)) continue;
    for (const auto& l : letters) {
      ++report.words_checked;
      auto gv = lift_step(f, fr.gv, l);
      auto cp = ev_step(e, fr.cp, l);
      if (gv.has_value() != cp.has_value()) {
        ++report.mismatches;
        report.details.push_back("definedness differs at '" + f.vertex(fr.gv).id + "' on " +
                                 letter_to_string(e, l));
        continue;
      }
      if (!gv) continue;
      if (!(gamma.at(*gv) == *cp)) {
        ++report.mismatches;
        report.details.push_back("dictionary mismatch at '" + f.vertex(*gv).id + "': expected " +
                                 ev_path_to_string(e, *cp));
        continue;
      }
      stack.push_back({*gv, *cp, fr.remaining - 1});
    }
  }
  return report;
}

AgreementReport chen_agreement_oracle(const WeightedGraph& e, const std::vector<int>& cycle,
                                      int depth, int budget) {
  ChenRational r = rational_rep_graph(e, cycle, depth);
  return ev_agreement_mismatches(r.graph, r.gamma, budget);
}

AgreementReport sink_agreement_mismatches(const RepGraph& f, int sink,
                                          const std::map<int, SinkPath>& alpha, int budget) {
  AgreementReport report;
  const WeightedGraph& e = f.base();
  std::vector<Letter> letters = all_letters(e);
  struct Frame {
    int gv;
    SinkPath cp;
    int remaining;
  };
  std::deque<Frame> stack;
  for (int v = 0; v < f.vertex_count(); ++v) {
    if (f.is_frontier(v)) continue;
    stack.push_back({v, alpha.at(v), budget});
  }
  while (!stack.empty()) {
    Frame fr = stack.front();
    stack.pop_front();
    if (fr.remaining == 0 || f.is_frontier(fr.gv)) continue;
    for (const auto& l : letters) {
      ++report.words_checked;
      auto gv = lift_step(f, fr.gv, l);
      auto cp = sink_step(e, sink, fr.cp, l);
      if (gv.has_value() != cp.has_value()) {
        ++report.mismatches;
        report.details.push_back("definedness differs at '" + f.vertex(fr.gv).id + "' on " +
                                 letter_to_string(e, l));
        continue;
      }
      if (!gv) continue;
      if (!(alpha.at(*gv) == *cp)) {
        ++report.mismatches;
        report.details.push_back("dictionary mismatch at '" + f.vertex(*gv).id + "'");
        continue;
      }
      stack.push_back({*gv, *cp, fr.remaining - 1});
    }
  }
  return report;
}

AgreementReport sink_agreement_oracle(const WeightedGraph& e, int sink, int depth, int budget) {
  ChenSink s = sink_rep_graph(e, sink, depth);
  return sink_agreement_mismatches(s.graph, sink, s.alpha, budget);
}

}  // namespace wlpa
