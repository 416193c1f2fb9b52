#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlpa/algebra.hpp"
#include "wlpa/rep_graph.hpp"

namespace wlpa {

// Eventually periodic right-infinite path prefix.cycle.cycle... in a weight-one
// graph, in canonical form: the cycle is primitive and the prefix is shortest
// (its last edge differs from the cycle's last edge). Equal canonical forms
// are exactly equal infinite paths.
struct EvPeriodicPath {
  std::vector<int> prefix;  // edge indices, possibly empty
  std::vector<int> cycle;   // nontrivial closed path

  bool operator==(const EvPeriodicPath& o) const {
    return prefix == o.prefix && cycle == o.cycle;
  }
  bool operator<(const EvPeriodicPath& o) const {
    if (prefix != o.prefix) return prefix < o.prefix;
    return cycle < o.cycle;
  }
};

// Canonicalize (validates composability and closure). Throws NotWeightOne.
EvPeriodicPath make_ev_path(const WeightedGraph& e, std::vector<int> prefix,
                            std::vector<int> cycle);
int ev_path_source(const WeightedGraph& e, const EvPeriodicPath& p);
std::string ev_path_to_string(const WeightedGraph& e, const EvPeriodicPath& p);

// Smallest period prefix of a word (failure-function method).
std::vector<int> primitive_root(const std::vector<int>& word);
bool is_primitive(const std::vector<int>& word);

// True iff the primitive cycles are cyclic rotations of one another.
bool tail_equivalent(const WeightedGraph& e, const EvPeriodicPath& p, const EvPeriodicPath& q);

// Finitely supported vector over a tail-equivalence class.
struct ChenVector {
  Field field;
  std::map<EvPeriodicPath, Scalar> support;

  static ChenVector zero(const Field& f) { return {f, {}}; }
  static ChenVector basis(const Field& f, const EvPeriodicPath& p) {
    ChenVector x{f, {}};
    x.support.emplace(p, Scalar::one(f));
    return x;
  }
  void add(const EvPeriodicPath& p, const Scalar& c);
  bool is_zero() const { return support.empty(); }
  bool operator==(const ChenVector& o) const { return field == o.field && support == o.support; }
};

// Chen action on infinite paths: q.v = q iff v = s(q); q.e = tail iff e is the
// first letter; q.e* = eq iff r(e) = s(q). Results re-canonicalized.
ChenVector chen_act(const WeightedGraph& e, const ChenVector& x, const AlgebraElement& a);

// Finite path into a sink (empty = the sink itself); the sink module action
// uses the same formulas with tau conventions for trivial paths.
struct SinkPath {
  std::vector<int> edges;

  bool operator==(const SinkPath& o) const { return edges == o.edges; }
  bool operator<(const SinkPath& o) const { return edges < o.edges; }
};

struct SinkVector {
  Field field;
  std::map<SinkPath, Scalar> support;

  static SinkVector zero(const Field& f) { return {f, {}}; }
  static SinkVector basis(const Field& f, const SinkPath& p) {
    SinkVector x{f, {}};
    x.support.emplace(p, Scalar::one(f));
    return x;
  }
  bool is_zero() const { return support.empty(); }
  void add(const SinkPath& p, const Scalar& c);
  bool operator==(const SinkVector& o) const { return field == o.field && support == o.support; }
};

SinkVector sink_act(const WeightedGraph& e, int sink, const SinkVector& x,
                    const AlgebraElement& a);

// Rational construction: the cycle spine v_1..v_n plus truncated trees of
// arriving paths, with the dictionary gamma into infinite paths.
struct ChenRational {
  RepGraph graph;
  std::map<int, EvPeriodicPath> gamma;  // vertex -> infinite path
};
ChenRational rational_rep_graph(const WeightedGraph& e, const std::vector<int>& cycle, int depth);

struct ChenSink {
  RepGraph graph;
  std::map<int, SinkPath> alpha;  // vertex -> finite path into the sink
};
ChenSink sink_rep_graph(const WeightedGraph& e, int sink, int depth);

// Irrational construction: a finite prefix of the infinite path defines the
// truncated spine; the infinite tail is unknown, so the spine end is frontier.
// `start` anchors the graph when the prefix is empty.
RepGraph irrational_rep_graph(const WeightedGraph& e, const std::vector<int>& prefix_edges,
                              int depth, int start = -1);

struct AgreementReport {
  int words_checked = 0;
  int mismatches = 0;
  std::vector<std::string> details;
};

// Exhaustive comparison of the graph action against the Chen action under a
// dictionary, over all monomial words of length <= budget that stay clear of
// the frontier.
AgreementReport ev_agreement_mismatches(const RepGraph& f,
                                        const std::map<int, EvPeriodicPath>& gamma, int budget);
AgreementReport chen_agreement_oracle(const WeightedGraph& e, const std::vector<int>& cycle,
                                      int depth, int budget);
AgreementReport sink_agreement_mismatches(const RepGraph& f, int sink,
                                          const std::map<int, SinkPath>& alpha, int budget);
AgreementReport sink_agreement_oracle(const WeightedGraph& e, int sink, int depth, int budget);

}  // namespace wlpa
