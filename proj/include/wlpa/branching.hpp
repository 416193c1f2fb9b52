#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wlpa/algebra.hpp"
#include "wlpa/rep_graph.hpp"

namespace wlpa {

// Half-open interval [lo, hi) with exact rational endpoints.
struct Interval {
  Rational lo, hi;
};

// Normalized finite union of half-open intervals: sorted, disjoint, merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet of(std::vector<Interval> parts);  // normalizes

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;
  Rational measure() const;
  bool operator==(const IntervalSet& o) const;
  // Disjoint union of many sets; reports an overlap witness point on failure.
  static bool disjoint_union(const std::vector<const IntervalSet*>& sets, IntervalSet& out,
                             std::string& overlap_witness);

 private:
  std::vector<Interval> parts_;
};

// Increasing affine bijection x -> scale * x + offset between interval sets.
struct AffineMap {
  Rational scale{1};
  Rational offset{0};

  Rational apply(const Rational& x) const { return scale * x + offset; }
  Rational apply_inverse(const Rational& y) const { return (y - offset) / scale; }
};

// Carrier point: an id of a finite carrier or an exact rational of an interval
// carrier.
using BPoint = std::variant<int, Rational>;

// Branching system of a weighted graph: a carrier partitioned by vertices,
// re-partitioned by range and domain sets per tagged edge, with bijections
// g_{e_i}: R_{e_i} -> D_{e_i}.
struct BranchingSystem {
  WeightedGraph base;
  bool interval_carrier = false;

  // finite carrier
  std::vector<std::string> points;
  std::vector<std::vector<int>> d_vertex_pts;            // per base vertex
  std::map<TaggedEdge, std::vector<int>> range_pts;      // R_{e_i}
  std::map<TaggedEdge, std::vector<int>> domain_pts;     // D_{e_i}
  std::map<TaggedEdge, std::map<int, int>> g_points;     // per tagged edge

  // interval carrier
  std::vector<IntervalSet> d_vertex_ivals;
  std::map<TaggedEdge, IntervalSet> range_ivals, domain_ivals;
  std::map<TaggedEdge, AffineMap> g_affine;

  int point_index(const std::string& id) const;
  bool in_carrier(const BPoint& x) const;
};

struct BranchingReport {
  bool ok = true;
  std::vector<std::string> issues;  // axiom, vertex/edge, witness
};

// All three partition axioms and the bijectivity of every g, checked exactly.
BranchingReport validate_branching(const BranchingSystem& x);

// The interval system: D_{v^i} = [i-1, i), R-slices by the slot families
// X^i_j = { e in s^-1(v^i) | w(e) >= j }, D-slices by tags at the range
// vertex, g the unique increasing affine bijection. Throws EmptyGraph.
// `vertex_order` permutes the vertex slices and `slot_orders` the edges
// within a slot family (keyed by source vertex and slot); empty means stored
// order.
BranchingSystem interval_branching(const WeightedGraph& e,
                                   const std::vector<int>& vertex_order = {},
                                   const std::map<std::pair<int, int>, std::vector<int>>&
                                       slot_orders = {});

// Finitely supported function on the carrier.
struct SupportedFunction {
  Field field;
  std::map<BPoint, Scalar> support;

  static SupportedFunction zero(const Field& f) { return {f, {}}; }
  static SupportedFunction delta(const Field& f, const BPoint& x) {
    SupportedFunction s{f, {}};
    s.support.emplace(x, Scalar::one(f));
    return s;
  }
  void add(const BPoint& x, const Scalar& c);
  bool operator==(const SupportedFunction& o) const {
    return field == o.field && support == o.support;
  }
};

// delta_x . e_i = delta_{g(x)} on R_{e_i}; delta_x . e_i^* = delta_{g^-1(x)} on
// D_{e_i}; delta_x . v = delta_x on D_v; extended bilinearly.
SupportedFunction branching_act(const SupportedFunction& x, const AlgebraElement& a,
                                const BranchingSystem& sys);

// Carrier F^0 with D_v the image fibers, R/D the emitting/receiving sets per
// tagged edge, g following the unique edge.
BranchingSystem branching_from_rep_graph(const RepGraph& f);

// Per-generator action on a K-basis; -1 encodes zero.
struct ActionTable {
  WeightedGraph base;
  Field field;
  std::vector<std::string> basis;
  std::vector<std::map<std::string, int>> rows;  // generator name -> basis index or -1

  int basis_index(const std::string& id) const;
  int entry(int b, const std::string& gen) const;  // -1 when absent
};

// Reads the action table of V_F off a complete representation graph.
ActionTable action_table(const RepGraph& f, const Field& field);

struct ReconstructResult {
  bool ok = false;
  RepGraph graph;
  std::string rejection;  // VPropertyViolation | AssumptionIVViolation | RelationViolation | ValidateFailed
  std::string detail;
};

// The basis-to-graph reconstruction: derives the v-property, checks the
// vanishing assumption (skipped in characteristic 0 unless `lenient`), checks
// the defining relations on the basis, then emits and validates the graph.
ReconstructResult reconstruct_rep_graph(const ActionTable& table, bool lenient = false);

// Relation sampling for branching systems: interval carriers are sampled on
// each piece's midpoint plus 16 seeded rationals per piece, finite carriers on
// every point.
struct BranchingRelationReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> violations;
};
BranchingRelationReport check_branching_relations(const BranchingSystem& sys, const Field& field,
                                                  std::uint64_t seed);

// The exceptional-characteristic fixture: one vertex, two loops of weight 2,
// the F_2 action with 1.e_2 = 1.f_1^* = 0; confirms the eight displayed
// relation sums, the AssumptionIV rejection, and the failure over rationals.
struct Char2Report {
  std::vector<std::pair<std::string, std::uint64_t>> sums;  // label, value in F_2
  bool sums_match = false;
  std::string f2_rejection;        // expected AssumptionIVViolation
  std::string f2_witness;
  std::string rational_rejection;  // expected RelationViolation
  bool ok = false;
};
Char2Report verify_char2_example();
ActionTable char2_action_table(const Field& field);

}  // namespace wlpa
