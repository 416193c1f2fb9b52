#include <doctest.h>

#include "fixtures.hpp"
#include "wlpa/branching.hpp"

using namespace wlpa;
using namespace fixtures;

namespace {

const Field kQ = Field::rationals();

// weights 1 through 3 mixed, with a sink
WeightedGraph mixed_graph() {
  return WeightedGraph::make(
      {"p", "q", "r"},
      {{"a", "p", "q", 1}, {"b", "q", "p", 3}, {"c", "q", "q", 2}, {"d", "p", "r", 1}});
}

std::vector<WeightedGraph> assorted_graphs() {
  return {three_loops(), two_loops_w2(), two_loops_w3(), parallel_pair(), mixed_graph()};
}

Rational rat(const std::string& s) { return Rational::from_string(s); }

AlgebraElement letter_elem(const WeightedGraph& e, const std::string& edge, int tag,
                           Direction dir) {
  return AlgebraElement::letter(kQ, e, {{e.edge_index(edge), tag}, dir});
}

}  // namespace

TEST_CASE("interval systems satisfy the axioms for assorted graphs") {
  for (const auto& e : assorted_graphs()) {
    BranchingSystem sys = interval_branching(e);
    BranchingReport report = validate_branching(sys);
    std::string first_issue = report.ok ? std::string() : report.issues.front();
    INFO(first_issue);
    CHECK(report.ok);
    // total measure |E^0| in disjoint half-open pieces
    Rational total;
    for (const auto& set : sys.d_vertex_ivals) total = total + set.measure();
    CHECK(total == Rational(e.vertex_count()));
  }
  CHECK_THROWS_AS(interval_branching(WeightedGraph::make({}, {})), Error);
}

TEST_CASE("the two-loop weight-one interval system acts as scaling by two") {
  WeightedGraph e = one_vertex(2, 1);
  BranchingSystem sys = interval_branching(e);
  CHECK(sys.range_ivals.at({0, 1}).parts().front().hi == rat("1/2"));
  CHECK(sys.domain_ivals.at({0, 1}).measure() == Rational(1));

  SupportedFunction quarter = SupportedFunction::delta(kQ, BPoint{rat("1/4")});
  SupportedFunction r = branching_act(quarter, letter_elem(e, "e", 1, Direction::real), sys);
  REQUIRE(r.support.size() == 1);
  CHECK(std::get<Rational>(r.support.begin()->first) == rat("1/2"));

  // the vertex fixes everything in its slice
  SupportedFunction same = branching_act(quarter, AlgebraElement::vertex(kQ, e, 0), sys);
  CHECK(same == quarter);

  // 1/2 lies outside R_{e_1}
  SupportedFunction half = SupportedFunction::delta(kQ, BPoint{rat("1/2")});
  CHECK(branching_act(half, letter_elem(e, "e", 1, Direction::real), sys).support.empty());

  SupportedFunction outside = SupportedFunction::delta(kQ, BPoint{rat("7/2")});
  CHECK_THROWS_AS(branching_act(outside, AlgebraElement::vertex(kQ, e, 0), sys), Error);
}

TEST_CASE("L(2,3) interval slices") {
  WeightedGraph e = two_loops_w3();
  BranchingSystem sys = interval_branching(e);
  // slot 1 splits D_v between the two loops
  CHECK(sys.range_ivals.at({0, 1}).parts().front().lo == Rational(0));
  CHECK(sys.range_ivals.at({0, 1}).parts().front().hi == rat("1/2"));
  CHECK(sys.range_ivals.at({1, 1}).parts().front().lo == rat("1/2"));
  // D-slices are thirds
  CHECK(sys.domain_ivals.at({0, 2}).parts().front().lo == rat("1/3"));
  CHECK(sys.domain_ivals.at({0, 2}).parts().front().hi == rat("2/3"));
}

TEST_CASE("interval systems honor custom vertex and slot orders") {
  WeightedGraph e = mixed_graph();
  std::vector<int> reversed = {2, 1, 0};
  std::map<std::pair<int, int>, std::vector<int>> slots;
  slots[{e.vertex_index("q"), 1}] = {e.edge_index("c"), e.edge_index("b")};
  BranchingSystem sys = interval_branching(e, reversed, slots);
  CHECK(validate_branching(sys).ok);
  // vertex r now owns [0, 1) and the q slot family starts with c
  CHECK(sys.d_vertex_ivals[e.vertex_index("r")].parts().front().lo == Rational(0));
  CHECK(sys.range_ivals.at({e.edge_index("c"), 1}).parts().front().lo ==
        sys.d_vertex_ivals[e.vertex_index("q")].parts().front().lo);
  CHECK(check_branching_relations(sys, kQ, 0).ok);

  CHECK_THROWS_AS(interval_branching(e, {0, 0, 1}, {}), Error);
}

TEST_CASE("an edgeless vertex keeps its slice with no R or D sets") {
  WeightedGraph e = WeightedGraph::make({"v"}, {});
  BranchingSystem sys = interval_branching(e);
  CHECK(validate_branching(sys).ok);
  CHECK(sys.range_ivals.empty());
}

TEST_CASE("finite systems from representation graphs validate") {
  for (const auto& f : lattice_fixtures()) {
    BranchingSystem sys = branching_from_rep_graph(f);
    BranchingReport report = validate_branching(sys);
    std::string first_issue = report.ok ? std::string() : report.issues.front();
    INFO(first_issue);
    CHECK(report.ok);
  }
  BranchingSystem f7 = branching_from_rep_graph(F7());
  CHECK(f7.points == std::vector<std::string>{"v0"});
  CHECK(f7.g_points.at({0, 1}).at(0) == 0);

  // an edgeless graph transports to the vertex partition alone
  WeightedGraph empty = WeightedGraph::make({"v"}, {});
  BranchingSystem bare = branching_from_rep_graph(RepGraph::make(empty, {{"t", "v"}}, {}));
  CHECK(validate_branching(bare).ok);
  CHECK(bare.range_pts.empty());
  CHECK(bare.domain_pts.empty());
}

TEST_CASE("tampered systems are rejected with a witness") {
  BranchingSystem sys = branching_from_rep_graph(F5());
  // duplicate a point across the slot-1 R-sets
  BranchingSystem dup = sys;
  dup.range_pts[{1, 1}] = {0};  // f[1] never occurs; stealing a point breaks the slot
  BranchingReport r = validate_branching(dup);
  REQUIRE_FALSE(r.ok);
  CHECK(r.issues.front().find("axiom2") != std::string::npos);

  // removing a point from a D-set breaks the tag partition
  BranchingSystem gap = sys;
  gap.domain_pts[{0, 1}].clear();  // e[1] arrivals
  CHECK_FALSE(validate_branching(gap).ok);
}

TEST_CASE("delta roundtrip: the graph action transported to the carrier") {
  auto fixtures_list = lattice_fixtures();
  fixtures_list.push_back(parallel_cover());
  fixtures_list.push_back(parallel_folded());
  fixtures_list.push_back(l23_truncated());
  fixtures_list.push_back(rational_efg_named());
  for (const auto& f : fixtures_list) {
    BranchingSystem sys = branching_from_rep_graph(f);
    const WeightedGraph& e = f.base();
    std::vector<AlgebraElement> gens;
    for (int v = 0; v < e.vertex_count(); ++v) gens.push_back(AlgebraElement::vertex(kQ, e, v));
    for (const auto& l : all_letters(e)) gens.push_back(AlgebraElement::letter(kQ, e, l));
    for (int u = 0; u < f.vertex_count(); ++u) {
      for (const auto& gen : gens) {
        ModuleVector graph_side = act(ModuleVector::basis(kQ, u), gen, f).vector;
        SupportedFunction carrier_side =
            branching_act(SupportedFunction::delta(kQ, BPoint{u}), gen, sys);
        ModuleVector transported = ModuleVector::zero(kQ);
        for (const auto& [p, c] : carrier_side.support) transported.add(std::get<int>(p), c);
        CHECK(graph_side == transported);
      }
    }
  }
}

TEST_CASE("l23 branching carrier reproduces the introduction step") {
  RepGraph f = l23_truncated();
  BranchingSystem sys = branching_from_rep_graph(f);
  int v5 = f.vertex_index("v_5");
  SupportedFunction r = branching_act(SupportedFunction::delta(kQ, BPoint{v5}),
                                      letter_elem(f.base(), "e", 3, Direction::real), sys);
  REQUIRE(r.support.size() == 1);
  CHECK(f.vertex(std::get<int>(r.support.begin()->first)).id == "v_9");
}

TEST_CASE("relation sampling passes at seed 0") {
  for (const auto& e : assorted_graphs()) {
    BranchingRelationReport r = check_branching_relations(interval_branching(e), kQ, 0);
    std::string first_violation = r.violations.empty() ? std::string() : r.violations.front();
    INFO(first_violation);
    CHECK(r.ok);
    CHECK(r.checked > 0);
  }
  for (const auto& f : {F7(), F5(), parallel_cover()}) {
    BranchingRelationReport r =
        check_branching_relations(branching_from_rep_graph(f), Field::prime(2), 0);
    CHECK(r.ok);
  }
}

TEST_CASE("action tables round trip through reconstruction") {
  for (const auto& f : lattice_fixtures()) {
    ActionTable t = action_table(f, kQ);
    ReconstructResult r = reconstruct_rep_graph(t);
    std::string why = r.rejection + ": " + r.detail;
    INFO(why);
    REQUIRE(r.ok);
    CHECK(is_isomorphic(r.graph, f));
    // lenient per-term checking cannot change the outcome for module tables
    ReconstructResult lenient_run = reconstruct_rep_graph(t, true);
    CHECK(lenient_run.ok);
  }
  ActionTable pair_table = action_table(parallel_cover(), kQ);
  ReconstructResult r = reconstruct_rep_graph(pair_table);
  REQUIRE(r.ok);
  CHECK(is_isomorphic(r.graph, parallel_cover()));
}

TEST_CASE("an empty basis is rejected") {
  ActionTable t;
  t.base = two_loops_w2();
  t.field = kQ;
  ReconstructResult r = reconstruct_rep_graph(t);
  CHECK_FALSE(r.ok);
  CHECK(r.rejection == "VPropertyViolation");
}

TEST_CASE("a basis element fixed by no vertex is rejected") {
  ActionTable t = char2_action_table(Field::prime(2));
  t.rows[0].erase("v");
  ReconstructResult r = reconstruct_rep_graph(t);
  CHECK_FALSE(r.ok);
  CHECK(r.rejection == "VPropertyViolation");
}

TEST_CASE("the exceptional characteristic example") {
  Char2Report report = verify_char2_example();
  CHECK(report.sums_match);
  REQUIRE(report.sums.size() == 8);
  CHECK(report.sums[0].second == 1);
  CHECK(report.sums[4].second == 0);
  CHECK(report.f2_rejection == "AssumptionIVViolation");
  CHECK(report.f2_witness.find("e[1]*") != std::string::npos);
  CHECK(report.rational_rejection == "RelationViolation");
  CHECK(report.ok);
}

TEST_CASE("reconstruction accepts the weight-one table regardless of mode") {
  // weight-one graphs never trip assumption (iv); lenient mode agrees
  WeightedGraph e = WeightedGraph::make({"v"}, {{"e", "v", "v", 1}});
  ChenRational r = rational_rep_graph(e, {0}, 0);
  REQUIRE_FALSE(r.graph.truncated());
  ActionTable t = action_table(r.graph, kQ);
  CHECK(reconstruct_rep_graph(t).ok);
  CHECK(reconstruct_rep_graph(t, true).ok);
}
