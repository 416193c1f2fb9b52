#include <doctest.h>

#include <fstream>

#include "fixtures.hpp"
#include "wlpa/io.hpp"

using namespace wlpa;
using namespace fixtures;
namespace io = wlpa::io;

namespace {

const Field kQ = Field::rationals();

io::json read_fixture(const std::string& name) {
  std::ifstream in(std::string(WLPA_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  io::json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("graphs round trip through JSON") {
  for (const WeightedGraph& e : {three_loops(), two_loops_w3(), parallel_pair(), sink_graph()}) {
    WeightedGraph back = io::graph_from_json(io::graph_to_json(e));
    CHECK(back.vertex_ids() == e.vertex_ids());
    REQUIRE(back.edge_count() == e.edge_count());
    for (int i = 0; i < e.edge_count(); ++i) {
      CHECK(back.edge(i).id == e.edge(i).id);
      CHECK(back.edge(i).weight == e.edge(i).weight);
    }
  }
}

TEST_CASE("edge weight defaults to one") {
  io::json j;
  j["vertices"] = {"a"};
  j["edges"] = io::json::array({io::json{{"id", "e"}, {"src", "a"}, {"dst", "a"}}});
  WeightedGraph e = io::graph_from_json(j);
  CHECK(e.edge(0).weight == 1);
}

TEST_CASE("dangling edges are rejected") {
  io::json j;
  j["vertices"] = {"a"};
  j["edges"] = io::json::array(
      {io::json{{"id", "e"}, {"src", "a"}, {"dst", "missing"}, {"weight", 1}}});
  CHECK_THROWS_AS(io::graph_from_json(j), Error);
}

TEST_CASE("representation graphs round trip with frontier flags") {
  for (const RepGraph& f : {F5(), parallel_cover(), l23_truncated(), rational_efg_named()}) {
    RepGraph back = io::rep_from_json(io::rep_to_json(f));
    CHECK(back.vertex_count() == f.vertex_count());
    CHECK(back.edge_count() == f.edge_count());
    CHECK(back.frontier_vertices() == f.frontier_vertices());
    CHECK(rooted_isomorphic(back, f));
    // serialized form is byte-stable
    CHECK(io::rep_to_json(back).dump() == io::rep_to_json(f).dump());
  }
}

TEST_CASE("shipped fixture files match the builders") {
  CHECK(read_fixture("F1.json") == io::rep_to_json(F1()));
  CHECK(read_fixture("F7.json") == io::rep_to_json(F7()));
  CHECK(read_fixture("l23.json") == io::rep_to_json(l23_truncated()));
  CHECK(read_fixture("rational_efg.json") == io::rep_to_json(rational_efg_named()));
  CHECK(read_fixture("irrational_ef.json") == io::rep_to_json(irrational_truncated(three_loops(), 1)));
  CHECK(read_fixture("parallel_cover.json") == io::rep_to_json(parallel_cover()));
  CHECK(read_fixture("three_loops.json") == io::graph_to_json(three_loops()));
  CHECK(read_fixture("char2_table.json") ==
        io::table_to_json(char2_action_table(Field::prime(2))));
}

TEST_CASE("expression parser handles the documented grammar") {
  WeightedGraph e = two_loops_w2();

  AlgebraElement two_factor = io::parse_expr("e[1] f[2]*", e, kQ);
  REQUIRE(two_factor.terms.size() == 1);
  CHECK(two_factor.terms.begin()->first.letters.size() == 2);
  CHECK(two_factor.terms.begin()->first.letters[1].dir == Direction::ghost);

  AlgebraElement merged = io::parse_expr("2*v - 3*v", e, kQ);
  REQUIRE(merged.terms.size() == 1);
  CHECK(merged.terms.begin()->second == Scalar::of_int(kQ, -1));

  AlgebraElement mixed = io::parse_expr("2*e[1] f[2]* - 1/3*v", e, kQ);
  CHECK(mixed.terms.size() == 2);

  // a denominator that is zero mod p is rejected; one that reduces is fine
  Field f2 = Field::prime(2);
  CHECK_THROWS_AS(io::parse_expr("1/2*e[1]", e, f2), Error);
  AlgebraElement third = io::parse_expr("1/3*e[1]", e, f2);
  CHECK(third.terms.begin()->second == Scalar::one(f2));
}

TEST_CASE("expression parser reports positions and unknown names") {
  WeightedGraph e = two_loops_w2();
  CHECK_THROWS_AS(io::parse_expr("e[9]", e, kQ), Error);
  CHECK_THROWS_AS(io::parse_expr("w", e, kQ), Error);
  CHECK_THROWS_AS(io::parse_expr("2*", e, kQ), Error);
  CHECK_THROWS_AS(io::parse_expr("e[1] +", e, kQ), Error);
  CHECK_THROWS_AS(io::parse_expr("e(1)", e, kQ), Error);
}

TEST_CASE("non-composable juxtapositions collapse to zero with a warning") {
  WeightedGraph e = parallel_pair();  // u -> v twice; e then e cannot compose
  std::vector<std::string> warnings;
  AlgebraElement a = io::parse_expr("e[1] e[1]", e, kQ, &warnings);
  CHECK(a.is_zero());
  CHECK(warnings.size() == 1);
  // v e[1] likewise dies (the edge leaves u, not v)
  warnings.clear();
  AlgebraElement b = io::parse_expr("v e[1]", e, kQ, &warnings);
  CHECK(b.is_zero());
  // u e[1] composes to the plain letter
  AlgebraElement c = io::parse_expr("u e[1]", e, kQ);
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms.begin()->first.letters.size() == 1);
}

TEST_CASE("parsed elements act like hand-built ones") {
  RepGraph f = l23_truncated();
  AlgebraElement a = io::parse_expr("e[3]", f.base(), kQ);
  ActResult r = act(ModuleVector::basis(kQ, f.vertex_index("v_5")), a, f);
  REQUIRE(r.vector.support.size() == 1);
  CHECK(f.vertex(r.vector.support.begin()->first).id == "v_9");
}

TEST_CASE("branching systems round trip through JSON") {
  for (const WeightedGraph& e : {three_loops(), two_loops_w3()}) {
    BranchingSystem sys = interval_branching(e);
    BranchingSystem back = io::branching_from_json(io::branching_to_json(sys));
    CHECK(back.interval_carrier);
    CHECK(validate_branching(back).ok);
    CHECK(io::branching_to_json(back).dump() == io::branching_to_json(sys).dump());
  }
  BranchingSystem finite = branching_from_rep_graph(F5());
  BranchingSystem back = io::branching_from_json(io::branching_to_json(finite));
  CHECK_FALSE(back.interval_carrier);
  CHECK(validate_branching(back).ok);
  CHECK(io::branching_to_json(back).dump() == io::branching_to_json(finite).dump());
}

TEST_CASE("action tables round trip through JSON") {
  ActionTable t = action_table(F5(), kQ);
  ActionTable back = io::table_from_json(io::table_to_json(t));
  CHECK(back.basis == t.basis);
  CHECK(io::table_to_json(back).dump() == io::table_to_json(t).dump());
  ReconstructResult r = reconstruct_rep_graph(back);
  REQUIRE(r.ok);
  CHECK(is_isomorphic(r.graph, F5()));
}

TEST_CASE("partitions round trip and validate") {
  RepGraph f = F3();
  Partition sim = similarity_partition(f);
  Partition back = io::partition_from_json(io::partition_to_json(f, sim), f);
  CHECK(back.block_of == sim.block_of);
  io::json missing = io::json::array({io::json::array({"a0"})});
  CHECK_THROWS_AS(io::partition_from_json(missing, f), Error);
}

TEST_CASE("DOT export carries structure colors and the sidecar reparses") {
  RepGraph f = rational_efg_named();
  std::string dot = io::to_dot(f);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  CHECK(dot.find("color=") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);  // frontier marking
  // the sidecar JSON reparses to an equal object
  RepGraph back = io::rep_from_json(io::rep_to_json(f));
  CHECK(io::rep_to_json(back) == io::rep_to_json(f));
}

TEST_CASE("morphism serialization names vertex and edge images") {
  RepGraph f = parallel_cover(), g = parallel_folded();
  auto m = find_morphism(f, g);
  REQUIRE(m.has_value());
  io::json j = io::morphism_to_json(f, g, *m);
  CHECK(j["vertices"]["u_1"] == "u");
  CHECK(j["vertices"]["v_2"] == "v");
  CHECK(j["edges"]["a_1"] == "a");
}
